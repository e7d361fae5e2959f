//! Generators for the six sharp join constructions, verifiers for the three
//! sufficient conditions and the size lemma behind them, and a seeded
//! randomized hunt for counterexamples.
//!
//! The three sufficient conditions (numbered 6, 7, 8 on the wire) say that
//! an (n+r+2)-connected graph whose toughness or isolated toughness exceeds
//! a threshold is critically avoidable. Each is sharp in two ways, witnessed
//! by a join of a clique with isolated vertices and single edges (families
//! 1–6). The verifiers recompute every quantity exactly and compare with
//! the closed forms; any hypothesis-satisfying instance that fails its
//! conclusion is reported as a counterexample, which for a proven claim
//! means an implementation bug.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::parse_construction;
use crate::factor::{is_critical_avoidable, Certificate, FactorKind};
use crate::graph::{Edge, Graph, GraphError, VertexSet};
use crate::rational::ExtRational;
use crate::sun::{sun_count_in, sun_decompose_in};
use crate::toughness::{connectivity, isolated_toughness, toughness};

/// Hunting beyond this order makes the exhaustive inner sweeps interactive
/// no longer.
pub const HUNT_ORDER_CEILING: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("family constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("invalid hunt parameters: {0}")]
    InvalidHunt(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The three sufficient conditions under test, identified on the wire by
/// the ids 6, 7 and 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SufficientCondition {
    /// id 6: isolated toughness above (n+r+3)/(2(r+2)) forces order-2
    /// critical avoidability.
    IsolatedToughnessOrder2,
    /// id 7: toughness above (n+r+2)/(2(r+2)) forces order-3 critical
    /// avoidability.
    ToughnessOrder3,
    /// id 8: isolated toughness above (n+3(r+2))/(2(r+2)) forces order-3
    /// critical avoidability.
    IsolatedToughnessOrder3,
}

impl SufficientCondition {
    pub fn from_id(id: u8) -> Option<SufficientCondition> {
        match id {
            6 => Some(SufficientCondition::IsolatedToughnessOrder2),
            7 => Some(SufficientCondition::ToughnessOrder3),
            8 => Some(SufficientCondition::IsolatedToughnessOrder3),
            _ => None,
        }
    }

    pub fn id(self) -> u8 {
        match self {
            SufficientCondition::IsolatedToughnessOrder2 => 6,
            SufficientCondition::ToughnessOrder3 => 7,
            SufficientCondition::IsolatedToughnessOrder3 => 8,
        }
    }

    pub fn factor_kind(self) -> FactorKind {
        match self {
            SufficientCondition::IsolatedToughnessOrder2 => FactorKind::AtLeast2,
            _ => FactorKind::AtLeast3,
        }
    }

    pub fn uses_toughness(self) -> bool {
        matches!(self, SufficientCondition::ToughnessOrder3)
    }

    /// Strict lower threshold on t(G) or I(G) in the hypothesis.
    pub fn threshold(self, n: usize, r: usize) -> ExtRational {
        let den = 2 * (r + 2);
        match self {
            SufficientCondition::IsolatedToughnessOrder2 => {
                ExtRational::from_ratio(n + r + 3, den)
            }
            SufficientCondition::ToughnessOrder3 => ExtRational::from_ratio(n + r + 2, den),
            SufficientCondition::IsolatedToughnessOrder3 => {
                ExtRational::from_ratio(n + 3 * (r + 2), den)
            }
        }
    }

    /// The sharp constructions attached to this condition: first the one
    /// showing the threshold is tight, then the one showing the
    /// connectivity demand is tight.
    pub fn sharp_families(self) -> [RemarkFamily; 2] {
        match self {
            SufficientCondition::IsolatedToughnessOrder2 => {
                [RemarkFamily::BoundSharpOrder2, RemarkFamily::ConnectivitySharpOrder2]
            }
            SufficientCondition::ToughnessOrder3 => [
                RemarkFamily::BoundSharpToughness,
                RemarkFamily::ConnectivitySharpToughness,
            ],
            SufficientCondition::IsolatedToughnessOrder3 => {
                [RemarkFamily::BoundSharpOrder3, RemarkFamily::ConnectivitySharpOrder3]
            }
        }
    }
}

/// The six sharpness constructions, identified on the wire by ids 1–6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RemarkFamily {
    /// id 1: K_{n+r+2} + ((2r+3)K1 | K2), n >= r+1; tight I bound, order 2.
    BoundSharpOrder2,
    /// id 2: K_{n+r+1} + ((2r+1)K1 | K2), n >= r; tight connectivity, order 2.
    ConnectivitySharpOrder2,
    /// id 3: K_{n+r+2} + ((2r+3)K1 | K2); tight t bound, order 3.
    BoundSharpToughness,
    /// id 4: K_{n+r+1} + ((2r+1)K1 | K2), n >= 1; tight connectivity, order 3.
    ConnectivitySharpToughness,
    /// id 5: K_{n+r+2} + ((2r+4)K2); tight I bound, order 3.
    BoundSharpOrder3,
    /// id 6: K_{n+r+1} + ((2r+2)K2), n >= 1; tight connectivity, order 3.
    ConnectivitySharpOrder3,
}

impl RemarkFamily {
    pub const ALL: [RemarkFamily; 6] = [
        RemarkFamily::BoundSharpOrder2,
        RemarkFamily::ConnectivitySharpOrder2,
        RemarkFamily::BoundSharpToughness,
        RemarkFamily::ConnectivitySharpToughness,
        RemarkFamily::BoundSharpOrder3,
        RemarkFamily::ConnectivitySharpOrder3,
    ];

    pub fn from_id(id: u8) -> Option<RemarkFamily> {
        RemarkFamily::ALL.get(id.checked_sub(1)? as usize).copied()
    }

    pub fn id(self) -> u8 {
        RemarkFamily::ALL
            .iter()
            .position(|f| *f == self)
            .expect("family listed") as u8
            + 1
    }

    pub fn factor_kind(self) -> FactorKind {
        match self {
            RemarkFamily::BoundSharpOrder2 | RemarkFamily::ConnectivitySharpOrder2 => {
                FactorKind::AtLeast2
            }
            _ => FactorKind::AtLeast3,
        }
    }

    /// Clique order of the join construction.
    fn clique_order(self, n: usize, r: usize) -> usize {
        match self {
            RemarkFamily::BoundSharpOrder2
            | RemarkFamily::BoundSharpToughness
            | RemarkFamily::BoundSharpOrder3 => n + r + 2,
            _ => n + r + 1,
        }
    }

    fn constraint_ok(self, n: usize, r: usize) -> bool {
        match self {
            RemarkFamily::BoundSharpOrder2 => n >= r + 1,
            RemarkFamily::ConnectivitySharpOrder2 => n >= r,
            RemarkFamily::ConnectivitySharpToughness | RemarkFamily::ConnectivitySharpOrder3 => {
                n >= 1
            }
            RemarkFamily::BoundSharpToughness | RemarkFamily::BoundSharpOrder3 => true,
        }
    }

    pub fn expression(self, n: usize, r: usize) -> String {
        let clique = self.clique_order(n, r);
        match self {
            RemarkFamily::BoundSharpOrder2 | RemarkFamily::BoundSharpToughness => {
                format!("K{}+({}*K1|K2)", clique, 2 * r + 3)
            }
            RemarkFamily::ConnectivitySharpOrder2 | RemarkFamily::ConnectivitySharpToughness => {
                format!("K{}+({}*K1|K2)", clique, 2 * r + 1)
            }
            RemarkFamily::BoundSharpOrder3 => format!("K{}+({}*K2)", clique, 2 * r + 4),
            RemarkFamily::ConnectivitySharpOrder3 => format!("K{}+({}*K2)", clique, 2 * r + 2),
        }
    }
}

/// Which parameter a closed form pins down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParameterKind {
    Toughness,
    IsolatedToughness,
}

/// The exact values a sharp construction is expected to exhibit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RemarkExpectation {
    pub connectivity: usize,
    pub parameter: ParameterKind,
    pub parameter_value: ExtRational,
    pub factor_kind: FactorKind,
    /// Criterion count of the violating certificate (2r+5 or 2r+3).
    pub criterion_value: usize,
    /// 2|X| for the residual clique (2(r+2) or 2(r+1)).
    pub bound: usize,
    /// The residual clique labels after the first removal set.
    pub violating_set: VertexSet,
}

/// Builds the family instance and its closed-form expectations.
pub fn build_remark_graph(
    family: RemarkFamily,
    n: usize,
    r: usize,
) -> Result<(Graph, RemarkExpectation), HarnessError> {
    if !family.constraint_ok(n, r) {
        return Err(HarnessError::ConstraintViolation(format!(
            "family {} requires {}",
            family.id(),
            match family {
                RemarkFamily::BoundSharpOrder2 => "n >= r+1",
                RemarkFamily::ConnectivitySharpOrder2 => "n >= r",
                _ => "n >= 1",
            }
        )));
    }
    let expr = family.expression(n, r);
    let graph = parse_construction(&expr)
        .map_err(|e| HarnessError::ConstraintViolation(format!("{expr}: {e}")))?;
    let clique = family.clique_order(n, r);
    let residual: VertexSet = (n..clique).collect();
    let (parameter, parameter_value) = match family {
        RemarkFamily::BoundSharpOrder2 => (
            ParameterKind::IsolatedToughness,
            ExtRational::from_ratio(n + r + 3, 2 * (r + 2)),
        ),
        RemarkFamily::ConnectivitySharpOrder2 => (
            ParameterKind::IsolatedToughness,
            ExtRational::from_ratio(n + r + 2, 2 * r + 2),
        ),
        RemarkFamily::BoundSharpToughness => (
            ParameterKind::Toughness,
            ExtRational::from_ratio(n + r + 2, 2 * (r + 2)),
        ),
        RemarkFamily::ConnectivitySharpToughness => (
            ParameterKind::Toughness,
            ExtRational::from_ratio(n + r + 1, 2 * r + 2),
        ),
        RemarkFamily::BoundSharpOrder3 => (
            ParameterKind::IsolatedToughness,
            ExtRational::from_ratio(n + 3 * (r + 2), 2 * (r + 2)),
        ),
        RemarkFamily::ConnectivitySharpOrder3 => (
            ParameterKind::IsolatedToughness,
            ExtRational::from_ratio(n + 3 * (r + 1), 2 * (r + 1)),
        ),
    };
    let tight_bound = matches!(
        family,
        RemarkFamily::BoundSharpOrder2
            | RemarkFamily::BoundSharpToughness
            | RemarkFamily::BoundSharpOrder3
    );
    let expectation = RemarkExpectation {
        connectivity: clique,
        parameter,
        parameter_value,
        factor_kind: family.factor_kind(),
        criterion_value: if tight_bound { 2 * r + 5 } else { 2 * r + 3 },
        bound: if tight_bound { 2 * (r + 2) } else { 2 * (r + 1) },
        violating_set: residual,
    };
    Ok((graph, expectation))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "consistent")]
    Consistent,
    #[serde(rename = "vacuous")]
    Vacuous,
    #[serde(rename = "COUNTEREXAMPLE")]
    Counterexample,
}

/// One named comparison inside a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckLine {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

impl CheckLine {
    fn new(name: &str, expected: impl ToString, actual: impl ToString, ok: bool) -> CheckLine {
        CheckLine {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            ok,
        }
    }
}

/// Component counts of the graph left after applying a certificate,
/// recomputed structurally.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct QuotientSummary {
    pub isolated: usize,
    pub pairs: usize,
    pub big_suns: usize,
    pub non_suns: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub instance: String,
    pub checks: Vec<CheckLine>,
    pub hypothesis_holds: bool,
    pub conclusion_holds: Option<bool>,
    pub certificate: Option<Certificate>,
    /// The decider's own first failing witness, when it differs from the
    /// designated certificate above.
    pub first_failure: Option<Certificate>,
    pub quotient: Option<QuotientSummary>,
    pub verdict: Verdict,
}

impl VerificationReport {
    fn verdict_for(hypothesis: bool, conclusion: Option<bool>) -> Verdict {
        match (hypothesis, conclusion) {
            (false, _) => Verdict::Vacuous,
            (true, Some(true)) => Verdict::Consistent,
            (true, _) => Verdict::Counterexample,
        }
    }
}

/// Checks a sharp construction end to end: exact connectivity and parameter
/// values, failure of critical avoidability, and the shape of the
/// certificate evaluated at the designated removal pair (the first n clique
/// vertices plus the single-edge block of the construction): the violating
/// set must be the residual clique and the criterion and bound must match
/// the closed forms. The free decider may hit a different, earlier failure;
/// that witness is reported separately. The quotient left by the designated
/// certificate is decomposed structurally and reported.
pub fn verify_sharpness(
    family: RemarkFamily,
    n: usize,
    r: usize,
) -> Result<VerificationReport, HarnessError> {
    let (graph, expect) = build_remark_graph(family, n, r)?;
    let mut checks = Vec::new();

    let kappa = connectivity(&graph)?;
    checks.push(CheckLine::new(
        "connectivity",
        expect.connectivity,
        kappa,
        kappa == expect.connectivity,
    ));

    let measured = match expect.parameter {
        ParameterKind::Toughness => toughness(&graph)?,
        ParameterKind::IsolatedToughness => isolated_toughness(&graph)?,
    };
    let param_name = match expect.parameter {
        ParameterKind::Toughness => "toughness",
        ParameterKind::IsolatedToughness => "isolated-toughness",
    };
    checks.push(CheckLine::new(
        param_name,
        expect.parameter_value,
        measured.value,
        measured.value == expect.parameter_value,
    ));

    let outcome = is_critical_avoidable(&graph, expect.factor_kind, n)?;
    checks.push(CheckLine::new(
        "critical-avoidability",
        "fails",
        if outcome.holds { "holds" } else { "fails" },
        !outcome.holds,
    ));

    let designated = designated_certificate(family, &graph, n, &expect)?;
    let mut quotient = None;
    match &designated {
        Some(cert) => {
            checks.push(CheckLine::new(
                "designated-criterion",
                expect.criterion_value,
                cert.criterion_value,
                cert.criterion_value == expect.criterion_value,
            ));
            checks.push(CheckLine::new(
                "designated-bound",
                expect.bound,
                cert.bound,
                cert.bound == expect.bound,
            ));
            checks.push(CheckLine::new(
                "designated-violating-set",
                expect.violating_set,
                cert.violating_set,
                cert.violating_set == expect.violating_set,
            ));
            let revalidates = cert.validate(&graph);
            checks.push(CheckLine::new(
                "designated-revalidates",
                true,
                revalidates,
                revalidates,
            ));
            quotient = Some(quotient_of(&graph, cert)?);
        }
        None => {
            checks.push(CheckLine::new(
                "designated-removal-fails",
                "certificate",
                "none",
                false,
            ));
        }
    }

    let all_ok = checks.iter().all(|c| c.ok);
    let first_failure = match (&outcome.certificate, &designated) {
        (Some(free), Some(designated)) if free != designated => outcome.certificate.clone(),
        _ => None,
    };
    Ok(VerificationReport {
        instance: format!("{} (n={n}, r={r})", family.expression(n, r)),
        checks,
        hypothesis_holds: true,
        conclusion_holds: Some(all_ok),
        certificate: designated,
        first_failure,
        quotient,
        verdict: VerificationReport::verdict_for(true, Some(all_ok)),
    })
}

/// Evaluates the construction's designated witness: delete the first n
/// clique vertices and the edge of a single-edge block, then ask the
/// characterization sweep for its least violating set.
fn designated_certificate(
    family: RemarkFamily,
    graph: &Graph,
    n: usize,
    expect: &RemarkExpectation,
) -> Result<Option<Certificate>, HarnessError> {
    let removed: VertexSet = (0..n).collect();
    let clique = expect.violating_set.len() + n;
    let avoided = match family {
        // the unique K2 block sits at the two highest labels
        RemarkFamily::BoundSharpOrder2
        | RemarkFamily::ConnectivitySharpOrder2
        | RemarkFamily::BoundSharpToughness
        | RemarkFamily::ConnectivitySharpToughness => {
            Edge::new(graph.order() - 2, graph.order() - 1).expect("order >= 2")
        }
        // all blocks are K2; take the first, right after the clique
        RemarkFamily::BoundSharpOrder3 | RemarkFamily::ConnectivitySharpOrder3 => {
            Edge::new(clique, clique + 1).expect("distinct labels")
        }
    };
    let (h, label_of) = graph.remove_vertices(removed)?;
    let mut new_of = vec![usize::MAX; graph.order()];
    for (new, &old) in label_of.iter().enumerate() {
        new_of[old] = new;
    }
    let (au, av) = avoided.endpoints();
    let h = h.remove_edge(Edge::new(new_of[au], new_of[av]).expect("block survives removal"))?;
    Ok(crate::factor::decide_factor(&h, expect.factor_kind).map(|cert| Certificate {
        kind: crate::factor::CertificateKind::CriticalWitness,
        k: cert.k,
        removed,
        avoided_edge: Some(avoided),
        violating_set: cert.violating_set.map_labels(&label_of),
        criterion_value: cert.criterion_value,
        bound: cert.bound,
    }))
}

/// Structural decomposition of ((G − W) − e) − X for a certificate.
fn quotient_of(g: &Graph, cert: &Certificate) -> Result<QuotientSummary, HarnessError> {
    let (h, label_of) = g.remove_vertices(cert.removed)?;
    let mut new_of = vec![usize::MAX; g.order()];
    for (new, &old) in label_of.iter().enumerate() {
        new_of[old] = new;
    }
    let h = match cert.avoided_edge {
        Some(e) => {
            let (u, v) = e.endpoints();
            h.remove_edge(Edge::new(new_of[u], new_of[v]).expect("certificate edge"))?
        }
        None => h,
    };
    let alive = h
        .vertices()
        .difference(cert.violating_set.map_labels(&new_of))
        .mask();
    let d = sun_decompose_in(&h, alive);
    Ok(QuotientSummary {
        isolated: d.isolated.len(),
        pairs: d.pairs.len(),
        big_suns: d.big_suns.len(),
        non_suns: d.non_suns.len(),
    })
}

/// Tests one sufficient condition on a concrete instance: hypothesis is
/// connectivity ≥ n+r+2 together with the strict threshold inequality;
/// when it holds the critical-avoidability decider must agree.
pub fn verify_condition_instance(
    condition: SufficientCondition,
    graph: &Graph,
    n: usize,
    r: usize,
) -> Result<VerificationReport, HarnessError> {
    let kappa = connectivity(graph)?;
    let required = n + r + 2;
    let mut checks = vec![CheckLine::new(
        "connectivity-at-least",
        required,
        kappa,
        kappa >= required,
    )];

    let threshold = condition.threshold(n, r);
    let measured = if condition.uses_toughness() {
        toughness(graph)?
    } else {
        isolated_toughness(graph)?
    };
    checks.push(CheckLine::new(
        if condition.uses_toughness() {
            "toughness-above"
        } else {
            "isolated-toughness-above"
        },
        format!("> {threshold}"),
        measured.value,
        measured.value > threshold,
    ));

    let hypothesis = checks.iter().all(|c| c.ok);
    let (conclusion, certificate) = if hypothesis {
        let outcome = is_critical_avoidable(graph, condition.factor_kind(), n)?;
        (Some(outcome.holds), outcome.certificate)
    } else {
        (None, None)
    };

    Ok(VerificationReport {
        instance: format!("order {} graph (n={n}, r={r})", graph.order()),
        checks,
        hypothesis_holds: hypothesis,
        conclusion_holds: conclusion,
        certificate,
        first_failure: None,
        quotient: None,
        verdict: VerificationReport::verdict_for(hypothesis, conclusion),
    })
}

/// Outcome of the exhaustive size-lemma sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LemmaReport {
    pub holds: bool,
    /// Smallest |X| with sun((G−W−e)−X) ≥ 2|X|+1, in original labels.
    pub min_violating_size: Option<usize>,
    pub min_violating_set: Option<VertexSet>,
}

/// Exhaustive check that every X leaving more than 2|X| sun components in
/// (G−W)−e has size at least r+2. Requires G to be (n+r+2)-connected with
/// |W| = n and e an edge of G−W; the claim is proven in general, so a
/// `holds = false` outcome signals an implementation bug.
pub fn check_size_lemma(
    g: &Graph,
    n: usize,
    r: usize,
    removed: VertexSet,
    avoided: Edge,
) -> Result<LemmaReport, HarnessError> {
    if removed.len() != n {
        return Err(HarnessError::PreconditionViolation(format!(
            "|W| = {} but n = {n}",
            removed.len()
        )));
    }
    let kappa = connectivity(g)?;
    if kappa < n + r + 2 {
        return Err(HarnessError::PreconditionViolation(format!(
            "connectivity {kappa} is below n+r+2 = {}",
            n + r + 2
        )));
    }
    let (u, v) = avoided.endpoints();
    if removed.contains(u) || removed.contains(v) || !g.has_edge(u, v) {
        return Err(HarnessError::PreconditionViolation(format!(
            "edge {avoided} is not an edge of the graph minus {removed}"
        )));
    }

    let (h, label_of) = g.remove_vertices(removed)?;
    let mut new_of = vec![usize::MAX; g.order()];
    for (new, &old) in label_of.iter().enumerate() {
        new_of[old] = new;
    }
    let h = h.remove_edge(Edge::new(new_of[u], new_of[v]).expect("distinct survivors"))?;

    let order = h.order();
    let full = h.vertices().mask();
    for size in 0..=order {
        // sun count is at most order − |X|, so nothing violates beyond this
        if order.saturating_sub(size) < 2 * size + 1 {
            break;
        }
        use itertools::Itertools;
        for combo in (0..order).combinations(size) {
            let x: VertexSet = combo.into_iter().collect();
            if sun_count_in(&h, full & !x.mask()) >= 2 * size + 1 {
                return Ok(LemmaReport {
                    holds: size >= r + 2,
                    min_violating_size: Some(size),
                    min_violating_set: Some(x.map_labels(&label_of)),
                });
            }
        }
    }
    Ok(LemmaReport {
        holds: true,
        min_violating_size: None,
        min_violating_set: None,
    })
}

/// Parameters of a randomized soundness hunt.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HuntParams {
    pub condition: SufficientCondition,
    pub removal_count: usize,
    pub margin: usize,
    pub max_order: usize,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HuntSummary {
    pub samples: usize,
    pub consistent: usize,
    pub vacuous: usize,
    pub counterexamples: usize,
}

impl HuntSummary {
    pub fn non_vacuous(&self) -> usize {
        self.consistent + self.counterexamples
    }
}

/// Seeded random sweep: samples random graphs (a density-biased
/// Erdős–Rényi mix plus occasional perturbed sharp constructions), verifies
/// the condition on each, and returns the reports in sample order together
/// with verdict counts. Fully determined by the seed.
pub fn hunt(params: &HuntParams) -> Result<(Vec<VerificationReport>, HuntSummary), HarnessError> {
    if params.max_order < 5 || params.max_order > HUNT_ORDER_CEILING {
        return Err(HarnessError::InvalidHunt(format!(
            "max order must lie in 5..={HUNT_ORDER_CEILING}, got {}",
            params.max_order
        )));
    }
    if params.samples == 0 {
        return Err(HarnessError::InvalidHunt("samples must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut reports = Vec::with_capacity(params.samples);
    let mut summary = HuntSummary {
        samples: params.samples,
        consistent: 0,
        vacuous: 0,
        counterexamples: 0,
    };
    let perturbable = perturbation_pool(params);
    for index in 0..params.samples {
        let graph = if !perturbable.is_empty() && index % 8 == 7 {
            perturb(&perturbable[(index / 8) % perturbable.len()], &mut rng)
        } else {
            random_graph(&mut rng, params.max_order)
        };
        let mut report =
            verify_condition_instance(params.condition, &graph, params.removal_count, params.margin)?;
        report.instance = format!("sample {index}: {}", report.instance);
        match report.verdict {
            Verdict::Consistent => summary.consistent += 1,
            Verdict::Vacuous => summary.vacuous += 1,
            Verdict::Counterexample => summary.counterexamples += 1,
        }
        reports.push(report);
    }
    Ok((reports, summary))
}

/// Sharp-family instances of the hunted condition that fit the order cap.
fn perturbation_pool(params: &HuntParams) -> Vec<Graph> {
    let mut pool = Vec::new();
    for family in params.condition.sharp_families() {
        for n in 0..=3usize {
            for r in 0..=2usize {
                if let Ok((g, _)) = build_remark_graph(family, n, r) {
                    if g.order() <= params.max_order {
                        pool.push(g);
                    }
                }
            }
        }
    }
    pool
}

/// Adds one random missing edge, nudging the instance off the sharp
/// boundary; complete graphs are returned unchanged.
fn perturb(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let missing: Vec<(usize, usize)> = (0..g.order())
        .flat_map(|u| ((u + 1)..g.order()).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    if missing.is_empty() {
        return g.clone();
    }
    let (u, v) = missing[rng.gen_range(0..missing.len())];
    g.add_edge(Edge::new(u, v).expect("distinct endpoints"))
        .expect("edge was missing")
}

fn random_graph(rng: &mut ChaCha8Rng, max_order: usize) -> Graph {
    let order = rng.gen_range(5..=max_order);
    // dense-biased densities: hypothesis-satisfying graphs are dense
    const DENSITIES: [f64; 4] = [0.3, 0.5, 0.7, 0.9];
    const WEIGHTS: [u32; 4] = [1, 2, 3, 4];
    let total: u32 = WEIGHTS.iter().sum();
    let mut pick = rng.gen_range(0..total);
    let mut density = DENSITIES[3];
    for (d, w) in DENSITIES.iter().zip(WEIGHTS) {
        if pick < w {
            density = *d;
            break;
        }
        pick -= w;
    }
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(order, &edges).expect("sampled edges are simple")
}
