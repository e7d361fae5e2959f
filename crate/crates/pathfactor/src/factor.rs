//! Path-factor existence, avoidability, and critical avoidability.
//!
//! Two independent routes decide existence. The characterization sweep
//! checks `i(G−X) ≤ 2|X|` (paths of order ≥ 2) or `sun(G−X) ≤ 2|X|`
//! (order ≥ 3) over every vertex subset X and reports the first violation
//! as a certificate. The constructive route partitions the vertex set into
//! short paths by backtracking. The test suites hold the two routes equal
//! over the full small-graph universe.

use std::collections::HashSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph, GraphError, VertexSet};
use crate::sun::sun_count_in;

/// Which factor family is being decided: every path of order at least 2,
/// or at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    AtLeast2,
    AtLeast3,
}

impl FactorKind {
    pub fn from_min_order(k: usize) -> Option<FactorKind> {
        match k {
            2 => Some(FactorKind::AtLeast2),
            3 => Some(FactorKind::AtLeast3),
            _ => None,
        }
    }

    pub fn min_order(self) -> usize {
        match self {
            FactorKind::AtLeast2 => 2,
            FactorKind::AtLeast3 => 3,
        }
    }

    /// Piece sizes that suffice for the constructive search: any path of
    /// order ≥ 2 splits into paths of order 2 and 3, and any path of order
    /// ≥ 3 into paths of order 3, 4 and 5.
    pub fn piece_sizes(self) -> &'static [usize] {
        match self {
            FactorKind::AtLeast2 => &[2, 3],
            FactorKind::AtLeast3 => &[3, 4, 5],
        }
    }

    /// The count the characterization bounds by 2|X|: isolated vertices for
    /// order-2 factors, sun components for order-3 factors.
    pub fn criterion_count(self, g: &Graph, alive: u64) -> usize {
        match self {
            FactorKind::AtLeast2 => g.isolated_count_in(alive),
            FactorKind::AtLeast3 => sun_count_in(g, alive),
        }
    }
}

impl Serialize for FactorKind {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u64(self.min_order() as u64)
    }
}

impl<'de> Deserialize<'de> for FactorKind {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let k = usize::deserialize(deserializer)?;
        FactorKind::from_min_order(k)
            .ok_or_else(|| serde::de::Error::custom(format!("k must be 2 or 3, got {k}")))
    }
}

/// A vertex partition into paths, each of order at least the requested
/// minimum; the constructive witness of factor existence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFactor {
    pub paths: Vec<Vec<usize>>,
}

impl PathFactor {
    /// Re-validates the type invariants against the host graph.
    pub fn validate(&self, g: &Graph, kind: FactorKind) -> bool {
        let mut covered = VertexSet::EMPTY;
        for path in &self.paths {
            if path.len() < kind.min_order() {
                return false;
            }
            for pair in path.windows(2) {
                if !g.has_edge(pair[0], pair[1]) {
                    return false;
                }
            }
            for &v in path {
                if v >= g.order() || covered.contains(v) {
                    return false;
                }
                covered = covered.with(v);
            }
        }
        covered == g.vertices()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    ViolatingSet,
    AvoidWitness,
    CriticalWitness,
}

/// Witness that a graph fails the factor characterization, reported in the
/// labels of the graph the user supplied: after deleting the vertices in
/// `removed` and the edge `avoided_edge`, removing `violating_set` leaves
/// more than `bound = 2|violating_set|` isolated vertices (order-2 case)
/// or sun components (order-3 case).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Certificate {
    pub kind: CertificateKind,
    pub k: FactorKind,
    pub removed: VertexSet,
    pub avoided_edge: Option<Edge>,
    pub violating_set: VertexSet,
    pub criterion_value: usize,
    pub bound: usize,
}

impl Certificate {
    /// Recomputes the criterion from scratch and checks the violation.
    pub fn validate(&self, g: &Graph) -> bool {
        let Ok((h, label_of)) = g.remove_vertices(self.removed) else {
            return false;
        };
        let mut new_of_label = vec![usize::MAX; g.order()];
        for (new, &old) in label_of.iter().enumerate() {
            new_of_label[old] = new;
        }
        let h = match self.avoided_edge {
            Some(e) => {
                let (u, v) = e.endpoints();
                if u >= g.order() || v >= g.order() {
                    return false;
                }
                let (nu, nv) = (new_of_label[u], new_of_label[v]);
                if nu == usize::MAX || nv == usize::MAX {
                    return false;
                }
                let Ok(e) = Edge::new(nu, nv) else {
                    return false;
                };
                match h.remove_edge(e) {
                    Ok(h) => h,
                    Err(_) => return false,
                }
            }
            None => h,
        };
        let mut violating = VertexSet::EMPTY;
        for v in self.violating_set.iter() {
            if v >= g.order() || new_of_label[v] == usize::MAX {
                return false;
            }
            violating = violating.with(new_of_label[v]);
        }
        let alive = h.vertices().difference(violating).mask();
        let value = self.k.criterion_count(&h, alive);
        value == self.criterion_value
            && self.bound == 2 * self.violating_set.len()
            && value > self.bound
    }
}

/// Characterization-based decider. Returns `None` when the graph has a
/// factor of the requested kind; otherwise the smallest, then
/// lexicographically least, violating set as a certificate.
///
/// A violating X satisfies criterion(G−X) > 2|X|, and the criterion count
/// is at most order−|X|, so only |X| < order/3 can violate; the sweep stops
/// there.
pub fn decide_factor(g: &Graph, kind: FactorKind) -> Option<Certificate> {
    let n = g.order();
    let full = g.vertices().mask();
    for size in 0..n.max(1) {
        if n.saturating_sub(size) <= 2 * size {
            break;
        }
        for combo in (0..n).combinations(size) {
            let removed: VertexSet = combo.into_iter().collect();
            let alive = full & !removed.mask();
            let value = kind.criterion_count(g, alive);
            if value > 2 * size {
                return Some(Certificate {
                    kind: CertificateKind::ViolatingSet,
                    k: kind,
                    removed: VertexSet::EMPTY,
                    avoided_edge: None,
                    violating_set: removed,
                    criterion_value: value,
                    bound: 2 * size,
                });
            }
        }
    }
    None
}

/// Convenience wrapper: does the graph have a factor of this kind?
pub fn has_factor(g: &Graph, kind: FactorKind) -> bool {
    decide_factor(g, kind).is_none()
}

/// Constructive decider, independent of the characterization sweep.
/// Searches for a partition into pieces of the sizes fixed by `kind`,
/// branching on the lowest uncovered vertex with neighbors in ascending
/// order; failed cover states are memoized per component.
pub fn extract_path_factor(g: &Graph, kind: FactorKind) -> Option<PathFactor> {
    let mut paths = Vec::new();
    for comp in g.components() {
        let mut failed = HashSet::new();
        if !cover(g, comp.mask(), kind.piece_sizes(), &mut failed, &mut paths) {
            return None;
        }
    }
    Some(PathFactor { paths })
}

fn cover(
    g: &Graph,
    uncovered: u64,
    sizes: &[usize],
    failed: &mut HashSet<u64>,
    out: &mut Vec<Vec<usize>>,
) -> bool {
    if uncovered == 0 {
        return true;
    }
    if failed.contains(&uncovered) {
        return false;
    }
    let anchor = uncovered.trailing_zeros() as usize;
    for piece in pieces_through(g, anchor, uncovered, sizes) {
        let mut mask = 0u64;
        for &v in &piece {
            mask |= 1u64 << v;
        }
        out.push(piece);
        if cover(g, uncovered & !mask, sizes, failed, out) {
            return true;
        }
        out.pop();
    }
    failed.insert(uncovered);
    false
}

/// All paths of the given sizes through `anchor` inside `uncovered`, each
/// vertex sequence enumerated exactly once, in a fixed deterministic order.
fn pieces_through(g: &Graph, anchor: usize, uncovered: u64, sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut pieces = Vec::new();
    for &size in sizes {
        for left_len in 0..size {
            let right_len = size - 1 - left_len;
            if left_len > right_len {
                continue; // the reversed split already covers this shape
            }
            let mut left_arms = Vec::new();
            grow_arm(g, anchor, left_len, uncovered, &mut vec![anchor], &mut left_arms);
            for left in left_arms {
                let mut used = 0u64;
                for &v in &left {
                    used |= 1u64 << v;
                }
                let mut right_arms = Vec::new();
                grow_arm(
                    g,
                    anchor,
                    right_len,
                    uncovered & !used,
                    &mut vec![anchor],
                    &mut right_arms,
                );
                for right in right_arms {
                    let mut piece: Vec<usize> = left.iter().skip(1).rev().copied().collect();
                    piece.push(anchor);
                    piece.extend(right.iter().skip(1));
                    if left_len == right_len && left_len > 0 && piece[0] > piece[size - 1] {
                        continue; // keep one orientation of symmetric splits
                    }
                    pieces.push(piece);
                }
            }
        }
    }
    pieces
}

fn grow_arm(
    g: &Graph,
    cur: usize,
    remaining: usize,
    allowed: u64,
    acc: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(acc.clone());
        return;
    }
    let mut used = 0u64;
    for &v in acc.iter() {
        used |= 1u64 << v;
    }
    let mut nbrs = g.row(cur) & allowed & !used;
    while nbrs != 0 {
        let w = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        acc.push(w);
        grow_arm(g, w, remaining - 1, allowed, acc, out);
        acc.pop();
    }
}

/// Outcome of an avoidability check. `vacuous` flags the cases where the
/// universally quantified definition holds because there was nothing to
/// check (no edges, or no vertices left after removal).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AvoidabilityOutcome {
    pub holds: bool,
    pub vacuous: bool,
    pub certificate: Option<Certificate>,
}

impl AvoidabilityOutcome {
    fn holding(vacuous: bool) -> AvoidabilityOutcome {
        AvoidabilityOutcome {
            holds: true,
            vacuous,
            certificate: None,
        }
    }
}

/// A factor avoiding `e` is exactly a factor of `G−e`, so the graph is
/// avoidable iff `G−e` has a factor for every edge `e` (vacuously true for
/// edgeless graphs). Edges are scanned in lexicographic order and the first
/// failure is reported.
pub fn is_avoidable(g: &Graph, kind: FactorKind) -> AvoidabilityOutcome {
    let edges = g.edges();
    if edges.is_empty() {
        return AvoidabilityOutcome::holding(true);
    }
    for e in edges {
        let h = g.remove_edge(e).expect("edge comes from the edge list");
        if let Some(cert) = decide_factor(&h, kind) {
            return AvoidabilityOutcome {
                holds: false,
                vacuous: false,
                certificate: Some(Certificate {
                    kind: CertificateKind::AvoidWitness,
                    avoided_edge: Some(e),
                    ..cert
                }),
            };
        }
    }
    AvoidabilityOutcome::holding(false)
}

/// Critical avoidability: after deleting any `removal_count` vertices the
/// remainder must still be avoidable. Removal sets are scanned smallest
/// label first and the first failing (W, e, X) is reported in the original
/// labels.
pub fn is_critical_avoidable(
    g: &Graph,
    kind: FactorKind,
    removal_count: usize,
) -> Result<AvoidabilityOutcome, GraphError> {
    if removal_count > g.order() {
        return Err(GraphError::InvalidRemovalCount {
            requested: removal_count,
            order: g.order(),
        });
    }
    let mut all_vacuous = true;
    for combo in (0..g.order()).combinations(removal_count) {
        let removed: VertexSet = combo.into_iter().collect();
        let (h, label_of) = g.remove_vertices(removed)?;
        let inner = is_avoidable(&h, kind);
        all_vacuous &= inner.vacuous;
        if !inner.holds {
            let cert = inner.certificate.expect("failing avoidability has a certificate");
            return Ok(AvoidabilityOutcome {
                holds: false,
                vacuous: false,
                certificate: Some(Certificate {
                    kind: CertificateKind::CriticalWitness,
                    k: cert.k,
                    removed,
                    avoided_edge: cert.avoided_edge.map(|e| e.map_labels(&label_of)),
                    violating_set: cert.violating_set.map_labels(&label_of),
                    criterion_value: cert.criterion_value,
                    bound: cert.bound,
                }),
            });
        }
    }
    Ok(AvoidabilityOutcome::holding(all_vacuous))
}
