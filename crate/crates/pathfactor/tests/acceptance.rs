//! Acceptance suite. Each criterion is one test that prints a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`). Expected
//! values are exact: rational comparisons carry no tolerance band.

use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pathfactor::factor::{decide_factor, extract_path_factor, FactorKind};
use pathfactor::graph::{Edge, Graph, VertexSet};
use pathfactor::graph6::{emit_graph6, parse_graph6};
use pathfactor::harness::{
    build_remark_graph, check_size_lemma, hunt, verify_sharpness, HuntParams, RemarkFamily,
    SufficientCondition, Verdict,
};
use pathfactor::matching::has_perfect_matching;
use pathfactor::rational::ExtRational;
use pathfactor::smallgraphs::nonisomorphic_graphs_up_to;
use pathfactor::toughness::{isolated_toughness, toughness};

/// Non-isomorphic graphs on 1..=7 vertices, computed once per process.
fn universe() -> &'static Vec<Vec<Graph>> {
    static UNIVERSE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    UNIVERSE.get_or_init(|| nonisomorphic_graphs_up_to(7))
}

fn random_graph(order: usize, density: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(order, &edges).unwrap()
}

#[test]
fn criterion_1_oracle_equivalence() {
    let started = Instant::now();
    let levels = universe();
    let expected_counts = [1usize, 2, 4, 11, 34, 156, 1044];
    for (level, &want) in levels.iter().zip(expected_counts.iter()) {
        assert_eq!(level.len(), want, "universe size mismatch");
    }
    let mut checked = 0usize;
    for level in levels {
        for g in level {
            for kind in [FactorKind::AtLeast2, FactorKind::AtLeast3] {
                let by_characterization = decide_factor(g, kind).is_none();
                let by_construction = extract_path_factor(g, kind).is_some();
                assert_eq!(
                    by_characterization, by_construction,
                    "decider disagreement on {g:?} for {kind:?}"
                );
                checked += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 300,
        "runtime target exceeded: {elapsed:?}"
    );
    println!(
        "ACCEPTANCE 1 oracle-equivalence: PASS ({checked} decisions, zero disagreements, {elapsed:?})"
    );
}

#[test]
fn criterion_2_matching_oracle() {
    // independent exhaustive maximum matching: branch on the lowest
    // unsaturated vertex
    fn exhaustive(g: &Graph, free: u64) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1u64 << v);
        let mut best = exhaustive(g, rest);
        let mut nbrs = g.row(v) & rest;
        while nbrs != 0 {
            let w = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            best = best.max(1 + exhaustive(g, rest & !(1u64 << w)));
        }
        best
    }

    let mut checked = 0usize;
    for level in universe() {
        for g in level {
            let exhaustive_perfect = 2 * exhaustive(g, g.vertices().mask()) == g.order();
            assert_eq!(
                has_perfect_matching(g),
                exhaustive_perfect,
                "matching disagreement on {g:?}"
            );
            checked += 1;
        }
    }
    println!("ACCEPTANCE 2 matching-oracle: PASS ({checked} graphs, zero disagreements)");
}

#[test]
fn criterion_3_sharpness_suite() {
    let mut verified = 0usize;
    for family in RemarkFamily::ALL {
        for n in 0..=3usize {
            for r in 0..=2usize {
                let Ok((graph, _)) = build_remark_graph(family, n, r) else {
                    continue;
                };
                if graph.order() > 16 {
                    continue;
                }
                let report = verify_sharpness(family, n, r).unwrap();
                assert_eq!(
                    report.verdict,
                    Verdict::Consistent,
                    "family {} at (n={n}, r={r}): {report:#?}",
                    family.id()
                );
                verified += 1;
            }
        }
    }
    assert!(verified >= 30, "grid unexpectedly small: {verified}");

    // spot checks with the exact published values
    let (g, _) = build_remark_graph(RemarkFamily::BoundSharpOrder2, 1, 0).unwrap();
    assert_eq!(
        isolated_toughness(&g).unwrap().value,
        ExtRational::new(1, 1)
    );
    assert_eq!(pathfactor::toughness::connectivity(&g).unwrap(), 3);
    let report = verify_sharpness(RemarkFamily::BoundSharpOrder2, 1, 0).unwrap();
    let cert = report.certificate.as_ref().unwrap();
    assert_eq!((cert.criterion_value, cert.bound), (5, 4));

    let (g, _) = build_remark_graph(RemarkFamily::BoundSharpOrder3, 0, 0).unwrap();
    assert_eq!(
        isolated_toughness(&g).unwrap().value,
        ExtRational::new(3, 2)
    );
    let report = verify_sharpness(RemarkFamily::BoundSharpOrder3, 0, 0).unwrap();
    let cert = report.certificate.as_ref().unwrap();
    assert_eq!((cert.criterion_value, cert.bound), (5, 4));

    println!("ACCEPTANCE 3 sharpness-suite: PASS ({verified} grid instances, all exact)");
}

#[test]
fn criterion_4_soundness_fuzz() {
    let pairs = [(0usize, 0usize), (1, 0), (0, 1)];
    for condition in [
        SufficientCondition::IsolatedToughnessOrder2,
        SufficientCondition::ToughnessOrder3,
        SufficientCondition::IsolatedToughnessOrder3,
    ] {
        let mut sampled = 0usize;
        let mut non_vacuous = 0usize;
        for (index, (n, r)) in pairs.iter().enumerate() {
            let params = HuntParams {
                condition,
                removal_count: *n,
                margin: *r,
                max_order: 8,
                samples: 168,
                seed: 1000 + 100 * condition.id() as u64 + index as u64,
            };
            let (_, summary) = hunt(&params).unwrap();
            assert_eq!(
                summary.counterexamples,
                0,
                "condition {} produced counterexamples at (n={n}, r={r})",
                condition.id()
            );
            sampled += summary.samples;
            non_vacuous += summary.non_vacuous();
        }
        assert!(sampled >= 500, "too few samples: {sampled}");
        assert!(
            non_vacuous > 0,
            "condition {} never satisfied its hypothesis",
            condition.id()
        );
        println!(
            "ACCEPTANCE 4 soundness-fuzz (condition {}): PASS ({sampled} samples, {non_vacuous} non-vacuous, zero counterexamples)",
            condition.id()
        );
    }
}

#[test]
fn criterion_5_size_lemma() {
    // grid instances; the connectivity-sharp families only satisfy the
    // lemma's connectivity precondition at margin r-1
    let mut grid_checked = 0usize;
    for family in RemarkFamily::ALL {
        for n in 0..=3usize {
            for r in 0..=2usize {
                let Ok((graph, expect)) = build_remark_graph(family, n, r) else {
                    continue;
                };
                if graph.order() > 16 {
                    continue;
                }
                let connectivity_sharp = matches!(
                    family,
                    RemarkFamily::ConnectivitySharpOrder2
                        | RemarkFamily::ConnectivitySharpToughness
                        | RemarkFamily::ConnectivitySharpOrder3
                );
                let margin = if connectivity_sharp {
                    let Some(margin) = r.checked_sub(1) else {
                        continue; // precondition unsatisfiable at r = 0
                    };
                    margin
                } else {
                    r
                };
                let removed: VertexSet = (0..n).collect();
                let clique = expect.violating_set.len() + n;
                let avoided = match family {
                    RemarkFamily::BoundSharpOrder3 | RemarkFamily::ConnectivitySharpOrder3 => {
                        Edge::new(clique, clique + 1).unwrap()
                    }
                    _ => Edge::new(graph.order() - 2, graph.order() - 1).unwrap(),
                };
                let report = check_size_lemma(&graph, n, margin, removed, avoided).unwrap();
                assert!(
                    report.holds,
                    "size lemma failed on family {} (n={n}, r={r})",
                    family.id()
                );
                // the bound-sharp order-3 families attain the boundary
                if matches!(
                    family,
                    RemarkFamily::BoundSharpToughness | RemarkFamily::BoundSharpOrder3
                ) {
                    assert_eq!(
                        report.min_violating_size,
                        Some(r + 2),
                        "family {} at (n={n}, r={r})",
                        family.id()
                    );
                }
                grid_checked += 1;
            }
        }
    }
    assert!(grid_checked >= 25, "grid unexpectedly small: {grid_checked}");

    // random hypothesis-satisfying instances
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let pairs = [(0usize, 0usize), (1, 0), (0, 1)];
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    while accepted < 100 {
        attempts += 1;
        assert!(attempts < 20_000, "sampler starved");
        let (n, r) = pairs[attempts % pairs.len()];
        let order = rng.gen_range(5..=8);
        let g = random_graph(order, rng.gen_range(0.6..0.95), &mut rng);
        if pathfactor::toughness::connectivity(&g).unwrap() < n + r + 2 {
            continue;
        }
        let mut labels: Vec<usize> = (0..order).collect();
        for i in 0..n {
            let j = rng.gen_range(i..order);
            labels.swap(i, j);
        }
        let removed: VertexSet = labels[..n].iter().copied().collect();
        let candidates: Vec<Edge> = g
            .edges()
            .into_iter()
            .filter(|e| {
                let (u, v) = e.endpoints();
                !removed.contains(u) && !removed.contains(v)
            })
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let avoided = candidates[rng.gen_range(0..candidates.len())];
        let report = check_size_lemma(&g, n, r, removed, avoided).unwrap();
        assert!(report.holds, "size lemma failed on {g:?} W={removed} e={avoided}");
        accepted += 1;
    }
    println!(
        "ACCEPTANCE 5 size-lemma: PASS ({grid_checked} grid instances, {accepted} random instances, boundary exact)"
    );
}

#[test]
fn criterion_6_parameter_sanity() {
    // complete graphs: both parameters infinite, no witness
    for order in 1..=10usize {
        let g = Graph::complete(order);
        let t = toughness(&g).unwrap();
        let i = isolated_toughness(&g).unwrap();
        assert_eq!(t.value, ExtRational::Infinity);
        assert_eq!(i.value, ExtRational::Infinity);
        assert!(t.witness.is_none() && i.witness.is_none());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut non_complete = 0usize;
    while non_complete < 1000 {
        let order = rng.gen_range(2..=8);
        let g = random_graph(order, rng.gen_range(0.1..0.95), &mut rng);
        let t = toughness(&g).unwrap();
        let i = isolated_toughness(&g).unwrap();
        if g.is_complete() {
            assert_eq!(t.value, ExtRational::Infinity);
            assert_eq!(i.value, ExtRational::Infinity);
            continue;
        }
        non_complete += 1;
        assert!(t.value <= i.value, "t > I on {g:?}");
        assert!(t.value.is_finite() && i.value.is_finite());

        let full = g.vertices().mask();
        let w = t.witness.expect("finite toughness has a witness");
        let omega = g.component_count_in(full & !w.mask());
        assert!(omega >= 2);
        assert_eq!(t.value, ExtRational::from_ratio(w.len(), omega));

        let w = i.witness.expect("finite isolated toughness has a witness");
        let isolated = g.isolated_count_in(full & !w.mask());
        assert!(isolated >= 2);
        assert_eq!(i.value, ExtRational::from_ratio(w.len(), isolated));
    }
    println!("ACCEPTANCE 6 parameter-sanity: PASS (1000 non-complete graphs, witnesses exact)");
}

#[test]
fn criterion_7_io_round_trip_and_golden() {
    // graph6 round trip over the whole universe
    let mut checked = 0usize;
    for level in universe() {
        for g in level {
            let text = emit_graph6(g).unwrap();
            assert_eq!(&parse_graph6(&text).unwrap(), g);
            assert_eq!(emit_graph6(&parse_graph6(&text).unwrap()).unwrap(), text);
            checked += 1;
        }
    }

    // CLI golden files: byte-stable across runs and against the committed
    // snapshots (regenerate with PATHFACTOR_BLESS=1)
    let cases: &[(&str, &[&str], i32)] = &[
        ("analyze_k4", &["analyze", "--expr", "K4", "--stable"], 0),
        (
            "decide_critical",
            &[
                "decide", "--k", "2", "--mode", "critical", "--n", "1", "--expr",
                "K3+(3*K1|K2)", "--stable",
            ],
            0,
        ),
        (
            "generate_remark5",
            &["generate", "--remark", "5", "--n", "0", "--r", "0", "--stable"],
            0,
        ),
        (
            "verify_remark1",
            &["verify", "--remark", "1", "--n", "1", "--r", "0", "--stable"],
            0,
        ),
        (
            "hunt_small",
            &[
                "hunt", "--theorem", "7", "--max-order", "6", "--samples", "25", "--seed",
                "7", "--stable",
            ],
            0,
        ),
    ];
    let golden_dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var("PATHFACTOR_BLESS").is_ok();
    if bless {
        std::fs::create_dir_all(&golden_dir).unwrap();
    }
    for (name, args, expected_code) in cases {
        let run = || {
            let out = Command::new(env!("CARGO_BIN_EXE_pathfactor"))
                .args(*args)
                .output()
                .expect("binary runs");
            (out.status.code().unwrap_or(-1), out.stdout)
        };
        let (code_a, bytes_a) = run();
        let (code_b, bytes_b) = run();
        assert_eq!(code_a, *expected_code, "{name}: unexpected exit code");
        assert_eq!(code_a, code_b, "{name}: exit code varies between runs");
        assert_eq!(bytes_a, bytes_b, "{name}: output varies between runs");
        let path = golden_dir.join(format!("{name}.json"));
        if bless {
            std::fs::write(&path, &bytes_a).unwrap();
        } else {
            let want = std::fs::read(&path)
                .unwrap_or_else(|e| panic!("{name}: missing golden file {path:?}: {e}"));
            assert_eq!(bytes_a, want, "{name}: output deviates from golden file");
        }
    }

    // published CLI behaviors
    let decide = Command::new(env!("CARGO_BIN_EXE_pathfactor"))
        .args([
            "decide", "--k", "2", "--mode", "critical", "--n", "1", "--expr", "K3+(3*K1|K2)",
        ])
        .output()
        .unwrap();
    assert_eq!(decide.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&decide.stdout).unwrap();
    assert_eq!(doc["results"]["holds"], serde_json::json!(false));
    assert_eq!(doc["results"]["certificate"]["criterionValue"], serde_json::json!(5));
    assert_eq!(doc["results"]["certificate"]["bound"], serde_json::json!(4));

    let analyze = Command::new(env!("CARGO_BIN_EXE_pathfactor"))
        .args(["analyze", "--expr", "K4"])
        .output()
        .unwrap();
    let doc: serde_json::Value = serde_json::from_slice(&analyze.stdout).unwrap();
    assert_eq!(doc["results"]["toughness"]["value"], serde_json::json!("inf"));
    assert_eq!(doc["results"]["connectivity"], serde_json::json!(3));

    let verify = Command::new(env!("CARGO_BIN_EXE_pathfactor"))
        .args(["verify", "--remark", "5", "--n", "0", "--r", "0"])
        .output()
        .unwrap();
    assert_eq!(verify.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&verify.stdout).unwrap();
    assert_eq!(doc["results"]["report"]["verdict"], serde_json::json!("consistent"));

    // the three input routes agree on the same graph
    let edge_file = std::env::temp_dir().join(format!("pathfactor-accept-{}.txt", std::process::id()));
    std::fs::write(&edge_file, "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let digest_of = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_pathfactor"))
            .args(args)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        doc["inputDigest"].as_str().unwrap().to_string()
    };
    let via_edges = digest_of(&["analyze", "--edges", edge_file.to_str().unwrap()]);
    let via_g6 = digest_of(&["analyze", "--g6", "Cl"]);
    let via_expr = digest_of(&["analyze", "--expr", "C4"]);
    assert_eq!(via_edges, via_g6);
    assert_eq!(via_g6, via_expr);
    std::fs::remove_file(&edge_file).ok();

    // usage errors exit 2
    let bad = Command::new(env!("CARGO_BIN_EXE_pathfactor"))
        .args(["analyze", "--g6", "not graph6"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let bad = Command::new(env!("CARGO_BIN_EXE_pathfactor"))
        .args(["frobnicate"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));

    println!("ACCEPTANCE 7 io-and-golden: PASS ({checked} graph6 round trips, golden files byte-stable)");
}
