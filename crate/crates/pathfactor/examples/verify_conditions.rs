//! Test the three sufficient conditions on concrete instances. A report is
//! consistent when hypothesis and conclusion both hold, vacuous when the
//! hypothesis fails, and a counterexample would mean the implementation is
//! broken somewhere.
//!
//! Run with: cargo run --example verify_conditions

use pathfactor::graph::Graph;
use pathfactor::harness::{
    build_remark_graph, verify_condition_instance, RemarkFamily, SufficientCondition,
};

fn main() {
    let k6 = Graph::complete(6);
    let near_boundary = build_remark_graph(RemarkFamily::ConnectivitySharpOrder2, 1, 0)
        .unwrap()
        .0;
    let at_boundary = build_remark_graph(RemarkFamily::BoundSharpOrder3, 0, 0).unwrap().0;

    let cases = [
        ("K6", &k6, SufficientCondition::ToughnessOrder3, 1, 0),
        (
            "connectivity-sharp instance",
            &near_boundary,
            SufficientCondition::IsolatedToughnessOrder2,
            1,
            0,
        ),
        (
            "bound-sharp instance",
            &at_boundary,
            SufficientCondition::IsolatedToughnessOrder3,
            0,
            0,
        ),
    ];

    for (name, graph, condition, n, r) in cases {
        let report = verify_condition_instance(condition, graph, n, r).unwrap();
        println!("== {name}, condition {} (n={n}, r={r}) ==", condition.id());
        for check in &report.checks {
            println!(
                "  {:<26} expected {:<8} got {:<8} {}",
                check.name,
                check.expected,
                check.actual,
                if check.ok { "ok" } else { "FAIL" }
            );
        }
        match report.conclusion_holds {
            Some(holds) => println!("  conclusion: critical avoidability {}", if holds { "holds" } else { "fails" }),
            None => println!("  conclusion: not evaluated (hypothesis fails)"),
        }
        println!("  verdict: {:?}", report.verdict);
        println!();
    }
}
