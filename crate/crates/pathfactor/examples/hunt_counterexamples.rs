//! Seeded random soundness sweep: sample graphs, keep the ones satisfying a
//! condition's hypothesis, and confirm the conclusion on every one. The
//! conditions are proven, so a counterexample verdict flags a bug in the
//! deciders, the parameter sweeps, or the sampler, which is the point.
//!
//! Run with: cargo run --release --example hunt_counterexamples

use pathfactor::harness::{hunt, HuntParams, SufficientCondition};

fn main() {
    for condition in [
        SufficientCondition::IsolatedToughnessOrder2,
        SufficientCondition::ToughnessOrder3,
        SufficientCondition::IsolatedToughnessOrder3,
    ] {
        let params = HuntParams {
            condition,
            removal_count: 1,
            margin: 0,
            max_order: 8,
            samples: 200,
            seed: 42,
        };
        let (reports, summary) = hunt(&params).unwrap();
        println!(
            "condition {}: {} samples -> {} consistent, {} vacuous, {} counterexamples",
            condition.id(),
            summary.samples,
            summary.consistent,
            summary.vacuous,
            summary.counterexamples
        );
        for report in reports
            .iter()
            .filter(|r| r.verdict == pathfactor::harness::Verdict::Counterexample)
        {
            println!("  !! {report:#?}");
        }
    }
    println!("\nzero counterexamples expected; anything else is a bug worth filing");
}
