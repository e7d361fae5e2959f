//! Sweep the six sharp join constructions over a small (n, r) grid and
//! verify each against its closed forms: exact connectivity, exact
//! toughness or isolated toughness, and failure of critical avoidability
//! with the expected certificate shape.
//!
//! Run with: cargo run --example sharp_families

use pathfactor::harness::{build_remark_graph, verify_sharpness, RemarkFamily, Verdict};

fn main() {
    for family in RemarkFamily::ALL {
        println!("== family {} ==", family.id());
        for n in 0..=3usize {
            for r in 0..=2usize {
                let Ok((graph, expect)) = build_remark_graph(family, n, r) else {
                    continue; // (n, r) violates the family constraint
                };
                if graph.order() > 16 {
                    continue;
                }
                let report = verify_sharpness(family, n, r).unwrap();
                let status = match report.verdict {
                    Verdict::Consistent => "ok",
                    Verdict::Vacuous => "vacuous",
                    Verdict::Counterexample => "MISMATCH",
                };
                println!(
                    "  n={n} r={r}: {:<22} order {:>2}  value {:<5} certificate {} > {}  [{status}]",
                    family.expression(n, r),
                    graph.order(),
                    expect.parameter_value.to_string(),
                    expect.criterion_value,
                    expect.bound,
                );
            }
        }
        println!();
    }
}
