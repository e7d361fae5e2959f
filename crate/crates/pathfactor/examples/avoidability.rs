//! Avoidability asks for a factor dodging each single edge; critical
//! avoidability additionally deletes any n vertices first. Failures come
//! with a (W, e, X) certificate in the original labels.
//!
//! Run with: cargo run --example avoidability

use pathfactor::construct::parse_construction;
use pathfactor::factor::{is_avoidable, is_critical_avoidable, FactorKind};

fn main() {
    println!("-- avoidability --");
    for (expr, kind) in [
        ("C7", FactorKind::AtLeast3),
        ("K5", FactorKind::AtLeast3),
        ("K2", FactorKind::AtLeast2),
    ] {
        let g = parse_construction(expr).unwrap();
        let out = is_avoidable(&g, kind);
        print!("{expr}, paths >= {}: {}", kind.min_order(), verdict(out.holds, out.vacuous));
        match out.certificate {
            Some(cert) => println!(
                " (avoiding e = {:?} fails: X = {} leaves {} > {})",
                cert.avoided_edge.unwrap(),
                cert.violating_set,
                cert.criterion_value,
                cert.bound
            ),
            None => println!(),
        }
    }

    println!();
    println!("-- critical avoidability --");
    for (expr, kind, n) in [
        ("K6", FactorKind::AtLeast3, 1),
        ("K3+(3*K1|K2)", FactorKind::AtLeast2, 1),
        ("K2+(4*K2)", FactorKind::AtLeast3, 0),
    ] {
        let g = parse_construction(expr).unwrap();
        let out = is_critical_avoidable(&g, kind, n).unwrap();
        print!(
            "{expr}, paths >= {}, n = {n}: {}",
            kind.min_order(),
            verdict(out.holds, out.vacuous)
        );
        match out.certificate {
            Some(cert) => println!(
                " (W = {}, e = {:?}, X = {}: {} > {})",
                cert.removed,
                cert.avoided_edge.unwrap(),
                cert.violating_set,
                cert.criterion_value,
                cert.bound
            ),
            None => println!(),
        }
    }
}

fn verdict(holds: bool, vacuous: bool) -> &'static str {
    match (holds, vacuous) {
        (true, true) => "holds (vacuously)",
        (true, false) => "holds",
        _ => "fails",
    }
}
