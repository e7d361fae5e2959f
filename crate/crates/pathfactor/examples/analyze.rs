//! Compute every parameter the toolkit knows for a handful of graphs.
//!
//! Run with: cargo run --example analyze

use pathfactor::construct::parse_construction;
use pathfactor::graph::Graph;
use pathfactor::graph6::emit_graph6;
use pathfactor::sun::sun_count;
use pathfactor::toughness::{connectivity, isolated_toughness, toughness};

fn main() {
    let samples = [
        ("C7", parse_construction("C7").unwrap()),
        ("K4", Graph::complete(4)),
        ("K1,3 star", parse_construction("K1+3*K1").unwrap()),
        ("K3+(3*K1|K2)", parse_construction("K3+(3*K1|K2)").unwrap()),
        ("corona(C3)", parse_construction("corona(C3)").unwrap()),
    ];

    for (name, g) in samples {
        println!("== {name} ==");
        println!("  graph6        : {}", emit_graph6(&g).unwrap());
        println!("  order / edges : {} / {}", g.order(), g.edge_count());
        println!("  connectivity  : {}", connectivity(&g).unwrap());
        let t = toughness(&g).unwrap();
        match &t.witness {
            Some(w) => println!("  toughness     : {} at X = {w}", t.value),
            None => println!("  toughness     : {}", t.value),
        }
        let i = isolated_toughness(&g).unwrap();
        match &i.witness {
            Some(w) => println!("  isolated t.   : {} at X = {w}", i.value),
            None => println!("  isolated t.   : {}", i.value),
        }
        println!("  sun components: {}", sun_count(&g));
        println!();
    }
}
