//! Enumeration of non-isomorphic graphs of small order.
//!
//! Canonical form is the minimum over all vertex permutations of the packed
//! upper-triangle edge bitstring; graphs of order n+1 are generated by
//! attaching a new vertex to every subset of every canonical n-vertex graph
//! and deduplicating. Exhaustive and exact, practical for order ≤ 7
//! (1044 graphs); the permutation sweep makes larger orders prohibitively
//! slow by design; this is a verification fixture, not a generator.

use std::collections::HashSet;

use itertools::Itertools;

use crate::graph::Graph;

/// Maximum order the canonical code supports (C(11,2) = 55 bits).
pub const MAX_CANONICAL_ORDER: usize = 11;

/// Permutation-invariant identifier: equal codes iff isomorphic graphs.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(
        n <= MAX_CANONICAL_ORDER,
        "canonical code supports order <= {MAX_CANONICAL_ORDER}"
    );
    if n == 0 {
        return 0;
    }
    let edges = g.edges();
    let mut best = u64::MAX;
    for perm in (0..n).permutations(n) {
        let mut code = 0u64;
        for e in &edges {
            let (u, v) = e.endpoints();
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            code |= 1u64 << pair_index(n, a, b);
        }
        best = best.min(code);
    }
    best
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// All non-isomorphic graphs of the given order, one canonical
/// representative each, sorted by canonical code.
pub fn nonisomorphic_graphs(order: usize) -> Vec<Graph> {
    nonisomorphic_graphs_up_to(order)
        .pop()
        .expect("at least one level")
}

/// Levels 1..=order of the non-isomorphic universe, each sorted by
/// canonical code.
pub fn nonisomorphic_graphs_up_to(order: usize) -> Vec<Vec<Graph>> {
    assert!(
        (1..=7).contains(&order),
        "enumeration is practical only for orders 1..=7"
    );
    let mut levels: Vec<Vec<Graph>> = Vec::with_capacity(order);
    let mut current = vec![Graph::empty(0)];
    for n in 1..=order {
        let mut seen = HashSet::new();
        let mut next: Vec<(u64, Graph)> = Vec::new();
        for parent in &current {
            for attach_mask in 0u64..(1 << (n - 1)) {
                let mut edges: Vec<(usize, usize)> = parent
                    .edges()
                    .iter()
                    .map(|e| e.endpoints())
                    .collect();
                let mut bits = attach_mask;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    edges.push((v, n - 1));
                }
                let candidate = Graph::new(n, &edges).expect("valid augmented graph");
                let code = canonical_code(&candidate);
                if seen.insert(code) {
                    next.push((code, candidate));
                }
            }
        }
        next.sort_by_key(|(code, _)| *code);
        current = next.into_iter().map(|(_, g)| g).collect();
        levels.push(current.clone());
    }
    levels
}
