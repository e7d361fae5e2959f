//! Exact vertex connectivity, toughness and isolated toughness.
//!
//! Toughness is the minimum of |X|/ω(G−X) over vertex sets X leaving at
//! least two components; isolated toughness replaces ω by the isolated
//! vertex count. Both are +∞ exactly on complete graphs. The sweeps are
//! exhaustive over subsets, ordered by size and then lexicographically, so
//! witnesses are deterministic; a running lower bound |X|/(order−|X|) cuts
//! the sweep off once no larger set can improve the minimum.

use std::collections::VecDeque;

use itertools::Itertools;
use num_rational::Ratio;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::rational::ExtRational;

/// An exact parameter value together with a minimizing set when finite.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ParameterResult {
    pub value: ExtRational,
    pub witness: Option<VertexSet>,
}

impl ParameterResult {
    fn infinite() -> ParameterResult {
        ParameterResult {
            value: ExtRational::Infinity,
            witness: None,
        }
    }
}

/// Vertex connectivity. Complete graphs have connectivity order−1; any
/// other graph attains the minimum over non-adjacent pairs of the local
/// vertex cut computed by max-flow on the split network.
pub fn connectivity(g: &Graph) -> Result<usize, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if g.is_complete() {
        return Ok(g.order() - 1);
    }
    let mut best = usize::MAX;
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if !g.has_edge(u, v) {
                best = best.min(local_vertex_connectivity(g, u, v));
            }
        }
    }
    Ok(best)
}

/// Minimum number of vertices separating the non-adjacent pair (s, t):
/// unit capacity through each vertex, infinite along each edge.
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.order();
    let inf = (n + 1) as i32;
    let nodes = 2 * n;
    let mut cap = vec![vec![0i32; nodes]; nodes];
    let inner = |v: usize| 2 * v;
    let outer = |v: usize| 2 * v + 1;
    for v in 0..n {
        cap[inner(v)][outer(v)] = 1;
    }
    for e in g.edges() {
        let (u, v) = e.endpoints();
        cap[outer(u)][inner(v)] = inf;
        cap[outer(v)][inner(u)] = inf;
    }
    max_flow(&mut cap, outer(s), inner(t)) as usize
}

fn max_flow(cap: &mut [Vec<i32>], source: usize, sink: usize) -> i32 {
    let n = cap.len();
    let mut total = 0;
    loop {
        let mut parent = vec![usize::MAX; n];
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        'bfs: while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if parent[v] == usize::MAX && cap[u][v] > 0 {
                    parent[v] = u;
                    if v == sink {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return total;
        }
        let mut bottleneck = i32::MAX;
        let mut v = sink;
        while v != source {
            let u = parent[v];
            bottleneck = bottleneck.min(cap[u][v]);
            v = u;
        }
        let mut v = sink;
        while v != source {
            let u = parent[v];
            cap[u][v] -= bottleneck;
            cap[v][u] += bottleneck;
            v = u;
        }
        total += bottleneck;
    }
}

/// Toughness t(G) = min |X|/ω(G−X) over X with ω(G−X) ≥ 2; +∞ iff complete.
pub fn toughness(g: &Graph) -> Result<ParameterResult, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if g.is_complete() {
        return Ok(ParameterResult::infinite());
    }
    Ok(sweep_min_ratio(g, 0, |g, alive| g.component_count_in(alive)))
}

/// Isolated toughness I(G) = min |X|/i(G−X) over X with i(G−X) ≥ 2;
/// +∞ iff complete.
pub fn isolated_toughness(g: &Graph) -> Result<ParameterResult, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if g.is_complete() {
        return Ok(ParameterResult::infinite());
    }
    // Isolating two vertices u, v forces X ⊇ N(u) ∪ N(v) for a non-adjacent
    // pair, so no smaller X qualifies; start the size sweep there.
    let mut start = usize::MAX;
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if !g.has_edge(u, v) {
                start = start.min(g.neighbors(u).union(g.neighbors(v)).len());
            }
        }
    }
    Ok(sweep_min_ratio(g, start, |g, alive| {
        g.isolated_count_in(alive)
    }))
}

/// Exhaustive minimum of |X|/criterion(G−X) subject to criterion ≥ 2.
/// Sizes ascend and subsets of one size are visited in lexicographic member
/// order; only strict improvements replace the incumbent, which makes the
/// witness the smallest-then-lexicographically-least minimizer.
fn sweep_min_ratio(
    g: &Graph,
    start_size: usize,
    criterion: impl Fn(&Graph, u64) -> usize,
) -> ParameterResult {
    let n = g.order();
    let full = VertexSet::full(n).mask();
    let mut best: Option<(Ratio<i64>, VertexSet)> = None;
    let max_size = n.saturating_sub(2);
    for size in start_size..=max_size {
        if let Some((value, _)) = &best {
            // criterion(G−X) ≤ n−|X|, so no X of this size (or larger,
            // since the bound increases) can beat the incumbent.
            if Ratio::new(size as i64, (n - size) as i64) >= *value {
                break;
            }
        }
        for combo in (0..n).combinations(size) {
            let removed: VertexSet = combo.into_iter().collect();
            let alive = full & !removed.mask();
            let count = criterion(g, alive);
            if count >= 2 {
                let ratio = Ratio::new(size as i64, count as i64);
                if best.as_ref().is_none_or(|(value, _)| ratio < *value) {
                    best = Some((ratio, removed));
                }
            }
        }
    }
    match best {
        Some((value, witness)) => ParameterResult {
            value: ExtRational::Finite(value),
            witness: Some(witness),
        },
        None => ParameterResult::infinite(),
    }
}
