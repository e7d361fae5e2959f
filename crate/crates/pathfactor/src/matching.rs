//! Maximum matching in general graphs via augmenting paths with blossom
//! contraction, O(V^3). Scan order is lowest-label first throughout, so the
//! matching returned for a given graph never varies between runs.

use crate::graph::Graph;

/// `mate[v]` is the vertex matched to `v`, or None if `v` is exposed.
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.order();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut m = Matcher {
        adj: &adj,
        mate: vec![None; n],
        parent: vec![usize::MAX; n],
        base: (0..n).collect(),
        used: vec![false; n],
    };
    for root in 0..n {
        if m.mate[root].is_none() {
            m.augment_from(root);
        }
    }
    m.mate
}

pub fn matching_size(g: &Graph) -> usize {
    maximum_matching(g).iter().flatten().count() / 2
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order() % 2 == 0 && matching_size(g) * 2 == g.order()
}

/// Perfect matching of the subgraph induced by `alive`.
pub fn has_perfect_matching_in(g: &Graph, alive: u64) -> bool {
    let (sub, _) = g
        .remove_vertices(g.vertices().difference(crate::graph::VertexSet::from_mask(alive)))
        .expect("alive is a subset of the vertex set");
    has_perfect_matching(&sub)
}

struct Matcher<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<Option<usize>>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn augment_from(&mut self, root: usize) -> bool {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = usize::MAX);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &to in &self.adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let reaches_even_tree_vertex = to == root
                    || self
                        .mate[to]
                        .is_some_and(|m| self.parent[m] != usize::MAX);
                if reaches_even_tree_vertex {
                    // odd cycle: contract the blossom at the common ancestor
                    let cur_base = self.lca(v, to);
                    let mut in_blossom = vec![false; n];
                    self.mark_path(v, cur_base, to, &mut in_blossom);
                    self.mark_path(to, cur_base, v, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == usize::MAX {
                    self.parent[to] = v;
                    match self.mate[to] {
                        None => {
                            self.flip_augmenting_path(to);
                            return true;
                        }
                        Some(m) => {
                            self.used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
        false
    }

    fn lca(&self, a: usize, b: usize) -> usize {
        let mut on_path = vec![false; self.adj.len()];
        let mut v = a;
        loop {
            v = self.base[v];
            on_path[v] = true;
            match self.mate[v] {
                None => break,
                Some(m) => v = self.parent[m],
            }
        }
        let mut v = b;
        loop {
            v = self.base[v];
            if on_path[v] {
                return v;
            }
            v = self.parent[self.mate[v].expect("inner tree vertex is matched")];
        }
    }

    fn mark_path(&mut self, mut v: usize, until: usize, mut child: usize, flag: &mut [bool]) {
        while self.base[v] != until {
            let m = self.mate[v].expect("blossom vertices below the base are matched");
            flag[self.base[v]] = true;
            flag[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn flip_augmenting_path(&mut self, exposed: usize) {
        let mut v = exposed;
        loop {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = Some(pv);
            self.mate[pv] = Some(v);
            match next {
                None => break,
                Some(u) => v = u,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use rand::Rng;

    /// Exhaustive maximum matching by branching on the lowest unsaturated
    /// vertex; independent of the blossom code.
    pub fn exhaustive_matching_size(g: &Graph) -> usize {
        fn go(g: &Graph, free: u64) -> usize {
            if free == 0 {
                return 0;
            }
            let v = free.trailing_zeros() as usize;
            let rest = free & !(1u64 << v);
            // v stays unmatched
            let mut best = go(g, rest);
            let mut nbrs = g.row(v) & rest;
            while nbrs != 0 {
                let w = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                best = best.max(1 + go(g, rest & !(1u64 << w)));
            }
            best
        }
        go(g, g.vertices().mask())
    }

    #[test]
    fn perfect_matching_examples() {
        assert!(has_perfect_matching(&Graph::complete(2)));
        assert!(!has_perfect_matching(&Graph::cycle(5)));
        assert!(has_perfect_matching(&Graph::path(4)));
        assert!(has_perfect_matching(&Graph::empty(0)));
        assert!(!has_perfect_matching(&Graph::complete(1)));
        assert!(!has_perfect_matching(&Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()));
        // Petersen graph has a perfect matching
        let petersen = Graph::new(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap();
        assert!(has_perfect_matching(&petersen));
    }

    #[test]
    fn matching_is_valid() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let order = rng.gen_range(0..=9);
            let mut edges = Vec::new();
            for u in 0..order {
                for v in u + 1..order {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(order, &edges).unwrap();
            let mate = maximum_matching(&g);
            for v in 0..order {
                if let Some(w) = mate[v] {
                    assert_eq!(mate[w], Some(v));
                    assert!(g.has_edge(v, w));
                }
            }
        }
    }

    #[test]
    fn agrees_with_exhaustive_search_on_all_small_graphs() {
        // every labeled graph on up to 5 vertices
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u64..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).unwrap();
                assert_eq!(matching_size(&g), exhaustive_matching_size(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn agrees_with_exhaustive_search_on_random_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..300 {
            let order = rng.gen_range(6..=10);
            let density = rng.gen_range(0.15..0.9);
            let mut edges = Vec::new();
            for u in 0..order {
                for v in u + 1..order {
                    if rng.gen_bool(density) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(order, &edges).unwrap();
            assert_eq!(matching_size(&g), exhaustive_matching_size(&g), "{g:?}");
        }
    }

    #[test]
    fn induced_matching_matches_subgraph() {
        let g = Graph::cycle(6);
        // a 4-vertex induced path has a perfect matching, a 3-vertex one does not
        assert!(has_perfect_matching_in(&g, 0b001111));
        assert!(!has_perfect_matching_in(&g, 0b000111));
    }
}
