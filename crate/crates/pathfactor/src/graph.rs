//! Immutable undirected simple graphs on dense integer labels, with the
//! construction algebra (complete/path/cycle, disjoint union, join, corona)
//! used throughout the toolkit.
//!
//! Graphs are value objects backed by one adjacency bitmask row per vertex,
//! which caps the order at [`MAX_ORDER`]. Everything downstream (parameter
//! sweeps, deciders, the harness) assumes this dense representation.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on graph order imposed by the u64 adjacency rows.
pub const MAX_ORDER: usize = 64;

/// Errors raised by graph construction and structural queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge {0} is not present")]
    MissingEdge(Edge),
    #[error("edge {0} is already present")]
    EdgeAlreadyPresent(Edge),
    #[error("{0} is not a subset of the vertex set")]
    NotASubset(VertexSet),
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("cannot remove {requested} vertices from a graph of order {order}")]
    InvalidRemovalCount { requested: usize, order: usize },
}

/// A set of vertex labels, stored as a bitmask.
///
/// Iteration is always in ascending label order, so sets print and
/// serialize deterministically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// All labels `0..order`.
    pub fn full(order: usize) -> Self {
        debug_assert!(order <= MAX_ORDER);
        if order == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << order) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 & (1u64 << v) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Order by size, then by the ascending member sequence. This is the
    /// tie-break used for every deterministic witness in the toolkit.
    pub fn cmp_by_size_then_members(self, other: Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.to_vec().cmp(&other.to_vec()))
    }

    /// Translate members through a label map (`map[member]` must be defined).
    pub fn map_labels(self, map: &[usize]) -> Self {
        let mut out = VertexSet::EMPTY;
        for v in self.iter() {
            out = out.with(map[v]);
        }
        out
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            debug_assert!(v < MAX_ORDER);
            s = s.with(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        for &v in &members {
            if v >= MAX_ORDER {
                return Err(serde::de::Error::custom(format!(
                    "vertex {v} out of range"
                )));
            }
        }
        Ok(members.into_iter().collect())
    }
}

/// An undirected edge in canonical form `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Canonicalizes the endpoint order; rejects loops.
    pub fn new(a: usize, b: usize) -> Result<Edge, GraphError> {
        if a == b {
            return Err(GraphError::LoopEdge(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn map_labels(self, map: &[usize]) -> Edge {
        Edge::new(map[self.u], map[self.v]).expect("label map collapsed an edge")
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// Finite undirected simple graph on labels `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicate edges (after
    /// canonicalization) and loops are rejected rather than merged.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::TooLarge(order));
        }
        let mut g = Graph {
            order,
            rows: vec![0; order],
        };
        for &(a, b) in edges {
            let e = Edge::new(a, b)?;
            g.check_vertex(e.u)?;
            g.check_vertex(e.v)?;
            if g.has_edge(e.u, e.v) {
                return Err(GraphError::DuplicateEdge(e));
            }
            g.rows[e.u] |= 1u64 << e.v;
            g.rows[e.v] |= 1u64 << e.u;
        }
        Ok(g)
    }

    pub fn empty(order: usize) -> Graph {
        assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
        Graph {
            order,
            rows: vec![0; order],
        }
    }

    pub fn complete(order: usize) -> Graph {
        let mut g = Graph::empty(order);
        let full = VertexSet::full(order).mask();
        for v in 0..order {
            g.rows[v] = full & !(1u64 << v);
        }
        g
    }

    pub fn path(order: usize) -> Graph {
        let mut g = Graph::empty(order);
        for v in 1..order {
            g.rows[v - 1] |= 1u64 << v;
            g.rows[v] |= 1u64 << (v - 1);
        }
        g
    }

    pub fn cycle(order: usize) -> Graph {
        assert!(order >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(order);
        g.rows[0] |= 1u64 << (order - 1);
        g.rows[order - 1] |= 1;
        g
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    /// Neighbourhood of `v` as a bitmask row.
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order && b < self.order && self.rows[a] & (1u64 << b) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order of `(u, v)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            let mut rest = self.rows[u] & !(VertexSet::full(u + 1).mask());
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                out.push(Edge { u, v });
                rest &= rest - 1;
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.order * self.order.saturating_sub(1) / 2
    }

    pub fn isolated_count(&self) -> usize {
        self.rows.iter().filter(|&&r| r == 0).count()
    }

    /// Vertices of degree 0 inside the induced subgraph on `alive`.
    pub fn isolated_count_in(&self, alive: u64) -> usize {
        let mut count = 0;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if self.rows[v] & alive == 0 {
                count += 1;
            }
            rest &= rest - 1;
        }
        count
    }

    /// Vertices reachable from `start` staying inside `alive`.
    pub fn reach(&self, start: usize, alive: u64) -> u64 {
        debug_assert!(alive & (1u64 << start) != 0);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                next |= self.rows[v] & alive;
                rest &= rest - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connected components of the induced subgraph on `alive`, ordered by
    /// smallest member.
    pub fn components_in(&self, alive: u64) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.reach(v, alive);
            out.push(VertexSet(comp));
            rest &= !comp;
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_in(self.vertices().mask())
    }

    /// Number of components of the induced subgraph on `alive`.
    pub fn component_count_in(&self, alive: u64) -> usize {
        let mut count = 0;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.reach(v, alive);
            count += 1;
            rest &= !comp;
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.component_count_in(self.vertices().mask()) == 1
    }

    /// Induced subgraph on `V(G) \ removed`, relabeled contiguously.
    /// The returned map sends new labels to the original ones.
    pub fn remove_vertices(&self, removed: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if !removed.is_subset_of(self.vertices()) {
            return Err(GraphError::NotASubset(removed));
        }
        let keep: Vec<usize> = self
            .vertices()
            .difference(removed)
            .iter()
            .collect();
        let mut new_of_old = vec![usize::MAX; self.order];
        for (new, &old) in keep.iter().enumerate() {
            new_of_old[old] = new;
        }
        let mut g = Graph::empty(keep.len());
        for (new_u, &old_u) in keep.iter().enumerate() {
            for old_v in self.neighbors(old_u).difference(removed).iter() {
                let new_v = new_of_old[old_v];
                if new_u < new_v {
                    g.rows[new_u] |= 1u64 << new_v;
                    g.rows[new_v] |= 1u64 << new_u;
                }
            }
        }
        Ok((g, keep))
    }

    /// Same vertex set with one edge deleted.
    pub fn remove_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::MissingEdge(e));
        }
        let mut g = self.clone();
        g.rows[e.u] &= !(1u64 << e.v);
        g.rows[e.v] &= !(1u64 << e.u);
        Ok(g)
    }

    /// Same vertex set with one edge added.
    pub fn add_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        if self.has_edge(e.u, e.v) {
            return Err(GraphError::EdgeAlreadyPresent(e));
        }
        let mut g = self.clone();
        g.rows[e.u] |= 1u64 << e.v;
        g.rows[e.v] |= 1u64 << e.u;
        Ok(g)
    }

    /// Disjoint union; `self` keeps its labels, `other` is shifted up.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let order = self.order + other.order;
        assert!(order <= MAX_ORDER, "union order {order} exceeds {MAX_ORDER}");
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << self.order));
        Graph { order, rows }
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        let left = VertexSet::full(self.order).mask();
        let right = VertexSet::full(g.order).mask() & !left;
        for v in 0..self.order {
            g.rows[v] |= right;
        }
        for v in self.order..g.order {
            g.rows[v] |= left;
        }
        g
    }

    /// Attaches one new pendant leaf to every vertex; vertex `v` gets the
    /// leaf `order + v`.
    pub fn corona(&self) -> Result<Graph, GraphError> {
        if self.order == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let order = 2 * self.order;
        assert!(order <= MAX_ORDER, "corona order {order} exceeds {MAX_ORDER}");
        let mut rows = self.rows.clone();
        rows.resize(order, 0);
        for v in 0..self.order {
            let leaf = self.order + v;
            rows[v] |= 1u64 << leaf;
            rows[leaf] |= 1u64 << v;
        }
        Ok(Graph { order, rows })
    }

    /// Applies a permutation of the labels: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut g = Graph::empty(self.order);
        for u in 0..self.order {
            for v in self.neighbors(u).iter() {
                if u < v {
                    let (a, b) = (perm[u], perm[v]);
                    g.rows[a] |= 1u64 << b;
                    g.rows[b] |= 1u64 << a;
                }
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(order={}, edges=[", self.order)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}
