//! Factor-critical graphs, suns, and the per-component sun decomposition.
//!
//! A sun is K1, K2, or the corona of a factor-critical graph on at least
//! three vertices; suns on six or more vertices are "big". Components are
//! classified structurally: the degree-1 vertices of a big sun are exactly
//! its pendant leaves (the kernel has minimum degree 2 inside itself plus
//! one leaf), so peeling them and testing the kernel is sound.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError, VertexSet};
use crate::matching::has_perfect_matching_in;

/// True iff removing any single vertex leaves a perfectly matchable graph.
/// Even order or a disconnected graph (beyond K1) fails immediately.
pub fn is_factor_critical(g: &Graph) -> bool {
    is_factor_critical_in(g, g.vertices().mask())
}

/// Factor-criticality of the subgraph induced by `alive`.
pub fn is_factor_critical_in(g: &Graph, alive: u64) -> bool {
    let size = alive.count_ones() as usize;
    if size % 2 == 0 {
        return false;
    }
    if size == 1 {
        return true;
    }
    let start = alive.trailing_zeros() as usize;
    if g.reach(start, alive) != alive {
        return false;
    }
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if !has_perfect_matching_in(g, alive & !(1u64 << v)) {
            return false;
        }
    }
    true
}

/// How a connected graph qualifies as a sun.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SunKind {
    /// A single vertex.
    Isolated,
    /// A single edge.
    Pair,
    /// Corona of the factor-critical kernel.
    Big { kernel: VertexSet },
}

/// Classifies a connected graph; `None` means it is not a sun.
pub fn classify_sun(g: &Graph) -> Result<Option<SunKind>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if g.order() == 0 {
        return Ok(None);
    }
    Ok(classify_component(g, g.vertices().mask()))
}

pub fn is_sun(g: &Graph) -> Result<bool, GraphError> {
    Ok(classify_sun(g)?.is_some())
}

/// Sun test for one connected component given by its vertex mask.
fn classify_component(g: &Graph, comp: u64) -> Option<SunKind> {
    let size = comp.count_ones() as usize;
    if size == 1 {
        return Some(SunKind::Isolated);
    }
    if size == 2 {
        return Some(SunKind::Pair);
    }
    if size < 6 || size % 2 != 0 {
        return None;
    }
    let mut leaves = 0u64;
    let mut rest = comp;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (g.row(v) & comp).count_ones() == 1 {
            leaves |= 1u64 << v;
        }
    }
    if leaves.count_ones() as usize != size / 2 {
        return None;
    }
    let kernel = comp & !leaves;
    let mut rest = kernel;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (g.row(u) & leaves).count_ones() != 1 {
            return None;
        }
    }
    // each leaf must hang off the kernel, not off another leaf
    let mut rest = leaves;
    while rest != 0 {
        let l = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if g.row(l) & comp & kernel == 0 {
            return None;
        }
    }
    if !is_factor_critical_in(g, kernel) {
        return None;
    }
    Some(SunKind::Big {
        kernel: VertexSet::from_mask(kernel),
    })
}

/// A big sun component together with its factor-critical kernel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigSun {
    pub component: VertexSet,
    pub kernel: VertexSet,
}

/// Components of a graph split into isolated vertices, single edges, big
/// suns, and everything else.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SunDecomposition {
    pub isolated: Vec<VertexSet>,
    pub pairs: Vec<VertexSet>,
    pub big_suns: Vec<BigSun>,
    pub non_suns: Vec<VertexSet>,
}

impl SunDecomposition {
    pub fn sun_count(&self) -> usize {
        self.isolated.len() + self.pairs.len() + self.big_suns.len()
    }
}

pub fn sun_decompose(g: &Graph) -> SunDecomposition {
    sun_decompose_in(g, g.vertices().mask())
}

pub fn sun_decompose_in(g: &Graph, alive: u64) -> SunDecomposition {
    let mut out = SunDecomposition {
        isolated: Vec::new(),
        pairs: Vec::new(),
        big_suns: Vec::new(),
        non_suns: Vec::new(),
    };
    for comp in g.components_in(alive) {
        match classify_component(g, comp.mask()) {
            Some(SunKind::Isolated) => out.isolated.push(comp),
            Some(SunKind::Pair) => out.pairs.push(comp),
            Some(SunKind::Big { kernel }) => out.big_suns.push(BigSun {
                component: comp,
                kernel,
            }),
            None => out.non_suns.push(comp),
        }
    }
    out
}

/// Number of sun components of the subgraph induced by `alive`.
pub fn sun_count_in(g: &Graph, alive: u64) -> usize {
    let mut count = 0;
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let comp = g.reach(v, alive);
        if classify_component(g, comp).is_some() {
            count += 1;
        }
        rest &= !comp;
    }
    count
}

pub fn sun_count(g: &Graph) -> usize {
    sun_count_in(g, g.vertices().mask())
}
