//! Exact combinatorics for path factors in small graphs: toughness-style
//! parameters, factor existence with certificates or constructive
//! witnesses, avoidability under vertex and edge deletion, the sharp join
//! constructions that bound what toughness can promise, and a seeded
//! counterexample hunt. Everything is exhaustive and exact; the toolkit
//! targets graphs of a couple dozen vertices, not scale.
//!
//! Start from [`graph::Graph`] (or [`construct::parse_construction`] /
//! [`graph6::parse_graph6`]) and the `examples/` directory, which walks
//! through each capability.

#![allow(clippy::manual_is_multiple_of)]
#![allow(clippy::int_plus_one)]

pub mod cli;
pub mod construct;
pub mod edgelist;
pub mod factor;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod matching;
pub mod rational;
pub mod report;
pub mod smallgraphs;
pub mod sun;
pub mod toughness;

pub use factor::{
    decide_factor, extract_path_factor, is_avoidable, is_critical_avoidable, Certificate,
    FactorKind, PathFactor,
};
pub use graph::{Edge, Graph, GraphError, VertexSet};
pub use rational::ExtRational;
pub use sun::{is_factor_critical, is_sun, sun_count, sun_decompose, SunDecomposition};
pub use toughness::{connectivity, isolated_toughness, toughness, ParameterResult};
