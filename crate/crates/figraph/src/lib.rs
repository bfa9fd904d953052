//! Classification graphs for families of nested symmetric graphs.
//!
//! A classification graph is a finite labeled multigraph that encodes an
//! entire family `G_0, G_1, G_2, ...` of finite simple graphs carrying
//! compatible symmetric-group actions, as long as the vertex count grows at
//! most quadratically through unordered-pair orbits. This crate:
//!
//! * defines, validates, serializes and randomly generates classification
//!   graphs ([`model`]);
//! * expands them into concrete members `G_n` ([`expand`]), with DIMACS and
//!   JSON interchange ([`graph_io`]);
//! * computes exact independence numbers, vertex covers and alpha sequences
//!   over ranges of `n` ([`solver`]);
//! * presents edge ideals and cross-checks `alpha = dim R/I` through an
//!   independent vertex-cover search ([`ideals`]);
//! * fits quasi-polynomials and linear recurrences to alpha sequences and
//!   scores the observed trends ([`analysis`]);
//! * bundles the end-to-end verification suites the CLI exposes
//!   ([`verify`]).

pub mod analysis;
pub mod bitset;
pub mod expand;
pub mod graph_io;
pub mod ideals;
pub mod model;
pub mod poly;
pub mod solver;
pub mod verify;

pub use expand::{build_kneser_union, expand, ConcreteGraph, Payload, VertexLabel};
pub use model::{
    family, parse, random, ClassificationGraph, EdgeLabel, Family, OrbitKind, RandomGenParams,
};
pub use solver::{
    alpha_bruteforce, max_independent_set, min_vertex_cover, scan_alpha, AlphaSequence, Budget,
};
