//! Magic labelings of graphs and digraphs.
//!
//! Magic labelings of a host are the lattice points of the pointed cone
//! `{x >= 0 : all vertex sums equal}`. This crate computes
//!
//! * minimal Hilbert bases and extreme rays of that cone ([`cone`]),
//! * the counting function `H(r) = I(r) + (-1)^r J(r)` ([`ehrhart`]),
//! * the face lattice of the magic-sum-one slice, including the faces of the
//!   Birkhoff polytope ([`faces`]),
//! * perfect matchings, factorizations and magic-square conversions
//!   ([`apps`]),
//!
//! all in exact integer and rational arithmetic.

pub mod apps;
pub mod cone;
pub mod ehrhart;
mod error;
pub mod export;
pub mod faces;
pub mod graph;
mod limits;
pub mod linalg;

pub use error::{Error, Result};
pub use graph::{
    build_constraints, complete_bipartite, complete_digraph, complete_general_graph,
    complete_graph, ConstraintSystem, Host, HostKind, Labeling,
};
pub use limits::{HilbertAlgorithm, Limits, MAX_EDGES_ENV};
