//! Exact computation for [1,2]-domination and its total variant: graph
//! primitives, graph6 interchange, small-order isomorph-free enumeration,
//! two independent exact solvers, named graph families, proof-side counting
//! checks, and batch claim verification.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod proof;
pub mod solve;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use solve::{DomKind, DomValue, SolveResult};
