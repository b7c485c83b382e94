//! Exact total domination toolkit for graphs and their Cartesian products.
//!
//! The crate computes `γ_t`, `γ` and `ρ_2` with certificates, classifies graphs
//! into the families characterizing `γ_t(G) = γ_t(G □ K2)`, decomposes minimum
//! total dominating sets of products, and runs exhaustive verification
//! campaigns over graph6 corpora.

pub mod corpus;
pub mod error;
pub mod families;
pub mod gn;
pub mod graph;
pub mod harness;
pub mod iso;
pub mod product;
pub mod solvers;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use product::{cartesian_product, ProductGraph};
pub use solvers::SolveResult;
pub use vertex_set::VertexSet;
