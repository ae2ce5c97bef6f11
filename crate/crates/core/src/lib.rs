//! Exact domination invariants of graphs and their Cartesian products, an
//! executable labeling argument for the bound
//! `γ(G□H) ≥ π(G)/(2π(G)−1) · γ(G)γ(H)`, and a sweep harness that checks the
//! bound and every intermediate claim against exact values.

pub mod bitset;
pub mod bounds;
pub mod domination;
pub mod error;
pub mod graph;
pub mod harness;
pub mod labeling;
pub mod scalar;
pub mod set_cover;
pub mod structure;

pub use bitset::{IndexSet, VertexSet};
pub use error::{Error, Result};
pub use graph::{Graph, ProductGraph};

/// Arbitrary-precision rational used for every bound decision.
pub type Rational = num_rational::Ratio<num_bigint::BigInt>;
/// Machine-word rational, adequate for sampling small simplex points.
pub type Rational64 = num_rational::Ratio<i64>;
/// Floating-point scalar for display and exploratory use only.
pub type Float = f64;
