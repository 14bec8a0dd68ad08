//! Exact machinery for simplicial complexes at desk scale: faces and set
//! families as bitmasks, combinatorial and exterior algebraic shifting,
//! reduced homology and depth over a prime field, and exhaustive verifiers
//! for intersecting-family bounds.
//!
//! Everything is exact: searches are branch-and-bound or full enumeration
//! with explicit resource limits, never heuristics. The data-parallel inner
//! loops run on rayon when the default `parallel` feature is enabled and
//! fall back to sequential iteration without it; results are identical
//! either way.

pub mod complex;
pub mod ekr;
pub mod error;
pub mod face;
pub mod family;
pub mod generators;
pub mod graph;
pub mod homology;
pub mod linalg;
pub mod shifting;
pub mod vd;

#[cfg(test)]
pub(crate) mod testutil;

pub use complex::Complex;
pub use error::{Error, Result};
pub use face::{Face, VertexPrefix, MAX_VERTICES};
pub use family::SetFamily;
pub use graph::Graph;

/// Default prime for the coefficient field: the Mersenne prime 2^31 - 1.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Default seed set for algebraic shifting; results must agree across all
/// seeds before being reported as stable.
pub const DEFAULT_SEEDS: [u64; 3] = [1, 2, 3];
