use thiserror::Error;

use crate::face::Face;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: a complex must contain at least the empty face")]
    EmptyInput,

    #[error("vertex {vertex} out of range for a universe of {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{face} is not a face of the complex")]
    NotAFace { face: Face },

    #[error("operation requires a uniform family")]
    NotUniform,

    #[error("row has length {got}, tracker ambient dimension is {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("minor index sets differ in size: {rows} rows vs {cols} columns")]
    SizeMismatch { rows: usize, cols: usize },

    #[error("basis matrix is singular")]
    SingularBasis,

    #[error("cardinality {k} out of range for this complex")]
    OutOfRange { k: usize },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("augmentation impossible: {} sets admit only {} distinct target faces", violator.len(), neighborhood.len())]
    AugmentationImpossible {
        violator: Vec<Face>,
        neighborhood: Vec<Face>,
    },

    #[error("bad size: {0}")]
    BadSize(String),

    #[error("rank {k} exceeds ground set of {n} elements")]
    BadRank { k: usize, n: usize },

    #[error("genericity failure at p = {p}: {detail}")]
    GenericityFailure { p: u64, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
