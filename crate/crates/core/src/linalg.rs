//! Linear algebra over F_q: matrices, row spaces, rank and subspace metrics,
//! and the counting bounds for rank-metric and subspace codes.

use thiserror::Error;

mod bounds;
mod matqm;
mod matrix;
mod subspace;
mod vector;

pub use bounds::{gaussian_coefficient, log_q, singleton_bounds, SingletonBounds};
pub use matqm::MatQm;
pub use matrix::{rank_distance, MatQ};
pub use subspace::{subspace_distance, Subspace};
pub use vector::{matrix_to_vector, vector_rank, vector_to_matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    Shape { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("{op}: matrices over F_{left} and F_{right}")]
    FieldMismatch { op: &'static str, left: u32, right: u32 },
    #[error("expected {expected} entries, got {got}")]
    DataLength { expected: usize, got: usize },
    #[error("entry {value} out of range for F_{q}")]
    Entry { value: u32, q: u32 },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix has rank {rank}, needs full row rank {rows}")]
    NotFullRowRank { rank: usize, rows: usize },
    #[error("subspaces live in F_q^{left} and F_q^{right}")]
    Ambient { left: usize, right: usize },
    #[error("bound parameters out of range: {0}")]
    Parameters(String),
}
