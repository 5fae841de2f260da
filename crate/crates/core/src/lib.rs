//! Rank-metric error control: Gabidulin codes over F_{q^m}, generalized
//! decoding with errors, erasures and deviations, lifting to subspace codes,
//! and a random linear network coding channel simulator.

pub mod channel;
pub mod field;
pub mod format;
pub mod gabidulin;
pub mod linalg;
pub mod linpoly;
pub mod oracle;

pub use field::{ExtElem, Field, FieldError, Fq};
pub use gabidulin::{
    DecodeFailure, DecodeOutcome, Decoded, GabidulinCode, ReceivedTuple,
};
pub use linalg::{MatQ, MatrixError, Subspace};
pub use linpoly::LinPoly;
