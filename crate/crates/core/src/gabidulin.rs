//! Gabidulin codes: construction, encoding, and decoding of errors,
//! erasures (known locations) and deviations (known values).

use thiserror::Error;

use crate::field::{ExtElem, Field};
use crate::linalg::{vector_rank, MatQ};
use crate::linpoly::LinPoly;

mod bm;
mod code;
mod decode;
mod product;
mod solve;

pub use bm::berlekamp_massey;
pub use code::GabidulinCode;
pub use decode::{conventional_decode, generalized_decode, generalized_decode_locator};
pub use product::{product_code_decode, split_columns};
pub use solve::{gabidulin_solve, SolveError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("need 1 ≤ k ≤ n ≤ m, got n={n}, k={k}, m={m}")]
    Parameters { n: usize, k: usize, m: usize },
    #[error("h_1..h_n are linearly dependent over F_q")]
    DependentH,
    #[error("expected {expected} symbols, got {got}")]
    Length { expected: usize, got: usize },
    #[error("element from a different field")]
    ForeignElement,
    #[error("code has {size} codewords, above the enumeration cap {cap}")]
    TooLarge { size: String, cap: u64 },
}

/// Received word with side information: r, erasure locations L̂ (n×μ over
/// F_q) and deviation values Ê (δ elements of F_{q^m}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReceivedTuple {
    pub r: Vec<ExtElem>,
    pub l_hat: MatQ,
    pub e_hat: Vec<ExtElem>,
}

impl ReceivedTuple {
    pub fn new(r: Vec<ExtElem>, l_hat: MatQ, e_hat: Vec<ExtElem>) -> Self {
        ReceivedTuple { r, l_hat, e_hat }
    }

    /// No side information.
    pub fn plain(field: &Field, r: Vec<ExtElem>) -> Self {
        let n = r.len();
        ReceivedTuple { r, l_hat: MatQ::zeros(field.base(), n, 0), e_hat: Vec::new() }
    }

    pub fn mu(&self) -> usize {
        self.l_hat.cols()
    }

    pub fn delta(&self) -> usize {
        self.e_hat.len()
    }

    /// rank [L̂, e; 0, Ê] for a candidate error word e.
    pub fn errata_rank(&self, field: &Field, e: &[ExtElem]) -> usize {
        let top = self.l_hat.hstack(&crate::linalg::vector_to_matrix(field, e)).expect("n rows");
        let bottom = MatQ::zeros(field.base(), self.delta(), self.mu())
            .hstack(&crate::linalg::vector_to_matrix(field, &self.e_hat))
            .expect("δ rows");
        top.vstack(&bottom).expect("same width").rank()
    }

    fn validate(&self, field: &Field, n: usize) -> Result<(), DecodeFailure> {
        let bad = |msg: String| Err(DecodeFailure::InvalidInput(msg));
        if self.r.len() != n {
            return bad(format!("r has {} symbols, code length is {n}", self.r.len()));
        }
        if self.r.iter().chain(&self.e_hat).any(|x| !field.owns(x)) {
            return bad("element from a different field".into());
        }
        if self.l_hat.rows() != n || self.l_hat.q() != field.q() {
            return bad(format!("L̂ must be {n}×μ over F_{}", field.q()));
        }
        if self.l_hat.rank() != self.mu() {
            return bad(format!("L̂ has rank {} < μ = {}", self.l_hat.rank(), self.mu()));
        }
        if vector_rank(field, &self.e_hat) != self.delta() {
            return bad(format!("Ê has rank below δ = {}", self.delta()));
        }
        Ok(())
    }
}

/// Every intermediate quantity of a decoding run. Fields belonging to the
/// other formulation stay empty.
#[derive(Clone, Debug, Default)]
pub struct DecoderWorkspace {
    pub syndromes: Vec<ExtElem>,
    pub x_hat: Vec<ExtElem>,
    pub lambda_u: LinPoly,
    pub sigma_d: LinPoly,
    // error span formulation
    pub s_du: LinPoly,
    pub sigma_f: LinPoly,
    pub omega: LinPoly,
    pub s_fd: LinPoly,
    pub beta: Vec<ExtElem>,
    pub sigma_u: LinPoly,
    pub sigma: LinPoly,
    // error locator formulation
    pub s_ud: LinPoly,
    pub lambda_f: LinPoly,
    pub psi: LinPoly,
    pub s_fu: LinPoly,
    pub gamma: Vec<ExtElem>,
    pub lambda_d: LinPoly,
    pub lambda: LinPoly,
    // errata
    pub locators: Vec<ExtElem>,
    pub values: Vec<ExtElem>,
    pub locations: Vec<Vec<u16>>,
    pub epsilon: usize,
    pub tau: usize,
}

#[derive(Clone, Debug)]
pub struct Decoded {
    pub codeword: Vec<ExtElem>,
    pub error: Vec<ExtElem>,
    pub epsilon: usize,
    pub mu: usize,
    pub delta: usize,
    pub workspace: DecoderWorkspace,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecodeFailure {
    #[error("invalid received tuple: {0}")]
    InvalidInput(String),
    #[error("μ + δ = {side} is not below the minimum distance {d}")]
    SideInformation { side: usize, d: usize },
    #[error("key equation needs {found} errors, at most {max} correctable")]
    KeyEquation { found: usize, max: usize },
    #[error("{0}")]
    Solve(#[from] SolveError),
    #[error("polynomial of q-degree {degree} has a root space of dimension {roots}")]
    RootSpace { degree: usize, roots: usize },
    #[error("error word does not reproduce the syndromes")]
    Syndrome,
    #[error("errata rank {rank} exceeds the decoding radius {radius}")]
    Radius { rank: usize, radius: usize },
}

impl DecodeFailure {
    /// Short stable label, used in reports.
    pub fn reason(&self) -> &'static str {
        match self {
            DecodeFailure::InvalidInput(_) => "invalid-input",
            DecodeFailure::SideInformation { .. } => "side-information",
            DecodeFailure::KeyEquation { .. } => "key-equation",
            DecodeFailure::Solve(_) => "solve",
            DecodeFailure::RootSpace { .. } => "root-space",
            DecodeFailure::Syndrome => "syndrome",
            DecodeFailure::Radius { .. } => "radius",
        }
    }
}

pub type DecodeOutcome = Result<Decoded, DecodeFailure>;
