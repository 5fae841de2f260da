//! Exhaustive reference implementations. They are slow on purpose and refuse
//! search spaces above an explicit cap instead of truncating.

use num_bigint::BigUint;
use num_traits::{Pow, ToPrimitive};
use thiserror::Error;

use crate::field::{ExtElem, Fq};
use crate::gabidulin::{CodeError, GabidulinCode, ReceivedTuple};
use crate::linalg::{subspace_distance, MatQ, Subspace};

/// Default cap on enumerated candidates.
pub const DEFAULT_CAP: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("search space of {size} candidates exceeds the cap {cap}")]
    TooLarge { size: String, cap: u64 },
    #[error("empty codebook")]
    Empty,
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Result of an exhaustive minimization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimizer<T> {
    pub best: T,
    pub objective: usize,
    /// Number of candidates reaching the minimum.
    pub ties: usize,
}

impl<T> Minimizer<T> {
    pub fn ambiguous(&self) -> bool {
        self.ties > 1
    }
}

fn search_size(q: u32, entries: usize, cap: u64) -> Result<u64, OracleError> {
    let size: BigUint = Pow::pow(&BigUint::from(q), entries as u32);
    match size.to_u64() {
        Some(s) if s <= cap => Ok(s),
        _ => Err(OracleError::TooLarge { size: size.to_string(), cap }),
    }
}

/// The matrix whose row-major entries are the base-q digits of `index`.
pub fn matrix_from_index(fq: Fq, rows: usize, cols: usize, mut index: u64) -> MatQ {
    let q = fq.q() as u64;
    let data = (0..rows * cols)
        .map(|_| {
            let v = (index % q) as u16;
            index /= q;
            v
        })
        .collect();
    MatQ::from_vec(fq, rows, cols, data).expect("digits below q")
}

/// The codeword minimizing rank[L̂, r − x; 0, Ê], by enumeration of the code.
pub fn brute_generalized_decode(
    code: &GabidulinCode,
    t: &ReceivedTuple,
    cap: u64,
) -> Result<Minimizer<Vec<ExtElem>>, OracleError> {
    let field = code.field();
    if code.size() > BigUint::from(cap) {
        return Err(OracleError::TooLarge { size: code.size().to_string(), cap });
    }
    let words = code.codewords(cap)?;
    let mut best: Option<Minimizer<Vec<ExtElem>>> = None;
    for x in words {
        let diff: Vec<ExtElem> = t.r.iter().zip(&x).map(|(a, b)| field.sub(a, b)).collect();
        let obj = t.errata_rank(field, &diff);
        match &mut best {
            Some(b) if obj > b.objective => {}
            Some(b) if obj == b.objective => b.ties += 1,
            _ => best = Some(Minimizer { best: x, objective: obj, ties: 1 }),
        }
    }
    best.ok_or(OracleError::Empty)
}

/// The codebook entry closest to `u` in subspace distance; returns its index.
pub fn brute_subspace_decode(codebook: &[Subspace], u: &Subspace) -> Result<Minimizer<usize>, OracleError> {
    let mut best: Option<Minimizer<usize>> = None;
    for (i, v) in codebook.iter().enumerate() {
        let obj = subspace_distance(v, u).expect("same ambient space");
        match &mut best {
            Some(b) if obj > b.objective => {}
            Some(b) if obj == b.objective => b.ties += 1,
            _ => best = Some(Minimizer { best: i, objective: obj, ties: 1 }),
        }
    }
    best.ok_or(OracleError::Empty)
}

/// min over E⁽¹⁾ (μ×m) and L⁽²⁾ (n×δ) of rank(e − L̂E⁽¹⁾ − L⁽²⁾Ê).
pub fn min_rank_erasure_deviation(e: &MatQ, l_hat: &MatQ, e_hat: &MatQ, cap: u64) -> Result<usize, OracleError> {
    let fq = e.fq();
    let (n, m) = e.shape();
    let (mu, delta) = (l_hat.cols(), e_hat.rows());
    let n1 = search_size(fq.q(), mu * m, cap)?;
    let n2 = search_size(fq.q(), n * delta, cap)?;
    if n1.saturating_mul(n2) > cap {
        return Err(OracleError::TooLarge { size: (n1 as u128 * n2 as u128).to_string(), cap });
    }
    let mut best = usize::MAX;
    for i in 0..n1 {
        let e1 = matrix_from_index(fq, mu, m, i);
        let partial = e.sub(&l_hat.mul(&e1).unwrap()).unwrap();
        for j in 0..n2 {
            let l2 = matrix_from_index(fq, n, delta, j);
            let rank = partial.sub(&l2.mul(e_hat).unwrap()).unwrap().rank();
            best = best.min(rank);
            if best == 0 {
                return Ok(0);
            }
        }
    }
    Ok(best)
}

/// min over A (N×n) of rank(Y − AX), by enumerating every A.
pub fn min_rank_over_transfer(x: &MatQ, y: &MatQ, cap: u64) -> Result<usize, OracleError> {
    let fq = x.fq();
    let count = search_size(fq.q(), y.rows() * x.rows(), cap)?;
    let mut best = usize::MAX;
    for i in 0..count {
        let a = matrix_from_index(fq, y.rows(), x.rows(), i);
        best = best.min(y.sub(&a.mul(x).unwrap()).unwrap().rank());
    }
    Ok(best)
}
