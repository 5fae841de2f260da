use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive};

use super::MatrixError;

/// Number of `n`-dimensional subspaces of F_q^M.
pub fn gaussian_coefficient(q: u32, big_m: usize, n: usize) -> BigUint {
    if n > big_m {
        return BigUint::from(0u32);
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        num *= Pow::pow(&q, (big_m - i) as u32) - 1u32;
        den *= Pow::pow(&q, (i + 1) as u32) - 1u32;
    }
    num / den
}

/// log_q of a positive integer, accurate for values far beyond f64 range.
pub fn log_q(q: u32, v: &BigUint) -> f64 {
    let bits = v.bits();
    let shift = bits.saturating_sub(64);
    let top = (v >> shift).to_f64().expect("fits after shifting");
    (top.log2() + shift as f64) / (q as f64).log2()
}

/// Size bounds for a code of n×m matrices over F_q with minimum rank
/// distance d.
#[derive(Debug, Clone, PartialEq)]
pub struct SingletonBounds {
    /// Largest possible rank-metric code: q^{max(n,m)(min(n,m)−d+1)}.
    pub rank_metric: BigUint,
    /// log_q of `rank_metric`.
    pub rank_metric_log_q: usize,
    /// Largest possible constant-dimension code of n-dimensional subspaces
    /// of F_q^{n+m} with subspace distance 2d:
    /// Gaussian[n+m−d+1, max(n, m)]_q.
    pub subspace: BigUint,
    /// Upper bound on the rate gap between a lifted MRD code and the best
    /// constant-dimension code with the same parameters, 4/((n+m)·log2 q).
    pub lifting_rate_loss: f64,
    /// Rate gap of the lifted MRD code measured against `subspace`:
    /// (log_q subspace − log_q rank_metric) / log_q subspace. Since the
    /// subspace bound overestimates the best code, this overestimates the
    /// true gap.
    pub lifted_suboptimality: f64,
}

pub fn singleton_bounds(q: u32, n: usize, m: usize, d: usize) -> Result<SingletonBounds, MatrixError> {
    if q < 2 || n == 0 || m == 0 {
        return Err(MatrixError::Parameters(format!("q={q}, n={n}, m={m}")));
    }
    if d == 0 || d > n.min(m) {
        return Err(MatrixError::Parameters(format!("d={d} outside [1, {}]", n.min(m))));
    }
    let exponent = n.max(m) * (n.min(m) - d + 1);
    let big_m = n + m;
    let subspace = gaussian_coefficient(q, big_m - d + 1, n.max(m));
    let sub_log = log_q(q, &subspace);
    Ok(SingletonBounds {
        lifted_suboptimality: if sub_log > 0.0 { (sub_log - exponent as f64) / sub_log } else { 0.0 },
        rank_metric: Pow::pow(&BigUint::from(q), exponent as u32),
        rank_metric_log_q: exponent,
        subspace,
        lifting_rate_loss: 4.0 / ((big_m as f64) * (q as f64).log2()),
    })
}
