#![allow(dead_code)]

use rand::Rng;
use rankcode::field::{ExtElem, Field};
use rankcode::linalg::{vector_rank, MatQ};
use rankcode::{GabidulinCode, ReceivedTuple};

pub mod checks;
pub mod worked;

/// e = Σ_j L_j E_j with L full column rank and E_1..E_τ independent.
/// The first μ columns of L are exposed as erasures and E_{μ+1..μ+δ} as
/// deviations; the remaining ε terms are plain errors.
pub struct Pattern {
    pub codeword: Vec<ExtElem>,
    pub error: Vec<ExtElem>,
    pub tuple: ReceivedTuple,
}

pub fn random_codeword<R: Rng>(code: &GabidulinCode, rng: &mut R) -> Vec<ExtElem> {
    let f = code.field();
    let u: Vec<ExtElem> = (0..code.k()).map(|_| f.random(rng)).collect();
    code.encode(&u).unwrap()
}

pub fn independent<R: Rng>(field: &Field, count: usize, rng: &mut R) -> Vec<ExtElem> {
    loop {
        let v: Vec<ExtElem> = (0..count).map(|_| field.random(rng)).collect();
        if vector_rank(field, &v) == count {
            return v;
        }
    }
}

pub fn combine(field: &Field, l: &MatQ, values: &[ExtElem]) -> Vec<ExtElem> {
    (0..l.rows())
        .map(|i| {
            (0..l.cols()).fold(field.zero(), |acc, j| field.add_scaled(&acc, &values[j], l.get(i, j)))
        })
        .collect()
}

pub fn random_pattern<R: Rng>(code: &GabidulinCode, eps: usize, mu: usize, delta: usize, rng: &mut R) -> Pattern {
    let f = code.field();
    let tau = eps + mu + delta;
    let codeword = random_codeword(code, rng);
    let l = MatQ::random_full_rank(f.base(), code.n(), tau, rng);
    let values = independent(f, tau, rng);
    let error = combine(f, &l, &values);
    let r = codeword.iter().zip(&error).map(|(a, b)| f.add(a, b)).collect();
    let l_hat = l.col_range(0, mu);
    let e_hat = values[mu..mu + delta].to_vec();
    Pattern { codeword, error, tuple: ReceivedTuple::new(r, l_hat, e_hat) }
}
