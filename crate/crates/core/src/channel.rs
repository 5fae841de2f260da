//! Lifting of n×m matrices to subspaces of F_q^{n+m}, reduction of a
//! received packet matrix back to a rank-metric decoding problem, and the
//! matrix channel Y = AX + BZ of random linear network coding.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::{Field, Fq};
use crate::gabidulin::{generalized_decode, DecodeFailure, DecodeOutcome, GabidulinCode, ReceivedTuple};
use crate::linalg::{matrix_to_vector, MatQ, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChannelError {
    #[error("N = {big_n} received packets cannot carry rank n − ρ = {needed}")]
    RankTarget { big_n: usize, needed: usize },
    #[error("ρ = {rho} exceeds n = {n}")]
    Deficiency { rho: usize, n: usize },
    #[error("t = {t} corrupt packets need at least as many links, got {links}")]
    Links { t: usize, links: usize },
    #[error("packet matrix is {got:?}, expected {expected:?}")]
    Shape { expected: (usize, usize), got: (usize, usize) },
}

/// [I | x]
pub fn lift_matrix(x: &MatQ) -> MatQ {
    MatQ::identity(x.fq(), x.rows()).hstack(x).expect("same row count")
}

/// Row space of [I | x], an n-dimensional subspace of F_q^{n+m}.
pub fn lift(x: &MatQ) -> Subspace {
    Subspace::row_space(&lift_matrix(x))
}

/// A received matrix rewritten as the rank-metric problem (r, L̂, Ê):
/// ⟨Y⟩ is the row space of [I + L̂ I_Uᵀ, r; 0, Ê].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub r: MatQ,
    pub l_hat: MatQ,
    pub e_hat: MatQ,
    /// Positions among the first n columns without a pivot.
    pub u: Vec<usize>,
    pub mu: usize,
    pub delta: usize,
}

impl ReductionResult {
    /// [I + L̂ I_Uᵀ, r; 0, Ê]
    pub fn assembled(&self) -> MatQ {
        let n = self.r.rows();
        let fq = self.r.fq();
        let mut left = MatQ::identity(fq, n);
        for (j, &u) in self.u.iter().enumerate() {
            for i in 0..n {
                left.set(i, u, fq.add(left.get(i, u), self.l_hat.get(i, j)));
            }
        }
        let top = left.hstack(&self.r).expect("n rows");
        let bottom = MatQ::zeros(fq, self.delta, n).hstack(&self.e_hat).expect("δ rows");
        top.vstack(&bottom).expect("same width")
    }

    /// I_Uᵀ r = 0, I_Uᵀ L̂ = −I, rank L̂ = μ and rank Ê = δ.
    pub fn invariants_hold(&self) -> bool {
        let fq = self.r.fq();
        let minus_one = fq.neg(1);
        let u_rows_ok = self.u.iter().enumerate().all(|(a, &u)| {
            self.r.row(u).iter().all(|&v| v == 0)
                && (0..self.mu).all(|j| self.l_hat.get(u, j) == if a == j { minus_one } else { 0 })
        });
        self.u.len() == self.mu
            && u_rows_ok
            && self.l_hat.rank() == self.mu
            && self.e_hat.rank() == self.delta
            && self.e_hat.rows() == self.delta
    }

    /// Views r and Ê as vectors over F_{q^m}.
    pub fn to_received_tuple(&self, field: &Field) -> ReceivedTuple {
        ReceivedTuple::new(
            matrix_to_vector(field, &self.r),
            self.l_hat.clone(),
            matrix_to_vector(field, &self.e_hat),
        )
    }
}

/// Reduction of an N×(n+m) matrix from the reduced row echelon form of Y.
/// Dependent rows drop out of the RRE form, so any Y is accepted.
pub fn reduce(y: &MatQ, n: usize) -> ReductionResult {
    assert!(y.cols() >= n, "Y needs at least n columns");
    let fq = y.fq();
    let m = y.cols() - n;
    let (rre, pivots) = y.rre();
    let top = pivots.iter().take_while(|&&p| p < n).count();
    let uc = &pivots[..top];
    let u: Vec<usize> = (0..n).filter(|i| !uc.contains(i)).collect();
    let (mu, delta) = (u.len(), pivots.len() - top);

    let mut r = MatQ::zeros(fq, n, m);
    let mut l_hat = MatQ::zeros(fq, n, mu);
    for (j, &uj) in u.iter().enumerate() {
        l_hat.set(uj, j, fq.neg(1));
    }
    for (a, &p) in uc.iter().enumerate() {
        for c in 0..m {
            r.set(p, c, rre.get(a, n + c));
        }
        for (j, &uj) in u.iter().enumerate() {
            l_hat.set(p, j, rre.get(a, uj));
        }
    }
    let e_hat = rre.select_rows(&(top..top + delta).collect::<Vec<_>>()).col_range(n, n + m);
    ReductionResult { r, l_hat, e_hat, u, mu, delta }
}

/// 2·rank[L̂, r − x; 0, Ê] − (μ + δ), which equals d_S(⟨[I | x]⟩, ⟨Y⟩).
pub fn reduction_distance(red: &ReductionResult, x: &MatQ) -> usize {
    let fq = red.r.fq();
    let top = red.l_hat.hstack(&red.r.sub(x).expect("x is n×m")).expect("n rows");
    let bottom = MatQ::zeros(fq, red.delta, red.mu).hstack(&red.e_hat).expect("δ rows");
    2 * top.vstack(&bottom).expect("same width").rank() - (red.mu + red.delta)
}

/// Parameters of Y = AX + BZ with X of size n×(n+m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChannelConfig {
    pub n: usize,
    pub m: usize,
    /// Number of received packets N.
    pub big_n: usize,
    /// Largest column-rank deficiency of A.
    pub rho_max: usize,
    /// Number of corrupt packets injected, wt(Z).
    pub t_max: usize,
    /// Number of injection points ℓ; Z has ℓ rows.
    pub links: usize,
    pub seed: u64,
}

impl ChannelConfig {
    /// N = n, ℓ = t.
    pub fn new(n: usize, m: usize, rho_max: usize, t_max: usize, seed: u64) -> Self {
        ChannelConfig { n, m, big_n: n, rho_max, t_max, links: t_max, seed }
    }

    pub fn validate(&self) -> Result<(), ChannelError> {
        if self.rho_max > self.n {
            return Err(ChannelError::Deficiency { rho: self.rho_max, n: self.n });
        }
        if self.big_n < self.n - self.rho_max {
            return Err(ChannelError::RankTarget { big_n: self.big_n, needed: self.n - self.rho_max });
        }
        if self.links < self.t_max {
            return Err(ChannelError::Links { t: self.t_max, links: self.links });
        }
        Ok(())
    }
}

/// One channel use together with the hidden transfer matrices.
#[derive(Clone, Debug)]
pub struct Transmission {
    pub y: MatQ,
    pub a: MatQ,
    pub b: MatQ,
    pub z: MatQ,
}

/// A channel instance owning its random state.
pub struct Channel {
    cfg: ChannelConfig,
    fq: Fq,
    rng: ChaCha8Rng,
}

impl Channel {
    pub fn new(cfg: ChannelConfig, fq: Fq) -> Result<Self, ChannelError> {
        cfg.validate()?;
        let rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        Ok(Channel { cfg, fq, rng })
    }

    pub fn config(&self) -> &ChannelConfig {
        &self.cfg
    }

    fn check(&self, x: &MatQ) -> Result<(), ChannelError> {
        let expected = (self.cfg.n, self.cfg.n + self.cfg.m);
        if x.shape() != expected {
            return Err(ChannelError::Shape { expected, got: x.shape() });
        }
        Ok(())
    }

    /// A = U·V with rank drawn uniformly from [n − ρ_max, min(N, n)].
    fn draw_a(&mut self) -> MatQ {
        let (n, big_n) = (self.cfg.n, self.cfg.big_n);
        let rank = self.rng.gen_range(n - self.cfg.rho_max..=big_n.min(n));
        let u = MatQ::random_full_rank(self.fq, big_n, rank, &mut self.rng);
        let v = MatQ::random_full_rank(self.fq, rank, n, &mut self.rng);
        u.mul(&v).expect("inner dimensions agree")
    }

    /// Z with exactly t_max nonzero rows at random links.
    fn draw_z(&mut self) -> MatQ {
        let width = self.cfg.n + self.cfg.m;
        let mut z = MatQ::zeros(self.fq, self.cfg.links, width);
        for link in sample(&mut self.rng, self.cfg.links, self.cfg.t_max).into_iter() {
            loop {
                let row = MatQ::random(self.fq, 1, width, &mut self.rng);
                if !row.is_zero() {
                    for c in 0..width {
                        z.set(link, c, row.get(0, c));
                    }
                    break;
                }
            }
        }
        z
    }

    fn combine(&self, x: &MatQ, a: MatQ, b: MatQ, z: MatQ) -> Transmission {
        let y = a.mul(x).unwrap().add(&b.mul(&z).unwrap()).unwrap();
        Transmission { y, a, b, z }
    }

    pub fn transmit(&mut self, x: &MatQ) -> Result<Transmission, ChannelError> {
        self.check(x)?;
        let a = self.draw_a();
        let b = MatQ::random(self.fq, self.cfg.big_n, self.cfg.links, &mut self.rng);
        let z = self.draw_z();
        Ok(self.combine(x, a, b, z))
    }

    /// Draws `candidates` injections (B, Z) for one transfer matrix A and
    /// keeps the one whose reduction carries the largest errata weight
    /// 2ε + μ + δ relative to the transmitted payload.
    pub fn transmit_adversarial(&mut self, x: &MatQ, candidates: usize) -> Result<Transmission, ChannelError> {
        self.check(x)?;
        let n = self.cfg.n;
        let payload = x.col_range(n, x.cols());
        let a = self.draw_a();
        let mut best: Option<(usize, Transmission)> = None;
        for _ in 0..candidates.max(1) {
            let b = MatQ::random(self.fq, self.cfg.big_n, self.cfg.links, &mut self.rng);
            let z = self.draw_z();
            let t = self.combine(x, a.clone(), b, z);
            // 2·rank[L̂, r − x; 0, Ê] − (μ + δ) = 2ε + μ + δ
            let weight = reduction_distance(&reduce(&t.y, n), &payload);
            if best.as_ref().is_none_or(|(w, _)| weight > *w) {
                best = Some((weight, t));
            }
        }
        Ok(best.expect("at least one candidate").1)
    }
}

/// Reduces Y against the code's payload width and runs the generalized
/// decoder. Returns the decoded payload codeword.
pub fn end_to_end_decode(code: &GabidulinCode, y: &MatQ) -> DecodeOutcome {
    let (n, m) = (code.n(), code.m());
    if y.cols() != n + m || y.q() != code.q() {
        return Err(DecodeFailure::InvalidInput(format!(
            "received packets have {} symbols over F_{}, code needs {} over F_{}",
            y.cols(),
            y.q(),
            n + m,
            code.q()
        )));
    }
    let red = reduce(y, n);
    generalized_decode(code, &red.to_received_tuple(code.field()))
}
