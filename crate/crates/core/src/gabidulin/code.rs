use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Pow;

use super::CodeError;
use crate::field::{ExtElem, Field};
use crate::linalg::{vector_to_matrix, MatQ, MatQm};

/// A Gabidulin code of length n and dimension k over F_{q^m}, defined by
/// the Moore parity-check matrix H with H[ℓ][i] = h_i^{[ℓ]}.
#[derive(Clone, Debug)]
pub struct GabidulinCode {
    field: Arc<Field>,
    n: usize,
    k: usize,
    h: Vec<ExtElem>,
    h_matrix: MatQ,
    parity: MatQm,
    generator: MatQm,
    right_inverse: MatQ,
}

impl GabidulinCode {
    /// Code with h = (1, α, …, α^{n−1}).
    pub fn new(field: Field, n: usize, k: usize) -> Result<Self, CodeError> {
        if n > field.m() {
            return Err(CodeError::Parameters { n, k, m: field.m() });
        }
        let h = (0..n).map(|i| field.basis(i)).collect();
        Self::with_h(field, h, k)
    }

    pub fn with_h(field: Field, h: Vec<ExtElem>, k: usize) -> Result<Self, CodeError> {
        let n = h.len();
        let m = field.m();
        if k == 0 || k > n || n > m {
            return Err(CodeError::Parameters { n, k, m });
        }
        if h.iter().any(|x| !field.owns(x)) {
            return Err(CodeError::ForeignElement);
        }
        let h_matrix = vector_to_matrix(&field, &h);
        let right_inverse = h_matrix.right_inverse().map_err(|_| CodeError::DependentH)?;
        let rows = (0..n - k)
            .map(|l| h.iter().map(|hi| field.frob(hi, l as i64)).collect())
            .collect();
        let parity = MatQm::from_rows(rows);
        let parity = if n == k { MatQm::zeros(&field, 0, n) } else { parity };
        let generator = parity.null_space(&field);
        Ok(GabidulinCode { field: Arc::new(field), n, k, h, h_matrix, parity, generator, right_inverse })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.field.m()
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    /// Minimum rank distance n − k + 1.
    pub fn d(&self) -> usize {
        self.n - self.k + 1
    }

    pub fn h(&self) -> &[ExtElem] {
        &self.h
    }

    /// The n×m expansion of h over F_q.
    pub fn h_matrix(&self) -> &MatQ {
        &self.h_matrix
    }

    pub fn parity_check(&self) -> &MatQm {
        &self.parity
    }

    pub fn generator(&self) -> &MatQm {
        &self.generator
    }

    /// Q with h_matrix · Q = I.
    pub fn right_inverse(&self) -> &MatQ {
        &self.right_inverse
    }

    /// q^{mk}
    pub fn size(&self) -> BigUint {
        Pow::pow(&BigUint::from(self.q()), (self.m() * self.k) as u32)
    }

    fn check_len(&self, v: &[ExtElem], expected: usize) -> Result<(), CodeError> {
        if v.len() != expected {
            return Err(CodeError::Length { expected, got: v.len() });
        }
        if v.iter().any(|x| !self.field.owns(x)) {
            return Err(CodeError::ForeignElement);
        }
        Ok(())
    }

    /// u · G. The generator is systematic on the last k positions, so
    /// those positions of the codeword carry u.
    pub fn encode(&self, u: &[ExtElem]) -> Result<Vec<ExtElem>, CodeError> {
        self.check_len(u, self.k)?;
        Ok(self.generator.vec_mul(&self.field, u))
    }

    /// Inverse of [`encode`](Self::encode) on codewords.
    pub fn message(&self, codeword: &[ExtElem]) -> Vec<ExtElem> {
        codeword[self.n - self.k..].to_vec()
    }

    /// S_ℓ = Σ_i h_i^{[ℓ]} r_i for ℓ = 0..d−2.
    pub fn syndromes(&self, r: &[ExtElem]) -> Result<Vec<ExtElem>, CodeError> {
        self.check_len(r, self.n)?;
        Ok(self.parity.mul_vec(&self.field, r))
    }

    pub fn is_codeword(&self, r: &[ExtElem]) -> bool {
        self.syndromes(r).is_ok_and(|s| s.iter().all(ExtElem::is_zero))
    }

    /// Locator X_j = Σ_i L_ij h_i for every column of `l` (n×μ).
    pub fn locators(&self, l: &MatQ) -> Vec<ExtElem> {
        (0..l.cols())
            .map(|j| {
                (0..self.n).fold(self.field.zero(), |acc, i| {
                    self.field.add_scaled(&acc, &self.h[i], l.get(i, j))
                })
            })
            .collect()
    }

    /// Location vector L with L_i = Σ_k X_k Q_ki, inverting [`locators`](Self::locators).
    pub fn location(&self, x: &ExtElem) -> Vec<u16> {
        let fq = self.field.base();
        let coords = MatQ::from_rows(fq, &[x.coeffs()]).expect("coordinates in range");
        coords.mul(&self.right_inverse).expect("shapes agree").row(0).to_vec()
    }

    /// All q^{mk} codewords, when there are at most `cap` of them.
    pub fn codewords(&self, cap: u64) -> Result<Vec<Vec<ExtElem>>, CodeError> {
        let size = self.size();
        if size > BigUint::from(cap) {
            return Err(CodeError::TooLarge { size: size.to_string(), cap });
        }
        let order = self.field.order().expect("small field") as u64;
        let total: u64 = size.try_into().expect("below cap");
        let mut out = Vec::with_capacity(total as usize);
        for idx in 0..total {
            let mut rest = idx;
            let u: Vec<ExtElem> = (0..self.k)
                .map(|_| {
                    let e = self.field.from_index((rest % order) as u128);
                    rest /= order;
                    e
                })
                .collect();
            out.push(self.encode(&u)?);
        }
        Ok(out)
    }
}
