//! Linearized polynomials f(x) = Σ f_i x^{[i]} over F_{q^m}, where
//! x^{[i]} = x^{q^i}. Multiplication is composition (the symbolic product),
//! which makes them a non-commutative ring with identity x.

use crate::field::{ExtElem, Field};
use crate::linalg::MatQ;

/// Coefficients are stored by q-degree with no trailing zeros, so the zero
/// polynomial has an empty coefficient list and no q-degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LinPoly {
    coeffs: Vec<ExtElem>,
}

impl LinPoly {
    pub fn new(mut coeffs: Vec<ExtElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        LinPoly { coeffs }
    }

    pub fn zero() -> Self {
        LinPoly { coeffs: Vec::new() }
    }

    /// The identity polynomial x.
    pub fn x(field: &Field) -> Self {
        LinPoly { coeffs: vec![field.one()] }
    }

    /// c·x^{[i]}
    pub fn monomial(field: &Field, c: ExtElem, i: usize) -> Self {
        let mut coeffs = vec![field.zero(); i + 1];
        coeffs[i] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[ExtElem] {
        &self.coeffs
    }

    /// Coefficient of x^{[i]}; zero beyond the q-degree.
    pub fn coeff(&self, field: &Field, i: usize) -> ExtElem {
        self.coeffs.get(i).copied().unwrap_or_else(|| field.zero())
    }

    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// q-degree with the zero polynomial mapped to 0; used where the
    /// caller has already excluded zero.
    fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self, field: &Field) -> bool {
        self.coeffs.last() == Some(&field.one())
    }

    pub fn eval(&self, field: &Field, beta: &ExtElem) -> ExtElem {
        let mut acc = field.zero();
        let mut b = *beta;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                b = field.frob(&b, 1);
            }
            if !c.is_zero() {
                acc = field.add(&acc, &field.mul(c, &b));
            }
        }
        acc
    }

    pub fn add(&self, field: &Field, other: &LinPoly) -> LinPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| field.add(&self.coeff(field, i), &other.coeff(field, i)))
            .collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, field: &Field, other: &LinPoly) -> LinPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| field.sub(&self.coeff(field, i), &other.coeff(field, i)))
            .collect();
        Self::new(coeffs)
    }

    /// c·f, scaling every coefficient on the left.
    pub fn scale(&self, field: &Field, c: &ExtElem) -> LinPoly {
        Self::new(self.coeffs.iter().map(|a| field.mul(c, a)).collect())
    }

    /// Applies the Frobenius power [k] to every coefficient.
    pub fn frob_coeffs(&self, field: &Field, k: i64) -> LinPoly {
        Self::new(self.coeffs.iter().map(|a| field.frob(a, k)).collect())
    }

    /// x^{[s]} ⊗ f
    pub fn shift(&self, field: &Field, s: usize) -> LinPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![field.zero(); s];
        coeffs.extend(self.coeffs.iter().map(|a| field.frob(a, s as i64)));
        Self::new(coeffs)
    }

    /// f mod x^{[k]}: keeps the coefficients of x^{[0]}..x^{[k−1]}.
    pub fn truncate(&self, k: usize) -> LinPoly {
        Self::new(self.coeffs.iter().take(k).copied().collect())
    }

    /// Coefficients `start..` as a new polynomial, i.e. Σ f_{i+start} x^{[i]}.
    pub fn skip(&self, start: usize) -> LinPoly {
        Self::new(self.coeffs.iter().skip(start).copied().collect())
    }

    /// A ⊗ B = A(B(x)), with P_ℓ = Σ_i A_i B_{ℓ−i}^{[i]}.
    pub fn symbolic_product(&self, field: &Field, b: &LinPoly) -> LinPoly {
        if self.is_zero() || b.is_zero() {
            return Self::zero();
        }
        let (ta, tb) = (self.deg(), b.deg());
        let mut out = vec![field.zero(); ta + tb + 1];
        for (i, ai) in self.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let t = field.mul(ai, &field.frob(bj, i as i64));
                out[i + j] = field.add(&out[i + j], &t);
            }
        }
        Self::new(out)
    }

    /// Symbolic product keeping only the coefficients below x^{[k]}.
    pub fn symbolic_product_mod(&self, field: &Field, b: &LinPoly, k: usize) -> LinPoly {
        if self.is_zero() || b.is_zero() {
            return Self::zero();
        }
        let len = (self.deg() + b.deg() + 1).min(k);
        let mut out = vec![field.zero(); len];
        for (i, ai) in self.coeffs.iter().enumerate().take(len) {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate().take(len - i) {
                if bj.is_zero() {
                    continue;
                }
                let t = field.mul(ai, &field.frob(bj, i as i64));
                out[i + j] = field.add(&out[i + j], &t);
            }
        }
        Self::new(out)
    }

    /// q-reverse at length t: f̄_i = f_{t−i}^{[i−t]} for i = 0..t.
    pub fn q_reverse(&self, field: &Field, t: usize) -> LinPoly {
        assert!(self.is_zero() || self.deg() <= t, "q_reverse needs t ≥ q-degree");
        let coeffs = (0..=t)
            .map(|i| field.frob(&self.coeff(field, t - i), i as i64 - t as i64))
            .collect();
        Self::new(coeffs)
    }

    /// Monic polynomial of least q-degree vanishing on the F_q-span of `s`.
    pub fn min_poly(field: &Field, s: &[ExtElem]) -> LinPoly {
        let mut m = Self::x(field);
        for a in s {
            let v = m.eval(field, a);
            if v.is_zero() {
                continue;
            }
            // x^{[1]} − v^{q−1}x vanishes exactly on ⟨v⟩
            let vq1 = field.div(&field.frob(&v, 1), &v).expect("v is nonzero");
            let step = LinPoly::new(vec![field.neg(&vq1), field.one()]);
            m = step.symbolic_product(field, &m);
        }
        m
    }

    /// The m×m matrix over F_q whose row k holds the coordinates of f(α^k).
    pub fn evaluation_matrix(&self, field: &Field) -> MatQ {
        let m = field.m();
        let mut data = Vec::with_capacity(m * m);
        for k in 0..m {
            data.extend_from_slice(self.eval(field, &field.basis(k)).coeffs());
        }
        MatQ::from_vec(field.base(), m, m, data).expect("coordinates in range")
    }

    /// A basis of the roots of f in F_{q^m}, taken from the kernel of the
    /// evaluation matrix.
    pub fn root_space_basis(&self, field: &Field) -> Vec<ExtElem> {
        let kernel = self.evaluation_matrix(field).left_null_space();
        (0..kernel.rows())
            .map(|i| field.from_coeffs(kernel.row(i)).expect("coordinates in range"))
            .collect()
    }

    /// (Q, R) with self = Q ⊗ g + R and q-degree of R below that of g.
    pub fn div_rem_right(&self, field: &Field, g: &LinPoly) -> (LinPoly, LinPoly) {
        assert!(!g.is_zero(), "division by the zero polynomial");
        let tg = g.deg();
        let top_g = *g.coeffs.last().unwrap();
        let mut r = self.clone();
        let mut quo = vec![field.zero(); self.coeffs.len().saturating_sub(tg)];
        while !r.is_zero() && r.deg() >= tg {
            let k = r.deg() - tg;
            // (c x^{[k]}) ⊗ g has top coefficient c·g_top^{[k]}
            let c = field.div(r.coeffs.last().unwrap(), &field.frob(&top_g, k as i64)).unwrap();
            quo[k] = c;
            let term = LinPoly::monomial(field, c, k).symbolic_product(field, g);
            r = r.sub(field, &term);
        }
        (Self::new(quo), r)
    }

    /// (Q, R) with self = g ⊗ Q + R and q-degree of R below that of g.
    pub fn div_rem_left(&self, field: &Field, g: &LinPoly) -> (LinPoly, LinPoly) {
        assert!(!g.is_zero(), "division by the zero polynomial");
        let tg = g.deg();
        let top_g = *g.coeffs.last().unwrap();
        let mut r = self.clone();
        let mut quo = vec![field.zero(); self.coeffs.len().saturating_sub(tg)];
        while !r.is_zero() && r.deg() >= tg {
            let k = r.deg() - tg;
            // g ⊗ (c x^{[k]}) has top coefficient g_top·c^{[tg]}
            let ratio = field.div(r.coeffs.last().unwrap(), &top_g).unwrap();
            let c = field.frob(&ratio, -(tg as i64));
            quo[k] = c;
            let term = g.symbolic_product(field, &LinPoly::monomial(field, c, k));
            r = r.sub(field, &term);
        }
        (Self::new(quo), r)
    }

    /// Renders "f0·x + f1·x^[1] + …" with hex coefficients, skipping zeros.
    pub fn pretty(&self, field: &Field) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let x = if i == 0 { "x".to_string() } else { format!("x^[{i}]") };
                format!("{}·{x}", field.to_hex(c))
            })
            .collect();
        terms.join(" + ")
    }
}
