use crate::field::{ExtElem, Field};
use crate::linpoly::LinPoly;

/// Shortest linearized recurrence for a syndrome sequence: returns σ with
/// σ_0 = 1 and its length L such that Σ_i σ_i s_{ℓ−i}^{[i]} = 0 for
/// ℓ = L..s.len()−1. When the sequence comes from a rank-L error with
/// 2L ≤ s.len(), σ is the error span polynomial up to a scalar.
pub fn berlekamp_massey(field: &Field, s: &[ExtElem]) -> (LinPoly, usize) {
    let mut sigma = LinPoly::x(field);
    let mut prev = LinPoly::x(field);
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut prev_disc = field.one();
    for r in 0..s.len() {
        let mut disc = field.zero();
        for (i, c) in sigma.coeffs().iter().enumerate().take(r + 1) {
            if !c.is_zero() {
                disc = field.add(&disc, &field.mul(c, &field.frob(&s[r - i], i as i64)));
            }
        }
        if disc.is_zero() {
            shift += 1;
            continue;
        }
        // x^{[shift]} ⊗ prev has discrepancy prev_disc^{[shift]} at step r
        let coef = field.div(&disc, &field.frob(&prev_disc, shift as i64)).expect("nonzero");
        let update = sigma.sub(field, &prev.shift(field, shift).scale(field, &coef));
        if 2 * len > r {
            sigma = update;
            shift += 1;
        } else {
            prev = std::mem::replace(&mut sigma, update);
            len = r + 1 - len;
            prev_disc = disc;
            shift = 1;
        }
    }
    (sigma, len)
}
