use thiserror::Error;

use crate::field::{ExtElem, Field};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("{unknowns} unknowns but only {equations} equations")]
    Underdetermined { unknowns: usize, equations: usize },
    #[error("coefficients A_1..A_τ are linearly dependent over F_q")]
    Dependent,
    #[error("system has no solution")]
    Inconsistent,
}

/// Solves B_ℓ = Σ_j A_j^{[ℓ]} X_j, ℓ = 0..b.len()−1, for X_1..X_τ with
/// τ = a.len(), using O(τ·b.len()) field operations.
///
/// Each stage eliminates one unknown: with c = A_1^{q−1},
/// B'_ℓ = B_{ℓ+1} − c^{[ℓ]} B_ℓ and A'_j = A_j^{[1]} − c A_j.
/// Equations left over after the last stage must vanish.
pub fn gabidulin_solve(field: &Field, a: &[ExtElem], b: &[ExtElem]) -> Result<Vec<ExtElem>, SolveError> {
    let tau = a.len();
    if tau > b.len() {
        return Err(SolveError::Underdetermined { unknowns: tau, equations: b.len() });
    }
    let mut a_cur = a.to_vec();
    let mut b_cur = b.to_vec();
    // row 0 of every stage, for back substitution
    let mut a_rows: Vec<Vec<ExtElem>> = Vec::with_capacity(tau);
    let mut b_heads: Vec<ExtElem> = Vec::with_capacity(tau);
    for i in 0..tau {
        let lead = a_cur[i];
        if lead.is_zero() {
            return Err(SolveError::Dependent);
        }
        a_rows.push(a_cur.clone());
        b_heads.push(b_cur[0]);
        let c0 = field.div(&field.frob(&lead, 1), &lead).expect("lead is nonzero");
        let mut c = c0;
        let mut next_b = Vec::with_capacity(b_cur.len() - 1);
        for l in 0..b_cur.len() - 1 {
            if l > 0 {
                c = field.frob(&c, 1);
            }
            next_b.push(field.sub(&b_cur[l + 1], &field.mul(&c, &b_cur[l])));
        }
        for aj in a_cur.iter_mut().skip(i + 1) {
            *aj = field.sub(&field.frob(aj, 1), &field.mul(&c0, aj));
        }
        a_cur[i] = field.zero();
        b_cur = next_b;
    }
    if b_cur.iter().any(|v| !v.is_zero()) {
        return Err(SolveError::Inconsistent);
    }
    let mut x = vec![field.zero(); tau];
    for i in (0..tau).rev() {
        let mut acc = b_heads[i];
        for j in i + 1..tau {
            acc = field.sub(&acc, &field.mul(&a_rows[i][j], &x[j]));
        }
        x[i] = field.div(&acc, &a_rows[i][i]).expect("lead is nonzero");
    }
    Ok(x)
}
