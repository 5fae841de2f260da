use super::{
    berlekamp_massey, gabidulin_solve, DecodeFailure, DecodeOutcome, Decoded, DecoderWorkspace,
    GabidulinCode, ReceivedTuple,
};
use crate::field::{ExtElem, Field};
use crate::linpoly::LinPoly;

/// Errors-only decoding up to rank ⌊(d−1)/2⌋.
pub fn conventional_decode(code: &GabidulinCode, r: &[ExtElem]) -> DecodeOutcome {
    generalized_decode(code, &ReceivedTuple::plain(code.field(), r.to_vec()))
}

/// Validates the tuple and runs the steps shared by both formulations:
/// syndromes, erasure locators and the minimal polynomials of the side
/// information.
fn start(code: &GabidulinCode, t: &ReceivedTuple) -> Result<DecoderWorkspace, DecodeFailure> {
    let field = code.field();
    t.validate(field, code.n())?;
    let (side, d) = (t.mu() + t.delta(), code.d());
    if side > 0 && side >= d {
        return Err(DecodeFailure::SideInformation { side, d });
    }
    let syndromes = code.syndromes(&t.r).expect("validated");
    let x_hat = code.locators(&t.l_hat);
    Ok(DecoderWorkspace {
        lambda_u: LinPoly::min_poly(field, &x_hat),
        sigma_d: LinPoly::min_poly(field, &t.e_hat),
        syndromes,
        x_hat,
        ..Default::default()
    })
}

/// Berlekamp–Massey on coefficients known..d−2 of an auxiliary syndrome
/// polynomial, where `known` = μ + δ.
fn key_equation(
    field: &Field,
    aux: &LinPoly,
    known: usize,
    d: usize,
) -> Result<(LinPoly, usize), DecodeFailure> {
    let budget = d - 1 - known;
    let seq: Vec<ExtElem> = (known..d - 1).map(|l| aux.coeff(field, l)).collect();
    let (poly, eps) = berlekamp_massey(field, &seq);
    if 2 * eps > budget || poly.q_degree() != Some(eps) {
        return Err(DecodeFailure::KeyEquation { found: eps, max: budget / 2 });
    }
    Ok((poly, eps))
}

/// The key-equation remainder must vanish from q-degree τ up to d−2.
fn check_remainder(field: &Field, rem: &LinPoly, tau: usize, d: usize) -> Result<(), DecodeFailure> {
    if (tau..d - 1).any(|l| !rem.coeff(field, l).is_zero()) {
        return Err(DecodeFailure::KeyEquation { found: tau, max: (d - 1) / 2 });
    }
    Ok(())
}

fn roots(field: &Field, poly: &LinPoly) -> Result<Vec<ExtElem>, DecodeFailure> {
    let degree = poly.q_degree().unwrap_or(0);
    let basis = poly.root_space_basis(field);
    if basis.len() != degree {
        return Err(DecodeFailure::RootSpace { degree, roots: basis.len() });
    }
    Ok(basis)
}

fn frob_all(field: &Field, v: &[ExtElem], i: i64) -> Vec<ExtElem> {
    v.iter().map(|x| field.frob(x, i)).collect()
}

/// Decodes ε errors, μ erasures and δ deviations whenever
/// 2ε + μ + δ ≤ d − 1, through the error span polynomial
/// σ = σ_U ⊗ σ_F ⊗ σ_D.
pub fn generalized_decode(code: &GabidulinCode, t: &ReceivedTuple) -> DecodeOutcome {
    let field = code.field();
    let mut ws = start(code, t)?;
    let (mu, delta, d) = (t.mu(), t.delta(), code.d());
    let s = LinPoly::new(ws.syndromes.clone());

    let lambda_bar = ws.lambda_u.q_reverse(field, mu);
    let s_lambda = s.symbolic_product_mod(field, &lambda_bar, d - 1);
    ws.s_du = ws.sigma_d.symbolic_product_mod(field, &s_lambda, d - 1);

    let (sigma_f, eps) = key_equation(field, &ws.s_du, mu + delta, d)?;
    ws.omega = sigma_f.symbolic_product_mod(field, &ws.s_du, d - 1);
    check_remainder(field, &ws.omega, eps + mu + delta, d)?;

    let sigma_fd = sigma_f.symbolic_product(field, &ws.sigma_d);
    ws.s_fd = sigma_fd.symbolic_product_mod(field, &s, d - 1);
    if mu > 0 {
        // S_FD,ℓ = Σ_j X̂_j^{[ℓ]} β_j for ε+δ ≤ ℓ ≤ d−2
        let a = frob_all(field, &ws.x_hat, (eps + delta) as i64);
        let b: Vec<ExtElem> = (eps + delta..d - 1).map(|l| ws.s_fd.coeff(field, l)).collect();
        ws.beta = gabidulin_solve(field, &a, &b)?;
    }
    ws.sigma_u = LinPoly::min_poly(field, &ws.beta);
    ws.sigma = ws.sigma_u.symbolic_product(field, &sigma_fd);
    ws.sigma_f = sigma_f;
    ws.epsilon = eps;

    let values = roots(field, &ws.sigma)?;
    let locators = if values.is_empty() {
        Vec::new()
    } else {
        // S̄_ℓ = S_{d−2−ℓ}^{[ℓ−d+2]} = Σ_j (E_j^{[−(d−2)]})^{[ℓ]} X_j
        let shift = d as i64 - 2;
        let a = frob_all(field, &values, -shift);
        let b: Vec<ExtElem> = (0..d - 1)
            .map(|l| field.frob(&ws.syndromes[d - 2 - l], l as i64 - shift))
            .collect();
        gabidulin_solve(field, &a, &b)?
    };
    finish(code, t, ws, locators, values)
}

/// Same decoding problem through the error locator polynomial
/// λ = λ_D ⊗ λ_F ⊗ λ_U, whose roots are the error locators.
pub fn generalized_decode_locator(code: &GabidulinCode, t: &ReceivedTuple) -> DecodeOutcome {
    let field = code.field();
    let mut ws = start(code, t)?;
    let (mu, delta, d) = (t.mu(), t.delta(), code.d());
    let shift = d as i64 - 2;
    let s_bar = LinPoly::new(ws.syndromes.clone()).q_reverse(field, d.saturating_sub(2));

    // q-reverse of σ_D(x^{[d−2]})^{[−(d−2)]}, the minimal polynomial of the
    // twisted deviation values Ê_j^{[−(d−2)]}
    let sigma_d_bar = ws.sigma_d.frob_coeffs(field, -shift).q_reverse(field, delta);
    let s_sigma = s_bar.symbolic_product_mod(field, &sigma_d_bar, d - 1);
    ws.s_ud = ws.lambda_u.symbolic_product_mod(field, &s_sigma, d - 1);

    let (lambda_f, eps) = key_equation(field, &ws.s_ud, mu + delta, d)?;
    ws.psi = lambda_f.symbolic_product_mod(field, &ws.s_ud, d - 1);
    check_remainder(field, &ws.psi, eps + mu + delta, d)?;

    let lambda_fu = lambda_f.symbolic_product(field, &ws.lambda_u);
    ws.s_fu = lambda_fu.symbolic_product_mod(field, &s_bar, d - 1);
    if delta > 0 {
        // S_FU,ℓ = Σ_j Ê_j^{[ℓ−d+2]} γ_j for ε+μ ≤ ℓ ≤ d−2
        let a = frob_all(field, &t.e_hat, (eps + mu) as i64 - shift);
        let b: Vec<ExtElem> = (eps + mu..d - 1).map(|l| ws.s_fu.coeff(field, l)).collect();
        ws.gamma = gabidulin_solve(field, &a, &b)?;
    }
    ws.lambda_d = LinPoly::min_poly(field, &ws.gamma);
    ws.lambda = ws.lambda_d.symbolic_product(field, &lambda_fu);
    ws.lambda_f = lambda_f;
    ws.epsilon = eps;

    let locators = roots(field, &ws.lambda)?;
    let values = if locators.is_empty() {
        Vec::new()
    } else {
        gabidulin_solve(field, &locators, &ws.syndromes)?
    };
    finish(code, t, ws, locators, values)
}

/// Assembles e = Σ_j L_j E_j and checks it against the syndromes and the
/// unique-decoding radius.
fn finish(
    code: &GabidulinCode,
    t: &ReceivedTuple,
    mut ws: DecoderWorkspace,
    locators: Vec<ExtElem>,
    values: Vec<ExtElem>,
) -> DecodeOutcome {
    let field = code.field();
    let n = code.n();
    let locations: Vec<Vec<u16>> = locators.iter().map(|x| code.location(x)).collect();
    let mut e = vec![field.zero(); n];
    for (loc, v) in locations.iter().zip(&values) {
        for (ei, &l) in e.iter_mut().zip(loc) {
            if l != 0 {
                *ei = field.add_scaled(ei, v, l);
            }
        }
    }
    if code.syndromes(&e).expect("length n") != ws.syndromes {
        return Err(DecodeFailure::Syndrome);
    }
    let (mu, delta, d) = (t.mu(), t.delta(), code.d());
    let rank = t.errata_rank(field, &e);
    let radius = mu + delta + (d - 1 - mu - delta) / 2;
    if rank > radius {
        return Err(DecodeFailure::Radius { rank, radius });
    }
    let codeword = t.r.iter().zip(&e).map(|(a, b)| field.sub(a, b)).collect();
    ws.tau = locators.len();
    ws.locators = locators;
    ws.values = values;
    ws.locations = locations;
    Ok(Decoded { codeword, error: e, epsilon: rank - mu - delta, mu, delta, workspace: ws })
}
