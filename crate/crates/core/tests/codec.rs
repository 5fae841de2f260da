//! Code construction, syndromes, key equation and product codes.

mod common;

use common::{combine, independent, random_codeword, random_pattern};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rankcode::field::{ExtElem, Field};
use rankcode::gabidulin::{
    berlekamp_massey, conventional_decode, generalized_decode, generalized_decode_locator, product_code_decode,
    split_columns,
};
use rankcode::linalg::{matrix_to_vector, singleton_bounds, vector_rank, vector_to_matrix};
use rankcode::oracle::brute_generalized_decode;
use rankcode::{GabidulinCode, MatQ, ReceivedTuple};

fn code(q: u32, m: usize, n: usize, k: usize) -> GabidulinCode {
    GabidulinCode::new(Field::new(q, m).unwrap(), n, k).unwrap()
}

fn add(f: &Field, a: &[ExtElem], b: &[ExtElem]) -> Vec<ExtElem> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

#[test]
fn parameters_and_singleton_equality() {
    let c = code(2, 4, 4, 2);
    assert_eq!((c.d(), c.size()), (3, BigUint::from(256u32)));
    for (q, m, n, k) in [(2, 4, 4, 2), (2, 6, 5, 3), (3, 4, 3, 1), (5, 4, 4, 2), (2, 8, 6, 6)] {
        let c = code(q, m, n, k);
        assert_eq!(c.d(), n - k + 1);
        let bounds = singleton_bounds(q, n, m, c.d()).unwrap();
        assert_eq!(c.size(), bounds.rank_metric);
        assert_eq!((m * k) as u64, bounds.rank_metric_log_q as u64);
    }
    // k = n: the generator spans the whole space
    let full = code(2, 4, 4, 4);
    assert_eq!(full.d(), 1);
    assert_eq!(full.generator().rank(full.field()), 4);
}

#[test]
fn parity_generator_and_right_inverse() {
    for (q, m, n, k) in [(2, 4, 4, 2), (3, 5, 4, 2), (7, 3, 3, 1), (2, 10, 7, 3)] {
        let c = code(q, m, n, k);
        let f = c.field();
        for i in 0..c.k() {
            let row = c.generator().row(i).to_vec();
            assert!(c.parity_check().mul_vec(f, &row).iter().all(ExtElem::is_zero));
        }
        assert_eq!(c.h_matrix().rank(), n);
        assert_eq!(c.h_matrix().mul(c.right_inverse()).unwrap(), MatQ::identity(f.base(), n));
        let mut rng = ChaCha8Rng::seed_from_u64(q as u64);
        let u: Vec<ExtElem> = (0..k).map(|_| f.random(&mut rng)).collect();
        let x = c.encode(&u).unwrap();
        assert!(c.is_codeword(&x));
        assert_eq!(c.message(&x), u);
        assert!(c.encode(&vec![f.zero(); k]).unwrap().iter().all(ExtElem::is_zero));
    }
}

#[test]
fn transposed_code_has_the_same_distance() {
    let c = code(2, 3, 3, 1);
    let f = c.field();
    let words: Vec<MatQ> = c.codewords(1 << 16).unwrap().iter().map(|x| vector_to_matrix(f, x)).collect();
    let min = |ws: &mut dyn Iterator<Item = MatQ>| ws.filter(|w| !w.is_zero()).map(|w| w.rank()).min().unwrap();
    let d = min(&mut words.iter().cloned());
    let dt = min(&mut words.iter().map(MatQ::transpose));
    assert_eq!((d, dt), (3, 3));
}

/// S_ℓ = Σ_j X_j^{[ℓ]} E_j for e = Σ_j L_j E_j.
fn syndromes_from_factors(c: &GabidulinCode, l: &MatQ, values: &[ExtElem]) -> Vec<ExtElem> {
    let f = c.field();
    let x = c.locators(l);
    (0..c.d() - 1)
        .map(|ell| {
            x.iter().zip(values).fold(f.zero(), |s, (xj, ej)| f.add(&s, &f.mul(&f.frob(xj, ell as i64), ej)))
        })
        .collect()
}

#[test]
fn syndromes_match_any_factorization() {
    let c = code(2, 4, 4, 2);
    let f = c.field();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let l = MatQ::random_full_rank(f.base(), 4, 2, &mut rng);
        let values = independent(f, 2, &mut rng);
        let e = combine(f, &l, &values);
        assert_eq!(c.syndromes(&e).unwrap(), syndromes_from_factors(&c, &l, &values));
        // a second factorization of the same matrix: L·T with T⁻¹ applied to E
        let t = MatQ::from_i64_rows(f.base(), &[&[1, 1], &[0, 1]]);
        let lt = l.mul(&t).unwrap();
        let shifted = vec![f.sub(&values[0], &values[1]), values[1]];
        assert_eq!(combine(f, &lt, &shifted), e);
        assert_eq!(c.syndromes(&e).unwrap(), syndromes_from_factors(&c, &lt, &shifted));
    }
    assert!(c.syndromes(&random_codeword(&c, &mut rng)).unwrap().iter().all(ExtElem::is_zero));
}

#[test]
fn berlekamp_massey_annihilates_the_syndromes() {
    let c = code(2, 8, 8, 2);
    let f = c.field();
    let d = c.d();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let eps = rng.gen_range(0..=(d - 1) / 2);
        let p = random_pattern(&c, eps, 0, 0, &mut rng);
        let s = c.syndromes(&p.tuple.r).unwrap();
        let (sigma, l) = berlekamp_massey(f, &s);
        assert_eq!((l, sigma.q_degree()), (eps, Some(eps)));
        for ell in eps..d - 1 {
            let v = (0..=eps).fold(f.zero(), |acc, i| {
                f.add(&acc, &f.mul(&sigma.coeff(f, i), &f.frob(&s[ell - i], i as i64)))
            });
            assert!(v.is_zero(), "recursion fails at ℓ = {ell}");
        }
        // the symbols e_i span the error values, so σ vanishes on each
        assert!(p.error.iter().all(|e| sigma.eval(f, e).is_zero()));
    }
}

#[test]
fn without_side_information_both_entry_points_agree() {
    let c = code(2, 6, 6, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let eps = rng.gen_range(0..=2);
        let p = random_pattern(&c, eps, 0, 0, &mut rng);
        let a = conventional_decode(&c, &p.tuple.r).unwrap();
        let b = generalized_decode(&c, &p.tuple).unwrap();
        assert_eq!((a.codeword.clone(), a.error.clone()), (b.codeword, b.error));
        assert_eq!(a.codeword, p.codeword);
        assert_eq!(a.epsilon, vector_rank(c.field(), &p.error));
    }
}

#[test]
fn locator_polynomial_of_a_single_error() {
    let c = code(2, 4, 4, 2);
    let f = c.field();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..50 {
        let p = random_pattern(&c, 1, 0, 0, &mut rng);
        let d = generalized_decode_locator(&c, &p.tuple).unwrap();
        let lambda = &d.workspace.lambda;
        assert_eq!(lambda.q_degree(), Some(1));
        assert_eq!(d.workspace.locators.len(), 1);
        assert!(lambda.eval(f, &d.workspace.locators[0]).is_zero());
        assert_eq!(d.codeword, p.codeword);
    }
}

#[test]
fn fully_known_errata_skip_the_key_equation() {
    let c = code(3, 5, 5, 2);
    let f = c.field();
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for (mu, delta) in [(3, 0), (0, 3), (1, 2), (2, 1)] {
        let p = random_pattern(&c, 0, mu, delta, &mut rng);
        for d in [generalized_decode(&c, &p.tuple).unwrap(), generalized_decode_locator(&c, &p.tuple).unwrap()] {
            assert_eq!(d.codeword, p.codeword);
            assert_eq!(d.epsilon, 0);
            assert_eq!(d.workspace.sigma_f.q_degree().or(d.workspace.lambda_f.q_degree()), Some(0));
        }
        // the modified key equation remainder vanishes above τ
        let d = generalized_decode(&c, &p.tuple).unwrap();
        assert!((mu + delta..c.d() - 1).all(|l| d.workspace.omega.coeff(f, l).is_zero()));
    }
}

#[test]
fn beyond_the_radius_never_returns_a_far_codeword() {
    let c = code(2, 4, 4, 2);
    let f = c.field();
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let (mut failures, mut wrong) = (0, 0);
    for _ in 0..300 {
        let p = random_pattern(&c, 2, 0, 0, &mut rng);
        for out in [conventional_decode(&c, &p.tuple.r), generalized_decode_locator(&c, &p.tuple)] {
            match out {
                Err(_) => failures += 1,
                Ok(d) => {
                    // a returned word is a codeword within the radius: the oracle agrees it is the unique minimizer
                    assert!(c.is_codeword(&d.codeword));
                    assert!(vector_rank(f, &d.error) <= 1);
                    let brute = brute_generalized_decode(&c, &p.tuple, 1 << 16).unwrap();
                    assert_eq!(brute.best, d.codeword);
                    assert_ne!(d.codeword, p.codeword);
                    wrong += 1;
                }
            }
        }
    }
    assert!(failures > 0 && failures + wrong == 600);
}

#[test]
fn converse_pattern_is_ambiguous() {
    // split a minimum-weight codeword c = L_1E_1 + L_2E_2 + L_3E_3 so that
    // x and x + c explain r equally well with one erasure and one error
    let c = code(2, 4, 4, 2);
    let f = c.field();
    let words = c.codewords(1 << 16).unwrap();
    let heavy = words.iter().find(|w| vector_rank(f, w) == 3).unwrap();
    let cm = vector_to_matrix(f, heavy);
    let (rre, pivots) = cm.rre();
    let basis = rre.row_range(0, 3);
    let l = cm.select_cols(&pivots);
    let values = matrix_to_vector(f, &basis);
    assert_eq!(combine(f, &l, &values), *heavy);

    let x = &words[17];
    let e = combine(f, &l.col_range(0, 2), &values[..2]);
    let t = ReceivedTuple::new(add(f, x, &e), l.col_range(0, 1), Vec::new());
    assert_eq!(2 + t.mu() + t.delta(), c.d());
    let brute = brute_generalized_decode(&c, &t, 1 << 16).unwrap();
    assert!(brute.ambiguous());
    assert_eq!(brute.objective, 2);
    let other = add(f, x, heavy);
    for w in [x, &other] {
        let diff: Vec<ExtElem> = t.r.iter().zip(w).map(|(a, b)| f.sub(a, b)).collect();
        assert_eq!(t.errata_rank(f, &diff), 2);
    }
}

fn product_parts() -> (Vec<GabidulinCode>, Vec<usize>) {
    let codes = vec![code(2, 4, 4, 2), code(2, 4, 4, 2)];
    (codes, vec![4, 4])
}

#[test]
fn product_code_size_and_distance() {
    let (codes, _) = product_parts();
    let f = codes[0].field();
    let words = codes[0].codewords(1 << 16).unwrap();
    let total: BigUint = codes.iter().map(GabidulinCode::size).product();
    assert_eq!(total, BigUint::from(1u32 << 16));
    // linear, so the distance is the least rank of a nonzero codeword
    let mats: Vec<MatQ> = words.iter().map(|w| vector_to_matrix(f, w)).collect();
    let mut d = usize::MAX;
    for a in &mats {
        for b in &mats {
            let w = a.hstack(b).unwrap();
            if !w.is_zero() {
                d = d.min(w.rank());
            }
        }
    }
    assert_eq!(d, 3);
}

#[test]
fn product_code_decodes_componentwise() {
    let (codes, widths) = product_parts();
    let f = codes[0].field();
    let fq = f.base();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for trial in 0..100 {
        let words: Vec<Vec<ExtElem>> = codes.iter().map(|c| random_codeword(c, &mut rng)).collect();
        let x = vector_to_matrix(f, &words[0]).hstack(&vector_to_matrix(f, &words[1])).unwrap();
        // rank-1 error L·E spread over both blocks, or confined to the first
        let l = MatQ::random_full_rank(fq, 4, 1, &mut rng);
        let mut e_row = MatQ::random(fq, 1, 8, &mut rng);
        if trial % 2 == 0 {
            for col in 4..8 {
                e_row.set(0, col, 0);
            }
        }
        let r = x.add(&l.mul(&e_row).unwrap()).unwrap();
        let tuples: Vec<ReceivedTuple> =
            split_columns(&r, &widths).iter().map(|b| ReceivedTuple::plain(f, matrix_to_vector(f, b))).collect();
        let out = product_code_decode(&codes, &tuples);
        for (i, o) in out.into_iter().enumerate() {
            let d = o.unwrap();
            assert_eq!(d.codeword, words[i]);
            if trial % 2 == 0 && i == 1 {
                assert_eq!(d.epsilon, 0);
            }
        }
    }
}

#[test]
fn product_code_with_shared_erasure() {
    let (codes, widths) = product_parts();
    let f = codes[0].field();
    let fq = f.base();
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..100 {
        let words: Vec<Vec<ExtElem>> = codes.iter().map(|c| random_codeword(c, &mut rng)).collect();
        let x = vector_to_matrix(f, &words[0]).hstack(&vector_to_matrix(f, &words[1])).unwrap();
        let l = MatQ::random_full_rank(fq, 4, 2, &mut rng);
        let e = l.mul(&MatQ::random(fq, 2, 8, &mut rng)).unwrap();
        let r = x.add(&e).unwrap();
        let tuples: Vec<ReceivedTuple> = split_columns(&r, &widths)
            .iter()
            .map(|b| ReceivedTuple::new(matrix_to_vector(f, b), l.clone(), Vec::new()))
            .collect();
        for (i, o) in product_code_decode(&codes, &tuples).into_iter().enumerate() {
            assert_eq!(o.unwrap().codeword, words[i]);
        }
    }
    // mismatched erasure sets are rejected
    let t0 = ReceivedTuple::new(vec![f.zero(); 4], MatQ::from_i64_rows(fq, &[&[1], &[0], &[0], &[0]]), Vec::new());
    let t1 = ReceivedTuple::new(vec![f.zero(); 4], MatQ::from_i64_rows(fq, &[&[0], &[1], &[0], &[0]]), Vec::new());
    assert!(product_code_decode(&codes, &[t0, t1])[1].is_err());
}
