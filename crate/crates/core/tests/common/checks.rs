//! Checks shared by the acceptance harness and the ordinary test targets.
//! Each returns a one-line summary on success and a diagnostic on failure.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rankcode::channel::{
    end_to_end_decode, lift, lift_matrix, reduce, reduction_distance, Channel, ChannelConfig, ReductionResult,
};
use rankcode::field::{op_counts, ExtElem, Field, Fq};
use rankcode::gabidulin::{conventional_decode, generalized_decode, generalized_decode_locator};
use rankcode::linalg::{rank_distance, subspace_distance, vector_to_matrix};
use rankcode::oracle::{brute_generalized_decode, matrix_from_index, min_rank_erasure_deviation, min_rank_over_transfer};
use rankcode::{GabidulinCode, MatQ, ReceivedTuple, Subspace};

use super::{combine, random_codeword, random_pattern};

pub type Check = Result<String, String>;

fn code(q: u32, m: usize, n: usize, k: usize) -> GabidulinCode {
    GabidulinCode::new(Field::new(q, m).unwrap(), n, k).unwrap()
}

fn add(field: &Field, a: &[ExtElem], b: &[ExtElem]) -> Vec<ExtElem> {
    a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
}

/// Both decoders must return `x`.
fn decodes_to(code: &GabidulinCode, t: &ReceivedTuple, x: &[ExtElem]) -> Result<(), String> {
    for (name, out) in [("span", generalized_decode(code, t)), ("locator", generalized_decode_locator(code, t))] {
        match out {
            Ok(d) if d.codeword == x => {}
            Ok(_) => return Err(format!("{name} decoder returned a different codeword")),
            Err(e) => return Err(format!("{name} decoder failed: {e}")),
        }
    }
    Ok(())
}

fn nonzero_columns(fq: Fq, n: usize) -> Vec<MatQ> {
    let total = (fq.q() as u64).pow(n as u32);
    (1..total).map(|i| matrix_from_index(fq, n, 1, i)).collect()
}

fn all_matrices(fq: Fq, rows: usize, cols: usize) -> impl Iterator<Item = MatQ> {
    let total = (fq.q() as u64).pow((rows * cols) as u32);
    (0..total).map(move |i| matrix_from_index(fq, rows, cols, i))
}

/// Every errata pattern with 2ε + μ + δ ≤ d − 1 = 2 on the binary
/// (n, m, k) = (4, 4, 2) code, enumerated exhaustively, followed by random
/// patterns of every admissible type.
pub fn capability(samples: usize, seed: u64) -> Check {
    let code = code(2, 4, 4, 2);
    let f = code.field();
    let fq = f.base();
    let words = code.codewords(1 << 16).unwrap();
    let elems: Vec<ExtElem> = (0..16).map(|i| f.from_index(i)).collect();
    let nonzero = &elems[1..];
    let cols = nonzero_columns(fq, 4);
    let empty_l = MatQ::zeros(fq, 4, 0);
    let mut count = 0usize;
    let mut run = |l_hat: &MatQ, e_hat: &[ExtElem], e: Vec<ExtElem>| -> Result<(), String> {
        let x = &words[count % words.len()];
        count += 1;
        let t = ReceivedTuple::new(add(f, x, &e), l_hat.clone(), e_hat.to_vec());
        decodes_to(&code, &t, x).map_err(|m| format!("μ={}, δ={}: {m}", t.mu(), t.delta()))
    };

    run(&empty_l, &[], vec![f.zero(); 4])?;
    // ε = 1
    for l in &cols {
        for v in nonzero {
            run(&empty_l, &[], combine(f, l, &[*v]))?;
        }
    }
    // μ = 1 and μ = 2, e = L̂·E⁽¹⁾
    for l in &cols {
        for v in &elems {
            run(l, &[], combine(f, l, &[*v]))?;
        }
    }
    for a in &cols {
        for b in &cols {
            let l = a.hstack(b).unwrap();
            if l.rank() < 2 {
                continue;
            }
            for v in &elems {
                for w in &elems {
                    run(&l, &[], combine(f, &l, &[*v, *w]))?;
                }
            }
        }
    }
    // δ = 1 and δ = 2, e = L⁽²⁾·Ê
    for v in nonzero {
        for l in all_matrices(fq, 4, 1) {
            run(&empty_l, &[*v], combine(f, &l, &[*v]))?;
        }
    }
    for v in nonzero {
        for w in nonzero {
            if v == w {
                continue;
            }
            for l in all_matrices(fq, 4, 2) {
                run(&empty_l, &[*v, *w], combine(f, &l, &[*v, *w]))?;
            }
        }
    }
    // μ = δ = 1, e = L̂·E⁽¹⁾ + L⁽²⁾·Ê
    for l_hat in &cols {
        for v in nonzero {
            for e1 in &elems {
                for l2 in all_matrices(fq, 4, 1) {
                    let l = l_hat.hstack(&l2).unwrap();
                    run(l_hat, &[*v], combine(f, &l, &[*e1, *v]))?;
                }
            }
        }
    }
    let exhaustive = count;

    let types = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 2, 0), (0, 0, 2), (0, 1, 1)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let (eps, mu, delta) = types[i % types.len()];
        let p = random_pattern(&code, eps, mu, delta, &mut rng);
        decodes_to(&code, &p.tuple, &p.codeword).map_err(|m| format!("sample (ε={eps}, μ={mu}, δ={delta}): {m}"))?;
    }
    Ok(format!("{exhaustive} enumerated + {samples} sampled patterns, all decoded"))
}

/// A random tuple inside the decoding radius of the (2, 4, 4, 2) code.
fn correctable<R: Rng>(code: &GabidulinCode, rng: &mut R) -> super::Pattern {
    let d = code.d();
    loop {
        let (eps, mu, delta) = (rng.gen_range(0..=1), rng.gen_range(0..d), rng.gen_range(0..d));
        if 2 * eps + mu + delta < d {
            return random_pattern(code, eps, mu, delta, rng);
        }
    }
}

pub fn oracle_agreement(count: usize, seed: u64) -> Check {
    let code = code(2, 4, 4, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let p = correctable(&code, &mut rng);
        let brute = brute_generalized_decode(&code, &p.tuple, 1 << 16).map_err(|e| e.to_string())?;
        if brute.ambiguous() {
            return Err(format!("draw {i}: exhaustive minimizer is not unique"));
        }
        let span = generalized_decode(&code, &p.tuple).map_err(|e| format!("draw {i}: span decoder: {e}"))?;
        let loc = generalized_decode_locator(&code, &p.tuple).map_err(|e| format!("draw {i}: locator decoder: {e}"))?;
        if span.codeword != brute.best || loc.codeword != brute.best {
            return Err(format!("draw {i}: decoder and exhaustive minimizer disagree"));
        }
    }
    Ok(format!("{count} tuples, both decoders equal the exhaustive minimizer"))
}

/// d_S(lift x, lift x') = 2·d_R(x, x') over every pair of a small code.
pub fn lifting_distance_exhaustive(q: u32, m: usize, n: usize, k: usize) -> Check {
    let code = code(q, m, n, k);
    let f = code.field();
    let mats: Vec<MatQ> = code.codewords(1 << 16).unwrap().iter().map(|x| vector_to_matrix(f, x)).collect();
    let spaces: Vec<Subspace> = mats.iter().map(lift).collect();
    let (mut min_s, mut min_r) = (usize::MAX, usize::MAX);
    for i in 0..mats.len() {
        for j in 0..mats.len() {
            let ds = subspace_distance(&spaces[i], &spaces[j]).unwrap();
            let dr = rank_distance(&mats[i], &mats[j]).unwrap();
            if ds != 2 * dr {
                return Err(format!("pair ({i}, {j}): d_S = {ds}, d_R = {dr}"));
            }
            if i != j {
                min_s = min_s.min(ds);
                min_r = min_r.min(dr);
            }
        }
    }
    if min_s != 2 * min_r || min_r != code.d() {
        return Err(format!("d_S(I(C)) = {min_s}, d_R(C) = {min_r}, d = {}", code.d()));
    }
    Ok(format!("{} pairs, d_S = 2·d_R = {min_s}", mats.len() * mats.len()))
}

/// A received matrix AX + BZ with a random rank-deficient A; x itself is
/// returned alongside so callers can measure against the transmitted or an
/// unrelated payload.
pub fn random_received<R: Rng>(rng: &mut R) -> (MatQ, MatQ, usize) {
    let fq = Fq::new([2, 3, 5][rng.gen_range(0..3)]).unwrap();
    let (n, m) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
    let big_n = rng.gen_range(0..=n + 2);
    let x = MatQ::random(fq, n, m, rng);
    let rank = rng.gen_range(0..=big_n.min(n));
    let a = MatQ::random_full_rank(fq, big_n, rank, rng).mul(&MatQ::random_full_rank(fq, rank, n, rng)).unwrap();
    let links = rng.gen_range(0..=2);
    let z = MatQ::random(fq, links, n + m, rng);
    let b = MatQ::random(fq, big_n, links, rng);
    let y = a.mul(&lift_matrix(&x)).unwrap().add(&b.mul(&z).unwrap()).unwrap();
    (x, y, n)
}

pub fn reduction_distance_draws(count: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let (x, y, n) = random_received(&mut rng);
        let x = if rng.gen_bool(0.5) { x } else { MatQ::random(x.fq(), x.rows(), x.cols(), &mut rng) };
        let red = reduce(&y, n);
        if !red.invariants_hold() || !red.assembled().same_row_space(&y) {
            return Err(format!("draw {i}: reduction invariants fail"));
        }
        let via_reduction = reduction_distance(&red, &x);
        let direct = subspace_distance(&lift(&x), &Subspace::row_space(&y)).unwrap();
        if via_reduction != direct {
            return Err(format!("draw {i}: reduction gives {via_reduction}, subspace distance {direct}"));
        }
    }
    Ok(format!("{count} draws, reduction_distance = subspace_distance"))
}

/// Success rate of lifting + channel + end-to-end decoding.
pub fn channel_success(code: &GabidulinCode, cfg: ChannelConfig, trials: usize, adversarial: bool) -> (usize, usize) {
    let f = code.field();
    let mut channel = Channel::new(cfg.clone(), f.base()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    let mut ok = 0;
    for _ in 0..trials {
        let x = random_codeword(code, &mut rng);
        let big_x = lift_matrix(&vector_to_matrix(f, &x));
        let t = if adversarial {
            channel.transmit_adversarial(&big_x, 16).unwrap()
        } else {
            channel.transmit(&big_x).unwrap()
        };
        if matches!(end_to_end_decode(code, &t.y), Ok(d) if d.codeword == x) {
            ok += 1;
        }
    }
    (ok, trials)
}

/// Every (ρ, t) with 2t + ρ < d on the d = 5 code decodes every trial, and
/// an adversarial configuration with 2t + ρ = d fails at least once.
pub fn channel_guarantee(trials: usize, seed: u64) -> Check {
    let code = code(2, 6, 6, 2);
    let d = code.d();
    let mut configs = 0;
    for t in 0..d {
        for rho in 0..=code.n() {
            if 2 * t + rho >= d {
                continue;
            }
            let cfg = ChannelConfig::new(code.n(), code.m(), rho, t, seed + (10 * t + rho) as u64);
            let (ok, total) = channel_success(&code, cfg, trials, false);
            if ok != total {
                return Err(format!("ρ={rho}, t={t}: {ok}/{total} decoded"));
            }
            configs += 1;
        }
    }
    let cfg = ChannelConfig::new(code.n(), code.m(), 1, 2, seed);
    let (ok, total) = channel_success(&code, cfg, 200, true);
    if ok == total {
        return Err("adversarial ρ=1, t=2 never failed".into());
    }
    Ok(format!(
        "{configs} configurations × {trials} trials at rate 1.0; adversarial ρ=1, t=2 rate {:.3}",
        ok as f64 / total as f64
    ))
}

/// min over A of rank(Y − AX) = rank[X; Y] − rank X, and for the column
/// version min over B of rank(Y' − X'B) = rank[X' Y'] − rank X' with
/// X' = Xᵀ, Y' = Yᵀ, enumerating B directly.
fn lemma_case(x: &MatQ, y: &MatQ) -> Result<(), String> {
    let lhs = min_rank_over_transfer(x, y, 1 << 16).map_err(|e| e.to_string())?;
    let rhs = x.vstack(y).unwrap().rank() - x.rank();
    if lhs != rhs {
        return Err(format!("rows: min {lhs}, formula {rhs} for X={x:?}, Y={y:?}"));
    }
    let (xc, yc) = (x.transpose(), y.transpose());
    let lhs = all_matrices(x.fq(), xc.cols(), yc.cols())
        .map(|b| yc.sub(&xc.mul(&b).unwrap()).unwrap().rank())
        .min()
        .unwrap();
    let rhs = xc.hstack(&yc).unwrap().rank() - xc.rank();
    if lhs != rhs {
        return Err(format!("columns: min {lhs}, formula {rhs} for X={xc:?}, Y={yc:?}"));
    }
    Ok(())
}

/// Exhaustive over all binary X (n×m), Y (N×m) with n, N, m ≤ 3 whenever the
/// joint enumeration of (X, Y, A) stays within 2^24; the remaining shapes get
/// random (X, Y) with the inner minimum still exhaustive.
pub fn lemma(seed: u64) -> Check {
    let fq = Fq::new(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut exhaustive, mut sampled) = (0usize, 0usize);
    for n in 1..=3 {
        for big_n in 1..=3 {
            for m in 1..=3 {
                let bits = n * m + big_n * m;
                if bits + big_n * n <= 24 {
                    for x in all_matrices(fq, n, m) {
                        for y in all_matrices(fq, big_n, m) {
                            lemma_case(&x, &y)?;
                            exhaustive += 1;
                        }
                    }
                } else {
                    for _ in 0..200 {
                        let x = MatQ::random(fq, n, m, &mut rng);
                        let y = MatQ::random(fq, big_n, m, &mut rng);
                        lemma_case(&x, &y)?;
                        sampled += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{exhaustive} exhaustive and {sampled} sampled (X, Y) pairs"))
}

/// Smallest ε with e = L̂E⁽¹⁾ + L⁽²⁾Ê + L⁽³⁾E⁽³⁾, L⁽³⁾ having ε columns,
/// found by enumerating every factor.
fn expansion_length(e: &MatQ, l_hat: &MatQ, e_hat: &MatQ) -> usize {
    let fq = e.fq();
    let (n, m) = e.shape();
    for eps in 0..=n.min(m) {
        for e1 in all_matrices(fq, l_hat.cols(), m) {
            for l2 in all_matrices(fq, n, e_hat.rows()) {
                let rest = e.sub(&l_hat.mul(&e1).unwrap()).unwrap().sub(&l2.mul(e_hat).unwrap()).unwrap();
                for l3 in all_matrices(fq, n, eps) {
                    if all_matrices(fq, eps, m).any(|e3| l3.mul(&e3).unwrap() == rest) {
                        return eps;
                    }
                }
            }
        }
    }
    unreachable!("ε = min(n, m) always suffices")
}

/// Block-matrix rank, the two-sided minimum and the expansion length agree
/// on every binary 2×2 e and every L̂, Ê with μ, δ ≤ 1.
pub fn rank_expansion_exhaustive() -> Check {
    let fq = Fq::new(2).unwrap();
    let (n, m) = (2, 2);
    let mut l_choices = vec![MatQ::zeros(fq, n, 0)];
    l_choices.extend(nonzero_columns(fq, n));
    let mut e_choices = vec![MatQ::zeros(fq, 0, m)];
    e_choices.extend(nonzero_columns(fq, m).iter().map(MatQ::transpose));
    let mut cases = 0;
    for l_hat in &l_choices {
        for e_hat in &e_choices {
            let (mu, delta) = (l_hat.cols(), e_hat.rows());
            for e in all_matrices(fq, n, m) {
                let top = l_hat.hstack(&e).unwrap();
                let bottom = MatQ::zeros(fq, delta, mu).hstack(e_hat).unwrap();
                let block = top.vstack(&bottom).unwrap().rank() - mu - delta;
                let two_sided = min_rank_erasure_deviation(&e, l_hat, e_hat, 1 << 16).map_err(|e| e.to_string())?;
                let expansion = expansion_length(&e, l_hat, e_hat);
                if block != two_sided || block != expansion {
                    return Err(format!(
                        "μ={mu}, δ={delta}: block {block}, minimum {two_sided}, expansion {expansion}"
                    ));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (e, L̂, Ê) triples agree three ways"))
}

/// Rewrites a reduction with another erased set S, L̂ ← L̂T and Ê ← RÊ and
/// checks that the described subspace is unchanged.
pub fn gauge_freedom(count: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut moved = 0;
    for i in 0..count {
        let fq = Fq::new([2, 3, 5][i % 3]).unwrap();
        let (n, m, mu, delta) = (5, 4, rng.gen_range(1..=2), rng.gen_range(0..=2));
        // rows of r vanish on a set of size μ + 1 containing U
        let zero_rows: Vec<usize> = sample(&mut rng, n, mu + 1).into_vec();
        let mut u: Vec<usize> = zero_rows[..mu].to_vec();
        u.sort_unstable();
        let mut r = MatQ::random(fq, n, m, &mut rng);
        for &z in &zero_rows {
            for c in 0..m {
                r.set(z, c, 0);
            }
        }
        let mut l_hat = MatQ::random(fq, n, mu, &mut rng);
        for (a, &row) in u.iter().enumerate() {
            for j in 0..mu {
                l_hat.set(row, j, if a == j { fq.neg(1) } else { 0 });
            }
        }
        let e_hat = MatQ::random_full_rank(fq, delta, m, &mut rng);
        let base = ReductionResult { r: r.clone(), l_hat: l_hat.clone(), e_hat: e_hat.clone(), u: u.clone(), mu, delta };
        if !base.invariants_hold() {
            return Err(format!("instance {i}: constructed tuple violates the reduction properties"));
        }

        let mut s: Vec<usize> = sample(&mut rng, mu + 1, mu).into_iter().map(|j| zero_rows[j]).collect();
        s.sort_unstable();
        if l_hat.select_rows(&s).rank() < mu {
            s = u.clone();
        }
        let t = l_hat.select_rows(&s).inverse().unwrap().neg();
        let rr = MatQ::random_full_rank(fq, delta, delta, &mut rng);
        let other = ReductionResult {
            r,
            l_hat: l_hat.mul(&t).unwrap(),
            e_hat: rr.mul(&e_hat).unwrap(),
            u: s.clone(),
            mu,
            delta,
        };
        if !other.invariants_hold() {
            return Err(format!("instance {i}: rewritten tuple violates the reduction properties"));
        }
        if !other.assembled().same_row_space(&base.assembled()) {
            return Err(format!("instance {i}: row space changed under S={s:?}, U={u:?}"));
        }
        moved += usize::from(s != u);
    }
    if moved == 0 {
        return Err("no instance exercised a different erased set".into());
    }
    Ok(format!("{count} instances, {moved} with a different erased set"))
}

/// ε = μ = δ = 1 on a d = 5 code: the generalized decoder succeeds, the
/// conventional decoder given only r does not recover the codeword.
pub fn side_information_gain(count: usize, seed: u64) -> Check {
    let code = code(2, 6, 6, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut conventional_errors = 0;
    for i in 0..count {
        let p = random_pattern(&code, 1, 1, 1, &mut rng);
        let gen = generalized_decode(&code, &p.tuple).map_err(|e| format!("instance {i}: {e}"))?;
        if gen.codeword != p.codeword || (gen.epsilon, gen.mu, gen.delta) != (1, 1, 1) {
            return Err(format!("instance {i}: generalized decoder missed"));
        }
        match conventional_decode(&code, &p.tuple.r) {
            Ok(d) if d.codeword == p.codeword => {
                return Err(format!("instance {i}: conventional decoder succeeded on rank-3 errata"))
            }
            Ok(_) => {}
            Err(_) => conventional_errors += 1,
        }
    }
    Ok(format!(
        "d=5: generalized corrects (1,1,1) on {count}/{count}; conventional fails on all ({conventional_errors} detected)"
    ))
}

/// Mean extension-field operation count of generalized_decode per m, for
/// n = m ∈ {8, 16, 32, 64} and d = 5; returns (m, ops) pairs.
pub fn operation_counts(trials: usize, seed: u64) -> Result<Vec<(usize, f64)>, String> {
    let mut out = Vec::new();
    for m in [8, 16, 32, 64] {
        let code = code(2, m, m, m - 4);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut total = 0u64;
        for _ in 0..trials {
            let p = random_pattern(&code, 1, 1, 1, &mut rng);
            let before = op_counts();
            let d = generalized_decode(&code, &p.tuple).map_err(|e| format!("m={m}: {e}"))?;
            total += op_counts().since(&before).total();
            if d.codeword != p.codeword {
                return Err(format!("m={m}: wrong codeword"));
            }
        }
        out.push((m, total as f64 / trials as f64));
    }
    Ok(out)
}

pub fn complexity_trend(trials: usize, seed: u64) -> Check {
    let counts = operation_counts(trials, seed)?;
    let per_m: Vec<f64> = counts.iter().map(|(m, c)| c / *m as f64).collect();
    let (lo, hi) = per_m.iter().fold((f64::MAX, 0f64), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let table: Vec<String> = counts.iter().map(|(m, c)| format!("m={m}:{c:.0}")).collect();
    let summary = format!("{} ; ops/m spread {:.2}", table.join(" "), hi / lo);
    if hi / lo > 2.0 {
        return Err(summary);
    }
    Ok(summary)
}
