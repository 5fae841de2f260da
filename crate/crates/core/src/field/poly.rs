//! Dense polynomials over F_q, constant term first. Used to build and check
//! extension-field moduli and to invert field elements.

use super::Fq;

fn trim(mut a: Vec<u16>) -> Vec<u16> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn rem(fq: Fq, a: &[u16], f: &[u16]) -> Vec<u16> {
    let mut a = trim(a.to_vec());
    let f = trim(f.to_vec());
    let df = f.len() - 1;
    let lead_inv = fq.inv(f[df]).expect("nonzero leading coefficient");
    while a.len() > df {
        let top = a.len() - 1;
        let c = fq.mul(a[top], lead_inv);
        let shift = top - df;
        for (i, &fc) in f.iter().enumerate() {
            a[shift + i] = fq.sub(a[shift + i], fq.mul(c, fc));
        }
        a = trim(a);
    }
    a
}

fn mul(fq: Fq, a: &[u16], b: &[u16]) -> Vec<u16> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let q = fq.q() as u64;
    let mut acc = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] = (acc[i + j] + x as u64 * y as u64) % q;
        }
    }
    trim(acc.into_iter().map(|v| v as u16).collect())
}

fn mulmod(fq: Fq, a: &[u16], b: &[u16], f: &[u16]) -> Vec<u16> {
    rem(fq, &mul(fq, a, b), f)
}

fn powmod(fq: Fq, base: &[u16], mut e: u64, f: &[u16]) -> Vec<u16> {
    let mut acc = rem(fq, &[1], f);
    let mut b = rem(fq, base, f);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(fq, &acc, &b, f);
        }
        b = mulmod(fq, &b, &b, f);
        e >>= 1;
    }
    acc
}

fn sub(fq: Fq, a: &[u16], b: &[u16]) -> Vec<u16> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| fq.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

fn gcd(fq: Fq, a: &[u16], b: &[u16]) -> Vec<u16> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(fq, &a, &b);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or test: a monic f of degree m is irreducible iff
/// gcd(x^{q^i} − x, f) = 1 for every i ≤ m/2.
pub(super) fn is_irreducible(fq: Fq, f: &[u16]) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    // images of x^k under the q-th power map, k < m
    let xq = powmod(fq, &[0, 1], fq.q() as u64, &f);
    let mut img: Vec<Vec<u16>> = Vec::with_capacity(m);
    img.push(vec![1]);
    for k in 1..m {
        img.push(mulmod(fq, &img[k - 1], &xq, &f));
    }
    let x = vec![0u16, 1];
    let mut h = x.clone();
    for _ in 1..=m / 2 {
        let mut next = vec![0u16; m];
        for (k, &hk) in h.iter().enumerate() {
            if hk == 0 {
                continue;
            }
            for (i, &c) in img[k].iter().enumerate() {
                next[i] = fq.add(next[i], fq.mul(hk, c));
            }
        }
        h = trim(next);
        let g = gcd(fq, &sub(fq, &h, &x), &f);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// First monic irreducible polynomial of degree m, scanning lower coefficients
/// as base-q integers in increasing order.
pub(super) fn find_irreducible(fq: Fq, m: usize) -> Option<Vec<u16>> {
    let q = fq.q() as u128;
    let limit = q.checked_pow(m as u32).unwrap_or(u128::MAX);
    let mut v: u128 = 1;
    while v < limit {
        let mut c = Vec::with_capacity(m + 1);
        let mut t = v;
        for _ in 0..m {
            c.push((t % q) as u16);
            t /= q;
        }
        c.push(1);
        if c[0] != 0 && is_irreducible(fq, &c) {
            return Some(c);
        }
        v += 1;
    }
    None
}

/// Inverse of a nonzero `a` modulo the irreducible `f`, as exactly deg f coefficients.
pub(super) fn inverse_mod(fq: Fq, a: &[u16], f: &[u16]) -> Vec<u16> {
    let m = f.len() - 1;
    let (mut r0, mut r1) = (trim(f.to_vec()), trim(a.to_vec()));
    let (mut s0, mut s1): (Vec<u16>, Vec<u16>) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        // long division r0 = quo·r1 + rem
        let mut rem_ = r0.clone();
        let d1 = r1.len() - 1;
        let lead_inv = fq.inv(r1[d1]).expect("nonzero");
        let mut quo = vec![0u16; rem_.len().saturating_sub(d1).max(1)];
        while rem_.len() > d1 {
            let top = rem_.len() - 1;
            let c = fq.mul(rem_[top], lead_inv);
            let shift = top - d1;
            quo[shift] = c;
            for (i, &rc) in r1.iter().enumerate() {
                rem_[shift + i] = fq.sub(rem_[shift + i], fq.mul(c, rc));
            }
            rem_ = trim(rem_);
        }
        let s2 = sub(fq, &s0, &mul(fq, &trim(quo), &s1));
        r0 = std::mem::replace(&mut r1, rem_);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is a nonzero constant since f is irreducible
    let c = fq.inv(r0[0]).expect("gcd is a unit");
    let mut out: Vec<u16> = rem(fq, &s0, f).into_iter().map(|v| fq.mul(v, c)).collect();
    out.resize(m, 0);
    out
}
