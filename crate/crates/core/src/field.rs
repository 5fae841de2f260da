//! Prime fields F_q and their extensions F_{q^m}.
//!
//! An element of F_{q^m} is stored as its coordinate vector in the polynomial
//! basis 1, α, …, α^{m-1}, where α is a root of the field's monic irreducible
//! modulus. Elements are plain `Copy` values; every operation goes through the
//! [`Field`] that created them.

// Coordinate loops index several fixed-size arrays in lockstep.
#![allow(clippy::needless_range_loop)]

use std::cell::Cell;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

mod poly;
mod table;

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("base field size {0} is not a prime in [2, 65536)")]
    NotPrime(u32),
    #[error("extension degree {0} outside [1, {MAX_DEGREE}]")]
    BadDegree(usize),
    #[error("modulus must be monic of degree {expected}, got {got} coefficients")]
    BadModulus { expected: usize, got: usize },
    #[error("modulus polynomial is reducible over F_{0}")]
    Reducible(u32),
    #[error("no irreducible polynomial of degree {m} over F_{q} found")]
    NoModulus { q: u32, m: usize },
    #[error("operands belong to different fields")]
    Mismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("coordinate {value} out of range for F_{q}")]
    Coordinate { value: u64, q: u32 },
    #[error("expected at most {m} coordinates, got {got}")]
    Length { m: usize, got: usize },
    #[error("invalid hex encoding {0:?}")]
    Hex(String),
}

/// Counts of extension-field operations performed on the current thread.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub add: u64,
    pub mul: u64,
    pub inv: u64,
    pub frob: u64,
}

impl OpCounts {
    pub fn total(&self) -> u64 {
        self.add + self.mul + self.inv + self.frob
    }

    pub fn since(&self, earlier: &OpCounts) -> OpCounts {
        OpCounts {
            add: self.add - earlier.add,
            mul: self.mul - earlier.mul,
            inv: self.inv - earlier.inv,
            frob: self.frob - earlier.frob,
        }
    }
}

thread_local! {
    static OPS: Cell<OpCounts> = const { Cell::new(OpCounts { add: 0, mul: 0, inv: 0, frob: 0 }) };
}

/// Snapshot of the per-thread operation counters.
pub fn op_counts() -> OpCounts {
    OPS.with(|c| c.get())
}

#[inline]
fn bump(f: impl FnOnce(&mut OpCounts)) {
    OPS.with(|c| {
        let mut v = c.get();
        f(&mut v);
        c.set(v);
    });
}

/// The prime field F_q. Small enough to pass by value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fq {
    q: u32,
}

impl Fq {
    pub fn new(q: u32) -> Result<Self, FieldError> {
        if !(2..65536).contains(&q) || !is_prime(q) {
            return Err(FieldError::NotPrime(q));
        }
        Ok(Fq { q })
    }

    #[inline]
    pub fn q(self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(self, a: u16, b: u16) -> u16 {
        ((a as u32 + b as u32) % self.q) as u16
    }

    #[inline]
    pub fn sub(self, a: u16, b: u16) -> u16 {
        ((a as u32 + self.q - b as u32) % self.q) as u16
    }

    #[inline]
    pub fn neg(self, a: u16) -> u16 {
        ((self.q - a as u32) % self.q) as u16
    }

    #[inline]
    pub fn mul(self, a: u16, b: u16) -> u16 {
        ((a as u32 * b as u32) % self.q) as u16
    }

    pub fn pow(self, a: u16, mut e: u64) -> u16 {
        let mut base = a as u64 % self.q as u64;
        let mut acc = 1u64 % self.q as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.q as u64;
            }
            base = base * base % self.q as u64;
            e >>= 1;
        }
        acc as u16
    }

    pub fn inv(self, a: u16) -> Result<u16, FieldError> {
        if (a as u32).is_multiple_of(self.q) {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    pub fn random<R: Rng + ?Sized>(self, rng: &mut R) -> u16 {
        rng.gen_range(0..self.q) as u16
    }
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of F_{q^m} in the polynomial basis.
#[derive(Clone, Copy)]
pub struct ExtElem {
    coeffs: [u16; MAX_DEGREE],
    m: u8,
    tag: u32,
}

impl ExtElem {
    /// Coordinates in the basis 1, α, …, α^{m-1}.
    pub fn coeffs(&self) -> &[u16] {
        &self.coeffs[..self.m as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|&c| c == 0)
    }
}

impl PartialEq for ExtElem {
    fn eq(&self, other: &Self) -> bool {
        self.tag == other.tag && self.coeffs() == other.coeffs()
    }
}

impl Eq for ExtElem {}

impl Hash for ExtElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.tag.hash(state);
        self.coeffs().hash(state);
    }
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtElem{:?}", self.coeffs())
    }
}

/// Parameters of F_{q^m} plus precomputed reduction and Frobenius tables.
///
/// Immutable after construction; share it freely across threads.
#[derive(Clone)]
pub struct Field {
    base: Fq,
    m: usize,
    modulus: Vec<u16>,
    tag: u32,
    /// `reduce[k]` holds x^{m+k} mod modulus, for k in 0..m-1.
    reduce: Vec<[u16; MAX_DEGREE]>,
    /// `frob[i][k]` holds (α^k)^{q^i}, for i, k in 0..m.
    frob: Vec<Vec<ExtElem>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("q", &self.base.q)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl Field {
    /// F_{q^m} with the built-in modulus when one is tabulated, otherwise the
    /// lexicographically first irreducible polynomial found by search.
    pub fn new(q: u32, m: usize) -> Result<Self, FieldError> {
        let base = Fq::new(q)?;
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(FieldError::BadDegree(m));
        }
        let modulus = match table::lookup(q, m) {
            Some(c) => c.to_vec(),
            None => poly::find_irreducible(base, m).ok_or(FieldError::NoModulus { q, m })?,
        };
        Self::build(base, m, modulus)
    }

    /// F_{q^m} with an explicit monic modulus given as `m + 1` coefficients,
    /// constant term first.
    pub fn with_modulus(q: u32, modulus: &[u16]) -> Result<Self, FieldError> {
        let base = Fq::new(q)?;
        if modulus.len() < 2 {
            return Err(FieldError::BadModulus { expected: 1, got: modulus.len() });
        }
        let m = modulus.len() - 1;
        if m > MAX_DEGREE {
            return Err(FieldError::BadDegree(m));
        }
        if modulus[m] != 1 {
            return Err(FieldError::BadModulus { expected: m, got: modulus.len() });
        }
        if let Some(&c) = modulus.iter().find(|&&c| c as u32 >= q) {
            return Err(FieldError::Coordinate { value: c as u64, q });
        }
        if !poly::is_irreducible(base, modulus) {
            return Err(FieldError::Reducible(q));
        }
        Self::build(base, m, modulus.to_vec())
    }

    fn build(base: Fq, m: usize, modulus: Vec<u16>) -> Result<Self, FieldError> {
        let mut h: u32 = 0x811c_9dc5;
        for &v in std::iter::once(&(base.q as u16)).chain(modulus.iter()) {
            h ^= v as u32;
            h = h.wrapping_mul(0x0100_0193);
        }
        h ^= base.q >> 16;

        // x^m = -(c_0 + … + c_{m-1} x^{m-1}); walk upward one degree at a time.
        let mut reduce: Vec<[u16; MAX_DEGREE]> = Vec::with_capacity(m.saturating_sub(1));
        let mut cur = [0u16; MAX_DEGREE];
        for i in 0..m {
            cur[i] = base.neg(modulus[i]);
        }
        for _ in 0..m.saturating_sub(1) {
            reduce.push(cur);
            let top = cur[m - 1];
            let mut next = [0u16; MAX_DEGREE];
            for i in (1..m).rev() {
                next[i] = cur[i - 1];
            }
            if top != 0 {
                for i in 0..m {
                    next[i] = base.sub(next[i], base.mul(top, modulus[i]));
                }
            }
            cur = next;
        }

        let mut field = Field { base, m, modulus, tag: h, reduce, frob: Vec::new() };

        // Frobenius tables: row 1 by exponentiation, later rows by composing with row 1.
        let basis: Vec<ExtElem> = (0..m).map(|k| field.alpha_pow(k)).collect();
        field.frob.push(basis.clone());
        if m > 1 {
            let row1: Vec<ExtElem> =
                basis.iter().map(|b| field.pow_uncounted(b, base.q as u64)).collect();
            field.frob.push(row1);
            for i in 2..m {
                let row: Vec<ExtElem> =
                    field.frob[i - 1].iter().map(|e| field.apply_frob_row(e, 1)).collect();
                field.frob.push(row);
            }
        }
        Ok(field)
    }

    pub fn q(&self) -> u32 {
        self.base.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn base(&self) -> Fq {
        self.base
    }

    /// Modulus coefficients, constant term first, leading 1 last.
    pub fn modulus(&self) -> &[u16] {
        &self.modulus
    }

    fn raw(&self, coeffs: [u16; MAX_DEGREE]) -> ExtElem {
        ExtElem { coeffs, m: self.m as u8, tag: self.tag }
    }

    pub fn zero(&self) -> ExtElem {
        self.raw([0; MAX_DEGREE])
    }

    pub fn one(&self) -> ExtElem {
        let mut c = [0; MAX_DEGREE];
        c[0] = 1 % self.base.q as u16;
        self.raw(c)
    }

    /// α^k for k < m (a basis vector).
    fn alpha_pow(&self, k: usize) -> ExtElem {
        let mut c = [0; MAX_DEGREE];
        c[k] = 1;
        self.raw(c)
    }

    /// The generator α of the polynomial basis (equals the constant root when m = 1).
    pub fn alpha(&self) -> ExtElem {
        if self.m == 1 {
            self.from_base(self.base.neg(self.modulus[0]))
        } else {
            self.alpha_pow(1)
        }
    }

    /// The i-th polynomial basis element α^i, i < m.
    pub fn basis(&self, i: usize) -> ExtElem {
        assert!(i < self.m, "basis index {i} out of range");
        self.alpha_pow(i)
    }

    /// Embeds a base-field scalar.
    pub fn from_base(&self, c: u16) -> ExtElem {
        let mut v = [0; MAX_DEGREE];
        v[0] = c % self.base.q as u16;
        self.raw(v)
    }

    pub fn from_coeffs(&self, coeffs: &[u16]) -> Result<ExtElem, FieldError> {
        if coeffs.len() > self.m {
            return Err(FieldError::Length { m: self.m, got: coeffs.len() });
        }
        let mut c = [0; MAX_DEGREE];
        for (dst, &v) in c.iter_mut().zip(coeffs) {
            if v as u32 >= self.base.q {
                return Err(FieldError::Coordinate { value: v as u64, q: self.base.q });
            }
            *dst = v;
        }
        Ok(self.raw(c))
    }

    /// The element whose coordinates are the little-endian base-q digits of `index`.
    pub fn from_index(&self, mut index: u128) -> ExtElem {
        let mut c = [0; MAX_DEGREE];
        for slot in c.iter_mut().take(self.m) {
            *slot = (index % self.base.q as u128) as u16;
            index /= self.base.q as u128;
        }
        self.raw(c)
    }

    /// Number of elements, when it fits in a u128.
    pub fn order(&self) -> Option<u128> {
        (self.base.q as u128).checked_pow(self.m as u32)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtElem {
        let mut c = [0; MAX_DEGREE];
        for slot in c.iter_mut().take(self.m) {
            *slot = self.base.random(rng);
        }
        self.raw(c)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtElem {
        loop {
            let e = self.random(rng);
            if !e.is_zero() {
                return e;
            }
        }
    }

    /// True when `a` was produced by this field.
    pub fn owns(&self, a: &ExtElem) -> bool {
        a.tag == self.tag && a.m as usize == self.m
    }

    #[inline]
    fn check(&self, a: &ExtElem) {
        debug_assert!(self.owns(a), "element from a different field");
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        self.check(a);
        self.check(b);
        bump(|c| c.add += 1);
        let mut r = [0; MAX_DEGREE];
        for i in 0..self.m {
            r[i] = self.base.add(a.coeffs[i], b.coeffs[i]);
        }
        self.raw(r)
    }

    pub fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        self.check(a);
        self.check(b);
        bump(|c| c.add += 1);
        let mut r = [0; MAX_DEGREE];
        for i in 0..self.m {
            r[i] = self.base.sub(a.coeffs[i], b.coeffs[i]);
        }
        self.raw(r)
    }

    pub fn neg(&self, a: &ExtElem) -> ExtElem {
        self.check(a);
        let mut r = [0; MAX_DEGREE];
        for i in 0..self.m {
            r[i] = self.base.neg(a.coeffs[i]);
        }
        self.raw(r)
    }

    /// Multiplication by a base-field scalar (an F_q operation, not counted).
    pub fn scale(&self, a: &ExtElem, s: u16) -> ExtElem {
        self.check(a);
        let mut r = [0; MAX_DEGREE];
        if s != 0 {
            for i in 0..self.m {
                r[i] = self.base.mul(a.coeffs[i], s);
            }
        }
        self.raw(r)
    }

    /// `acc + s·a` for a base-field scalar `s` (F_q work only).
    pub fn add_scaled(&self, acc: &ExtElem, a: &ExtElem, s: u16) -> ExtElem {
        if s == 0 {
            return *acc;
        }
        let mut r = acc.coeffs;
        for i in 0..self.m {
            r[i] = self.base.add(r[i], self.base.mul(a.coeffs[i], s));
        }
        self.raw(r)
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        self.check(a);
        self.check(b);
        bump(|c| c.mul += 1);
        self.mul_uncounted(a, b)
    }

    fn mul_uncounted(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let m = self.m;
        let q = self.base.q as u64;
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..m {
            let ai = a.coeffs[i] as u64;
            if ai == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] += ai * b.coeffs[j] as u64;
            }
        }
        let mut r = [0u64; MAX_DEGREE];
        for i in 0..m {
            r[i] = prod[i] % q;
        }
        for k in m..(2 * m).saturating_sub(1) {
            let c = prod[k] % q;
            if c == 0 {
                continue;
            }
            let red = &self.reduce[k - m];
            for i in 0..m {
                r[i] = (r[i] + c * red[i] as u64) % q;
            }
        }
        let mut out = [0u16; MAX_DEGREE];
        for i in 0..m {
            out[i] = r[i] as u16;
        }
        self.raw(out)
    }

    fn pow_uncounted(&self, a: &ExtElem, mut e: u64) -> ExtElem {
        let mut base = *a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_uncounted(&acc, &base);
            }
            base = self.mul_uncounted(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: &ExtElem, e: u64) -> ExtElem {
        self.check(a);
        bump(|c| c.mul += 1);
        self.pow_uncounted(a, e)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm over F_q[x].
    pub fn inv(&self, a: &ExtElem) -> Result<ExtElem, FieldError> {
        self.check(a);
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        bump(|c| c.inv += 1);
        let inv = poly::inverse_mod(self.base, a.coeffs(), &self.modulus);
        let mut c = [0; MAX_DEGREE];
        c[..inv.len()].copy_from_slice(&inv);
        Ok(self.raw(c))
    }

    pub fn div(&self, a: &ExtElem, b: &ExtElem) -> Result<ExtElem, FieldError> {
        let bi = self.inv(b)?;
        Ok(self.mul(a, &bi))
    }

    fn apply_frob_row(&self, a: &ExtElem, e: usize) -> ExtElem {
        let q = self.base.q as u64;
        let table = &self.frob[e];
        let mut acc = [0u64; MAX_DEGREE];
        for k in 0..self.m {
            let ak = a.coeffs[k] as u64;
            if ak == 0 {
                continue;
            }
            let img = &table[k].coeffs;
            for i in 0..self.m {
                acc[i] = (acc[i] + ak * img[i] as u64) % q;
            }
        }
        let mut out = [0u16; MAX_DEGREE];
        for i in 0..self.m {
            out[i] = acc[i] as u16;
        }
        self.raw(out)
    }

    /// a^{q^i}. Negative exponents are taken mod m, the order of the Frobenius.
    pub fn frob(&self, a: &ExtElem, i: i64) -> ExtElem {
        self.check(a);
        let e = i.rem_euclid(self.m as i64) as usize;
        if e == 0 {
            return *a;
        }
        bump(|c| c.frob += 1);
        self.apply_frob_row(a, e)
    }

    pub fn try_add(&self, a: &ExtElem, b: &ExtElem) -> Result<ExtElem, FieldError> {
        if !self.owns(a) || !self.owns(b) {
            return Err(FieldError::Mismatch);
        }
        Ok(self.add(a, b))
    }

    pub fn try_mul(&self, a: &ExtElem, b: &ExtElem) -> Result<ExtElem, FieldError> {
        if !self.owns(a) || !self.owns(b) {
            return Err(FieldError::Mismatch);
        }
        Ok(self.mul(a, b))
    }

    /// Σ c_i q^i as an unsigned integer.
    pub fn to_biguint(&self, a: &ExtElem) -> BigUint {
        let mut v = BigUint::zero();
        for &c in a.coeffs().iter().rev() {
            v = v * self.base.q + c as u32;
        }
        v
    }

    pub fn from_biguint(&self, v: &BigUint) -> Result<ExtElem, FieldError> {
        let mut v = v.clone();
        let mut c = [0u16; MAX_DEGREE];
        for slot in c.iter_mut().take(self.m) {
            *slot = (&v % self.base.q).to_u16().expect("digit below q");
            v /= self.base.q;
        }
        if !v.is_zero() {
            return Err(FieldError::Length { m: self.m, got: self.m + 1 });
        }
        Ok(self.raw(c))
    }

    /// Canonical hex encoding: the base-q digits (coordinate 0 least
    /// significant) read as an integer, written in lowercase hex.
    pub fn to_hex(&self, a: &ExtElem) -> String {
        self.to_biguint(a).to_str_radix(16)
    }

    pub fn from_hex(&self, s: &str) -> Result<ExtElem, FieldError> {
        let t = s.trim();
        let t = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")).unwrap_or(t);
        let v = BigUint::parse_bytes(t.as_bytes(), 16).ok_or_else(|| FieldError::Hex(s.to_string()))?;
        self.from_biguint(&v).map_err(|_| FieldError::Hex(s.to_string()))
    }
}
