//! Text formats: field and code specifications, matrices, packet files and
//! per-symbol hex rows.
//!
//! Field spec: `q=2,m=8` with an optional `poly=0x11d`, where the modulus is
//! the integer whose base-q digits are its coefficients, constant term least
//! significant. Code spec: `gab:q=2,m=8,n=8,k=4[,poly=..]` for a Gabidulin
//! code, or `mrd:q=2,n=8,m=392,d=3` for bounds on hypothetical MRD
//! parameters that need no field construction.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::field::{ExtElem, Field, FieldError, Fq};
use crate::gabidulin::{CodeError, GabidulinCode};
use crate::linalg::{MatQ, MatrixError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("bad spec {spec:?}: {msg}")]
    Spec { spec: String, msg: String },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("expected {expected} {what}, found {got}")]
    Truncated { what: &'static str, expected: usize, got: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

fn spec_err(spec: &str, msg: impl Into<String>) -> FormatError {
    FormatError::Spec { spec: spec.to_string(), msg: msg.into() }
}

fn key_values<'a>(spec: &str, body: &'a str) -> Result<HashMap<&'a str, &'a str>, FormatError> {
    let mut map = HashMap::new();
    for part in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| spec_err(spec, format!("expected key=value, got {part:?}")))?;
        if map.insert(k.trim(), v.trim()).is_some() {
            return Err(spec_err(spec, format!("duplicate key {k:?}")));
        }
    }
    Ok(map)
}

fn take_num(spec: &str, map: &mut HashMap<&str, &str>, key: &str) -> Result<usize, FormatError> {
    let v = map.remove(key).ok_or_else(|| spec_err(spec, format!("missing {key}")))?;
    v.parse().map_err(|_| spec_err(spec, format!("{key}={v:?} is not a non-negative integer")))
}

fn no_leftovers(spec: &str, map: &HashMap<&str, &str>) -> Result<(), FormatError> {
    match map.keys().next() {
        Some(k) => Err(spec_err(spec, format!("unknown key {k:?}"))),
        None => Ok(()),
    }
}

/// Modulus coefficients from the `poly=` value.
fn parse_modulus(spec: &str, q: u32, m: usize, text: &str) -> Result<Vec<u16>, FormatError> {
    let t = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")).unwrap_or(text);
    let mut v = BigUint::parse_bytes(t.as_bytes(), 16).ok_or_else(|| spec_err(spec, "poly must be hex"))?;
    let mut coeffs = Vec::new();
    while !v.is_zero() {
        coeffs.push((&v % q).to_u16().expect("digit below q"));
        v /= q;
    }
    if coeffs.len() != m + 1 {
        return Err(spec_err(spec, format!("poly has degree {}, expected {m}", coeffs.len() as isize - 1)));
    }
    Ok(coeffs)
}

fn build_field(spec: &str, map: &mut HashMap<&str, &str>) -> Result<Field, FormatError> {
    let q = take_num(spec, map, "q")? as u32;
    let m = take_num(spec, map, "m")?;
    match map.remove("poly") {
        Some(p) => {
            Fq::new(q)?;
            let coeffs = parse_modulus(spec, q, m, p)?;
            Ok(Field::with_modulus(q, &coeffs)?)
        }
        None => Ok(Field::new(q, m)?),
    }
}

pub fn parse_field(spec: &str) -> Result<Field, FormatError> {
    let mut map = key_values(spec, spec)?;
    let field = build_field(spec, &mut map)?;
    no_leftovers(spec, &map)?;
    Ok(field)
}

/// The `poly=` value for a field: its modulus as a hex integer.
pub fn modulus_hex(field: &Field) -> String {
    let mut v = BigUint::zero();
    for &c in field.modulus().iter().rev() {
        v = v * field.q() + c as u32;
    }
    format!("0x{}", v.to_str_radix(16))
}

#[derive(Clone, Debug)]
pub enum CodeSpec {
    Gabidulin(GabidulinCode),
    /// Parameters of an MRD code, for bound computations only.
    Mrd { q: u32, n: usize, m: usize, d: usize },
}

pub fn parse_code(spec: &str) -> Result<CodeSpec, FormatError> {
    let (kind, body) = spec.split_once(':').ok_or_else(|| spec_err(spec, "expected gab:... or mrd:..."))?;
    let mut map = key_values(spec, body)?;
    let out = match kind.trim() {
        "gab" => {
            let field = build_field(spec, &mut map)?;
            let n = take_num(spec, &mut map, "n")?;
            let k = take_num(spec, &mut map, "k")?;
            CodeSpec::Gabidulin(GabidulinCode::new(field, n, k)?)
        }
        "mrd" => {
            let q = take_num(spec, &mut map, "q")? as u32;
            Fq::new(q)?;
            let n = take_num(spec, &mut map, "n")?;
            let m = take_num(spec, &mut map, "m")?;
            let d = take_num(spec, &mut map, "d")?;
            if n == 0 || m == 0 || d == 0 || d > n.min(m) {
                return Err(spec_err(spec, "need n, m ≥ 1 and 1 ≤ d ≤ min(n, m)"));
            }
            CodeSpec::Mrd { q, n, m, d }
        }
        other => return Err(spec_err(spec, format!("unknown code family {other:?}"))),
    };
    no_leftovers(spec, &map)?;
    Ok(out)
}

pub fn code_spec_string(code: &GabidulinCode) -> String {
    format!(
        "gab:q={},m={},n={},k={},poly={}",
        code.q(),
        code.m(),
        code.n(),
        code.k(),
        modulus_hex(code.field())
    )
}

/// Non-empty lines with `#` comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_entry(fq: Fq, line: usize, tok: &str) -> Result<u16, FormatError> {
    let v: i64 = tok
        .parse()
        .map_err(|_| FormatError::Syntax { line, msg: format!("{tok:?} is not an integer") })?;
    if v < 0 || v >= fq.q() as i64 {
        return Err(FormatError::Syntax { line, msg: format!("entry {v} outside [0, {})", fq.q()) });
    }
    Ok(v as u16)
}

/// Header `q rows cols` followed by the rows, entries separated by spaces.
pub fn parse_matrix(text: &str) -> Result<MatQ, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(FormatError::Truncated { what: "header lines", expected: 1, got: 0 })?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| FormatError::Syntax { line: hline, msg: "header must be `q rows cols`".into() }))
        .collect::<Result<_, _>>()?;
    let [q, rows, cols] = nums[..] else {
        return Err(FormatError::Syntax { line: hline, msg: "header must be `q rows cols`".into() });
    };
    let fq = Fq::new(q as u32)?;
    let mut data = Vec::with_capacity(rows * cols);
    let mut got = 0;
    for (line, l) in lines {
        let row: Vec<u16> = l.split_whitespace().map(|t| parse_entry(fq, line, t)).collect::<Result<_, _>>()?;
        if row.len() != cols {
            return Err(FormatError::Syntax { line, msg: format!("expected {cols} entries, got {}", row.len()) });
        }
        data.extend(row);
        got += 1;
    }
    if got != rows {
        return Err(FormatError::Truncated { what: "matrix rows", expected: rows, got });
    }
    Ok(MatQ::from_vec(fq, rows, cols, data)?)
}

pub fn write_matrix(x: &MatQ) -> String {
    let mut out = format!("{} {} {}\n", x.q(), x.rows(), x.cols());
    for i in 0..x.rows() {
        let row: Vec<String> = x.row(i).iter().map(u16::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// One packet per line. For q ≤ 10 a packet may be written as a run of
/// digits with no separators; otherwise entries are space separated.
pub fn parse_packets(fq: Fq, width: usize, text: &str) -> Result<MatQ, FormatError> {
    let mut data = Vec::new();
    let mut rows = 0;
    for (line, l) in content_lines(text) {
        let row: Vec<u16> = if l.contains(char::is_whitespace) || fq.q() > 10 {
            l.split_whitespace().map(|t| parse_entry(fq, line, t)).collect::<Result<_, _>>()?
        } else {
            l.chars()
                .map(|c| match c.to_digit(10) {
                    Some(v) if v < fq.q() => Ok(v as u16),
                    _ => Err(FormatError::Syntax { line, msg: format!("{c:?} is not a base-{} digit", fq.q()) }),
                })
                .collect::<Result<_, _>>()?
        };
        if row.len() != width {
            return Err(FormatError::Syntax { line, msg: format!("packet has {} symbols, expected {width}", row.len()) });
        }
        data.extend(row);
        rows += 1;
    }
    Ok(MatQ::from_vec(fq, rows, width, data)?)
}

/// Number of symbols in the first packet, or `None` for a file without
/// packets. Lets callers tell a wrong packet width from a malformed file.
pub fn packet_width(fq: Fq, text: &str) -> Option<usize> {
    let (_, l) = content_lines(text).next()?;
    Some(if l.contains(char::is_whitespace) || fq.q() > 10 { l.split_whitespace().count() } else { l.chars().count() })
}

pub fn write_packets(x: &MatQ) -> String {
    let mut out = String::new();
    for i in 0..x.rows() {
        let row = x.row(i);
        if x.q() <= 10 {
            out.extend(row.iter().map(|v| char::from_digit(*v as u32, 10).unwrap()));
        } else {
            out.push_str(&row.iter().map(u16::to_string).collect::<Vec<_>>().join(" "));
        }
        out.push('\n');
    }
    out
}

/// One hex-encoded field element per line.
pub fn parse_symbols(field: &Field, expected: usize, text: &str) -> Result<Vec<ExtElem>, FormatError> {
    let mut out = Vec::new();
    for (line, l) in content_lines(text) {
        let e = field
            .from_hex(l)
            .map_err(|e| FormatError::Syntax { line, msg: e.to_string() })?;
        out.push(e);
    }
    if out.len() != expected {
        return Err(FormatError::Truncated { what: "symbols", expected, got: out.len() });
    }
    Ok(out)
}

pub fn write_symbols(field: &Field, v: &[ExtElem]) -> String {
    v.iter().map(|e| format!("{}\n", field.to_hex(e))).collect()
}
