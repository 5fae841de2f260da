use std::fmt;

use rand::Rng;

use super::MatrixError;
use crate::field::Fq;

/// Dense row-major matrix over F_q.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatQ {
    fq: Fq,
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl fmt::Debug for MatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatQ(q={}, {}x{})", self.fq.q(), self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl MatQ {
    pub fn zeros(fq: Fq, rows: usize, cols: usize) -> Self {
        MatQ { fq, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(fq: Fq, n: usize) -> Self {
        let mut m = Self::zeros(fq, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_vec(fq: Fq, rows: usize, cols: usize, data: Vec<u16>) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::DataLength { expected: rows * cols, got: data.len() });
        }
        if let Some(&v) = data.iter().find(|&&v| v as u32 >= fq.q()) {
            return Err(MatrixError::Entry { value: v as u32, q: fq.q() });
        }
        Ok(MatQ { fq, rows, cols, data })
    }

    /// Builds a matrix from row slices; all rows must share a length.
    pub fn from_rows<R: AsRef<[u16]>>(fq: Fq, rows: &[R]) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(MatrixError::Shape {
                    op: "from_rows",
                    left: (rows.len(), cols),
                    right: (1, r.len()),
                });
            }
            data.extend_from_slice(r);
        }
        Self::from_vec(fq, rows.len(), cols, data)
    }

    /// Entries are reduced mod q, so negative or oversized literals are fine.
    pub fn from_i64_rows(fq: Fq, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let q = fq.q() as i64;
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(move |&v| v.rem_euclid(q) as u16)
            })
            .collect();
        MatQ { fq, rows: rows.len(), cols, data }
    }

    pub fn random<R: Rng + ?Sized>(fq: Fq, rows: usize, cols: usize, rng: &mut R) -> Self {
        let data = (0..rows * cols).map(|_| fq.random(rng)).collect();
        MatQ { fq, rows, cols, data }
    }

    /// Uniformly random matrix of rank min(rows, cols), by rejection.
    pub fn random_full_rank<R: Rng + ?Sized>(fq: Fq, rows: usize, cols: usize, rng: &mut R) -> Self {
        loop {
            let m = Self::random(fq, rows, cols, rng);
            if m.rank() == rows.min(cols) {
                return m;
            }
        }
    }

    pub fn fq(&self) -> Fq {
        self.fq
    }

    pub fn q(&self) -> u32 {
        self.fq.q()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[u16] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u16) {
        debug_assert!((v as u32) < self.fq.q());
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u16] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u16> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Number of nonzero rows.
    pub fn nonzero_rows(&self) -> usize {
        (0..self.rows).filter(|&i| self.row(i).iter().any(|&v| v != 0)).count()
    }

    fn same_field(&self, other: &MatQ, op: &'static str) -> Result<(), MatrixError> {
        if self.fq != other.fq {
            return Err(MatrixError::FieldMismatch { op, left: self.q(), right: other.q() });
        }
        Ok(())
    }

    fn same_shape(&self, other: &MatQ, op: &'static str) -> Result<(), MatrixError> {
        self.same_field(other, op)?;
        if self.shape() != other.shape() {
            return Err(MatrixError::Shape { op, left: self.shape(), right: other.shape() });
        }
        Ok(())
    }

    pub fn add(&self, other: &MatQ) -> Result<MatQ, MatrixError> {
        self.same_shape(other, "add")?;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| self.fq.add(a, b)).collect();
        Ok(self.with_data(data))
    }

    pub fn sub(&self, other: &MatQ) -> Result<MatQ, MatrixError> {
        self.same_shape(other, "sub")?;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| self.fq.sub(a, b)).collect();
        Ok(self.with_data(data))
    }

    pub fn neg(&self) -> MatQ {
        let data = self.data.iter().map(|&a| self.fq.neg(a)).collect();
        self.with_data(data)
    }

    pub fn scale(&self, s: u16) -> MatQ {
        let data = self.data.iter().map(|&a| self.fq.mul(a, s)).collect();
        self.with_data(data)
    }

    fn with_data(&self, data: Vec<u16>) -> MatQ {
        MatQ { fq: self.fq, rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &MatQ) -> Result<MatQ, MatrixError> {
        self.same_field(other, "mul")?;
        if self.cols != other.rows {
            return Err(MatrixError::Shape { op: "mul", left: self.shape(), right: other.shape() });
        }
        let q = self.q() as u64;
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d = (*d + a * b as u64) % q;
                }
            }
        }
        Ok(MatQ {
            fq: self.fq,
            rows: self.rows,
            cols: other.cols,
            data: out.into_iter().map(|v| v as u16).collect(),
        })
    }

    pub fn transpose(&self) -> MatQ {
        let mut t = MatQ::zeros(self.fq, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// [self; other]
    pub fn vstack(&self, other: &MatQ) -> Result<MatQ, MatrixError> {
        self.same_field(other, "vstack")?;
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(MatrixError::Shape { op: "vstack", left: self.shape(), right: other.shape() });
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatQ { fq: self.fq, rows: self.rows + other.rows, cols, data })
    }

    /// [self | other]
    pub fn hstack(&self, other: &MatQ) -> Result<MatQ, MatrixError> {
        self.same_field(other, "hstack")?;
        if self.rows != other.rows && self.cols > 0 && other.cols > 0 {
            return Err(MatrixError::Shape { op: "hstack", left: self.shape(), right: other.shape() });
        }
        let rows = if self.cols > 0 { self.rows } else { other.rows };
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            if self.cols > 0 {
                data.extend_from_slice(self.row(i));
            }
            if other.cols > 0 {
                data.extend_from_slice(other.row(i));
            }
        }
        Ok(MatQ { fq: self.fq, rows, cols, data })
    }

    /// Block matrix [a b; c d].
    pub fn block(a: &MatQ, b: &MatQ, c: &MatQ, d: &MatQ) -> Result<MatQ, MatrixError> {
        let top = a.hstack(b)?;
        let bottom = c.hstack(d)?;
        if top.cols != bottom.cols && top.rows > 0 && bottom.rows > 0 {
            return Err(MatrixError::Shape { op: "block", left: top.shape(), right: bottom.shape() });
        }
        top.vstack(&bottom)
    }

    pub fn select_rows(&self, idx: &[usize]) -> MatQ {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        MatQ { fq: self.fq, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> MatQ {
        let mut data = Vec::with_capacity(self.rows * idx.len());
        for i in 0..self.rows {
            for &j in idx {
                data.push(self.get(i, j));
            }
        }
        MatQ { fq: self.fq, rows: self.rows, cols: idx.len(), data }
    }

    /// Columns `start..end` as a new matrix.
    pub fn col_range(&self, start: usize, end: usize) -> MatQ {
        let idx: Vec<usize> = (start..end).collect();
        self.select_cols(&idx)
    }

    pub fn row_range(&self, start: usize, end: usize) -> MatQ {
        let idx: Vec<usize> = (start..end).collect();
        self.select_rows(&idx)
    }

    /// Reduced row echelon form and its pivot columns. Zero rows are kept at
    /// the bottom, so the shape is unchanged.
    pub fn rre(&self) -> (MatQ, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rre_in_place();
        (m, pivots)
    }

    fn rre_in_place(&mut self) -> Vec<usize> {
        let fq = self.fq;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = fq.inv(self.data[r * cols + c]).expect("pivot is nonzero");
            if inv != 1 {
                for j in c..cols {
                    self.data[r * cols + j] = fq.mul(self.data[r * cols + j], inv);
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c];
                if f == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = fq.mul(f, self.data[r * cols + j]);
                    self.data[i * cols + j] = fq.sub(self.data[i * cols + j], v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m = self.clone();
        m.rre_in_place().len()
    }

    /// RRE form with zero rows removed: the canonical basis of the row space.
    pub fn row_space_basis(&self) -> MatQ {
        let (r, p) = self.rre();
        r.row_range(0, p.len())
    }

    /// Rows form a basis of {v : self·vᵀ = 0}.
    pub fn null_space(&self) -> MatQ {
        let (r, pivots) = self.rre();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = MatQ::zeros(self.fq, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, 1);
            for (i, &p) in pivots.iter().enumerate() {
                out.set(k, p, self.fq.neg(r.get(i, f)));
            }
        }
        out
    }

    /// Rows form a basis of {v : v·self = 0}.
    pub fn left_null_space(&self) -> MatQ {
        self.transpose().null_space()
    }

    /// Inverse of a square nonsingular matrix.
    pub fn inverse(&self) -> Result<MatQ, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::Shape { op: "inverse", left: self.shape(), right: self.shape() });
        }
        let n = self.rows;
        let aug = self.hstack(&MatQ::identity(self.fq, n))?;
        let (r, pivots) = aug.rre();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(MatrixError::Singular);
        }
        Ok(r.col_range(n, 2 * n))
    }

    /// Q with self·Q = I for a full-row-rank self (n×m, n ≤ m).
    pub fn right_inverse(&self) -> Result<MatQ, MatrixError> {
        let (n, m) = self.shape();
        let aug = self.hstack(&MatQ::identity(self.fq, n))?;
        let (r, pivots) = aug.rre();
        if pivots.iter().filter(|&&p| p < m).count() < n {
            return Err(MatrixError::NotFullRowRank { rank: self.rank(), rows: n });
        }
        // r = [P·self | P]; the pivot columns of P·self form the identity
        let p = r.col_range(m, m + n);
        let mut select = MatQ::zeros(self.fq, m, n);
        for (i, &c) in pivots.iter().enumerate() {
            select.set(c, i, 1);
        }
        select.mul(&p)
    }

    /// True when the row spaces of `self` and `other` coincide.
    pub fn same_row_space(&self, other: &MatQ) -> bool {
        self.cols == other.cols && self.row_space_basis() == other.row_space_basis()
    }
}

/// d_R(x, y) = rank(y − x).
pub fn rank_distance(x: &MatQ, y: &MatQ) -> Result<usize, MatrixError> {
    Ok(y.sub(x)?.rank())
}
