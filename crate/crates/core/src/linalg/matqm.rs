use crate::field::{ExtElem, Field};

/// Dense row-major matrix over F_{q^m}. Operations take the field
/// explicitly, like the elements themselves.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatQm {
    rows: usize,
    cols: usize,
    data: Vec<ExtElem>,
}

impl MatQm {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        MatQm { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<ExtElem>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        MatQm { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> ExtElem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExtElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[ExtElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// self · v for a column vector v.
    pub fn mul_vec(&self, field: &Field, v: &[ExtElem]) -> Vec<ExtElem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
            })
            .collect()
    }

    /// u · self for a row vector u.
    pub fn vec_mul(&self, field: &Field, u: &[ExtElem]) -> Vec<ExtElem> {
        assert_eq!(u.len(), self.rows);
        let mut out = vec![field.zero(); self.cols];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o = field.add(o, &field.mul(ui, a));
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rre(&self, field: &Field) -> (MatQm, Vec<usize>) {
        let mut m = self.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = field.inv(&m.get(r, c)).expect("pivot is nonzero");
            for j in c..cols {
                let v = field.mul(&m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..rows {
                let f = m.get(i, c);
                if i == r || f.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let v = field.sub(&m.get(i, j), &field.mul(&f, &m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.rre(field).1.len()
    }

    /// Rows form a basis of {v : self·vᵀ = 0}, in RRE form when the pivots
    /// of self come first.
    pub fn null_space(&self, field: &Field) -> MatQm {
        let (r, pivots) = self.rre(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = MatQm::zeros(field, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, field.one());
            for (i, &p) in pivots.iter().enumerate() {
                out.set(k, p, field.neg(&r.get(i, f)));
            }
        }
        out
    }
}
