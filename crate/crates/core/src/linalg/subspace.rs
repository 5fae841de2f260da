use super::{MatQ, MatrixError};
use crate::field::Fq;

/// A subspace of F_q^M held by its unique RRE basis, so equality of
/// subspaces is structural equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    basis: MatQ,
}

impl Subspace {
    /// Row space of `generators`.
    pub fn row_space(generators: &MatQ) -> Self {
        Subspace { basis: generators.row_space_basis() }
    }

    pub fn zero(fq: Fq, ambient: usize) -> Self {
        Subspace { basis: MatQ::zeros(fq, 0, ambient) }
    }

    pub fn basis(&self) -> &MatQ {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    fn check(&self, other: &Subspace) -> Result<(), MatrixError> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(MatrixError::Ambient { left: self.ambient_dim(), right: other.ambient_dim() });
        }
        Ok(())
    }

    /// U + V
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, MatrixError> {
        self.check(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersection_dim(&self, other: &Subspace) -> Result<usize, MatrixError> {
        Ok(self.dim() + other.dim() - self.sum(other)?.dim())
    }

    pub fn contains(&self, v: &[u16]) -> bool {
        if v.len() != self.ambient_dim() {
            return false;
        }
        let row = MatQ::from_rows(self.basis.fq(), &[v]).expect("entries in range");
        self.basis.vstack(&row).map(|s| s.rank() == self.dim()).unwrap_or(false)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.sum(other).map(|s| s.dim() == other.dim()).unwrap_or(false)
    }
}

/// d_S(U, V) = dim(U+V) − dim(U∩V) = 2·dim(U+V) − dim U − dim V.
pub fn subspace_distance(u: &Subspace, v: &Subspace) -> Result<usize, MatrixError> {
    let s = u.sum(v)?.dim();
    Ok(2 * s - u.dim() - v.dim())
}
