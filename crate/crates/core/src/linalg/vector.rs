//! A length-n vector over F_{q^m} is the n×m matrix over F_q whose rows are
//! the coordinate vectors of its entries.

use super::MatQ;
use crate::field::{ExtElem, Field};

pub fn vector_to_matrix(field: &Field, v: &[ExtElem]) -> MatQ {
    let m = field.m();
    let mut data = Vec::with_capacity(v.len() * m);
    for e in v {
        data.extend_from_slice(e.coeffs());
    }
    MatQ::from_vec(field.base(), v.len(), m, data).expect("coordinates in range")
}

/// Inverse of [`vector_to_matrix`]; `x` must have exactly m columns.
pub fn matrix_to_vector(field: &Field, x: &MatQ) -> Vec<ExtElem> {
    assert_eq!(x.cols(), field.m(), "matrix width must equal the extension degree");
    (0..x.rows())
        .map(|i| field.from_coeffs(x.row(i)).expect("coordinates in range"))
        .collect()
}

/// Rank over F_q of the expanded vector.
pub fn vector_rank(field: &Field, v: &[ExtElem]) -> usize {
    vector_to_matrix(field, v).rank()
}
