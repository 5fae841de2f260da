//! Cartesian products C_1 × … × C_ℓ of Gabidulin codes with a common length
//! and minimum distance. A codeword is an n×(m_1+…+m_ℓ) matrix whose column
//! blocks are codewords of the components; the product is again MRD.

use super::{generalized_decode, DecodeFailure, DecodeOutcome, GabidulinCode, ReceivedTuple};
use crate::linalg::MatQ;

/// Decodes each component on its own. All components must share n and d,
/// and all tuples the same erasure locations L̂, since the error locations
/// of a matrix error are common to every column block.
pub fn product_code_decode(codes: &[GabidulinCode], tuples: &[ReceivedTuple]) -> Vec<DecodeOutcome> {
    assert_eq!(codes.len(), tuples.len(), "one received tuple per component");
    let Some(first) = codes.first() else {
        return Vec::new();
    };
    codes
        .iter()
        .zip(tuples)
        .map(|(code, t)| {
            if code.n() != first.n() || code.d() != first.d() {
                return Err(DecodeFailure::InvalidInput("components differ in n or d".into()));
            }
            if t.l_hat != tuples[0].l_hat {
                return Err(DecodeFailure::InvalidInput("components differ in L̂".into()));
            }
            generalized_decode(code, t)
        })
        .collect()
}

/// Splits the columns of `x` into consecutive blocks of the given widths.
pub fn split_columns(x: &MatQ, widths: &[usize]) -> Vec<MatQ> {
    assert_eq!(widths.iter().sum::<usize>(), x.cols(), "widths must cover every column");
    let mut start = 0;
    widths
        .iter()
        .map(|&w| {
            let block = x.col_range(start, start + w);
            start += w;
            block
        })
        .collect()
}
