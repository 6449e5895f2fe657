use super::{LinalgError, Matrix};
use crate::scalar::Field;

/// Determinant by Bareiss fraction-free elimination.
///
/// Every division is exact in the entry ring, so polynomial entries stay polynomial
/// and intermediate degrees grow linearly rather than through nested fractions.
pub fn determinant<S: Field>(m: &Matrix<S>) -> Result<S, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(S::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = S::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(S::zero());
            };
            a.swap_rows(k, p);
            negate = !negate;
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            let lead = a[(i, k)].clone();
            for j in k + 1..n {
                let num = pivot.clone() * &a[(i, j)] - lead.clone() * &a[(k, j)];
                a[(i, j)] = num.checked_div(&prev)?;
            }
            a[(i, k)] = S::zero();
        }
        prev = pivot;
    }
    let det = a[(n - 1, n - 1)].clone();
    Ok(if negate { -det } else { det })
}
