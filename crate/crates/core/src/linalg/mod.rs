//! Dense exact linear algebra over any [`Field`].

mod det;
mod echelon;
mod ldlt;
mod matrix;

use thiserror::Error;

pub use det::determinant;
pub use echelon::{inverse, kernel_basis, rank, rref, solve, Echelon, RowSpace};
pub use ldlt::{ldlt, ldlt_with, rational_sign, IndefiniteCause, LdltOptions, LdltResult, LdltStatus};
pub use matrix::Matrix;

use crate::scalar::{Field, ScalarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("symbolic zero pivot at column {column} with a nonzero entry below it")]
    ZeroPivotSymbolic { column: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub fn dot<S: Field>(u: &[S], v: &[S]) -> S {
    u.iter()
        .zip(v)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b)
}

pub fn is_zero_vector<S: Field>(v: &[S]) -> bool {
    v.iter().all(S::is_zero)
}

pub fn add_scaled<S: Field>(acc: &mut [S], c: &S, v: &[S]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = a.clone() + c.clone() * x;
        }
    }
}

pub fn scale<S: Field>(c: &S, v: &[S]) -> Vec<S> {
    v.iter().map(|x| c.clone() * x).collect()
}

pub fn sub<S: Field>(u: &[S], v: &[S]) -> Vec<S> {
    u.iter().zip(v).map(|(a, b)| a.clone() - b).collect()
}

pub fn add<S: Field>(u: &[S], v: &[S]) -> Vec<S> {
    u.iter().zip(v).map(|(a, b)| a.clone() + b).collect()
}

pub fn unit<S: Field>(dim: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); dim];
    v[i] = S::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};
    use proptest::prelude::*;

    fn symmetric(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
        prop::collection::vec((-4i64..5, 1i64..4), n * n).prop_map(move |v| {
            let mut m = Matrix::from_fn(n, n, |i, j| q(v[i * n + j].0, v[i * n + j].1));
            for i in 0..n {
                for j in 0..i {
                    m[(i, j)] = m[(j, i)].clone();
                }
            }
            m
        })
    }

    /// Gram matrix `Bᵀ B` of a random low-rank `B`: always PSD, often singular.
    fn gram(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
        (1usize..=n, prop::collection::vec(-3i64..4, n * n)).prop_map(move |(r, v)| {
            let b = Matrix::from_fn(r, n, |i, j| q(v[i * n + j], 1));
            b.transpose().mul(&b).unwrap()
        })
    }

    fn leading_minors_positive(m: &Matrix<Rational>) -> bool {
        (1..=m.rows()).all(|k| {
            let sub = Matrix::from_fn(k, k, |i, j| m[(i, j)].clone());
            determinant(&sub).unwrap().is_positive()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn ldlt_verdict_matches_oracles(a in symmetric(6)) {
            let r = ldlt(&a, None).unwrap();
            match r.status {
                LdltStatus::Complete => {
                    prop_assert_eq!(r.reconstruct(), a.clone());
                    let pd = r.d.iter().all(Rational::is_positive);
                    prop_assert_eq!(pd, leading_minors_positive(&a));
                    if r.skipped_columns() == 0 {
                        let prod: Rational = r.d.iter().cloned().product();
                        prop_assert_eq!(prod, determinant(&a).unwrap());
                    }
                    if !r.is_psd() {
                        let k = r.d.iter().position(Rational::is_negative).unwrap();
                        let signed = ldlt(&a, Some(&rational_sign)).unwrap();
                        let failed_at_k = matches!(signed.status, LdltStatus::FailedIndefinite { column, .. } if column == k);
                        prop_assert!(failed_at_k);
                    }
                }
                LdltStatus::FailedIndefinite { .. } => {
                    let x = r.witness.clone().unwrap();
                    prop_assert!(a.bilinear(&x, &x).unwrap().is_negative());
                }
                LdltStatus::DegreeCapExceeded { .. } => prop_assert!(false),
            }
            if let Some(x) = ldlt(&a, Some(&rational_sign)).unwrap().witness {
                prop_assert!(a.bilinear(&x, &x).unwrap().is_negative());
            }
        }

        #[test]
        fn psd_gram_matrices_are_certified(a in gram(6)) {
            let r = ldlt(&a, Some(&rational_sign)).unwrap();
            prop_assert!(r.is_psd());
            prop_assert_eq!(r.reconstruct(), a.clone());
            prop_assert_eq!(r.d.iter().filter(|x| !x.is_zero()).count(), rank(&a));
        }

        #[test]
        fn rank_nullity(a in symmetric(5)) {
            prop_assert_eq!(rank(&a) + kernel_basis(&a).len(), 5);
            for v in kernel_basis(&a) {
                prop_assert!(is_zero_vector(&a.mul_vec(&v).unwrap()));
            }
        }
    }
}
