//! Structure-constant algebras and the axial machinery on top of them: eigenspace
//! decompositions, fusion and Frobenius verification, Miyamoto involutions,
//! subalgebra closure, radicals and quotients.

mod algebra;
mod closure;
mod decomposition;
mod form;
mod fusion;
mod json;
mod operator;

use thiserror::Error;

pub use algebra::Algebra;
pub use closure::{restrict, subalgebra_closure, to_subspace};
pub use decomposition::{axis_decomposition, project_onto, verify_fusion, AxisDecomposition, FusionReport, FusionViolation};
pub use form::{
    is_ideal, projection_graph, quotient, radical, verify_frobenius, BilinearForm, FrobeniusReport, FrobeniusViolation,
    ProjectionGraph, Quotient,
};
pub use fusion::{index_set, verify_grading, FusionRule, GradingAssignment};
pub use json::{document_field, from_json, to_json, AlgebraDocument, LoadedAlgebra};
pub use operator::{miyamoto, LinearOperator};

use crate::linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AxialError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("product table is not commutative at ({left}, {right})")]
    NotCommutative { left: String, right: String },
    #[error("eigenvalue {0} listed twice")]
    DuplicateEigenvalue(String),
    #[error("{0} is not idempotent")]
    NotIdempotent(String),
    #[error("eigenspace dimensions {dims:?} do not sum to {dim}")]
    NotSemisimple { dims: Vec<usize>, dim: usize },
    #[error("eigenspaces do not form a basis")]
    IncompleteDecomposition,
    #[error("eigenvalue {0} is not in the fusion rule")]
    EigenvalueNotInRule(String),
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("subspace does not absorb products")]
    NotAnIdeal,
    #[error("ideal is not contained in the radical of the form")]
    FormNotInduced,
    #[error("subspace is not closed under the product")]
    NotClosed,
    #[error("malformed algebra document: {0}")]
    Malformed(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg;
    use crate::scalar::{q, Rational};
    use proptest::prelude::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    /// `e0` is an idempotent with `ad` eigenvalues 1, 0, 1/2, 1/2, 0 on the basis,
    /// while the remaining products are arbitrary.
    fn algebra_with_idempotent(tail: &[i64]) -> Algebra<Rational> {
        let ad = [q(1, 1), q(0, 1), q(1, 2), q(1, 2), q(0, 1)];
        let mut k = 0;
        Algebra::from_fn(labels(5), |i, j| {
            if i == 0 {
                let mut v = vec![Rational::zero(); 5];
                v[j] = ad[j].clone();
                return v;
            }
            (0..5)
                .map(|_| {
                    k += 1;
                    q(tail[k % tail.len()], 1)
                })
                .collect()
        })
        .unwrap()
    }

    fn jordan() -> FusionRule<Rational> {
        let e = [q(1, 1), q(0, 1), q(1, 2)];
        FusionRule::new(e.to_vec(), |i, j| match (i, j) {
            (0, 0) => index_set(&[0]),
            (0, 1) => index_set(&[]),
            (1, 1) => index_set(&[1]),
            (2, 2) => index_set(&[0, 1]),
            _ => index_set(&[2]),
        })
        .unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn non_axial_idempotent_violates_fusion(tail in prop::collection::vec(1i64..5, 7)) {
            let alg = algebra_with_idempotent(&tail);
            let dec = axis_decomposition(&alg, &alg.e("e0"), jordan().eigenvalues()).unwrap();
            prop_assert_eq!(dec.dims(), vec![1, 2, 2]);
            let report = verify_fusion(&alg, &dec, &jordan()).unwrap();
            prop_assert!(!report.passed());
        }

        #[test]
        fn product_is_commutative_and_bilinear(tail in prop::collection::vec(-3i64..4, 7), c in -5i64..6) {
            let alg = algebra_with_idempotent(&tail);
            let u: Vec<Rational> = (0..5).map(|i| q(tail[i] + 1, 2)).collect();
            let v: Vec<Rational> = (0..5).map(|i| q(tail[i + 2] - 1, 3)).collect();
            prop_assert_eq!(alg.mul(&u, &v).unwrap(), alg.mul(&v, &u).unwrap());
            let cu = linalg::scale(&q(c, 1), &u);
            prop_assert_eq!(alg.mul(&cu, &v).unwrap(), linalg::scale(&q(c, 1), &alg.mul(&u, &v).unwrap()));
            prop_assert!(linalg::is_zero_vector(&alg.mul(&u, &[Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()]).unwrap()));
        }
    }

    #[test]
    fn non_idempotent_rejected() {
        let alg = algebra_with_idempotent(&[1, 2, 3]);
        let two = linalg::scale(&q(2, 1), &alg.e("e0"));
        assert!(matches!(axis_decomposition(&alg, &two, jordan().eigenvalues()), Err(AxialError::NotIdempotent(_))));
    }

    #[test]
    fn missing_eigenvalue_is_not_semisimple() {
        let alg = algebra_with_idempotent(&[1, 2, 3]);
        let r = axis_decomposition(&alg, &alg.e("e0"), &[q(1, 1), q(0, 1)]);
        assert!(matches!(r, Err(AxialError::NotSemisimple { .. })));
    }

    #[test]
    fn empty_negative_set_gives_identity() {
        let alg = algebra_with_idempotent(&[1, 2, 3]);
        let dec = axis_decomposition(&alg, &alg.e("e0"), jordan().eigenvalues()).unwrap();
        assert!(miyamoto(&dec, &[]).unwrap().is_identity());
        let t = miyamoto(&dec, &[q(1, 2)]).unwrap();
        assert!(t.is_involution());
    }

    #[test]
    fn closure_of_idempotent_is_one_dimensional() {
        let alg = algebra_with_idempotent(&[1, 2, 3]);
        assert_eq!(subalgebra_closure(&alg, &[alg.e("e0")]).rank(), 1);
    }
}
