use super::{Algebra, AxialError, AxisDecomposition, BilinearForm};
use crate::linalg::{self, Matrix};
use crate::scalar::Field;

/// Linear map on the algebra; column `j` of the matrix is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOperator<S> {
    matrix: Matrix<S>,
}

impl<S: Field> LinearOperator<S> {
    pub fn new(matrix: Matrix<S>) -> Result<Self, AxialError> {
        if !matrix.is_square() {
            return Err(AxialError::DimensionMismatch { expected: matrix.rows(), found: matrix.cols() });
        }
        Ok(LinearOperator { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        LinearOperator { matrix: Matrix::identity(dim) }
    }

    /// Operator with the given basis images.
    pub fn from_images(images: &[Vec<S>]) -> Result<Self, AxialError> {
        LinearOperator::new(Matrix::from_columns(images.len(), images)?)
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        self.matrix.mul_vec(v).expect("operator and vector dimensions agree")
    }

    pub fn image(&self, j: usize) -> Vec<S> {
        self.matrix.column(j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        LinearOperator { matrix: self.matrix.mul(&other.matrix).expect("same dimension") }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.dim())
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    /// `T(e_i · e_j) = T(e_i) · T(e_j)` on all basis pairs.
    pub fn is_automorphism(&self, alg: &Algebra<S>) -> bool {
        let images: Vec<Vec<S>> = (0..alg.dim()).map(|j| self.image(j)).collect();
        (0..alg.dim()).all(|i| {
            (i..alg.dim()).all(|j| self.apply(alg.product(i, j)) == alg.mul_unchecked(&images[i], &images[j]))
        })
    }

    /// `Tᵀ G T = G`.
    pub fn is_isometry(&self, form: &BilinearForm<S>) -> bool {
        let g = form.gram();
        self.matrix
            .transpose()
            .mul(g)
            .and_then(|x| x.mul(&self.matrix))
            .is_ok_and(|x| &x == g)
    }

    pub fn try_map<T: Field, E>(&self, f: impl Fn(&S) -> Result<T, E>) -> Result<LinearOperator<T>, E> {
        Ok(LinearOperator { matrix: self.matrix.try_map(f)? })
    }
}

/// The operator that negates the listed eigenspaces and fixes the rest.
pub fn miyamoto<S: Field>(dec: &AxisDecomposition<S>, negative: &[S]) -> Result<LinearOperator<S>, AxialError> {
    if let Some(bad) = negative.iter().find(|x| !dec.eigenvalues.contains(x)) {
        return Err(AxialError::EigenvalueNotInRule(bad.to_string()));
    }
    let n = dec.axis.len();
    let basis = dec.eigenbasis();
    let coords = dec.coordinate_map()?;
    let signed: Vec<Vec<S>> = basis
        .iter()
        .zip(dec.eigenbasis_labels())
        .map(|(b, k)| match negative.contains(&dec.eigenvalues[k]) {
            true => linalg::scale(&-S::one(), b),
            false => b.clone(),
        })
        .collect();
    let p_signed = Matrix::from_columns(n, &signed)?;
    LinearOperator::new(p_signed.mul(&coords)?)
}
