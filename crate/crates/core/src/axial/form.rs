use std::collections::VecDeque;

use serde::Serialize;

use super::{Algebra, AxialError};
use crate::linalg::{self, kernel_basis, Matrix, RowSpace};
use crate::scalar::Field;

/// Symmetric bilinear form given by its Gram matrix on the algebra basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm<S> {
    gram: Matrix<S>,
}

impl<S: Field> BilinearForm<S> {
    pub fn new(gram: Matrix<S>) -> Result<Self, AxialError> {
        if !gram.is_symmetric() {
            return Err(AxialError::NotSymmetric);
        }
        Ok(BilinearForm { gram })
    }

    pub fn gram(&self) -> &Matrix<S> {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, u: &[S], v: &[S]) -> Result<S, AxialError> {
        Ok(self.gram.bilinear(u, v)?)
    }

    pub fn try_map<T: Field, E>(&self, f: impl Fn(&S) -> Result<T, E>) -> Result<BilinearForm<T>, E> {
        Ok(BilinearForm { gram: self.gram.try_map(f)? })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusViolation {
    pub triple: [String; 3],
    /// `⟨e_i, e_j · e_k⟩`
    pub left: String,
    /// `⟨e_i · e_j, e_k⟩`
    pub right: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FrobeniusReport {
    pub violations: Vec<FrobeniusViolation>,
    pub triples_checked: usize,
}

impl FrobeniusReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `⟨e_i, e_j · e_k⟩ = ⟨e_i · e_j, e_k⟩` on all basis triples with `i <= k`.
pub fn verify_frobenius<S: Field>(alg: &Algebra<S>, form: &BilinearForm<S>) -> Result<FrobeniusReport, AxialError> {
    let n = alg.dim();
    if form.dim() != n {
        return Err(AxialError::DimensionMismatch { expected: n, found: form.dim() });
    }
    // g[j][k] = G (e_j · e_k), so ⟨e_i, e_j·e_k⟩ = g[j][k][i]
    let g: Vec<Vec<Vec<S>>> = (0..n)
        .map(|j| (0..n).map(|k| form.gram().mul_vec(alg.product(j, k))).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let mut report = FrobeniusReport::default();
    for i in 0..n {
        for j in 0..n {
            for k in i..n {
                report.triples_checked += 1;
                let left = &g[j][k][i];
                let right = &g[i][j][k];
                if left != right {
                    let l = alg.labels();
                    report.violations.push(FrobeniusViolation {
                        triple: [l[i].clone(), l[j].clone(), l[k].clone()],
                        left: left.to_string(),
                        right: right.to_string(),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Kernel of the Gram matrix.
pub fn radical<S: Field>(form: &BilinearForm<S>) -> Vec<Vec<S>> {
    kernel_basis(form.gram())
}

/// Whether `alg · span(ideal) ⊆ span(ideal)`.
pub fn is_ideal<S: Field>(alg: &Algebra<S>, ideal: &[Vec<S>]) -> bool {
    let mut space = RowSpace::new(alg.dim());
    for v in ideal {
        space.insert(v);
    }
    (0..alg.dim()).all(|i| space.basis().iter().all(|v| space.contains(&alg.mul_unchecked(&alg.basis_vector(i), v))))
}

/// Quotient of an algebra and form by an ideal inside the radical.
#[derive(Clone, Debug)]
pub struct Quotient<S> {
    pub algebra: Algebra<S>,
    pub form: BilinearForm<S>,
    /// Original basis indices kept as the complement basis.
    pub kept: Vec<usize>,
    ideal: RowSpace<S>,
}

impl<S: Field> Quotient<S> {
    /// Image of an ambient vector in quotient coordinates.
    pub fn project(&self, v: &[S]) -> Vec<S> {
        let w = self.ideal.reduce(v);
        self.kept.iter().map(|&i| w[i].clone()).collect()
    }
}

/// Quotient by `ideal`, which must absorb products and lie in the form's radical.
///
/// The complement basis is the set of original basis vectors outside the ideal's
/// pivot columns, so quotient labels are original labels.
pub fn quotient<S: Field>(alg: &Algebra<S>, form: &BilinearForm<S>, ideal: &[Vec<S>]) -> Result<Quotient<S>, AxialError> {
    let n = alg.dim();
    let mut space = RowSpace::new(n);
    for v in ideal {
        if v.len() != n {
            return Err(AxialError::DimensionMismatch { expected: n, found: v.len() });
        }
        space.insert(v);
    }
    if !is_ideal(alg, space.basis()) {
        return Err(AxialError::NotAnIdeal);
    }
    for v in space.basis() {
        if !linalg::is_zero_vector(&form.gram().mul_vec(v)?) {
            return Err(AxialError::FormNotInduced);
        }
    }
    let kept: Vec<usize> = (0..n).filter(|i| !space.pivots().contains(i)).collect();
    let labels = kept.iter().map(|&i| alg.labels()[i].clone()).collect();
    let project = |v: &[S]| -> Vec<S> {
        let w = space.reduce(v);
        kept.iter().map(|&i| w[i].clone()).collect()
    };
    let algebra = Algebra::from_fn(labels, |a, b| project(alg.product(kept[a], kept[b])))?;
    let gram = Matrix::from_fn(kept.len(), kept.len(), |a, b| form.gram()[(kept[a], kept[b])].clone());
    Ok(Quotient { algebra, form: BilinearForm::new(gram)?, kept, ideal: space })
}

/// Axes joined when their form value is nonzero.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectionGraph {
    pub adjacency: Vec<Vec<usize>>,
}

impl ProjectionGraph {
    pub fn is_connected(&self) -> bool {
        let n = self.adjacency.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn projection_graph<S: Field>(form: &BilinearForm<S>, axes: &[Vec<S>]) -> Result<ProjectionGraph, AxialError> {
    let mut adjacency = vec![Vec::new(); axes.len()];
    for i in 0..axes.len() {
        for j in i + 1..axes.len() {
            if !form.eval(&axes[i], &axes[j])?.is_zero() {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    Ok(ProjectionGraph { adjacency })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};

    #[test]
    fn graph_connectivity() {
        let id = BilinearForm::new(Matrix::<Rational>::identity(4)).unwrap();
        let axes: Vec<Vec<Rational>> = (0..4).map(|i| linalg::unit(4, i)).collect();
        assert!(!projection_graph(&id, &axes).unwrap().is_connected());
        assert!(projection_graph(&id, &axes[..1]).unwrap().is_connected());
        let mut g = Matrix::<Rational>::identity(4);
        for (i, j) in [(0, 1), (1, 2), (2, 3)] {
            g[(i, j)] = q(1, 8);
            g[(j, i)] = q(1, 8);
        }
        assert!(projection_graph(&BilinearForm::new(g).unwrap(), &axes).unwrap().is_connected());
    }

    #[test]
    fn asymmetric_gram_rejected() {
        let mut g = Matrix::<Rational>::identity(2);
        g[(0, 1)] = q(1, 1);
        assert!(matches!(BilinearForm::new(g), Err(AxialError::NotSymmetric)));
    }
}
