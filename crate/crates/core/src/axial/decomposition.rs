use serde::Serialize;

use super::{Algebra, AxialError, FusionRule};
use crate::linalg::{self, kernel_basis, Matrix};
use crate::scalar::Field;

/// Eigenspace bases of the adjoint action of one idempotent.
#[derive(Clone, Debug)]
pub struct AxisDecomposition<S> {
    pub axis: Vec<S>,
    pub eigenvalues: Vec<S>,
    /// `spaces[k]` is a basis of the `eigenvalues[k]`-eigenspace.
    pub spaces: Vec<Vec<Vec<S>>>,
}

impl<S: Field> AxisDecomposition<S> {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Vec::len).collect()
    }

    pub fn space(&self, lambda: &S) -> Option<&[Vec<S>]> {
        let k = self.eigenvalues.iter().position(|x| x == lambda)?;
        Some(&self.spaces[k])
    }

    /// The 1-eigenspace is one-dimensional.
    pub fn is_primitive(&self) -> bool {
        self.space(&S::one()).is_some_and(|s| s.len() == 1)
    }

    /// All eigenvectors side by side, in eigenvalue order.
    pub fn eigenbasis(&self) -> Vec<Vec<S>> {
        self.spaces.iter().flatten().cloned().collect()
    }

    /// Eigenvalue index of each column of `eigenbasis()`.
    pub fn eigenbasis_labels(&self) -> Vec<usize> {
        self.spaces.iter().enumerate().flat_map(|(k, s)| std::iter::repeat_n(k, s.len())).collect()
    }

    /// Inverse of the eigenbasis matrix: maps a vector to eigen-coordinates.
    pub fn coordinate_map(&self) -> Result<Matrix<S>, AxialError> {
        let n = self.axis.len();
        let p = Matrix::from_columns(n, &self.eigenbasis())?;
        linalg::inverse(&p).map_err(|_| AxialError::IncompleteDecomposition)
    }
}

/// Eigenspaces of `ad_a` for the listed eigenvalues.
///
/// Fails unless `a` is idempotent and the eigenspaces span the whole algebra.
pub fn axis_decomposition<S: Field>(
    alg: &Algebra<S>,
    a: &[S],
    eigenvalues: &[S],
) -> Result<AxisDecomposition<S>, AxialError> {
    if !alg.is_idempotent(a) {
        return Err(AxialError::NotIdempotent(alg.describe(a)));
    }
    let ad = alg.adjoint(a)?;
    let n = alg.dim();
    let spaces: Vec<Vec<Vec<S>>> = eigenvalues
        .iter()
        .map(|lambda| {
            let shifted = Matrix::from_fn(n, n, |i, j| match i == j {
                true => ad[(i, j)].clone() - lambda,
                false => ad[(i, j)].clone(),
            });
            kernel_basis(&shifted)
        })
        .collect();
    let total: usize = spaces.iter().map(Vec::len).sum();
    if total != n {
        return Err(AxialError::NotSemisimple { dims: spaces.iter().map(Vec::len).collect(), dim: n });
    }
    Ok(AxisDecomposition { axis: a.to_vec(), eigenvalues: eigenvalues.to_vec(), spaces })
}

/// An eigenvector product that leaves the span allowed by the fusion rule.
#[derive(Clone, Debug, Serialize)]
pub struct FusionViolation {
    pub left_eigenvalue: String,
    pub right_eigenvalue: String,
    pub left_vector: usize,
    pub right_vector: usize,
    /// The product, rendered in basis-label coordinates.
    pub product: String,
    /// Eigenvalues with a nonzero component that the rule forbids.
    pub stray_eigenvalues: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FusionReport {
    pub violations: Vec<FusionViolation>,
    pub products_checked: usize,
}

impl FusionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `V_λ · V_μ ⊆ ⊕_{ν ∈ λ*μ} V_ν` on all pairs of eigenbasis vectors.
///
/// Membership is decided exactly by expressing each product in eigen-coordinates.
pub fn verify_fusion<S: Field>(
    alg: &Algebra<S>,
    dec: &AxisDecomposition<S>,
    rule: &FusionRule<S>,
) -> Result<FusionReport, AxialError> {
    let rule_index: Vec<usize> = dec
        .eigenvalues
        .iter()
        .map(|x| rule.index_of(x).ok_or_else(|| AxialError::EigenvalueNotInRule(x.to_string())))
        .collect::<Result<_, _>>()?;
    let coords = dec.coordinate_map()?;
    let owner = dec.eigenbasis_labels();
    let mut report = FusionReport::default();
    let k = dec.spaces.len();
    for li in 0..k {
        for mi in li..k {
            let allowed = rule.product_indices(rule_index[li], rule_index[mi]);
            for (xi, x) in dec.spaces[li].iter().enumerate() {
                let start = if li == mi { xi } else { 0 };
                for (yi, y) in dec.spaces[mi].iter().enumerate().skip(start) {
                    report.products_checked += 1;
                    let p = alg.mul_unchecked(x, y);
                    let c = coords.mul_vec(&p)?;
                    let mut stray: Vec<usize> = c
                        .iter()
                        .zip(&owner)
                        .filter(|(ci, &o)| !ci.is_zero() && !allowed.contains(&rule_index[o]))
                        .map(|(_, &o)| o)
                        .collect();
                    stray.dedup();
                    if !stray.is_empty() {
                        report.violations.push(FusionViolation {
                            left_eigenvalue: dec.eigenvalues[li].to_string(),
                            right_eigenvalue: dec.eigenvalues[mi].to_string(),
                            left_vector: xi,
                            right_vector: yi,
                            product: alg.describe(&p),
                            stray_eigenvalues: stray.iter().map(|&o| dec.eigenvalues[o].to_string()).collect(),
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Component of `v` in the `lambda`-eigenspace.
pub fn project_onto<S: Field>(dec: &AxisDecomposition<S>, lambda: &S, v: &[S]) -> Result<Vec<S>, AxialError> {
    let k = dec
        .eigenvalues
        .iter()
        .position(|x| x == lambda)
        .ok_or_else(|| AxialError::EigenvalueNotInRule(lambda.to_string()))?;
    let c = dec.coordinate_map()?.mul_vec(v)?;
    let mut out = vec![S::zero(); v.len()];
    for ((ci, &o), b) in c.iter().zip(&dec.eigenbasis_labels()).zip(dec.eigenbasis()) {
        if o == k {
            linalg::add_scaled(&mut out, ci, &b);
        }
    }
    Ok(out)
}
