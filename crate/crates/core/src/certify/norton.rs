use rayon::prelude::*;
use serde::Serialize;

use super::CertifyError;
use crate::axial::{Algebra, BilinearForm};
use crate::linalg::{ldlt, ldlt_with, rational_sign, LdltOptions, LdltStatus, LinalgError, Matrix};
use crate::scalar::{q, Field, Rational, RationalFunction};

/// Degree cap for the symbolic Norton elimination when none is configured.
pub const DEFAULT_DEGREE_CAP: usize = 40;

/// Constants expected among the symbolic Norton pivots.
pub fn norton_published_constants() -> [Rational; 5] {
    [q(0, 1), q(15, 632), q(107, 4096), q(395, 15872), q(1395, 54784)]
}

/// `H[{i,k},{j,l}] = ⟨e_i·e_k, e_j·e_l⟩`, indexed by unordered pairs; only
/// `n(n+1)/2` products and the same number squared of form values are needed.
fn product_inner_products<S: Field>(alg: &Algebra<S>, form: &BilinearForm<S>) -> (Vec<Vec<usize>>, Vec<Vec<S>>) {
    let n = alg.dim();
    let mut pair_index = vec![vec![0; n]; n];
    let mut products = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for k in i..n {
            pair_index[i][k] = products.len();
            pair_index[k][i] = products.len();
            products.push(alg.product(i, k).to_vec());
        }
    }
    let images: Vec<Vec<S>> = products.iter().map(|p| form.gram().mul_vec(p).expect("square Gram matrix")).collect();
    let inner = (0..products.len())
        .into_par_iter()
        .map(|a| (0..products.len()).map(|b| crate::linalg::dot(&products[a], &images[b])).collect())
        .collect();
    (pair_index, inner)
}

/// `b_{ij,kl} = ⟨e_i·e_k, e_j·e_l⟩ - ⟨e_j·e_k, e_i·e_l⟩` on ordered pairs in
/// lexicographic order. Norton's inequality for the form is exactly positive
/// semidefiniteness of this matrix.
pub fn norton_matrix<S: Field>(alg: &Algebra<S>, form: &BilinearForm<S>) -> Matrix<S> {
    let n = alg.dim();
    let (pair, h) = product_inner_products(alg, form);
    Matrix::from_fn(n * n, n * n, |row, col| {
        let (i, j, k, l) = (row / n, row % n, col / n, col % n);
        h[pair[i][k]][pair[j][l]].clone() - &h[pair[j][k]][pair[i][l]]
    })
}

/// Restriction to pairs `i < j`. Row `(j, i)` is minus row `(i, j)` and rows
/// `(i, i)` vanish, so this matrix has the same nonzero LDLT pivots as the full one.
fn antisymmetric_part<S: Field>(alg: &Algebra<S>, form: &BilinearForm<S>) -> Matrix<S> {
    let n = alg.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let (pair, h) = product_inner_products(alg, form);
    Matrix::from_fn(pairs.len(), pairs.len(), |r, c| {
        let ((i, j), (k, l)) = (pairs[r], pairs[c]);
        h[pair[i][k]][pair[j][l]].clone() - &h[pair[j][k]][pair[i][l]]
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NortonVerdict {
    pub psd: bool,
    pub status: LdltStatus,
    pub zero_pivots: usize,
    /// Pair indices `(i, j)` of the first failing column, if any.
    pub failing_pair: Option<(String, String)>,
}

/// Exact PSD test of the full Norton matrix over `Q`.
pub fn norton_check(alg: &Algebra<Rational>, form: &BilinearForm<Rational>) -> Result<NortonVerdict, CertifyError> {
    let b = norton_matrix(alg, form);
    let r = ldlt(&b, Some(&rational_sign))?;
    let n = alg.dim();
    let labels = alg.labels();
    let failing_pair = match &r.status {
        LdltStatus::FailedIndefinite { column, .. } => Some((labels[column / n].clone(), labels[column % n].clone())),
        _ => None,
    };
    Ok(NortonVerdict {
        psd: r.is_psd(),
        zero_pivots: r.d.iter().filter(|x| x.is_zero()).count(),
        status: r.status,
        failing_pair,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NortonSymbolicReport {
    pub degree_cap: usize,
    /// `Complete`, `DegreeCapExceeded`, or a zero pivot that could not be skipped.
    pub outcome: String,
    pub completed: bool,
    pub pivots_computed: usize,
    pub max_degree: usize,
    /// Pivots that are constants, in elimination order.
    pub constant_pivots: Vec<Rational>,
    pub nonconstant_pivots: Vec<RationalFunction>,
    /// Each published constant and whether it occurs among the constant pivots.
    pub published_found: Vec<(Rational, bool)>,
}

impl NortonSymbolicReport {
    pub fn all_published_found(&self) -> bool {
        self.published_found.iter().all(|(_, found)| *found)
    }
}

/// Symbolic LDLT of the Norton matrix over `Q(t)`, aborted once a pivot's
/// degree exceeds `degree_cap`.
pub fn norton_symbolic(
    alg: &Algebra<RationalFunction>,
    form: &BilinearForm<RationalFunction>,
    degree_cap: usize,
) -> Result<NortonSymbolicReport, CertifyError> {
    let b = antisymmetric_part(alg, form);
    let opts = LdltOptions { positivity: None, degree_cap: Some(degree_cap) };
    let (d, outcome, completed) = match ldlt_with(&b, &opts) {
        Ok(r) => {
            let outcome = match &r.status {
                LdltStatus::Complete => "complete".to_string(),
                LdltStatus::DegreeCapExceeded { column, degree } => {
                    format!("degree cap exceeded at column {column} (degree {degree})")
                }
                LdltStatus::FailedIndefinite { column, .. } => format!("indefinite at column {column}"),
            };
            (r.d.clone(), outcome, r.is_complete())
        }
        Err(LinalgError::ZeroPivotSymbolic { column }) => (Vec::new(), format!("unskippable zero pivot at column {column}"), false),
        Err(e) => return Err(e.into()),
    };
    let constant_pivots: Vec<Rational> = d.iter().filter_map(RationalFunction::as_constant).collect();
    let published_found =
        norton_published_constants().into_iter().map(|c| (c.clone(), constant_pivots.contains(&c))).collect();
    Ok(NortonSymbolicReport {
        degree_cap,
        outcome,
        completed,
        pivots_computed: d.len(),
        max_degree: d.iter().map(RationalFunction::degree).max().unwrap_or(0),
        constant_pivots,
        nonconstant_pivots: d.iter().filter(|x| x.as_constant().is_none()).cloned().collect(),
        published_found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{dihedral, DihedralType};

    #[test]
    fn diagonal_pair_rows_vanish_and_matrix_is_symmetric() {
        let d = dihedral(DihedralType::ThreeA).unwrap();
        let b = norton_matrix(&d.algebra, &d.form);
        let n = d.algebra.dim();
        assert!(b.is_symmetric());
        for i in 0..n {
            assert!(b.row(i * n + i).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn associative_2b_is_psd() {
        let d = dihedral(DihedralType::TwoB).unwrap();
        let v = norton_check(&d.algebra, &d.form).unwrap();
        assert!(v.psd);
    }

    #[test]
    fn dihedral_catalog_obeys_norton() {
        for kind in DihedralType::ALL {
            let d = dihedral(kind).unwrap();
            assert!(norton_check(&d.algebra, &d.form).unwrap().psd, "{kind}");
        }
    }

    #[test]
    fn indefinite_form_fails() {
        let alg = Algebra::from_fn(vec!["x".into(), "y".into()], |i, j| match (i, j) {
            (0, 0) => vec![q(1, 1), q(0, 1)],
            (1, 1) => vec![q(1, 1), q(0, 1)],
            _ => vec![q(0, 1), q(0, 1)],
        })
        .unwrap();
        // ⟨x·y, x·y⟩ = 0 while ⟨x·x, y·y⟩ = ⟨x, x⟩ = -1
        let form = BilinearForm::new(Matrix::from_rows(vec![vec![q(-1, 1), q(0, 1)], vec![q(0, 1), q(1, 1)]]).unwrap())
            .unwrap();
        assert!(!norton_check(&alg, &form).unwrap().psd);
    }
}
