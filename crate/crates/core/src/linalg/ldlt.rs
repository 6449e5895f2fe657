use std::cmp::Ordering;

use serde::Serialize;

use super::{LinalgError, Matrix};
use crate::scalar::{Field, FieldKind, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndefiniteCause {
    /// The positivity oracle reported a negative pivot.
    NegativePivot,
    /// The pivot was exactly zero while the entry in `row` below it was not.
    ZeroPivotNonzeroColumn { row: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LdltStatus {
    Complete,
    FailedIndefinite { column: usize, cause: IndefiniteCause },
    /// A pivot exceeded the degree cap; `d` holds the pivots computed so far.
    DegreeCapExceeded { column: usize, degree: usize },
}

/// `m = L · diag(d) · Lᵀ` in natural order without pivoting.
#[derive(Clone, Debug)]
pub struct LdltResult<S> {
    pub l: Matrix<S>,
    pub d: Vec<S>,
    pub status: LdltStatus,
    /// On failure, a vector `x` with `xᵀ m x < 0`.
    pub witness: Option<Vec<S>>,
}

impl<S: Field> LdltResult<S> {
    pub fn is_complete(&self) -> bool {
        self.status == LdltStatus::Complete
    }

    /// Columns skipped because their pivot and sub-column were both zero.
    pub fn skipped_columns(&self) -> usize {
        match self.is_complete() {
            true => self.d.iter().filter(|x| x.is_zero()).count(),
            false => 0,
        }
    }

    pub fn reconstruct(&self) -> Matrix<S> {
        let n = self.l.rows();
        Matrix::from_fn(n, n, |i, j| {
            (0..=i.min(j))
                .filter(|&k| !self.d[k].is_zero())
                .fold(S::zero(), |acc, k| acc + self.l[(i, k)].clone() * &self.d[k] * &self.l[(j, k)])
        })
    }
}

impl LdltResult<Rational> {
    pub fn is_psd(&self) -> bool {
        self.is_complete() && self.d.iter().all(|x| !x.is_negative())
    }

    pub fn is_pd(&self) -> bool {
        self.is_complete() && self.d.iter().all(Rational::is_positive)
    }
}

pub fn rational_sign(x: &Rational) -> Ordering {
    x.signum()
}

#[derive(Default)]
pub struct LdltOptions<'a, S> {
    /// Sign of a pivot; a negative answer stops the decomposition early.
    pub positivity: Option<&'a dyn Fn(&S) -> Ordering>,
    pub degree_cap: Option<usize>,
}

pub fn ldlt<S: Field>(
    m: &Matrix<S>,
    positivity: Option<&dyn Fn(&S) -> Ordering>,
) -> Result<LdltResult<S>, LinalgError> {
    ldlt_with(m, &LdltOptions { positivity, degree_cap: None })
}

/// Semidefinite-aware LDLT.
///
/// A zero pivot is skipped when its sub-column is zero; otherwise the matrix is
/// certified indefinite (rational case) or an error is raised (symbolic case,
/// where no sign information is available).
pub fn ldlt_with<S: Field>(m: &Matrix<S>, opts: &LdltOptions<'_, S>) -> Result<LdltResult<S>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut l = Matrix::<S>::identity(n);
    let mut d: Vec<S> = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = a[(k, k)].clone();
        if let Some(cap) = opts.degree_cap {
            let degree = pivot.degree();
            if degree > cap {
                return Ok(LdltResult { l, d, status: LdltStatus::DegreeCapExceeded { column: k, degree }, witness: None });
            }
        }
        if pivot.is_zero() {
            if let Some(row) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                if S::KIND == FieldKind::RationalFunctions {
                    return Err(LinalgError::ZeroPivotSymbolic { column: k });
                }
                // y = alpha e_k + e_row gives yᵀ S y = 2 alpha c + s_rr = -1 on the Schur complement
                let two_c = a[(row, k)].clone() * &S::from_int(2);
                let alpha = -(a[(row, row)].clone() + S::one()).checked_div(&two_c)?;
                let mut y = vec![S::zero(); n];
                y[k] = alpha;
                y[row] = S::one();
                let witness = back_substitute(&l, y);
                let status = LdltStatus::FailedIndefinite { column: k, cause: IndefiniteCause::ZeroPivotNonzeroColumn { row } };
                return Ok(LdltResult { l, d, status, witness: Some(witness) });
            }
            d.push(S::zero());
            continue;
        }
        if let Some(sign) = opts.positivity {
            if sign(&pivot) == Ordering::Less {
                let mut y = vec![S::zero(); n];
                y[k] = S::one();
                let witness = back_substitute(&l, y);
                d.push(pivot);
                let status = LdltStatus::FailedIndefinite { column: k, cause: IndefiniteCause::NegativePivot };
                return Ok(LdltResult { l, d, status, witness: Some(witness) });
            }
        }
        let inv = pivot.inv()?;
        let below: Vec<usize> = (k + 1..n).filter(|&i| !a[(i, k)].is_zero()).collect();
        for &i in &below {
            l[(i, k)] = a[(i, k)].clone() * &inv;
        }
        for &i in &below {
            let lik = l[(i, k)].clone();
            for &j in below.iter().take_while(|&&j| j <= i) {
                let upd = a[(i, j)].clone() - lik.clone() * &a[(j, k)];
                a[(i, j)] = upd.clone();
                a[(j, i)] = upd;
            }
        }
        d.push(pivot);
    }
    Ok(LdltResult { l, d, status: LdltStatus::Complete, witness: None })
}

/// Solves `Lᵀ x = y` for unit lower triangular `L`.
fn back_substitute<S: Field>(l: &Matrix<S>, y: Vec<S>) -> Vec<S> {
    let n = y.len();
    let mut x = y;
    for i in (0..n).rev() {
        let mut acc = x[i].clone();
        for j in i + 1..n {
            if !l[(j, i)].is_zero() && !x[j].is_zero() {
                acc = acc - l[(j, i)].clone() * &x[j];
            }
        }
        x[i] = acc;
    }
    x
}
