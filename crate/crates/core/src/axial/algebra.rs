use super::AxialError;
use crate::linalg::{self, Matrix};
use crate::scalar::{Field, FieldKind};

/// Finite-dimensional commutative algebra given by structure constants.
///
/// `product(i, j)` is the coordinate vector of `e_i · e_j`; the table is stored in
/// full and is symmetric by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<S> {
    labels: Vec<String>,
    table: Vec<Vec<S>>,
}

impl<S: Field> Algebra<S> {
    /// Builds an algebra from a product callback evaluated on the upper triangle.
    pub fn from_fn(
        labels: Vec<String>,
        mut product: impl FnMut(usize, usize) -> Vec<S>,
    ) -> Result<Self, AxialError> {
        let n = labels.len();
        let mut table = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in i..n {
                let v = product(i, j);
                if v.len() != n {
                    return Err(AxialError::DimensionMismatch { expected: n, found: v.len() });
                }
                table[j * n + i] = v.clone();
                table[i * n + j] = v;
            }
        }
        Ok(Algebra { labels, table })
    }

    /// Builds an algebra from a full table, checking commutativity.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<Vec<S>>>) -> Result<Self, AxialError> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(AxialError::DimensionMismatch { expected: n, found: table.len() });
        }
        for i in 0..n {
            for j in 0..i {
                if table[i][j] != table[j][i] {
                    return Err(AxialError::NotCommutative { left: labels[i].clone(), right: labels[j].clone() });
                }
            }
        }
        Algebra::from_fn(labels, |i, j| table[i][j].clone())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> FieldKind {
        S::KIND
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<S> {
        linalg::unit(self.dim(), i)
    }

    /// Basis vector by label; panics on an unknown label.
    pub fn e(&self, label: &str) -> Vec<S> {
        let i = self.index_of(label).unwrap_or_else(|| panic!("unknown basis label {label}"));
        self.basis_vector(i)
    }

    pub fn product(&self, i: usize, j: usize) -> &[S] {
        &self.table[i * self.dim() + j]
    }

    pub fn mul(&self, u: &[S], v: &[S]) -> Result<Vec<S>, AxialError> {
        let n = self.dim();
        for w in [u, v] {
            if w.len() != n {
                return Err(AxialError::DimensionMismatch { expected: n, found: w.len() });
            }
        }
        Ok(self.mul_unchecked(u, v))
    }

    pub(crate) fn mul_unchecked(&self, u: &[S], v: &[S]) -> Vec<S> {
        let n = self.dim();
        let mut out = vec![S::zero(); n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                linalg::add_scaled(&mut out, &(ui.clone() * vj), self.product(i, j));
            }
        }
        out
    }

    /// Matrix of `x ↦ a · x`; column `j` is `a · e_j`.
    pub fn adjoint(&self, a: &[S]) -> Result<Matrix<S>, AxialError> {
        let n = self.dim();
        if a.len() != n {
            return Err(AxialError::DimensionMismatch { expected: n, found: a.len() });
        }
        let cols: Vec<Vec<S>> = (0..n).map(|j| self.mul_unchecked(a, &self.basis_vector(j))).collect();
        Ok(Matrix::from_columns(n, &cols)?)
    }

    pub fn is_idempotent(&self, a: &[S]) -> bool {
        self.mul(a, a).is_ok_and(|sq| sq == a)
    }

    /// Applies `f` to every structure constant, e.g. to specialize `t`.
    pub fn try_map<T: Field, E>(&self, f: impl Fn(&S) -> Result<T, E>) -> Result<Algebra<T>, E> {
        let table = self
            .table
            .iter()
            .map(|v| v.iter().map(&f).collect::<Result<Vec<T>, E>>())
            .collect::<Result<Vec<_>, E>>()?;
        Ok(Algebra { labels: self.labels.clone(), table })
    }

    /// Human-readable rendering of a coordinate vector.
    pub fn describe(&self, v: &[S]) -> String {
        let terms: Vec<String> = v
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| if c.is_one() { l.clone() } else { format!("({c})*{l}") })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}
