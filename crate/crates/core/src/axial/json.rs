use serde::{Deserialize, Serialize};

use super::{Algebra, AxialError, BilinearForm};
use crate::linalg::Matrix;
use crate::scalar::{Field, FieldKind};

/// On-disk form of an algebra: upper-triangular product table and Gram matrix,
/// so row `i` holds the entries for columns `i..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "S: Field")]
pub struct AlgebraDocument<S> {
    /// Optional target name such as `m4a` or `dihedral:4A`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: FieldKind,
    pub labels: Vec<String>,
    pub mul_table: Vec<Vec<Vec<S>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<S>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axes: Option<Vec<Vec<S>>>,
}

/// The decoded parts of an [`AlgebraDocument`].
#[derive(Clone, Debug)]
pub struct LoadedAlgebra<S> {
    pub name: Option<String>,
    pub algebra: Algebra<S>,
    pub form: Option<BilinearForm<S>>,
    pub axes: Vec<Vec<S>>,
}

impl<S: Field> AlgebraDocument<S> {
    pub fn new(alg: &Algebra<S>, form: Option<&BilinearForm<S>>, axes: &[Vec<S>]) -> Self {
        let n = alg.dim();
        let upper = |entry: &dyn Fn(usize, usize) -> Vec<S>| -> Vec<Vec<Vec<S>>> {
            (0..n).map(|i| (i..n).map(|j| entry(i, j)).collect()).collect()
        };
        AlgebraDocument {
            name: None,
            field: S::KIND,
            labels: alg.labels().to_vec(),
            mul_table: upper(&|i, j| alg.product(i, j).to_vec()),
            gram: form.map(|f| (0..n).map(|i| (i..n).map(|j| f.gram()[(i, j)].clone()).collect()).collect()),
            axes: (!axes.is_empty()).then(|| axes.to_vec()),
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn load(self) -> Result<LoadedAlgebra<S>, AxialError> {
        let n = self.labels.len();
        if self.field != S::KIND {
            return Err(AxialError::Malformed(format!("field is {}, expected {}", self.field, S::KIND)));
        }
        check_triangle(&self.mul_table, n)?;
        let table = &self.mul_table;
        let algebra = Algebra::from_fn(self.labels.clone(), |i, j| table[i][j - i].clone())?;
        let form = match &self.gram {
            Some(rows) => {
                check_triangle(rows, n)?;
                let gram = Matrix::from_fn(n, n, |i, j| match i <= j {
                    true => rows[i][j - i].clone(),
                    false => rows[j][i - j].clone(),
                });
                Some(BilinearForm::new(gram)?)
            }
            None => None,
        };
        let axes = self.axes.unwrap_or_default();
        if let Some(bad) = axes.iter().find(|a| a.len() != n) {
            return Err(AxialError::DimensionMismatch { expected: n, found: bad.len() });
        }
        Ok(LoadedAlgebra { name: self.name, algebra, form, axes })
    }
}

fn check_triangle<T>(rows: &[Vec<T>], n: usize) -> Result<(), AxialError> {
    if rows.len() != n {
        return Err(AxialError::DimensionMismatch { expected: n, found: rows.len() });
    }
    match rows.iter().enumerate().find(|(i, r)| r.len() != n - i) {
        Some((i, r)) => Err(AxialError::DimensionMismatch { expected: n - i, found: r.len() }),
        None => Ok(()),
    }
}

/// Field marker of a serialized document, read before choosing the scalar type.
pub fn document_field(json: &str) -> Result<FieldKind, AxialError> {
    #[derive(Deserialize)]
    struct Header {
        field: FieldKind,
    }
    serde_json::from_str::<Header>(json).map(|h| h.field).map_err(|e| AxialError::Malformed(e.to_string()))
}

pub fn to_json<S: Field>(alg: &Algebra<S>, form: Option<&BilinearForm<S>>, axes: &[Vec<S>]) -> String {
    serde_json::to_string_pretty(&AlgebraDocument::new(alg, form, axes)).expect("scalars serialize as strings")
}

pub fn from_json<S: Field>(json: &str) -> Result<LoadedAlgebra<S>, AxialError> {
    let doc: AlgebraDocument<S> = serde_json::from_str(json).map_err(|e| AxialError::Malformed(e.to_string()))?;
    doc.load()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational, RationalFunction};

    fn sample() -> (Algebra<Rational>, BilinearForm<Rational>) {
        let labels = vec!["a".to_string(), "b".to_string()];
        let alg = Algebra::from_fn(labels, |i, j| match (i, j) {
            (0, 0) => vec![q(1, 1), q(0, 1)],
            (0, 1) => vec![q(0, 1), q(1, 2)],
            _ => vec![q(-3, 7), q(1, 1)],
        })
        .unwrap();
        let gram = Matrix::from_rows(vec![vec![q(1, 1), q(1, 9)], vec![q(1, 9), q(2, 1)]]).unwrap();
        (alg, BilinearForm::new(gram).unwrap())
    }

    #[test]
    fn round_trip() {
        let (alg, form) = sample();
        let json = to_json(&alg, Some(&form), &[alg.e("a")]);
        assert!(json.contains("\"-3/7\""));
        assert_eq!(document_field(&json).unwrap(), FieldKind::Rationals);
        let back = from_json::<Rational>(&json).unwrap();
        assert_eq!(back.algebra, alg);
        assert_eq!(back.form.unwrap(), form);
        assert_eq!(back.axes, vec![alg.e("a")]);
    }

    #[test]
    fn wrong_field_and_shape_rejected() {
        let (alg, _) = sample();
        let json = to_json(&alg, None, &[]);
        assert!(matches!(from_json::<RationalFunction>(&json), Err(AxialError::Malformed(_))));
        let mut doc = AlgebraDocument::new(&alg, None, &[]);
        doc.mul_table[1].push(vec![q(0, 1), q(0, 1)]);
        assert!(matches!(doc.load(), Err(AxialError::DimensionMismatch { .. })));
    }
}
