use super::{LinalgError, Matrix};
use crate::scalar::Field;

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    pub reduced: Matrix<S>,
    pub pivots: Vec<usize>,
}

impl<S: Field> Echelon<S> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination with first-nonzero pivoting.
pub fn rref<S: Field>(m: &Matrix<S>) -> Echelon<S> {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols() {
        if r == a.rows() {
            break;
        }
        let Some(p) = (r..a.rows()).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a[(r, c)].inv().expect("pivot is nonzero");
        for j in c..a.cols() {
            if !a[(r, j)].is_zero() {
                a[(r, j)] = a[(r, j)].clone() * &inv;
            }
        }
        for i in 0..a.rows() {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..a.cols() {
                if !a[(r, j)].is_zero() {
                    a[(i, j)] = a[(i, j)].clone() - f.clone() * &a[(r, j)];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { reduced: a, pivots }
}

pub fn rank<S: Field>(m: &Matrix<S>) -> usize {
    rref(m).rank()
}

/// Basis of the right null space, one vector per free column.
///
/// Each vector has a 1 at its free column and 0 at every other free column.
pub fn kernel_basis<S: Field>(m: &Matrix<S>) -> Vec<Vec<S>> {
    let ech = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![S::zero(); n];
            v[f] = S::one();
            for (r, &p) in ech.pivots.iter().enumerate() {
                v[p] = -ech.reduced[(r, f)].clone();
            }
            v
        })
        .collect()
}

/// Some solution `x` of `m x = b`, or `None` if the system is inconsistent.
pub fn solve<S: Field>(m: &Matrix<S>, b: &[S]) -> Result<Option<Vec<S>>, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch { expected: m.rows(), found: b.len() });
    }
    let aug = Matrix::from_fn(m.rows(), m.cols() + 1, |i, j| {
        if j < m.cols() {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let ech = rref(&aug);
    if ech.pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = vec![S::zero(); m.cols()];
    for (r, &p) in ech.pivots.iter().enumerate() {
        x[p] = ech.reduced[(r, m.cols())].clone();
    }
    Ok(Some(x))
}

pub fn inverse<S: Field>(m: &Matrix<S>) -> Result<Matrix<S>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let aug = Matrix::from_fn(n, 2 * n, |i, j| match j < n {
        true => m[(i, j)].clone(),
        false if j - n == i => S::one(),
        false => S::zero(),
    });
    let ech = rref(&aug);
    if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
        return Err(LinalgError::Singular);
    }
    Ok(Matrix::from_fn(n, n, |i, j| ech.reduced[(i, n + j)].clone()))
}

/// Incrementally maintained row space in reduced echelon form.
///
/// Rows stay fully reduced, so the coordinates of a member vector with respect to
/// the stored rows are its entries at the pivot columns.
#[derive(Clone, Debug)]
pub struct RowSpace<S> {
    dim: usize,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Field> RowSpace<S> {
    pub fn new(dim: usize) -> Self {
        RowSpace { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after eliminating every stored pivot; zero iff `v` is a member.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.clone() - f.clone() * r;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(S::is_zero)
    }

    /// Coordinates with respect to `basis()`, if `v` is a member.
    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[S]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero pivot");
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&w) {
                if !r.is_zero() {
                    *x = x.clone() - f.clone() * r;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel_basis(&Matrix::<Rational>::identity(3)).is_empty());
    }

    #[test]
    fn kernel_vectors_are_canonical() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel_basis(&a);
        assert_eq!(k, vec![vec![q(-2, 1), q(1, 1), q(0, 1)], vec![q(-3, 1), q(0, 1), q(1, 1)]]);
        assert_eq!(rank(&a) + k.len(), 3);
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(solve(&a, &[q(3, 1), q(2, 1)]).unwrap(), Some(vec![q(1, 1), q(1, 1)]));
        let inv = inverse(&a).unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        assert!(matches!(inverse(&m(&[&[1, 2], &[2, 4]])), Err(LinalgError::Singular)));
        assert_eq!(solve(&m(&[&[1, 1], &[1, 1]]), &[q(1, 1), q(2, 1)]).unwrap(), None);
    }

    #[test]
    fn row_space_membership_and_coordinates() {
        let mut s = RowSpace::new(3);
        assert!(s.insert(&[q(0, 1), q(2, 1), q(2, 1)]));
        assert!(s.insert(&[q(1, 1), q(1, 1), q(0, 1)]));
        assert!(!s.insert(&[q(1, 1), q(2, 1), q(1, 1)]));
        assert_eq!(s.rank(), 2);
        let v = [q(2, 1), q(5, 1), q(3, 1)];
        let c = s.coordinates(&v).unwrap();
        let rebuilt: Vec<Rational> = (0..3).map(|j| &c[0] * &s.basis()[0][j] + &c[1] * &s.basis()[1][j]).collect();
        assert_eq!(rebuilt, v.to_vec());
        assert!(s.coordinates(&[q(0, 1), q(0, 1), q(1, 1)]).is_none());
    }
}
