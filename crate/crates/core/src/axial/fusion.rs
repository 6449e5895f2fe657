use std::collections::BTreeSet;

use serde::Serialize;

use super::AxialError;
use crate::scalar::Field;

/// Eigenvalue set with a symmetric product map into its power set.
///
/// Subsets are stored as index sets into `eigenvalues`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRule<S> {
    eigenvalues: Vec<S>,
    table: Vec<Vec<BTreeSet<usize>>>,
}

impl<S: Field> FusionRule<S> {
    /// `product(i, j)` is consulted for `i <= j` only; the table is symmetrized.
    pub fn new(
        eigenvalues: Vec<S>,
        mut product: impl FnMut(usize, usize) -> BTreeSet<usize>,
    ) -> Result<Self, AxialError> {
        let n = eigenvalues.len();
        for i in 0..n {
            if eigenvalues[..i].contains(&eigenvalues[i]) {
                return Err(AxialError::DuplicateEigenvalue(eigenvalues[i].to_string()));
            }
        }
        let mut table = vec![vec![BTreeSet::new(); n]; n];
        for i in 0..n {
            for j in i..n {
                let s = product(i, j);
                if s.iter().any(|&k| k >= n) {
                    return Err(AxialError::DimensionMismatch { expected: n, found: *s.iter().max().unwrap() + 1 });
                }
                table[i][j] = s.clone();
                table[j][i] = s;
            }
        }
        Ok(FusionRule { eigenvalues, table })
    }

    pub fn eigenvalues(&self) -> &[S] {
        &self.eigenvalues
    }

    pub fn index_of(&self, lambda: &S) -> Option<usize> {
        self.eigenvalues.iter().position(|x| x == lambda)
    }

    pub fn product_indices(&self, i: usize, j: usize) -> &BTreeSet<usize> {
        &self.table[i][j]
    }

    /// `λ * μ` as eigenvalues; `None` if either is not in the rule.
    pub fn fuse(&self, lambda: &S, mu: &S) -> Option<Vec<S>> {
        let (i, j) = (self.index_of(lambda)?, self.index_of(mu)?);
        Some(self.table[i][j].iter().map(|&k| self.eigenvalues[k].clone()).collect())
    }

    /// Image of the rule under an eigenvalue map; colliding eigenvalues are merged and
    /// their products united.
    pub fn map_eigenvalues<T: Field, E>(&self, f: impl Fn(&S) -> Result<T, E>) -> Result<(FusionRule<T>, Vec<usize>), E> {
        let mut merged: Vec<T> = Vec::new();
        let mut class = Vec::with_capacity(self.eigenvalues.len());
        for x in &self.eigenvalues {
            let y = f(x)?;
            match merged.iter().position(|m| *m == y) {
                Some(k) => class.push(k),
                None => {
                    class.push(merged.len());
                    merged.push(y);
                }
            }
        }
        let m = merged.len();
        let mut table = vec![vec![BTreeSet::new(); m]; m];
        for (i, row) in self.table.iter().enumerate() {
            for (j, set) in row.iter().enumerate() {
                table[class[i]][class[j]].extend(set.iter().map(|&k| class[k]));
            }
        }
        Ok((FusionRule { eigenvalues: merged, table }, class))
    }
}

/// Assignment of eigenvalues to elements of a finite abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingAssignment {
    pub group_labels: Vec<String>,
    /// Cayley table of the group; element 0 is the identity.
    pub group_table: Vec<Vec<usize>>,
    /// Group element of each eigenvalue, indexed like the rule's eigenvalues.
    pub assignment: Vec<usize>,
}

impl GradingAssignment {
    /// The elementary abelian group of order `2^rank`, elements as bit masks.
    pub fn elementary_abelian(rank: u32, labels: &[&str], assignment: Vec<usize>) -> Self {
        let n = 1usize << rank;
        GradingAssignment {
            group_labels: labels.iter().map(|s| s.to_string()).collect(),
            group_table: (0..n).map(|i| (0..n).map(|j| i ^ j).collect()).collect(),
            assignment,
        }
    }

    /// Eigenvalues graded by each group element (possibly empty).
    pub fn classes<S: Field>(&self, rule: &FusionRule<S>) -> Vec<Vec<S>> {
        (0..self.group_table.len())
            .map(|g| {
                rule.eigenvalues()
                    .iter()
                    .zip(&self.assignment)
                    .filter(|(_, &a)| a == g)
                    .map(|(x, _)| x.clone())
                    .collect()
            })
            .collect()
    }
}

/// True iff every `ν ∈ λ * μ` is graded by `gr(λ) gr(μ)`.
pub fn verify_grading<S: Field>(rule: &FusionRule<S>, grading: &GradingAssignment) -> bool {
    let n = rule.eigenvalues().len();
    if grading.assignment.len() != n || grading.assignment.iter().any(|&g| g >= grading.group_table.len()) {
        return false;
    }
    (0..n).all(|i| {
        (0..n).all(|j| {
            let target = grading.group_table[grading.assignment[i]][grading.assignment[j]];
            rule.product_indices(i, j).iter().all(|&k| grading.assignment[k] == target)
        })
    })
}

pub fn index_set(items: &[usize]) -> BTreeSet<usize> {
    items.iter().copied().collect()
}
