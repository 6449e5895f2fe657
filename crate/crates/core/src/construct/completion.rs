use std::collections::BTreeMap;

use super::ConstructError;
use crate::axial::{Algebra, BilinearForm, LinearOperator};
use crate::linalg::{self, Matrix};
use crate::scalar::Field;

/// Named generators of a finite group of linear maps on the algebra basis.
#[derive(Clone, Debug)]
pub struct SymmetrySet<S> {
    generators: Vec<(String, LinearOperator<S>)>,
}

impl<S: Field> SymmetrySet<S> {
    pub fn new() -> Self {
        SymmetrySet { generators: Vec::new() }
    }

    pub fn with(mut self, name: &str, op: LinearOperator<S>) -> Self {
        self.generators.push((name.to_string(), op));
        self
    }

    pub fn generators(&self) -> &[(String, LinearOperator<S>)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<&LinearOperator<S>> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }

    /// All elements of the generated group, identity first.
    ///
    /// Fails once more than `max_order` elements are found, which also guards
    /// against a generator of infinite order.
    pub fn group(&self, max_order: usize) -> Result<Vec<LinearOperator<S>>, ConstructError> {
        let dim = self.generators.first().map_or(0, |(_, g)| g.dim());
        let mut elements = vec![LinearOperator::identity(dim)];
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            frontier += 1;
            for (_, g) in &self.generators {
                let h = g.compose(&current);
                if !elements.contains(&h) {
                    if elements.len() == max_order {
                        return Err(ConstructError::GroupTooLarge { limit: max_order });
                    }
                    elements.push(h);
                }
            }
        }
        Ok(elements)
    }
}

impl<S: Field> Default for SymmetrySet<S> {
    fn default() -> Self {
        SymmetrySet::new()
    }
}

/// A table entry that transforms under the group: products move with the
/// operator, form values are invariant.
pub trait TableEntry<S: Field>: Clone + PartialEq {
    fn act(&self, g: &LinearOperator<S>) -> Self;
    fn zero_like(&self) -> Self;
    fn add_scaled(&mut self, c: &S, other: &Self);
    fn scaled(&self, c: &S) -> Self;
    fn render(&self) -> String;
}

impl<S: Field> TableEntry<S> for Vec<S> {
    fn act(&self, g: &LinearOperator<S>) -> Self {
        g.apply(self)
    }
    fn zero_like(&self) -> Self {
        vec![S::zero(); self.len()]
    }
    fn add_scaled(&mut self, c: &S, other: &Self) {
        linalg::add_scaled(self, c, other);
    }
    fn scaled(&self, c: &S) -> Self {
        linalg::scale(c, self)
    }
    fn render(&self) -> String {
        let parts: Vec<String> = self.iter().map(ToString::to_string).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// A bilinear form value; invariant under isometries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormValue<S>(pub S);

impl<S: Field> TableEntry<S> for FormValue<S> {
    fn act(&self, _: &LinearOperator<S>) -> Self {
        self.clone()
    }
    fn zero_like(&self) -> Self {
        FormValue(S::zero())
    }
    fn add_scaled(&mut self, c: &S, other: &Self) {
        self.0 = self.0.clone() + c.clone() * &other.0;
    }
    fn scaled(&self, c: &S) -> Self {
        FormValue(c.clone() * &self.0)
    }
    fn render(&self) -> String {
        self.0.to_string()
    }
}

/// Symmetric table on unordered basis pairs, some entries known.
#[derive(Clone, Debug)]
pub struct PartialTable<T> {
    labels: Vec<String>,
    known: BTreeMap<(usize, usize), T>,
}

pub type PartialProductTable<S> = PartialTable<Vec<S>>;
pub type PartialForm<S> = PartialTable<FormValue<S>>;

fn key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

impl<T: Clone + PartialEq> PartialTable<T> {
    pub fn new(labels: Vec<String>) -> Self {
        PartialTable { labels, known: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&T> {
        self.known.get(&key(i, j))
    }

    pub fn known_count(&self) -> usize {
        self.known.len()
    }

    pub fn index(&self, label: &str) -> Result<usize, ConstructError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| ConstructError::UnknownLabel(label.to_string()))
    }

    fn pair_names(&self, (i, j): (usize, usize)) -> (String, String) {
        (self.labels[i].clone(), self.labels[j].clone())
    }

    /// Records an entry; a second, different value for the same pair is an error.
    pub fn set(&mut self, i: usize, j: usize, value: T) -> Result<(), ConstructError>
    where
        T: std::fmt::Debug,
    {
        let k = key(i, j);
        match self.known.get(&k) {
            Some(existing) if *existing != value => Err(ConstructError::CompletionInconsistent {
                pair: self.pair_names(k),
                existing: format!("{existing:?}"),
                derived: format!("{value:?}"),
            }),
            Some(_) => Ok(()),
            None => {
                self.known.insert(k, value);
                Ok(())
            }
        }
    }

    pub fn set_labels(&mut self, x: &str, y: &str, value: T) -> Result<(), ConstructError>
    where
        T: std::fmt::Debug,
    {
        let (i, j) = (self.index(x)?, self.index(y)?);
        self.set(i, j, value)
    }

    /// Unordered pairs `(i, j)`, `i <= j`, with no entry yet.
    pub fn unknown_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.dim();
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).filter(|k| !self.known.contains_key(k)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.known.len() == self.dim() * (self.dim() + 1) / 2
    }
}

impl<S: Field> PartialProductTable<S> {
    pub fn into_algebra(self) -> Result<Algebra<S>, ConstructError> {
        self.ensure_complete()?;
        Ok(Algebra::from_fn(self.labels.clone(), |i, j| self.known[&key(i, j)].clone())?)
    }
}

impl<S: Field> PartialForm<S> {
    pub fn into_form(self) -> Result<BilinearForm<S>, ConstructError> {
        self.ensure_complete()?;
        let n = self.dim();
        let gram = Matrix::from_fn(n, n, |i, j| self.known[&key(i, j)].0.clone());
        Ok(BilinearForm::new(gram)?)
    }
}

impl<T: Clone + PartialEq> PartialTable<T> {
    fn ensure_complete(&self) -> Result<(), ConstructError> {
        let missing = self.unknown_pairs();
        if missing.is_empty() {
            return Ok(());
        }
        Err(ConstructError::CompletionInsufficient { pairs: missing.into_iter().map(|k| self.pair_names(k)).collect() })
    }
}

/// Closes a partial table under `g(e_i) g(e_j) = g(e_i e_j)` for every group element.
///
/// Each group element and known pair gives one linear equation among table
/// entries. An equation with a single unknown entry determines it; an equation
/// with none must already hold. Iterates to a fixpoint; the final pass visits
/// every equation, so a returned table satisfies all of them exactly.
pub fn complete_table<S: Field, T: TableEntry<S> + std::fmt::Debug>(
    partial: &PartialTable<T>,
    group: &[LinearOperator<S>],
) -> Result<PartialTable<T>, ConstructError> {
    let mut table = partial.clone();
    let n = table.dim();
    // Sparse basis images per group element.
    let images: Vec<Vec<Vec<(usize, S)>>> = group
        .iter()
        .map(|g| {
            (0..n)
                .map(|i| g.image(i).into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
                .collect()
        })
        .collect();
    loop {
        let mut progress = false;
        for (g, img) in group.iter().zip(&images) {
            let pairs: Vec<(usize, usize)> = table.known.keys().copied().collect();
            for (i, j) in pairs {
                let value = table.known[&(i, j)].clone();
                let mut residual = value.act(g);
                let mut coeffs: BTreeMap<(usize, usize), S> = BTreeMap::new();
                for (k, x) in &img[i] {
                    for (l, y) in &img[j] {
                        let c = coeffs.entry(key(*k, *l)).or_insert_with(S::zero);
                        *c = c.clone() + x.clone() * y;
                    }
                }
                let mut unknown = None;
                let mut unknown_count = 0;
                for (pair, c) in coeffs.into_iter().filter(|(_, c)| !c.is_zero()) {
                    match table.known.get(&pair) {
                        Some(v) => residual.add_scaled(&-c, v),
                        None => {
                            unknown_count += 1;
                            unknown = Some((pair, c));
                        }
                    }
                }
                match (unknown_count, unknown) {
                    (0, _) if residual != residual.zero_like() => {
                        let pair = table.pair_names((i, j));
                        return Err(ConstructError::CompletionInconsistent {
                            pair,
                            existing: value.render(),
                            derived: format!("image under a symmetry leaves residual {}", residual.render()),
                        });
                    }
                    (1, Some((pair, c))) => {
                        table.known.insert(pair, residual.scaled(&c.inv()?));
                        progress = true;
                    }
                    _ => {}
                }
            }
        }
        if !progress {
            return Ok(table);
        }
    }
}

/// Permutation operator sending basis vector `i` to `perm[i]`.
pub fn permutation<S: Field>(perm: &[usize]) -> LinearOperator<S> {
    let n = perm.len();
    let images: Vec<Vec<S>> = perm.iter().map(|&p| linalg::unit(n, p)).collect();
    LinearOperator::from_images(&images).expect("square by construction")
}
