use super::{Algebra, AxialError};
use crate::linalg::RowSpace;
use crate::scalar::Field;

/// Smallest product-closed subspace containing `generators`, as a reduced row space.
pub fn subalgebra_closure<S: Field>(alg: &Algebra<S>, generators: &[Vec<S>]) -> RowSpace<S> {
    let mut space = RowSpace::new(alg.dim());
    for g in generators {
        space.insert(g);
    }
    // A full pass over all pairs of a spanning set that adds nothing proves closure.
    loop {
        let snapshot: Vec<Vec<S>> = space.basis().to_vec();
        for i in 0..snapshot.len() {
            for j in i..snapshot.len() {
                space.insert(&alg.mul_unchecked(&snapshot[i], &snapshot[j]));
            }
        }
        if space.rank() == snapshot.len() {
            return space;
        }
    }
}

/// The subalgebra as an algebra in its own basis, with labels `b0, b1, ...`.
pub fn restrict<S: Field>(alg: &Algebra<S>, space: &RowSpace<S>) -> Result<Algebra<S>, AxialError> {
    let basis = space.basis();
    let labels = (0..basis.len()).map(|i| format!("b{i}")).collect();
    let mut failure = None;
    let sub = Algebra::from_fn(labels, |i, j| {
        let p = alg.mul_unchecked(&basis[i], &basis[j]);
        space.coordinates(&p).unwrap_or_else(|| {
            failure = Some(AxialError::NotClosed);
            vec![S::zero(); basis.len()]
        })
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(sub),
    }
}

/// Coordinates of an ambient vector in the basis of `space`.
pub fn to_subspace<S: Field>(space: &RowSpace<S>, v: &[S]) -> Result<Vec<S>, AxialError> {
    space.coordinates(v).ok_or(AxialError::NotClosed)
}
