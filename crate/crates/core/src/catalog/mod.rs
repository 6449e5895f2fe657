//! Fusion rules and the dihedral algebras of Monster type.

mod dihedral;
mod rules;

pub use dihedral::{axis_orbit, dihedral, embeds, verify_dihedral, DihedralAlgebra, DihedralReport, DihedralType, ReferenceEigenvector};
pub use rules::{f4a_grading, f4a_rule, jordan_half_rule, monster_grading, monster_rule};

use crate::scalar::Field;

/// Coordinate vector of a labelled linear combination; panics on an unknown
/// label, since every caller passes static data.
pub fn combo<S: Field>(labels: &[String], terms: &[(&str, S)]) -> Vec<S> {
    let mut v = vec![S::zero(); labels.len()];
    for (label, c) in terms {
        let i = labels.iter().position(|l| l == label).unwrap_or_else(|| panic!("unknown basis label {label}"));
        v[i] = v[i].clone() + c.clone();
    }
    v
}
