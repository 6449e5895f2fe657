//! Assembling product tables and forms from representative data, and the two
//! algebras generated by six axes.

mod completion;
mod m4a;
mod m4b;
mod specialize;

use thiserror::Error;

pub use m4a::{
    a1_eigenvectors, axis_label, build_m4a, build_m4a_from, dependency_residuals, jordan_spanning_set, m4a_labels,
    m4a_symmetry, p_label, reflection, sigma, tau, v_eigenvectors, v_label, M4a, Representatives, AXIS_PAIRS,
};
pub use m4b::{build_m4b, m4b_labels, M4b};
pub use specialize::{specialize, specialize_vector};

pub use completion::{
    complete_table, permutation, FormValue, PartialForm, PartialProductTable, PartialTable, SymmetrySet, TableEntry,
};

use crate::axial::AxialError;
use crate::linalg::LinalgError;
use crate::scalar::ScalarError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("completion left {} pairs undefined: {pairs:?}", pairs.len())]
    CompletionInsufficient { pairs: Vec<(String, String)> },
    #[error("completion is inconsistent at {pair:?}: {existing} vs {derived}")]
    CompletionInconsistent { pair: (String, String), existing: String, derived: String },
    #[error("symmetry group exceeds {limit} elements")]
    GroupTooLarge { limit: usize },
    #[error("unknown basis label or type {0:?}")]
    UnknownLabel(String),
    #[error("post-condition failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Axial(#[from] AxialError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
