//! Quantitative certification of the 12-dimensional family: Gram determinant
//! and LDLT, definiteness intervals, Norton's inequality, Majorana verdicts,
//! radicals and quotients, and the 4A axes.

mod gram;
mod majorana;
mod norton;
mod report;
mod v4a;

use thiserror::Error;

pub use gram::{
    certify_psd_interval, gram_analysis, gram_determinant_closed_form, gram_ldlt_published, interval_certificate,
    ldlt_commutes_at, GramAnalysis, IntervalCertificate, IntervalVerdict,
};
pub use majorana::{
    grid_verdicts, majorana_certify, quotient_certify, radical_dimension, GridVerdict, MajoranaVerdict, QuotientVerdict,
    certify_grid,
};
pub use norton::{
    norton_check, norton_matrix, norton_symbolic, NortonSymbolicReport, NortonVerdict, DEFAULT_DEGREE_CAP,
    norton_published_constants,
};
pub use report::{CertReport, Check};
pub use v4a::{v4a_certify, v4a_certify_at, JordanReport, V4aAxisReport, V4aReport, V4aSpecializedReport};

use crate::axial::AxialError;
use crate::construct::ConstructError;
use crate::linalg::LinalgError;
use crate::scalar::ScalarError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Axial(#[from] AxialError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
