//! Exact construction and certification of axial algebras of Monster type.

pub mod axial;
pub mod catalog;
pub mod certify;
pub mod construct;
pub mod linalg;
pub mod scalar;
