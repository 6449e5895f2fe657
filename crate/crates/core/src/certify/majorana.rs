use rayon::prelude::*;
use serde::Serialize;

use super::{norton_check, CertifyError};
use crate::axial::{axis_decomposition, quotient, radical, verify_fusion, Algebra, BilinearForm};
use crate::catalog::monster_rule;
use crate::construct::{specialize, specialize_vector, M4a};
use crate::linalg::{ldlt, rational_sign};
use crate::scalar::{q, Rational};

/// Twelve points covering both endpoints, interior and near-boundary values,
/// and every degenerate radical.
pub fn certify_grid() -> Vec<Rational> {
    [(-1, 10), (-1, 100), (0, 1), (1, 24), (1, 12), (1, 8), (1, 6), (9, 50), (1, 5), (1, 1), (2, 1), (9, 4)]
        .iter()
        .map(|&(n, d)| q(n, d))
        .collect()
}

/// Invariant: `is_majorana == gram_pd && norton_psd`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MajoranaVerdict {
    pub t0: Rational,
    pub gram_pd: bool,
    pub norton_psd: bool,
    pub is_majorana: bool,
}

fn verdict(t0: &Rational, alg: &Algebra<Rational>, form: &BilinearForm<Rational>) -> Result<MajoranaVerdict, CertifyError> {
    let gram_pd = ldlt(form.gram(), Some(&rational_sign))?.is_pd();
    let norton_psd = norton_check(alg, form)?.psd;
    Ok(MajoranaVerdict { t0: t0.clone(), gram_pd, norton_psd, is_majorana: gram_pd && norton_psd })
}

/// Majorana verdict for the specialization at `t0`.
pub fn majorana_certify(m: &M4a, t0: &Rational) -> Result<MajoranaVerdict, CertifyError> {
    let (alg, form) = specialize(&m.algebra, &m.form, t0)?;
    verdict(t0, &alg, &form)
}

pub fn radical_dimension(m: &M4a, t0: &Rational) -> Result<usize, CertifyError> {
    let (_, form) = specialize(&m.algebra, &m.form, t0)?;
    Ok(radical(&form).len())
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientVerdict {
    pub t0: Rational,
    pub radical_dim: usize,
    pub quotient_dim: usize,
    pub labels: Vec<String>,
    /// Every projected axis is a primitive idempotent obeying the Monster rule.
    pub axes_pass_fusion: bool,
    pub majorana: MajoranaVerdict,
}

impl QuotientVerdict {
    pub fn passed(&self) -> bool {
        self.axes_pass_fusion && self.majorana.is_majorana
    }
}

/// Quotient by the radical at `t0`, re-verified from scratch.
pub fn quotient_certify(m: &M4a, t0: &Rational) -> Result<QuotientVerdict, CertifyError> {
    let (alg, form) = specialize(&m.algebra, &m.form, t0)?;
    let rad = radical(&form);
    let quo = quotient(&alg, &form, &rad)?;
    let rule = monster_rule::<Rational>();
    let mut axes_pass_fusion = true;
    for axis in &m.axes {
        let projected = quo.project(&specialize_vector(axis, t0)?);
        let passes = match axis_decomposition(&quo.algebra, &projected, rule.eigenvalues()) {
            Ok(dec) => dec.is_primitive() && verify_fusion(&quo.algebra, &dec, &rule)?.passed(),
            Err(_) => false,
        };
        axes_pass_fusion &= passes;
    }
    Ok(QuotientVerdict {
        t0: t0.clone(),
        radical_dim: rad.len(),
        quotient_dim: quo.algebra.dim(),
        labels: quo.algebra.labels().to_vec(),
        axes_pass_fusion,
        majorana: verdict(t0, &quo.algebra, &quo.form)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridVerdict {
    pub t0: Rational,
    pub gram_psd: bool,
    pub gram_pd: bool,
    /// `None` when the Norton test was not requested.
    pub norton_psd: Option<bool>,
    pub radical_dim: usize,
}

/// Independent exact verdicts at each point, evaluated in parallel and
/// returned in input order.
pub fn grid_verdicts(m: &M4a, points: &[Rational], with_norton: bool) -> Result<Vec<GridVerdict>, CertifyError> {
    points
        .par_iter()
        .map(|t0| {
            let (alg, form) = specialize(&m.algebra, &m.form, t0)?;
            let l = ldlt(form.gram(), Some(&rational_sign))?;
            let norton_psd = match with_norton {
                true => Some(norton_check(&alg, &form)?.psd),
                false => None,
            };
            Ok(GridVerdict {
                t0: t0.clone(),
                gram_psd: l.is_psd(),
                gram_pd: l.is_pd(),
                norton_psd,
                radical_dim: radical(&form).len(),
            })
        })
        .collect()
}
