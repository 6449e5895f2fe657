use serde::Serialize;

use super::CertifyError;
use crate::axial::{
    axis_decomposition, restrict, subalgebra_closure, to_subspace, verify_fusion, verify_grading, Algebra, FusionRule,
};
use crate::catalog::{f4a_grading, f4a_rule, jordan_half_rule};
use crate::construct::{jordan_spanning_set, specialize, specialize_vector, v_eigenvectors, v_label, M4a, AXIS_PAIRS};
use crate::linalg;
use crate::scalar::{Field, Rational, RationalFunction, ScalarError};

type Rf = RationalFunction;

#[derive(Clone, Debug, Serialize)]
pub struct V4aAxisReport {
    pub axis: String,
    pub idempotent: bool,
    /// Eigenspace dimensions for `1, 0, 1/2, 3/8, t`.
    pub dims: Vec<usize>,
    pub eigenvectors_confirmed: usize,
    pub eigenvectors_total: usize,
    pub fusion_violations: usize,
}

impl V4aAxisReport {
    pub fn passed(&self) -> bool {
        self.idempotent
            && self.dims == [1, 4, 4, 2, 1]
            && self.eigenvectors_confirmed == self.eigenvectors_total
            && self.fusion_violations == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct JordanReport {
    pub closure_dim: usize,
    pub spanning_set_inside: bool,
    /// Per 4A axis: primitive in the subalgebra and obeying the `{1, 0, 1/2}` rule.
    pub axes_pass: Vec<bool>,
}

impl JordanReport {
    pub fn passed(&self) -> bool {
        self.closure_dim == 9 && self.spanning_set_inside && self.axes_pass.iter().all(|&p| p)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct V4aReport {
    pub axes: Vec<V4aAxisReport>,
    pub grading_verified: bool,
    pub jordan: JordanReport,
}

impl V4aReport {
    pub fn passed(&self) -> bool {
        self.axes.iter().all(V4aAxisReport::passed) && self.grading_verified && self.jordan.passed()
    }
}

fn axis_report<S: Field>(
    alg: &Algebra<S>,
    v: &[S],
    axis: String,
    listed: &[(S, Vec<S>)],
    rule: &FusionRule<S>,
) -> Result<V4aAxisReport, CertifyError> {
    let confirmed = listed.iter().filter(|(lambda, x)| alg.mul(v, x).is_ok_and(|p| p == linalg::scale(lambda, x))).count();
    let (dims, fusion_violations) = match axis_decomposition(alg, v, rule.eigenvalues()) {
        Ok(dec) => (dec.dims(), verify_fusion(alg, &dec, rule)?.violations.len()),
        Err(_) => (Vec::new(), usize::MAX),
    };
    Ok(V4aAxisReport {
        axis,
        idempotent: alg.is_idempotent(v),
        dims,
        eigenvectors_confirmed: confirmed,
        eigenvectors_total: listed.len(),
        fusion_violations,
    })
}

/// Symbolic certification of the three 4A axes `v_ij` and of the Jordan-type
/// subalgebra they generate.
pub fn v4a_certify(m: &M4a) -> Result<V4aReport, CertifyError> {
    let rule = f4a_rule();
    let axes = AXIS_PAIRS
        .iter()
        .map(|&(i, j, _)| axis_report(&m.algebra, &m.v(i, j), v_label(i, j), &v_eigenvectors(i, j), &rule))
        .collect::<Result<_, _>>()?;
    Ok(V4aReport { axes, grading_verified: verify_grading(&rule, &f4a_grading()), jordan: jordan_subalgebra(m)? })
}

#[derive(Clone, Debug, Serialize)]
pub struct V4aSpecializedReport {
    pub t0: Rational,
    /// Specialized eigenvalues; shorter than five when `t0` collides with one.
    pub eigenvalues: Vec<Rational>,
    pub axes: Vec<V4aAxisReport>,
    /// `None` when eigenvalues merged, where no grading is claimed.
    pub grading_verified: Option<bool>,
}

impl V4aSpecializedReport {
    pub fn passed(&self) -> bool {
        let axes_ok = self.axes.iter().all(|a| {
            a.idempotent
                && a.dims.iter().sum::<usize>() == 12
                && a.eigenvectors_confirmed == a.eigenvectors_total
                && a.fusion_violations == 0
        });
        axes_ok && self.grading_verified != Some(false)
    }
}

/// The 4A axes of the specialization at `t0`, over the rule with colliding
/// eigenvalues merged.
pub fn v4a_certify_at(m: &M4a, t0: &Rational) -> Result<V4aSpecializedReport, CertifyError> {
    let (alg, _) = specialize(&m.algebra, &m.form, t0)?;
    let symbolic = f4a_rule();
    let (rule, classes) = symbolic.map_eigenvalues(|x| x.evaluate(t0))?;
    let mut axes = Vec::new();
    for (i, j, _) in AXIS_PAIRS {
        let listed = v_eigenvectors(i, j)
            .iter()
            .map(|(lambda, x)| Ok((lambda.evaluate(t0)?, specialize_vector(x, t0)?)))
            .collect::<Result<Vec<_>, ScalarError>>()?;
        axes.push(axis_report(&alg, &specialize_vector(&m.v(i, j), t0)?, v_label(i, j), &listed, &rule)?);
    }
    let merged = rule.eigenvalues().len() < classes.len();
    Ok(V4aSpecializedReport {
        t0: t0.clone(),
        eigenvalues: rule.eigenvalues().to_vec(),
        axes,
        grading_verified: (!merged).then(|| verify_grading(&rule, &f4a_grading())),
    })
}

fn jordan_subalgebra(m: &M4a) -> Result<JordanReport, CertifyError> {
    let generators: Vec<Vec<Rf>> = AXIS_PAIRS.iter().map(|&(i, j, _)| m.v(i, j)).collect();
    let closure = subalgebra_closure(&m.algebra, &generators);
    let spanning_set_inside = jordan_spanning_set().iter().all(|x| closure.contains(x));
    let sub = restrict(&m.algebra, &closure)?;
    let rule = jordan_half_rule::<Rf>();
    let mut axes_pass = Vec::new();
    for v in &generators {
        let local = to_subspace(&closure, v)?;
        let pass = match axis_decomposition(&sub, &local, rule.eigenvalues()) {
            Ok(dec) => dec.is_primitive() && verify_fusion(&sub, &dec, &rule)?.passed(),
            Err(_) => false,
        };
        axes_pass.push(pass);
    }
    Ok(JordanReport { closure_dim: closure.rank(), spanning_set_inside, axes_pass })
}
