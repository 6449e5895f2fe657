use serde::Serialize;

use super::CertifyError;
use crate::axial::BilinearForm;
use crate::linalg::{determinant, ldlt, LdltResult, LdltStatus};
use crate::scalar::{poly, q, sturm_root_count, Polynomial, Rational, RationalFunction, RootCount};

type Rf = RationalFunction;

#[derive(Clone, Debug)]
pub struct GramAnalysis {
    pub determinant: Rf,
    pub ldlt: LdltResult<Rf>,
}

impl GramAnalysis {
    pub fn diagonal(&self) -> &[Rf] {
        &self.ldlt.d
    }
}

/// Exact determinant and natural-order LDLT of a symbolic Gram matrix.
pub fn gram_analysis(form: &BilinearForm<Rf>) -> Result<GramAnalysis, CertifyError> {
    Ok(GramAnalysis { determinant: determinant(form.gram())?, ldlt: ldlt(form.gram(), None)? })
}

/// `-t³ (6t - 1)³ (4t - 9)⁶ / (2¹⁹ · 3³)`.
pub fn gram_determinant_closed_form() -> Rf {
    let t = Polynomial::t();
    let num = t.pow(3) * poly(&[(-1, 1), (6, 1)]).pow(3) * poly(&[(-9, 1), (4, 1)]).pow(6);
    let scale = -Rational::one().checked_div(&Rational::from_integer((1 << 19) * 27)).expect("nonzero");
    Rf::from_poly(num.scale(&scale))
}

/// The published LDLT diagonal: six constants, then `r1, ..., r6`.
pub fn gram_ldlt_published() -> Vec<Rf> {
    let c = |n, d| Rf::constant(q(n, d));
    let ratio = |num: &[(i64, i64)], den: &[(i64, i64)]| Rf::new(poly(num), poly(den)).expect("nonzero denominator");
    vec![
        c(1, 1),
        c(1, 1),
        c(511, 512),
        c(510, 511),
        c(271, 272),
        c(270, 271),
        Rf::from_poly(poly(&[(22, 15), (8, 45), (-272, 135)])),
        ratio(&[(1053, 2048), (171, 256), (-717, 128), (1, 16), (1, 1)], &[(1485, 4096), (45, 1024), (-255, 512)]),
        ratio(&[(81, 128), (-9, 32), (-171, 16), (5, 2), (1, 1)], &[(117, 256), (-33, 32), (-1, 2)]),
        ratio(&[(0, 1), (-9, 32), (15, 8), (-7, 9), (-9, 4), (1, 1)], &[(-9, 8), (0, 1), (19, 1), (4, 1)]),
        ratio(&[(0, 1), (-15, 64), (33, 32), (613, 216), (-133, 36), (1, 1)], &[(-1, 1), (-34, 9), (20, 9), (16, 3)]),
        ratio(&[(0, 1), (-27, 32), (93, 16), (-14, 3), (1, 1)], &[(-15, 4), (-23, 3), (6, 1)]),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IntervalVerdict {
    /// Strictly positive on the closed interval.
    Positive,
    /// Nonnegative on the closed interval, vanishing somewhere.
    Nonnegative,
    /// Negative somewhere, a pole in the interval, or an interior root whose
    /// multiplicity the certificate does not resolve.
    Fails,
}

/// Sign certificate of a rational function on `[lower, upper]`.
#[derive(Clone, Debug, Serialize)]
pub struct IntervalCertificate {
    pub function: Rf,
    pub lower: Rational,
    pub upper: Rational,
    pub numerator_roots: Option<RootCount>,
    pub denominator_roots: RootCount,
    /// `None` at a pole.
    pub midpoint_value: Option<Rational>,
    pub lower_value: Option<Rational>,
    pub upper_value: Option<Rational>,
    pub verdict: IntervalVerdict,
}

/// No sign change is possible without a root of the numerator or denominator
/// strictly inside, so one exact sample fixes the sign on the open interval;
/// the endpoints are evaluated exactly.
pub fn interval_certificate(f: &Rf, lower: &Rational, upper: &Rational) -> Result<IntervalCertificate, CertifyError> {
    let denominator_roots = sturm_root_count(f.den(), lower, upper)?;
    let numerator_roots = match f.is_zero() {
        true => None,
        false => Some(sturm_root_count(f.num(), lower, upper)?),
    };
    let midpoint = (lower.clone() + upper) * q(1, 2);
    let midpoint_value = f.evaluate(&midpoint).ok();
    let lower_value = f.evaluate(lower).ok();
    let upper_value = f.evaluate(upper).ok();
    let interior_roots = denominator_roots.interior + numerator_roots.as_ref().map_or(0, |r| r.interior);
    let endpoints: Vec<&Rational> = [&lower_value, &upper_value].into_iter().flatten().collect();
    let verdict = match &midpoint_value {
        _ if interior_roots > 0 || endpoints.len() < 2 => IntervalVerdict::Fails,
        Some(mid) if mid.is_positive() && endpoints.iter().all(|v| !v.is_negative()) => {
            match endpoints.iter().all(|v| v.is_positive()) {
                true => IntervalVerdict::Positive,
                false => IntervalVerdict::Nonnegative,
            }
        }
        Some(mid) if mid.is_zero() => IntervalVerdict::Nonnegative,
        _ => IntervalVerdict::Fails,
    };
    Ok(IntervalCertificate {
        function: f.clone(),
        lower: lower.clone(),
        upper: upper.clone(),
        numerator_roots,
        denominator_roots,
        midpoint_value,
        lower_value,
        upper_value,
        verdict,
    })
}

pub fn certify_psd_interval(
    diagonal: &[Rf],
    lower: &Rational,
    upper: &Rational,
) -> Result<Vec<IntervalCertificate>, CertifyError> {
    diagonal.iter().map(|f| interval_certificate(f, lower, upper)).collect()
}

impl GramAnalysis {
    pub fn completed(&self) -> bool {
        self.ldlt.status == LdltStatus::Complete
    }
}

/// Compares LDLT-then-evaluate with specialize-then-LDLT at `t0`. `None` when
/// `t0` is degenerate: a pole of `L` or `D`, or a pivot vanishing there.
pub fn ldlt_commutes_at(
    analysis: &GramAnalysis,
    form: &BilinearForm<Rf>,
    t0: &Rational,
) -> Result<Option<bool>, CertifyError> {
    let evaluated_d: Result<Vec<Rational>, _> = analysis.ldlt.d.iter().map(|x| x.evaluate(t0)).collect();
    let evaluated_l = analysis.ldlt.l.try_map(|x| x.evaluate(t0));
    let (d, l) = match (evaluated_d, evaluated_l) {
        (Ok(d), Ok(l)) if d.iter().all(|x| !x.is_zero()) => (d, l),
        _ => return Ok(None),
    };
    let specialized = ldlt(&form.gram().try_map(|x| x.evaluate(t0))?, None)?;
    Ok(Some(specialized.is_complete() && specialized.d == d && specialized.l == l))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        let det = gram_determinant_closed_form();
        assert!(det.evaluate(&q(1, 6)).unwrap().is_zero());
        assert_eq!(det.evaluate(&q(1, 12)).unwrap(), q(4826809, 2229025112064));
        assert_eq!(gram_ldlt_published()[6].evaluate(&q(0, 1)).unwrap(), q(22, 15));
    }

    #[test]
    fn r1_is_positive_on_the_interval() {
        let r1 = &gram_ldlt_published()[6];
        let cert = interval_certificate(r1, &q(0, 1), &q(1, 6)).unwrap();
        assert_eq!(cert.numerator_roots.unwrap().interior, 0);
        assert_eq!(cert.verdict, IntervalVerdict::Positive);
    }

    #[test]
    fn r4_negative_left_of_zero() {
        let r4 = &gram_ldlt_published()[9];
        assert!(r4.evaluate(&q(-1, 100)).unwrap().is_negative());
        let cert = interval_certificate(r4, &q(-1, 100), &q(1, 6)).unwrap();
        assert_eq!(cert.verdict, IntervalVerdict::Fails);
    }

    #[test]
    fn constants_are_positive() {
        let c = Rf::constant(q(511, 512));
        assert_eq!(interval_certificate(&c, &q(-5, 1), &q(7, 3)).unwrap().verdict, IntervalVerdict::Positive);
        let zero = Rf::zero();
        assert_eq!(interval_certificate(&zero, &q(0, 1), &q(1, 1)).unwrap().verdict, IntervalVerdict::Nonnegative);
    }

    #[test]
    fn pole_fails() {
        let f = Rf::new(Polynomial::one(), poly(&[(-1, 2), (1, 1)])).unwrap();
        assert_eq!(interval_certificate(&f, &q(0, 1), &q(1, 1)).unwrap().verdict, IntervalVerdict::Fails);
        assert_eq!(interval_certificate(&f, &q(1, 2), &q(1, 1)).unwrap().verdict, IntervalVerdict::Fails);
    }
}
