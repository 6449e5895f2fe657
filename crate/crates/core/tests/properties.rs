//! Randomized invariants over the 12-dimensional family and its certificates.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use axia::certify::{gram_analysis, gram_ldlt_published, interval_certificate, ldlt_commutes_at, majorana_certify, GramAnalysis, IntervalVerdict};
use axia::construct::{build_m4a, M4a};
use axia::scalar::{q, Rational};

use common::*;

fn family() -> &'static M4a {
    static FAMILY: OnceLock<M4a> = OnceLock::new();
    FAMILY.get_or_init(|| build_m4a().unwrap())
}

fn analysis() -> &'static GramAnalysis {
    static ANALYSIS: OnceLock<GramAnalysis> = OnceLock::new();
    ANALYSIS.get_or_init(|| gram_analysis(&family().form).unwrap())
}

fn parameter() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=30).prop_map(|(n, d)| q(n, d))
}

fn specialized(t0: &Rational) -> Option<Case<Rational>> {
    specialized_case(family(), t0).ok()
}

fn vector(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-5i64..=5, 1i64..=4).prop_map(|(n, d)| q(n, d)), dim)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn form_is_associative_on_random_vectors(t0 in parameter(), u in vector(12), v in vector(12), w in vector(12)) {
        let c = specialized(&t0);
        prop_assume!(c.is_some());
        let c = c.unwrap();
        let left = c.form.eval(&c.algebra.mul(&u, &v).unwrap(), &w).unwrap();
        let right = c.form.eval(&u, &c.algebra.mul(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn symbolic_form_is_associative_on_random_vectors(u in vector(12), v in vector(12), w in vector(12)) {
        let m = family();
        let lift = |x: &[Rational]| x.iter().map(|c| axia::scalar::RationalFunction::constant(c.clone())).collect::<Vec<_>>();
        let (u, v, w) = (lift(&u), lift(&v), lift(&w));
        let left = m.form.eval(&m.algebra.mul(&u, &v).unwrap(), &w).unwrap();
        let right = m.form.eval(&u, &m.algebra.mul(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn gram_ldlt_reconstructs_at_random_parameters(t0 in parameter()) {
        let c = specialized(&t0);
        prop_assume!(c.is_some());
        prop_assert!(gram_ldlt_reconstructs(&c.unwrap()).is_ok());
    }

    #[test]
    fn ldlt_commutes_with_specialization(t0 in parameter()) {
        let commutes = ldlt_commutes_at(analysis(), &family().form, &t0).unwrap();
        prop_assert_ne!(commutes, Some(false));
    }

    #[test]
    fn interval_verdicts_agree_with_samples(
        k in 0usize..12,
        a in -40i64..=120,
        width in 1i64..=60,
        samples in prop::collection::vec(0i64..=64, 6),
    ) {
        let f = &gram_ldlt_published()[k];
        let (lower, upper) = (q(a, 240), q(a + width, 240));
        let cert = interval_certificate(f, &lower, &upper).unwrap();
        for s in samples {
            let x = lower.clone() + (upper.clone() - lower.clone()) * q(s, 64);
            match f.evaluate(&x) {
                Ok(value) => match cert.verdict {
                    IntervalVerdict::Positive => prop_assert!(value.is_positive(), "{} at {}", f, x),
                    IntervalVerdict::Nonnegative => prop_assert!(!value.is_negative(), "{} at {}", f, x),
                    IntervalVerdict::Fails => {}
                },
                Err(_) => prop_assert_eq!(cert.verdict, IntervalVerdict::Fails),
            }
        }
        if let (Some(lo), Some(hi)) = (&cert.lower_value, &cert.upper_value) {
            if lo.is_negative() || hi.is_negative() {
                prop_assert_eq!(cert.verdict, IntervalVerdict::Fails);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn miyamoto_involutions_at_random_parameters(t0 in parameter()) {
        let c = specialized(&t0);
        prop_assume!(c.is_some());
        let c = c.unwrap();
        prop_assume!(c.axes.iter().all(|a| c.algebra.is_idempotent(a)));
        let primitive = axia::axial::axis_decomposition(&c.algebra, &c.axes[0], axia::catalog::monster_rule::<Rational>().eigenvalues())
            .map(|d| d.is_primitive())
            .unwrap_or(false);
        prop_assume!(primitive);
        prop_assert_eq!(miyamoto_involutions(&c), Ok(()));
        prop_assert_eq!(eigenspaces_orthogonal(&c), Ok(()));
    }

    #[test]
    fn majorana_verdict_is_the_conjunction(t0 in parameter()) {
        prop_assume!(specialized(&t0).is_some());
        let v = majorana_certify(family(), &t0).unwrap();
        prop_assert_eq!(v.is_majorana, v.gram_pd && v.norton_psd);
        let inside = t0 > q(0, 1) && t0 < q(1, 6);
        prop_assert_eq!(v.gram_pd, inside);
    }
}
