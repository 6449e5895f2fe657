//! Exact scalars: rationals, polynomials and rational functions in `t`.

mod poly;
mod ratfunc;
mod rational;
mod sturm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use poly::{poly, Polynomial};
pub use ratfunc::RationalFunction;
pub use rational::{q, Rational};
pub use sturm::{sturm_root_count, sturm_sequence, RootCount};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at t = {0}")]
    PoleAtPoint(Rational),
    #[error("zero polynomial has no root count")]
    ZeroPolynomial,
    #[error("interval is empty: lower endpoint must be below upper")]
    EmptyInterval,
    #[error("polynomial division left a remainder")]
    InexactDivision,
    #[error("not an exact rational: {0:?} (expected p or p/q)")]
    Parse(String),
}

/// Which coefficient field a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    Rationals,
    RationalFunctions,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldKind::Rationals => "Q",
            FieldKind::RationalFunctions => "Q(t)",
        })
    }
}

/// Exact field arithmetic shared by `Rational` and `RationalFunction`.
///
/// Values are always normalized, so `==` is field equality.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    const KIND: FieldKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(c: &Rational) -> Self;
    fn inv(&self) -> Result<Self, ScalarError>;
    fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError>;
    /// Polynomial degree bound of the value; 0 for rationals.
    fn degree(&self) -> usize;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n))
    }
}

impl Field for Rational {
    const KIND: FieldKind = FieldKind::Rationals;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_rational(c: &Rational) -> Self {
        c.clone()
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        self.recip()
    }
    fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Rational::checked_div(self, rhs)
    }
    fn degree(&self) -> usize {
        0
    }
}

impl Field for RationalFunction {
    const KIND: FieldKind = FieldKind::RationalFunctions;

    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn from_rational(c: &Rational) -> Self {
        RationalFunction::constant(c.clone())
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        self.recip()
    }
    fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        RationalFunction::checked_div(self, rhs)
    }
    fn degree(&self) -> usize {
        RationalFunction::degree(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rational() -> impl Strategy<Value = Rational> {
        (-60i64..60, 1i64..40).prop_map(|(n, d)| q(n, d))
    }

    fn polynomial() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(rational(), 0..5).prop_map(Polynomial::from_coeffs)
    }

    fn ratfunc() -> impl Strategy<Value = RationalFunction> {
        (polynomial(), polynomial())
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rational_function_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a - &a, RationalFunction::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), RationalFunction::one());
            }
        }

        #[test]
        fn normalization_is_idempotent(a in ratfunc()) {
            let again = RationalFunction::new(a.num().clone(), a.den().clone()).unwrap();
            prop_assert_eq!(&again, &a);
            prop_assert_eq!(a.den().leading().cloned(), Some(Rational::one()));
            prop_assert!(a.num().gcd(a.den()).degree().unwrap_or(0) == 0);
        }

        #[test]
        fn evaluation_is_a_ring_homomorphism(a in ratfunc(), b in ratfunc(), t0 in rational()) {
            if let (Ok(x), Ok(y)) = (a.evaluate(&t0), b.evaluate(&t0)) {
                prop_assert_eq!((&a * &b).evaluate(&t0).unwrap(), &x * &y);
                if let Ok(s) = (&a + &b).evaluate(&t0) {
                    prop_assert_eq!(s, &x + &y);
                }
            }
        }

        #[test]
        fn serde_round_trip_is_bit_exact(a in ratfunc()) {
            let s = serde_json::to_string(&a).unwrap();
            let back: RationalFunction = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
            }
        }
    }

    /// Sign-change bisection oracle for polynomials whose real roots are all rational
    /// and simple after square-free reduction: scan a fine rational grid and count
    /// exact zeros plus strict sign changes between consecutive grid points.
    fn grid_root_count(p: &Polynomial, lower: &Rational, upper: &Rational, steps: i64) -> usize {
        let width = upper - lower;
        let pts: Vec<Rational> = (1..steps).map(|k| lower + &(&width * &q(k, steps))).collect();
        let mut count = 0;
        let mut prev_sign: Option<bool> = None;
        for x in &pts {
            let v = p.eval(x);
            if v.is_zero() {
                count += 1;
                prev_sign = None;
                continue;
            }
            if let Some(s) = prev_sign {
                if s != v.is_positive() {
                    count += 1;
                }
            }
            prev_sign = Some(v.is_positive());
        }
        count
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10))]

        #[test]
        fn sturm_matches_grid_oracle(roots in prop::collection::vec(-12i64..12, 1..=6), scale in 1i64..5) {
            // Roots are multiples of 1/4 on a grid of step 1/8, so the oracle never
            // straddles two roots between samples and never misses a root.
            let p = roots.iter().fold(Polynomial::constant(q(scale, 1)), |acc, &r| {
                acc * Polynomial::linear_factor(&q(r, 4))
            });
            let (lo, hi) = (q(-25, 8), q(25, 8));
            let sturm = sturm_root_count(&p, &lo, &hi).unwrap();
            prop_assert_eq!(sturm.interior, grid_root_count(&p, &lo, &hi, 50));
        }
    }
}
