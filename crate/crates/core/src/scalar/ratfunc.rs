use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{Polynomial, Rational, ScalarError};

/// Element of the field of rational functions `Q(t)`.
///
/// Always normalized: `gcd(num, den) = 1`, `den` monic, and zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRationalFunction")]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

#[derive(Deserialize)]
struct RawRationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl TryFrom<RawRationalFunction> for RationalFunction {
    type Error = ScalarError;

    fn try_from(raw: RawRationalFunction) -> Result<Self, Self::Error> {
        RationalFunction::new(raw.num, raw.den)
    }
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
            }
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip().expect("nonzero leading coefficient");
            RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        RationalFunction::from_poly(Polynomial::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        RationalFunction::from_poly(Polynomial::t())
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction::from_poly(Polynomial::constant(c))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `Some(c)` when the function is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.is_one()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), true) => Some(self.num.coeff(0)),
            _ => None,
        }
    }

    /// Larger of the numerator and denominator degrees.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn evaluate(&self, t0: &Rational) -> Result<Rational, ScalarError> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return Err(ScalarError::PoleAtPoint(t0.clone()));
        }
        self.num.eval(t0).checked_div(&d)
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        let combine = |a: &Polynomial, b: &Polynomial| if negate { a - b } else { a + b };
        if self.den == rhs.den {
            let num = combine(&self.num, &rhs.num);
            if self.den.is_one() {
                return RationalFunction { num, den: Polynomial::one() };
            }
            return Self::normalized(num, self.den.clone());
        }
        let num = combine(&(&self.num * &rhs.den), &(&rhs.num * &self.den));
        Self::normalized(num, &self.den * &rhs.den)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction { num: &self.num * &rhs.num, den: Polynomial::one() };
        }
        Self::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        RationalFunction::constant(c)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction::from_poly(p)
    }
}

macro_rules! rf_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b RationalFunction> for &'a RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &'b RationalFunction) -> RationalFunction {
                let f: fn(&RationalFunction, &RationalFunction) -> RationalFunction = $body;
                f(self, rhs)
            }
        }
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $tr<&'b RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &'b RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<RationalFunction> for &'a RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                self.$method(&rhs)
            }
        }
    };
}

rf_binop!(Add, add, |a, b| a.add_impl(b, false));
rf_binop!(Sub, sub, |a, b| a.add_impl(b, true));
rf_binop!(Mul, mul, |a, b| a.mul_impl(b));
// Panics on a zero divisor; use `checked_div` for fallible code.
rf_binop!(Div, div, |a, b| a.checked_div(b).expect("division by the zero rational function"));

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -self.clone()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let paren = |p: &Polynomial| p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        match paren(&self.num) {
            true => write!(f, "({})", self.num)?,
            false => write!(f, "{}", self.num)?,
        }
        match paren(&self.den) {
            true => write!(f, "/({})", self.den),
            false => write!(f, "/{}", self.den),
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{poly, q};

    fn rf(num: &[(i64, i64)], den: &[(i64, i64)]) -> RationalFunction {
        RationalFunction::new(poly(num), poly(den)).unwrap()
    }

    #[test]
    fn gcd_cancellation() {
        // (t^2 - 1/36)/(t - 1/6) = t + 1/6
        let f = rf(&[(-1, 36), (0, 1), (1, 1)], &[(-1, 6), (1, 1)]);
        assert_eq!(f, RationalFunction::from_poly(poly(&[(1, 6), (1, 1)])));
    }

    #[test]
    fn inverse_is_exact() {
        let f = RationalFunction::from_poly(poly(&[(-1, 1), (6, 1)]));
        assert_eq!(&f * &f.recip().unwrap(), RationalFunction::one());
        assert!(RationalFunction::zero().recip().is_err());
    }

    #[test]
    fn denominator_made_monic() {
        let f = rf(&[(1, 1)], &[(0, 1), (2, 1)]);
        assert_eq!(f.den(), &Polynomial::t());
        assert_eq!(f.num(), &poly(&[(1, 2)]));
    }

    #[test]
    fn evaluation_reports_poles() {
        let f = rf(&[(1, 1)], &[(-1, 6), (1, 1)]);
        assert_eq!(f.evaluate(&q(1, 3)).unwrap(), q(6, 1));
        assert!(matches!(f.evaluate(&q(1, 6)), Err(ScalarError::PoleAtPoint(_))));
    }

    #[test]
    fn serde_round_trip_normalizes() {
        let f = rf(&[(1, 1)], &[(0, 1), (2, 1)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"num":["1/2"],"den":["0","1"]}"#);
        let back: RationalFunction = serde_json::from_str(r#"{"num":["2"],"den":["0","4"]}"#).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<RationalFunction>(r#"{"num":["1"],"den":[]}"#).is_err());
    }
}
