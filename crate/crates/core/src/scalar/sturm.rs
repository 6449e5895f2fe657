use serde::Serialize;

use super::{Polynomial, Rational, ScalarError};

/// Distinct real roots of a polynomial on a closed interval `[lower, upper]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootCount {
    /// Roots strictly inside the interval.
    pub interior: usize,
    pub root_at_lower: bool,
    pub root_at_upper: bool,
}

/// Canonical Sturm chain `p, p', -rem(p, p'), ...` ending at the last nonzero remainder.
pub fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let mut seq = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let prev = seq.last().expect("nonempty");
        let (_, r) = prev.div_rem(&next).expect("nonzero divisor");
        seq.push(next);
        next = -r;
    }
    seq
}

fn sign_variations(seq: &[Polynomial], x: &Rational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Counts distinct real roots of `p` in `[lower, upper]`, separating endpoint roots.
///
/// Endpoint roots are divided out exactly before counting, so the interior count
/// is always taken between non-roots.
pub fn sturm_root_count(p: &Polynomial, lower: &Rational, upper: &Rational) -> Result<RootCount, ScalarError> {
    if p.is_zero() {
        return Err(ScalarError::ZeroPolynomial);
    }
    if lower >= upper {
        return Err(ScalarError::EmptyInterval);
    }
    let mut f = p.square_free();
    let root_at_lower = f.eval(lower).is_zero();
    if root_at_lower {
        f = f.exact_div(&Polynomial::linear_factor(lower))?;
    }
    let root_at_upper = f.eval(upper).is_zero();
    if root_at_upper {
        f = f.exact_div(&Polynomial::linear_factor(upper))?;
    }
    let seq = sturm_sequence(&f);
    let interior = sign_variations(&seq, lower) - sign_variations(&seq, upper);
    Ok(RootCount { interior, root_at_lower, root_at_upper })
}
