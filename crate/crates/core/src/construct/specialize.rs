use crate::axial::{Algebra, BilinearForm};
use crate::scalar::{Rational, RationalFunction, ScalarError};

/// Substitutes `t = t0` in every structure constant and form value.
pub fn specialize(
    alg: &Algebra<RationalFunction>,
    form: &BilinearForm<RationalFunction>,
    t0: &Rational,
) -> Result<(Algebra<Rational>, BilinearForm<Rational>), ScalarError> {
    Ok((alg.try_map(|x| x.evaluate(t0))?, form.try_map(|x| x.evaluate(t0))?))
}

pub fn specialize_vector(v: &[RationalFunction], t0: &Rational) -> Result<Vec<Rational>, ScalarError> {
    v.iter().map(|x| x.evaluate(t0)).collect()
}
