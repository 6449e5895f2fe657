use crate::axial::{index_set, FusionRule, GradingAssignment};
use crate::scalar::{q, Field, RationalFunction};

/// Eigenvalues `1, 0, 1/4, 1/32` in this order.
pub fn monster_rule<S: Field>() -> FusionRule<S> {
    let eigenvalues = [q(1, 1), q(0, 1), q(1, 4), q(1, 32)].iter().map(S::from_rational).collect();
    FusionRule::new(eigenvalues, |i, j| match (i, j) {
        (0, 0) => index_set(&[0]),
        (0, 1) => index_set(&[]),
        (1, 1) => index_set(&[1]),
        (0 | 1, k) => index_set(&[k]),
        (2, 2) => index_set(&[0, 1]),
        (2, 3) => index_set(&[3]),
        _ => index_set(&[0, 1, 2]),
    })
    .expect("distinct eigenvalues")
}

/// Eigenvalues `1, 0, 1/2`.
pub fn jordan_half_rule<S: Field>() -> FusionRule<S> {
    let eigenvalues = [q(1, 1), q(0, 1), q(1, 2)].iter().map(S::from_rational).collect();
    FusionRule::new(eigenvalues, |i, j| match (i, j) {
        (0, 0) => index_set(&[0]),
        (0, 1) => index_set(&[]),
        (1, 1) => index_set(&[1]),
        (2, 2) => index_set(&[0, 1]),
        _ => index_set(&[2]),
    })
    .expect("distinct eigenvalues")
}

/// The rule of the 4A axes of the 12-dimensional algebra: eigenvalues
/// `1, 0, 1/2, 3/8, t` with `t` symbolic.
pub fn f4a_rule() -> FusionRule<RationalFunction> {
    let mut eigenvalues: Vec<RationalFunction> =
        [q(1, 1), q(0, 1), q(1, 2), q(3, 8)].iter().map(RationalFunction::from_rational).collect();
    eigenvalues.push(RationalFunction::t());
    FusionRule::new(eigenvalues, |i, j| match (i, j) {
        (0, 0) => index_set(&[0]),
        (0, 1) => index_set(&[]),
        (1, 1) => index_set(&[1]),
        (0 | 1, k) => index_set(&[k]),
        (2, 2) => index_set(&[0, 1]),
        (2, k) => index_set(&[k]),
        (3, 4) => index_set(&[]),
        _ => index_set(&[0, 1, 2]),
    })
    .expect("distinct eigenvalues")
}

/// `C₂` grading of the Monster rule: `1/32` odd, everything else even.
pub fn monster_grading() -> GradingAssignment {
    GradingAssignment::elementary_abelian(1, &["1", "a"], vec![0, 0, 0, 1])
}

/// `C₂ × C₂` grading of the 4A rule: `3/8 ↦ a`, `t ↦ b`, nothing graded by `ab`.
pub fn f4a_grading() -> GradingAssignment {
    GradingAssignment::elementary_abelian(2, &["1", "a", "b", "ab"], vec![0, 0, 0, 1, 2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axial::verify_grading;
    use crate::scalar::Rational;

    fn rq(n: i64, d: i64) -> Rational {
        q(n, d)
    }

    #[test]
    fn monster_products() {
        let m = monster_rule::<Rational>();
        assert_eq!(m.fuse(&rq(1, 32), &rq(1, 32)).unwrap(), vec![rq(1, 1), rq(0, 1), rq(1, 4)]);
        assert_eq!(m.fuse(&rq(1, 4), &rq(1, 4)).unwrap(), vec![rq(1, 1), rq(0, 1)]);
        assert_eq!(m.fuse(&rq(0, 1), &rq(1, 4)).unwrap(), vec![rq(1, 4)]);
        assert!(m.fuse(&rq(1, 1), &rq(0, 1)).unwrap().is_empty());
        assert_eq!(m.fuse(&rq(1, 4), &rq(1, 32)).unwrap(), vec![rq(1, 32)]);
    }

    #[test]
    fn jordan_products() {
        let j = jordan_half_rule::<Rational>();
        assert_eq!(j.fuse(&rq(1, 2), &rq(1, 2)).unwrap(), vec![rq(1, 1), rq(0, 1)]);
        assert_eq!(j.fuse(&rq(0, 1), &rq(1, 2)).unwrap(), vec![rq(1, 2)]);
    }

    #[test]
    fn f4a_products() {
        let f = f4a_rule();
        let t = RationalFunction::t();
        let c = |n, d| RationalFunction::constant(q(n, d));
        let even = vec![c(1, 1), c(0, 1), c(1, 2)];
        assert_eq!(f.fuse(&t, &t).unwrap(), even);
        assert_eq!(f.fuse(&c(3, 8), &c(3, 8)).unwrap(), even);
        assert!(f.fuse(&c(3, 8), &t).unwrap().is_empty());
        assert_eq!(f.fuse(&c(1, 2), &t).unwrap(), vec![t.clone()]);
        assert_eq!(f.fuse(&c(1, 2), &c(1, 2)).unwrap(), vec![c(1, 1), c(0, 1)]);
    }

    #[test]
    fn gradings() {
        assert!(verify_grading(&monster_rule::<Rational>(), &monster_grading()));
        assert!(verify_grading(&f4a_rule(), &f4a_grading()));
        let classes = f4a_grading().classes(&f4a_rule());
        assert_eq!(classes[2], vec![RationalFunction::t()]);
        assert!(classes[3].is_empty());
        // 1/4 odd and 1/32 even contradicts 1/32 * 1/32 ∋ 1/4.
        let wrong = GradingAssignment::elementary_abelian(1, &["1", "a"], vec![0, 0, 1, 0]);
        assert!(!verify_grading(&monster_rule::<Rational>(), &wrong));
        // Merging 3/8 and t leaves a C₂ grading; moving 1/2 out of the identity
        // class breaks 1/2 * 3/8 = {3/8}.
        let merged = GradingAssignment::elementary_abelian(2, &["1", "a", "b", "ab"], vec![0, 0, 0, 1, 1]);
        assert!(verify_grading(&f4a_rule(), &merged));
        let wrong = GradingAssignment::elementary_abelian(2, &["1", "a", "b", "ab"], vec![0, 0, 1, 1, 2]);
        assert!(!verify_grading(&f4a_rule(), &wrong));
    }
}
