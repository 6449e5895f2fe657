use axia::axial::{axis_decomposition, verify_frobenius, verify_fusion};
use axia::catalog::monster_rule;
use axia::construct::{
    a1_eigenvectors, build_m4a, build_m4a_from, dependency_residuals, specialize, ConstructError, Representatives,
};
use axia::linalg::{self, determinant};
use axia::scalar::{q, RationalFunction};

#[test]
fn corrected_table_completes_and_passes_monster_fusion() {
    let m = build_m4a().unwrap();
    assert_eq!(m.algebra.dim(), 12);
    let rule = monster_rule::<RationalFunction>();
    for a in &m.axes {
        let dec = axis_decomposition(&m.algebra, a, rule.eigenvalues()).unwrap();
        assert!(dec.is_primitive());
        assert!(verify_fusion(&m.algebra, &dec, &rule).unwrap().passed());
    }
    let dec = axis_decomposition(&m.algebra, &m.axes[0], rule.eigenvalues()).unwrap();
    assert_eq!(dec.dims(), vec![1, 5, 4, 2]);
    assert!(verify_frobenius(&m.algebra, &m.form).unwrap().passed());
}

#[test]
fn symmetries_are_automorphisms_and_isometries() {
    let m = build_m4a().unwrap();
    for (name, g) in m.symmetry.generators() {
        assert!(g.is_automorphism(&m.algebra), "{name}");
        assert!(g.is_isometry(&m.form), "{name}");
    }
}

#[test]
fn a1_eigenvectors_confirmed() {
    let m = build_m4a().unwrap();
    let a1 = &m.axes[0];
    for (lambda, v) in a1_eigenvectors() {
        assert_eq!(m.algebra.mul(a1, &v).unwrap(), linalg::scale(&lambda, &v), "{}", m.algebra.describe(&v));
    }
}

#[test]
fn dependencies_hold() {
    let m = build_m4a().unwrap();
    assert!(dependency_residuals(&m).iter().all(|r| linalg::is_zero_vector(r)));
}

#[test]
fn printed_representatives_are_rejected() {
    let outcome = build_m4a_from(Representatives::AsPrinted);
    match outcome {
        Err(ConstructError::CompletionInconsistent { .. }) => {}
        Err(e) => panic!("unexpected error {e}"),
        Ok(m) => assert!(!verify_frobenius(&m.algebra, &m.form).unwrap().passed()),
    }
}

#[test]
fn determinant_at_one_twelfth() {
    let m = build_m4a().unwrap();
    let (_, form) = specialize(&m.algebra, &m.form, &q(1, 12)).unwrap();
    // -t^3 (6t-1)^3 (4t-9)^6 / (2^19 3^3) at t = 1/12, by direct substitution.
    assert_eq!(determinant(form.gram()).unwrap(), q(4826809, 2229025112064));
}
