//! Checks shared by the acceptance gate and the standalone property suites.

#![allow(dead_code)]

use axia::axial::{axis_decomposition, miyamoto, verify_frobenius, Algebra, BilinearForm};
use axia::catalog::{dihedral, monster_rule, DihedralType};
use axia::construct::{build_m4b, specialize, specialize_vector, M4a};
use axia::linalg::{ldlt, LdltResult};
use axia::scalar::{q, Field, Rational};

/// An algebra with a form and a list of axes.
pub struct Case<S> {
    pub name: String,
    pub algebra: Algebra<S>,
    pub form: BilinearForm<S>,
    pub axes: Vec<Vec<S>>,
}

/// Every dihedral type and the 7-dimensional algebra.
pub fn exact_cases() -> Vec<Case<Rational>> {
    let mut cases: Vec<Case<Rational>> = DihedralType::ALL
        .iter()
        .map(|&k| {
            let d = dihedral(k).unwrap();
            Case { name: k.to_string(), algebra: d.algebra, form: d.form, axes: d.axes }
        })
        .collect();
    let m = build_m4b().unwrap();
    cases.push(Case { name: "m4b".into(), algebra: m.algebra, form: m.form, axes: m.axes });
    cases
}

/// Fails only where a structure constant of the family has a pole.
pub fn specialized_case(m: &M4a, t0: &Rational) -> Result<Case<Rational>, String> {
    let (algebra, form) = specialize(&m.algebra, &m.form, t0).map_err(|e| e.to_string())?;
    let axes = m.axes.iter().map(|a| specialize_vector(a, t0)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    Ok(Case { name: format!("m4a@{t0}"), algebra, form, axes })
}

pub fn frobenius_holds<S: Field>(c: &Case<S>) -> Result<(), String> {
    let r = verify_frobenius(&c.algebra, &c.form).map_err(|e| e.to_string())?;
    match r.passed() {
        true => Ok(()),
        false => Err(format!("{}: {} Frobenius violations", c.name, r.violations.len())),
    }
}

/// Distinct eigenspaces of every axis are orthogonal for the form.
pub fn eigenspaces_orthogonal<S: Field>(c: &Case<S>) -> Result<(), String> {
    let rule = monster_rule::<S>();
    for axis in &c.axes {
        let dec = axis_decomposition(&c.algebra, axis, rule.eigenvalues()).map_err(|e| e.to_string())?;
        for (i, u_space) in dec.spaces.iter().enumerate() {
            for v_space in &dec.spaces[i + 1..] {
                for u in u_space {
                    for v in v_space {
                        if !c.form.eval(u, v).map_err(|e| e.to_string())?.is_zero() {
                            return Err(format!("{}: eigenspaces of {} not orthogonal", c.name, c.algebra.describe(axis)));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// The Miyamoto involution of every axis is an involutive automorphism and an isometry.
pub fn miyamoto_involutions<S: Field>(c: &Case<S>) -> Result<(), String> {
    let rule = monster_rule::<S>();
    let odd = [S::from_rational(&q(1, 32))];
    for axis in &c.axes {
        let dec = axis_decomposition(&c.algebra, axis, rule.eigenvalues()).map_err(|e| e.to_string())?;
        let tau = miyamoto(&dec, &odd).map_err(|e| e.to_string())?;
        let label = c.algebra.describe(axis);
        if !tau.is_involution() || !tau.is_automorphism(&c.algebra) || !tau.is_isometry(&c.form) {
            return Err(format!("{}: Miyamoto involution of {label} fails", c.name));
        }
    }
    Ok(())
}

/// `L · D · Lᵀ` equals the input whenever the elimination completed.
pub fn reconstructs<S: Field>(name: &str, r: &LdltResult<S>, input: &axia::linalg::Matrix<S>) -> Result<(), String> {
    match !r.is_complete() || r.reconstruct() == *input {
        true => Ok(()),
        false => Err(format!("{name}: L D Lᵀ differs from the input")),
    }
}

pub fn gram_ldlt_reconstructs<S: Field>(c: &Case<S>) -> Result<(), String> {
    let r = ldlt(c.form.gram(), None).map_err(|e| e.to_string())?;
    reconstructs(&c.name, &r, c.form.gram())
}
