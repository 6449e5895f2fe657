use super::{ConstructError, FormValue, PartialForm, PartialProductTable};
use crate::axial::{subalgebra_closure, Algebra, BilinearForm};
use crate::catalog::{combo, dihedral, DihedralType};
use crate::linalg;
use crate::scalar::{q, Rational};

use super::m4a::axis_label;

pub fn m4b_labels() -> Vec<String> {
    let mut labels: Vec<String> = (1..=3).flat_map(|i| [axis_label(i, 1), axis_label(i, -1)]).collect();
    labels.push("a_rho".into());
    labels
}

/// The 7-dimensional algebra over `Q` with its form and six axes.
#[derive(Clone, Debug)]
pub struct M4b {
    pub algebra: Algebra<Rational>,
    pub form: BilinearForm<Rational>,
    pub axes: Vec<Vec<Rational>>,
}

/// Instantiates the 4B dihedral tables on every `⟨⟨a_i, a_±j⟩⟩` and the 2A
/// tables on every `⟨⟨a_i, a_-i⟩⟩`, all sharing one `a_rho`. Overlapping
/// entries must agree; the six axes must generate the whole space.
pub fn build_m4b() -> Result<M4b, ConstructError> {
    let labels = m4b_labels();
    let mut products = PartialProductTable::new(labels.clone());
    let mut form = PartialForm::new(labels.clone());
    let mut instantiate = |kind: DihedralType, image: &[String]| -> Result<(), ConstructError> {
        let d = dihedral(kind)?;
        let embed = |v: &[Rational]| {
            let terms: Vec<(&str, Rational)> = v.iter().zip(image).map(|(x, l)| (l.as_str(), x.clone())).collect();
            combo(&labels, &terms)
        };
        for x in 0..image.len() {
            for y in x..image.len() {
                products.set_labels(&image[x], &image[y], embed(d.algebra.product(x, y)))?;
                form.set_labels(&image[x], &image[y], FormValue(d.form.gram()[(x, y)].clone()))?;
            }
        }
        Ok(())
    };
    let rho = "a_rho".to_string();
    for i in 1..=3 {
        instantiate(DihedralType::TwoA, &[axis_label(i, 1), axis_label(i, -1), rho.clone()])?;
        for j in i + 1..=3 {
            for s in [1, -1] {
                // Dihedral basis a-1, a0, a1, a2, a_rho.
                let image = [axis_label(j, -s), axis_label(i, 1), axis_label(j, s), axis_label(i, -1), rho.clone()];
                instantiate(DihedralType::FourB, &image)?;
            }
        }
    }
    let algebra = products.into_algebra()?;
    let form = form.into_form()?;
    let axes: Vec<Vec<Rational>> = (0..6).map(|k| algebra.basis_vector(k)).collect();
    let closure = subalgebra_closure(&algebra, &axes);
    if closure.rank() != algebra.dim() {
        return Err(ConstructError::Verification(format!("axes generate only {} dimensions", closure.rank())));
    }
    // a_rho = a1 + a-1 - 8 a1·a-1
    let rho_def = linalg::sub(
        &linalg::add(&axes[0], &axes[1]),
        &linalg::scale(&q(8, 1), &algebra.mul(&axes[0], &axes[1])?),
    );
    if rho_def != algebra.e("a_rho") {
        return Err(ConstructError::Verification("a_rho differs from a1 + a-1 - 8 a1·a-1".into()));
    }
    Ok(M4b { algebra, form, axes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::combo;

    #[test]
    fn published_products() {
        let m = build_m4b().unwrap();
        let labels = m4b_labels();
        let alg = &m.algebra;
        let v = |terms: &[(&str, Rational)]| combo(&labels, terms);
        assert_eq!(
            alg.mul(&alg.e("a1"), &alg.e("a2")).unwrap(),
            v(&[("a1", q(1, 64)), ("a2", q(1, 64)), ("a-1", q(-1, 64)), ("a-2", q(-1, 64)), ("a_rho", q(1, 64))])
        );
        assert_eq!(
            alg.mul(&alg.e("a1"), &alg.e("a-1")).unwrap(),
            v(&[("a1", q(1, 8)), ("a-1", q(1, 8)), ("a_rho", q(-1, 8))])
        );
        assert!(alg.is_idempotent(&alg.e("a_rho")));
        assert_eq!(m.form.eval(&alg.e("a1"), &alg.e("a-3")).unwrap(), q(1, 64));
    }
}
