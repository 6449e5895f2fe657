use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{combo, monster_rule};
use crate::axial::{
    axis_decomposition, miyamoto, verify_frobenius, verify_fusion, Algebra, AxialError, BilinearForm,
};
use crate::construct::{complete_table, permutation, ConstructError, FormValue, PartialForm, PartialProductTable, SymmetrySet};
use crate::linalg;
use crate::scalar::{q, Rational};

/// The eight two-generated algebras of Monster type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DihedralType {
    #[serde(rename = "2A")]
    TwoA,
    #[serde(rename = "2B")]
    TwoB,
    #[serde(rename = "3A")]
    ThreeA,
    #[serde(rename = "3C")]
    ThreeC,
    #[serde(rename = "4A")]
    FourA,
    #[serde(rename = "4B")]
    FourB,
    #[serde(rename = "5A")]
    FiveA,
    #[serde(rename = "6A")]
    SixA,
}

impl DihedralType {
    pub const ALL: [DihedralType; 8] = [
        DihedralType::TwoA,
        DihedralType::TwoB,
        DihedralType::ThreeA,
        DihedralType::ThreeC,
        DihedralType::FourA,
        DihedralType::FourB,
        DihedralType::FiveA,
        DihedralType::SixA,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DihedralType::TwoA => "2A",
            DihedralType::TwoB => "2B",
            DihedralType::ThreeA => "3A",
            DihedralType::ThreeC => "3C",
            DihedralType::FourA => "4A",
            DihedralType::FourB => "4B",
            DihedralType::FiveA => "5A",
            DihedralType::SixA => "6A",
        }
    }

    /// Number of axes, the `N` of type `NX`.
    pub fn n_axes(self) -> usize {
        self.axis_indices().len()
    }

    /// Axis subscripts in basis order; `a_i` and `a_{i+N}` coincide.
    pub fn axis_indices(self) -> Vec<i64> {
        match self {
            DihedralType::TwoA | DihedralType::TwoB => vec![0, 1],
            DihedralType::ThreeA | DihedralType::ThreeC => vec![-1, 0, 1],
            DihedralType::FourA | DihedralType::FourB => vec![-1, 0, 1, 2],
            DihedralType::FiveA => vec![-2, -1, 0, 1, 2],
            DihedralType::SixA => vec![-2, -1, 0, 1, 2, 3],
        }
    }

    pub fn extra_basis(self) -> &'static [&'static str] {
        match self {
            DihedralType::TwoA | DihedralType::FourB => &["a_rho"],
            DihedralType::TwoB | DihedralType::ThreeC => &[],
            DihedralType::ThreeA => &["u_rho"],
            DihedralType::FourA => &["v_rho"],
            DihedralType::FiveA => &["w_rho"],
            DihedralType::SixA => &["a_rho", "u_rho"],
        }
    }

    pub fn labels(self) -> Vec<String> {
        let axes = self.axis_indices().into_iter().map(|i| format!("a{i}"));
        axes.chain(self.extra_basis().iter().map(|s| s.to_string())).collect()
    }

    pub fn dim(self) -> usize {
        self.n_axes() + self.extra_basis().len()
    }

    fn axis_label(self, i: i64) -> String {
        let n = self.n_axes() as i64;
        let found = self.axis_indices().into_iter().find(|&k| (k - i).rem_euclid(n) == 0);
        format!("a{}", found.expect("every residue has an axis"))
    }

    /// Basis permutation induced by `a_i ↦ a_{f(i)}`, extra vectors fixed.
    fn axis_permutation(self, f: impl Fn(i64) -> i64) -> Vec<usize> {
        let labels = self.labels();
        let pos = |l: &str| labels.iter().position(|x| x == l).expect("label exists");
        let axes = self.axis_indices();
        (0..labels.len())
            .map(|k| match axes.get(k) {
                Some(&i) => pos(&self.axis_label(f(i))),
                None => k,
            })
            .collect()
    }

    /// The dihedral group generated by `a_i ↦ a_{-i}` and `a_i ↦ a_{1-i}`.
    pub fn symmetry(self) -> SymmetrySet<Rational> {
        SymmetrySet::new()
            .with("tau0", permutation(&self.axis_permutation(|i| -i)))
            .with("swap", permutation(&self.axis_permutation(|i| 1 - i)))
    }
}

impl fmt::Display for DihedralType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DihedralType {
    type Err = ConstructError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DihedralType::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ConstructError::UnknownLabel(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct ReferenceEigenvector {
    pub eigenvalue: Rational,
    pub vector: Vec<Rational>,
}

/// A completed dihedral algebra with its form, axes and the published
/// eigenvectors of `a0`.
#[derive(Clone, Debug)]
pub struct DihedralAlgebra {
    pub kind: DihedralType,
    pub algebra: Algebra<Rational>,
    pub form: BilinearForm<Rational>,
    pub axes: Vec<Vec<Rational>>,
    pub reference_eigenvectors: Vec<ReferenceEigenvector>,
}

struct Seeds {
    products: Vec<(&'static str, &'static str, Vec<(&'static str, Rational)>)>,
    form: Vec<(&'static str, &'static str, Rational)>,
}

/// Representative products and form values; the rest follows by symmetry.
fn seeds(kind: DihedralType) -> Seeds {
    use DihedralType::*;
    let (products, form) = match kind {
        TwoA => (
            vec![
                ("a0", "a1", vec![("a0", q(1, 8)), ("a1", q(1, 8)), ("a_rho", q(-1, 8))]),
                ("a0", "a_rho", vec![("a0", q(1, 8)), ("a_rho", q(1, 8)), ("a1", q(-1, 8))]),
                ("a_rho", "a_rho", vec![("a_rho", q(1, 1))]),
            ],
            vec![("a0", "a1", q(1, 8)), ("a0", "a_rho", q(1, 8)), ("a_rho", "a_rho", q(1, 1))],
        ),
        TwoB => (vec![("a0", "a1", vec![])], vec![("a0", "a1", q(0, 1))]),
        ThreeA => (
            vec![
                ("a0", "a1", vec![("a0", q(1, 16)), ("a1", q(1, 16)), ("a-1", q(1, 32)), ("u_rho", q(-135, 2048))]),
                ("a0", "u_rho", vec![("a0", q(2, 9)), ("a1", q(-1, 9)), ("a-1", q(-1, 9)), ("u_rho", q(5, 32))]),
                ("u_rho", "u_rho", vec![("u_rho", q(1, 1))]),
            ],
            vec![("a0", "a1", q(13, 256)), ("a0", "u_rho", q(1, 4)), ("u_rho", "u_rho", q(8, 5))],
        ),
        ThreeC => (
            vec![("a0", "a1", vec![("a0", q(1, 64)), ("a1", q(1, 64)), ("a-1", q(-1, 64))])],
            vec![("a0", "a1", q(1, 64))],
        ),
        FourA => (
            vec![
                (
                    "a0",
                    "a1",
                    vec![("a0", q(3, 64)), ("a1", q(3, 64)), ("a2", q(1, 64)), ("a-1", q(1, 64)), ("v_rho", q(-3, 64))],
                ),
                (
                    "a0",
                    "v_rho",
                    vec![("a0", q(5, 16)), ("a1", q(-1, 8)), ("a2", q(-1, 16)), ("a-1", q(-1, 8)), ("v_rho", q(3, 16))],
                ),
                ("v_rho", "v_rho", vec![("v_rho", q(1, 1))]),
                ("a0", "a2", vec![]),
            ],
            vec![("a0", "a1", q(1, 32)), ("a0", "a2", q(0, 1)), ("a0", "v_rho", q(3, 8)), ("v_rho", "v_rho", q(2, 1))],
        ),
        FourB => (
            vec![
                (
                    "a0",
                    "a1",
                    vec![("a0", q(1, 64)), ("a1", q(1, 64)), ("a-1", q(-1, 64)), ("a2", q(-1, 64)), ("a_rho", q(1, 64))],
                ),
                ("a0", "a2", vec![("a0", q(1, 8)), ("a2", q(1, 8)), ("a_rho", q(-1, 8))]),
                ("a0", "a_rho", vec![("a0", q(1, 8)), ("a_rho", q(1, 8)), ("a2", q(-1, 8))]),
                ("a_rho", "a_rho", vec![("a_rho", q(1, 1))]),
            ],
            vec![("a0", "a1", q(1, 64)), ("a0", "a2", q(1, 8)), ("a0", "a_rho", q(1, 8)), ("a_rho", "a_rho", q(1, 1))],
        ),
        FiveA => {
            let w2 = q(175, 1 << 19);
            (
                vec![
                    (
                        "a0",
                        "a1",
                        vec![
                            ("a0", q(3, 128)),
                            ("a1", q(3, 128)),
                            ("a2", q(-1, 128)),
                            ("a-1", q(-1, 128)),
                            ("a-2", q(-1, 128)),
                            ("w_rho", q(1, 1)),
                        ],
                    ),
                    (
                        "a0",
                        "a2",
                        vec![
                            ("a0", q(3, 128)),
                            ("a2", q(3, 128)),
                            ("a1", q(-1, 128)),
                            ("a-1", q(-1, 128)),
                            ("a-2", q(-1, 128)),
                            ("w_rho", q(-1, 1)),
                        ],
                    ),
                    (
                        "a0",
                        "w_rho",
                        vec![
                            ("a1", q(7, 4096)),
                            ("a-1", q(7, 4096)),
                            ("a2", q(-7, 4096)),
                            ("a-2", q(-7, 4096)),
                            ("w_rho", q(7, 32)),
                        ],
                    ),
                    (
                        "w_rho",
                        "w_rho",
                        ["a-2", "a-1", "a0", "a1", "a2"].into_iter().map(|a| (a, w2.clone())).collect(),
                    ),
                ],
                vec![
                    ("a0", "a1", q(3, 128)),
                    ("a0", "a2", q(3, 128)),
                    ("a0", "w_rho", q(0, 1)),
                    ("w_rho", "w_rho", q(875, 1 << 19)),
                ],
            )
        }
        SixA => (
            vec![
                (
                    "a0",
                    "a1",
                    vec![
                        ("a0", q(1, 64)),
                        ("a1", q(1, 64)),
                        ("a-2", q(-1, 64)),
                        ("a-1", q(-1, 64)),
                        ("a2", q(-1, 64)),
                        ("a3", q(-1, 64)),
                        ("a_rho", q(1, 64)),
                        ("u_rho", q(45, 2048)),
                    ],
                ),
                ("a0", "a2", vec![("a0", q(1, 16)), ("a2", q(1, 16)), ("a-2", q(1, 32)), ("u_rho", q(-135, 2048))]),
                ("a0", "u_rho", vec![("a0", q(2, 9)), ("a2", q(-1, 9)), ("a-2", q(-1, 9)), ("u_rho", q(5, 32))]),
                ("a0", "a3", vec![("a0", q(1, 8)), ("a3", q(1, 8)), ("a_rho", q(-1, 8))]),
                ("a0", "a_rho", vec![("a0", q(1, 8)), ("a_rho", q(1, 8)), ("a3", q(-1, 8))]),
                ("a_rho", "u_rho", vec![]),
                ("a_rho", "a_rho", vec![("a_rho", q(1, 1))]),
                ("u_rho", "u_rho", vec![("u_rho", q(1, 1))]),
            ],
            vec![
                ("a0", "a1", q(5, 256)),
                ("a0", "a2", q(13, 256)),
                ("a0", "a3", q(1, 8)),
                ("a0", "a_rho", q(1, 8)),
                ("a0", "u_rho", q(1, 4)),
                ("a_rho", "u_rho", q(0, 1)),
                ("u_rho", "u_rho", q(8, 5)),
                ("a_rho", "a_rho", q(1, 1)),
            ],
        ),
    };
    Seeds { products, form }
}

/// Eigenvectors of `a0` other than `a0` itself, as published.
fn reference_terms(kind: DihedralType) -> Vec<(Rational, Vec<(&'static str, Rational)>)> {
    use DihedralType::*;
    let zero = || q(0, 1);
    let quarter = || q(1, 4);
    let odd = || q(1, 32);
    let diff = |x: &'static str, y: &'static str| vec![(x, q(1, 1)), (y, q(-1, 1))];
    match kind {
        TwoA => vec![
            (zero(), vec![("a1", q(1, 1)), ("a_rho", q(1, 1)), ("a0", q(-1, 4))]),
            (quarter(), diff("a1", "a_rho")),
        ],
        TwoB => vec![(zero(), vec![("a1", q(1, 1))])],
        ThreeA => vec![
            (zero(), vec![("u_rho", q(1, 1)), ("a0", q(-10, 27)), ("a1", q(32, 27)), ("a-1", q(32, 27))]),
            (quarter(), vec![("u_rho", q(1, 1)), ("a0", q(-8, 45)), ("a1", q(-32, 45)), ("a-1", q(-32, 45))]),
            (odd(), diff("a1", "a-1")),
        ],
        ThreeC => vec![
            (zero(), vec![("a1", q(1, 1)), ("a-1", q(1, 1)), ("a0", q(-1, 32))]),
            (odd(), diff("a1", "a-1")),
        ],
        FourA => vec![
            (zero(), vec![("v_rho", q(1, 1)), ("a0", q(-1, 2)), ("a1", q(2, 1)), ("a-1", q(2, 1))]),
            (zero(), vec![("a2", q(1, 1))]),
            (
                quarter(),
                vec![("v_rho", q(1, 1)), ("a0", q(-1, 3)), ("a1", q(-2, 3)), ("a-1", q(-2, 3)), ("a2", q(-1, 3))],
            ),
            (odd(), diff("a1", "a-1")),
        ],
        FourB => vec![
            (
                zero(),
                vec![("a1", q(1, 1)), ("a-1", q(1, 1)), ("a0", q(-1, 32)), ("a_rho", q(-1, 8)), ("a2", q(1, 8))],
            ),
            (zero(), vec![("a2", q(1, 1)), ("a_rho", q(1, 1)), ("a0", q(-1, 4))]),
            (quarter(), diff("a2", "a_rho")),
            (odd(), diff("a1", "a-1")),
        ],
        FiveA => vec![
            (
                zero(),
                vec![
                    ("w_rho", q(1, 1)),
                    ("a0", q(3, 512)),
                    ("a1", q(-15, 128)),
                    ("a-1", q(-15, 128)),
                    ("a2", q(-1, 128)),
                    ("a-2", q(-1, 128)),
                ],
            ),
            (
                zero(),
                vec![
                    ("w_rho", q(1, 1)),
                    ("a0", q(-3, 512)),
                    ("a1", q(1, 128)),
                    ("a-1", q(1, 128)),
                    ("a2", q(15, 128)),
                    ("a-2", q(15, 128)),
                ],
            ),
            (
                quarter(),
                vec![("w_rho", q(1, 1)), ("a1", q(1, 128)), ("a-1", q(1, 128)), ("a2", q(-1, 128)), ("a-2", q(-1, 128))],
            ),
            (odd(), diff("a1", "a-1")),
            (odd(), diff("a2", "a-2")),
        ],
        SixA => vec![
            (
                zero(),
                vec![
                    ("u_rho", q(1, 1)),
                    ("a0", q(2, 45)),
                    ("a1", q(-256, 45)),
                    ("a-1", q(-256, 45)),
                    ("a2", q(-32, 45)),
                    ("a-2", q(-32, 45)),
                    ("a3", q(-32, 45)),
                    ("a_rho", q(32, 45)),
                ],
            ),
            (zero(), vec![("a3", q(1, 1)), ("a_rho", q(1, 1)), ("a0", q(-1, 4))]),
            (zero(), vec![("u_rho", q(1, 1)), ("a0", q(-10, 27)), ("a2", q(32, 27)), ("a-2", q(32, 27))]),
            (
                quarter(),
                vec![
                    ("u_rho", q(1, 1)),
                    ("a0", q(-8, 45)),
                    ("a2", q(-32, 45)),
                    ("a-2", q(-32, 45)),
                    ("a3", q(-32, 45)),
                    ("a_rho", q(32, 45)),
                ],
            ),
            (quarter(), diff("a3", "a_rho")),
            (odd(), diff("a1", "a-1")),
            (odd(), diff("a2", "a-2")),
        ],
    }
}

/// Builds the full product table and form of a dihedral type by completing the
/// representative entries under the dihedral symmetry.
pub fn dihedral(kind: DihedralType) -> Result<DihedralAlgebra, ConstructError> {
    let labels = kind.labels();
    let group = kind.symmetry().group(64)?;
    let seeds = seeds(kind);
    let mut products = PartialProductTable::new(labels.clone());
    let mut form = PartialForm::new(labels.clone());
    for i in kind.axis_indices() {
        let a = format!("a{i}");
        products.set_labels(&a, &a, combo(&labels, &[(a.as_str(), q(1, 1))]))?;
        form.set_labels(&a, &a, FormValue(q(1, 1)))?;
    }
    for (x, y, terms) in &seeds.products {
        products.set_labels(x, y, combo(&labels, terms))?;
    }
    for (x, y, value) in seeds.form {
        form.set_labels(x, y, FormValue(value))?;
    }
    let algebra = complete_table(&products, &group)?.into_algebra()?;
    let form = complete_table(&form, &group)?.into_form()?;
    let axes = kind.axis_indices().iter().map(|i| algebra.e(&format!("a{i}"))).collect();
    let reference_eigenvectors = reference_terms(kind)
        .into_iter()
        .map(|(eigenvalue, terms)| ReferenceEigenvector { eigenvalue, vector: combo(&labels, &terms) })
        .collect();
    Ok(DihedralAlgebra { kind, algebra, form, axes, reference_eigenvectors })
}

/// Outcome of the axial checks on one dihedral algebra.
#[derive(Clone, Debug, Serialize)]
pub struct DihedralReport {
    pub kind: DihedralType,
    pub dim: usize,
    pub primitive_axes: usize,
    pub fusion_violations: usize,
    pub frobenius_violations: usize,
    pub reference_eigenvectors_confirmed: usize,
    pub reference_eigenvectors_total: usize,
    /// Size of the orbit of `{a0, a1}` under the two Miyamoto involutions.
    pub axis_orbit: usize,
}

impl DihedralReport {
    pub fn passed(&self) -> bool {
        self.primitive_axes == self.kind.n_axes()
            && self.fusion_violations == 0
            && self.frobenius_violations == 0
            && self.reference_eigenvectors_confirmed == self.reference_eigenvectors_total
            && self.axis_orbit == self.kind.n_axes()
    }
}

pub fn verify_dihedral(d: &DihedralAlgebra) -> Result<DihedralReport, ConstructError> {
    let alg = &d.algebra;
    let rule = monster_rule::<Rational>();
    let mut primitive_axes = 0;
    let mut fusion_violations = 0;
    for a in &d.axes {
        let dec = axis_decomposition(alg, a, rule.eigenvalues())?;
        primitive_axes += usize::from(dec.is_primitive());
        fusion_violations += verify_fusion(alg, &dec, &rule)?.violations.len();
    }
    let frobenius_violations = verify_frobenius(alg, &d.form)?.violations.len();
    let a0 = alg.e("a0");
    let confirmed = d
        .reference_eigenvectors
        .iter()
        .filter(|r| alg.mul_unchecked(&a0, &r.vector) == linalg::scale(&r.eigenvalue, &r.vector))
        .count();
    Ok(DihedralReport {
        kind: d.kind,
        dim: alg.dim(),
        primitive_axes,
        fusion_violations,
        frobenius_violations,
        reference_eigenvectors_confirmed: confirmed,
        reference_eigenvectors_total: d.reference_eigenvectors.len(),
        axis_orbit: axis_orbit(d)?,
    })
}

/// Number of distinct images of `a0` and `a1` under `⟨τ(a0), τ(a1)⟩`.
pub fn axis_orbit(d: &DihedralAlgebra) -> Result<usize, ConstructError> {
    let alg = &d.algebra;
    let eigenvalues = monster_rule::<Rational>().eigenvalues().to_vec();
    let odd = [q(1, 32)];
    let mut sym = SymmetrySet::new();
    for name in ["a0", "a1"] {
        let dec = axis_decomposition(alg, &alg.e(name), &eigenvalues)?;
        sym = sym.with(name, miyamoto(&dec, &odd)?);
    }
    let mut orbit: Vec<Vec<Rational>> = Vec::new();
    for g in sym.group(64)? {
        for name in ["a0", "a1"] {
            let image = g.apply(&alg.e(name));
            if !orbit.contains(&image) {
                orbit.push(image);
            }
        }
    }
    Ok(orbit.len())
}

/// Whether `x ↦ images[x]` is an injective algebra homomorphism `small → big`.
pub fn embeds(small: &Algebra<Rational>, big: &Algebra<Rational>, images: &[Vec<Rational>]) -> Result<bool, AxialError> {
    if images.len() != small.dim() {
        return Err(AxialError::DimensionMismatch { expected: small.dim(), found: images.len() });
    }
    if linalg::rank(&linalg::Matrix::from_rows(images.to_vec())?) != small.dim() {
        return Ok(false);
    }
    let map = |v: &[Rational]| {
        let mut out = vec![Rational::zero(); big.dim()];
        for (c, img) in v.iter().zip(images) {
            linalg::add_scaled(&mut out, c, img);
        }
        out
    };
    for i in 0..small.dim() {
        for j in i..small.dim() {
            if map(small.product(i, j)) != big.mul(&images[i], &images[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axial::{restrict, subalgebra_closure};

    #[test]
    fn catalog_dimensions() {
        let dims: Vec<usize> = DihedralType::ALL.iter().map(|t| t.dim()).collect();
        assert_eq!(dims, vec![3, 2, 4, 3, 5, 5, 6, 8]);
        assert_eq!("6a".parse::<DihedralType>().unwrap(), DihedralType::SixA);
        assert!("7A".parse::<DihedralType>().is_err());
    }

    #[test]
    fn published_entries() {
        let two_a = dihedral(DihedralType::TwoA).unwrap();
        let alg = &two_a.algebra;
        assert_eq!(alg.mul(&alg.e("a0"), &alg.e("a1")).unwrap(), vec![q(1, 8), q(1, 8), q(-1, 8)]);

        let three_a = dihedral(DihedralType::ThreeA).unwrap();
        let (a0, u) = (three_a.algebra.e("a0"), three_a.algebra.e("u_rho"));
        assert_eq!(three_a.form.eval(&a0, &u).unwrap(), q(1, 4));
        assert_eq!(three_a.form.eval(&u, &u).unwrap(), q(8, 5));

        let five_a = dihedral(DihedralType::FiveA).unwrap();
        let w = five_a.algebra.e("w_rho");
        let c = q(25 * 7, 1 << 19);
        assert_eq!(five_a.algebra.mul(&w, &w).unwrap(), vec![c.clone(), c.clone(), c.clone(), c.clone(), c, q(0, 1)]);

        let four_a = dihedral(DihedralType::FourA).unwrap();
        let (a0, a2) = (four_a.algebra.e("a0"), four_a.algebra.e("a2"));
        assert!(linalg::is_zero_vector(&four_a.algebra.mul(&a0, &a2).unwrap()));
        assert!(four_a.form.eval(&a0, &a2).unwrap().is_zero());
    }

    #[test]
    fn every_type_passes() {
        for kind in DihedralType::ALL {
            let report = verify_dihedral(&dihedral(kind).unwrap()).unwrap();
            assert!(report.passed(), "{report:?}");
        }
    }

    fn closure_matches(big: DihedralType, gens: [&str; 2], small: DihedralType, images: &[&str]) {
        let b = dihedral(big).unwrap();
        let s = dihedral(small).unwrap();
        let gens: Vec<Vec<Rational>> = gens.iter().map(|g| b.algebra.e(g)).collect();
        let closure = subalgebra_closure(&b.algebra, &gens);
        assert_eq!(closure.rank(), small.dim(), "{big} closure of {gens:?}");
        assert_eq!(restrict(&b.algebra, &closure).unwrap().dim(), small.dim());
        let images: Vec<Vec<Rational>> = images.iter().map(|l| b.algebra.e(l)).collect();
        assert!(embeds(&s.algebra, &b.algebra, &images).unwrap(), "{small} inside {big}");
        for v in &images {
            assert!(closure.contains(v));
        }
    }

    #[test]
    fn subalgebra_inclusions() {
        use DihedralType::*;
        closure_matches(FourB, ["a0", "a2"], TwoA, &["a0", "a2", "a_rho"]);
        closure_matches(FourA, ["a0", "a2"], TwoB, &["a0", "a2"]);
        closure_matches(SixA, ["a0", "a3"], TwoA, &["a0", "a3", "a_rho"]);
        closure_matches(SixA, ["a0", "a2"], ThreeA, &["a-2", "a0", "a2", "u_rho"]);
    }

    #[test]
    fn five_a_doubling_negates_w() {
        // a_k ↦ a_{2k} identifies ⟨⟨a0, a2⟩⟩ with a second copy of 5A whose
        // extra vector is -w.
        let d = dihedral(DihedralType::FiveA).unwrap();
        let alg = &d.algebra;
        let mut images: Vec<Vec<Rational>> =
            [-2i64, -1, 0, 1, 2].iter().map(|&k| alg.e(&DihedralType::FiveA.axis_label(2 * k))).collect();
        images.push(linalg::scale(&q(-1, 1), &alg.e("w_rho")));
        assert!(embeds(alg, alg, &images).unwrap());
        images[5] = alg.e("w_rho");
        assert!(!embeds(alg, alg, &images).unwrap());
    }
}
