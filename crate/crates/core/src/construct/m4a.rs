use serde::Serialize;

use super::{complete_table, ConstructError, FormValue, PartialForm, PartialProductTable, SymmetrySet};
use crate::axial::{Algebra, BilinearForm, LinearOperator};
use crate::catalog::{combo, dihedral, DihedralType};
use crate::linalg;
use crate::scalar::{poly, q, Field, Rational, RationalFunction};

type Rf = RationalFunction;

/// Axis pairs `(i, j)` with `i < j` and the remaining index `k`.
pub const AXIS_PAIRS: [(usize, usize, usize); 3] = [(1, 2, 3), (1, 3, 2), (2, 3, 1)];

pub fn axis_label(i: usize, sign: i64) -> String {
    if sign < 0 {
        format!("a-{i}")
    } else {
        format!("a{i}")
    }
}

/// The 4A axis of `⟨⟨a_i, a_j⟩⟩`.
pub fn v_label(i: usize, j: usize) -> String {
    format!("v{}{}", i.min(j), i.max(j))
}

/// The product `a_i · v_jk`, a basis vector in its own right.
pub fn p_label(i: usize) -> String {
    let (j, k) = others(i);
    format!("a{i}*{}", v_label(j, k))
}

fn others(i: usize) -> (usize, usize) {
    let rest: Vec<usize> = (1..=3).filter(|&x| x != i).collect();
    (rest[0], rest[1])
}

/// Basis order: the six axes, the three 4A axes, then the three products `a_i · v_jk`.
pub fn m4a_labels() -> Vec<String> {
    let mut labels = Vec::new();
    for i in 1..=3 {
        labels.push(axis_label(i, 1));
        labels.push(axis_label(i, -1));
    }
    for (i, j, _) in AXIS_PAIRS {
        labels.push(v_label(i, j));
    }
    labels.extend((1..=3).map(p_label));
    labels
}

fn t() -> Rf {
    Rf::t()
}

/// Polynomial in `t` from ascending rational coefficients.
fn tp(coeffs: &[(i64, i64)]) -> Rf {
    Rf::from_poly(poly(coeffs))
}

fn c(n: i64, d: i64) -> Rf {
    Rf::constant(q(n, d))
}

fn vector(terms: &[(String, Rf)]) -> Vec<Rf> {
    let labels = m4a_labels();
    let borrowed: Vec<(&str, Rf)> = terms.iter().map(|(l, x)| (l.as_str(), x.clone())).collect();
    combo(&labels, &borrowed)
}

fn e(label: &str) -> Vec<Rf> {
    vector(&[(label.to_string(), Rf::one())])
}

/// `a_-i · v_jk = a_i · v_jk - t (a_i - a_-i)`.
fn shifted_p(i: usize) -> Vec<Rf> {
    vector(&[(p_label(i), Rf::one()), (axis_label(i, 1), -t()), (axis_label(i, -1), t())])
}

fn operator(images: impl Fn(&str) -> Vec<Rf>) -> LinearOperator<Rf> {
    let cols: Vec<Vec<Rf>> = m4a_labels().iter().map(|l| images(l)).collect();
    LinearOperator::from_images(&cols).expect("square by construction")
}

/// Relabels axes and 4A axes by `f` on signed indices; `p` images given separately.
fn axis_map(f: impl Fn(usize, i64) -> (usize, i64), p_image: impl Fn(usize) -> Vec<Rf>) -> LinearOperator<Rf> {
    operator(|l| {
        let labels = m4a_labels();
        let k = labels.iter().position(|x| x == l).expect("own label");
        match k {
            0..=5 => {
                let (i, s) = f(k / 2 + 1, if k % 2 == 0 { 1 } else { -1 });
                e(&axis_label(i, s))
            }
            6..=8 => {
                let (i, j, _) = AXIS_PAIRS[k - 6];
                e(&v_label(f(i, 1).0, f(j, 1).0))
            }
            _ => p_image(k - 8),
        }
    })
}

/// Miyamoto involution of `a_i`: swaps `a_j ↔ a_-j` for `j ≠ i`, fixes the 4A
/// axes, and moves `a_j · v_ik` along the dependency relation.
pub fn tau(i: usize) -> LinearOperator<Rf> {
    axis_map(
        |j, s| if j == i { (j, s) } else { (j, -s) },
        |j| if j == i { e(&p_label(j)) } else { shifted_p(j) },
    )
}

/// The 3-cycle `(a1 a2 a3)(a-1 a-2 a-3)`; fixes `t`.
pub fn sigma() -> LinearOperator<Rf> {
    axis_map(|j, s| (j % 3 + 1, s), |j| e(&p_label(j % 3 + 1)))
}

/// The reflection `(a2 a3)(a-2 a-3)`; fixes `t`.
pub fn reflection() -> LinearOperator<Rf> {
    let swap = |j: usize| match j {
        2 => 3,
        3 => 2,
        other => other,
    };
    axis_map(|j, s| (swap(j), s), |j| e(&p_label(swap(j))))
}

pub fn m4a_symmetry() -> SymmetrySet<Rf> {
    SymmetrySet::new()
        .with("tau1", tau(1))
        .with("tau2", tau(2))
        .with("tau3", tau(3))
        .with("sigma", sigma())
        .with("pi", reflection())
}

/// Which values to use for the eight representative products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Representatives {
    /// Values consistent with the symmetry, the form and the eigenvector data.
    Corrected,
    /// The table as typeset, including four misprinted entries.
    AsPrinted,
}

fn representatives(which: Representatives) -> Vec<(String, String, Vec<Rf>)> {
    let p = |i| p_label(i);
    let l = |s: &str| s.to_string();
    let printed = which == Representatives::AsPrinted;
    let (p1, p2, p3) = (p(1), p(2), p(3));
    let v12v13_sign = if printed { -1 } else { 1 };
    let v12v13 = vector(&[
        (l("a1"), c(-8, 3) * t()),
        (l("a2"), c(2, 3) * t()),
        (l("a-2"), c(-2, 3) * t()),
        (l("a3"), c(2, 3) * t()),
        (l("a-3"), c(-2, 3) * t()),
        (l("v12"), c(1, 4)),
        (l("v13"), c(1, 4)),
        (l("v23"), c(-1, 4)),
        (p1.clone(), c(8 * v12v13_sign, 3)),
        (p2.clone(), c(-4 * v12v13_sign, 3)),
        (p3.clone(), c(-4 * v12v13_sign, 3)),
    ]);
    let a2p1 = if printed {
        vector(&[
            (l("a1"), c(-3, 256) * t()),
            (l("a-1"), c(3, 256) * t()),
            (l("a2"), c(1, 8) * t()),
            (l("a3"), c(1, 16) * t()),
            (l("a-3"), c(-1, 16) * t()),
            (p1.clone(), c(1, 8)),
            (p2.clone(), c(1, 16)),
            (p3.clone(), c(-1, 16)),
        ])
    } else {
        vector(&[
            (l("a1"), c(-3, 64) * t()),
            (l("a-1"), c(3, 64) * t()),
            (l("a2"), c(1, 8) * t()),
            (l("a3"), c(1, 16) * t()),
            (l("a-3"), c(-1, 16) * t()),
            (p1.clone(), c(1, 8)),
            (p2.clone(), c(1, 16)),
            (p3.clone(), c(-1, 8)),
        ])
    };
    // t(2t - 1)/4
    let quad = tp(&[(0, 1), (-1, 4), (1, 2)]);
    let v23p1 = vector(&[
        (l("a1"), quad.clone()),
        (l("a-1"), -quad),
        (l("v23"), if printed { c(1, 4) } else { c(1, 4) * t() }),
        (p1.clone(), c(1, 2)),
    ]);
    let p1p1 = vector(&[
        (l("a1"), tp(&[(0, 1), (1, 16), (10, 16)])),
        (l("a-1"), tp(&[(0, 1), (1, 16), (-2, 16)])),
        (l("v23"), c(1, 16) * t()),
        (p1.clone(), c(1, 4) * t()),
    ]);
    let lead = if printed { c(1, 32) * t() } else { c(1, 32) * t() * t() };
    let p1p2 = vector(&[
        (l("a1"), lead.clone()),
        (l("a-1"), -lead.clone()),
        (l("a2"), lead.clone()),
        (l("a-2"), -lead),
        (l("a3"), tp(&[(0, 1), (-1, 32), (2, 32)])),
        (l("a-3"), tp(&[(0, 1), (-1, 32), (-2, 32)])),
        (l("v12"), c(1, 32) * t()),
        (l("v13"), c(1, 64) * t()),
        (l("v23"), c(1, 64) * t()),
        (p1.clone(), c(1, 8) * t()),
        (p2.clone(), c(1, 8) * t()),
        (p3, c(-1, 8) * t()),
    ]);
    vec![
        (l("v12"), l("v13"), v12v13),
        (l("a1"), p1.clone(), vector(&[(l("a1"), c(3, 4) * t()), (p1.clone(), c(1, 4))])),
        (l("a-1"), p1.clone(), vector(&[(l("a1"), c(-1, 4) * t()), (p1.clone(), c(1, 4))])),
        (l("a2"), p1.clone(), a2p1),
        (
            l("v12"),
            p1.clone(),
            vector(&[
                (l("a1"), c(-5, 48) * t()),
                (l("a-1"), c(-11, 48) * t()),
                (l("a2"), c(-11, 24) * t()),
                (l("a-2"), c(-5, 24) * t()),
                (l("v12"), c(1, 8) * t()),
                (p1.clone(), c(1, 4)),
                (p2, c(1, 4)),
            ]),
        ),
        (l("v23"), p1.clone(), v23p1),
        (p1.clone(), p1.clone(), p1p1),
        (p1, p(2), p1p2),
    ]
}

/// The 12-dimensional algebra over `Q(t)` with its form, axes and symmetries.
#[derive(Clone, Debug)]
pub struct M4a {
    pub algebra: Algebra<Rf>,
    pub form: BilinearForm<Rf>,
    /// `a1, a-1, a2, a-2, a3, a-3`.
    pub axes: Vec<Vec<Rf>>,
    pub symmetry: SymmetrySet<Rf>,
}

impl M4a {
    /// The 4A axis `v_ij`.
    pub fn v(&self, i: usize, j: usize) -> Vec<Rf> {
        self.algebra.e(&v_label(i, j))
    }
}

pub fn build_m4a() -> Result<M4a, ConstructError> {
    build_m4a_from(Representatives::Corrected)
}

/// Seeds the table with every 4A dihedral product on `⟨⟨a_i, a_j⟩⟩`, the
/// dependency rewrites `a_-i · v_jk`, and the representative products, then
/// completes under the symmetry group. The form is seeded and completed the
/// same way.
pub fn build_m4a_from(which: Representatives) -> Result<M4a, ConstructError> {
    let labels = m4a_labels();
    let symmetry = m4a_symmetry();
    let group = symmetry.group(64)?;
    let four_a = dihedral(DihedralType::FourA)?;
    let mut products = PartialProductTable::new(labels.clone());
    let mut form = PartialForm::new(labels.clone());

    // Dihedral basis a-1, a0, a1, a2, v_rho sits as a_-j, a_i, a_j, a_-i, v_ij.
    let lift = |x: &Rational| Rf::from_rational(x);
    for (i, j, _) in AXIS_PAIRS {
        let image = [axis_label(j, -1), axis_label(i, 1), axis_label(j, 1), axis_label(i, -1), v_label(i, j)];
        let embed = |v: &[Rational]| -> Vec<Rf> {
            let terms: Vec<(String, Rf)> = v.iter().zip(&image).map(|(x, l)| (l.clone(), lift(x))).collect();
            vector(&terms)
        };
        for x in 0..5 {
            for y in x..5 {
                products.set_labels(&image[x], &image[y], embed(four_a.algebra.product(x, y)))?;
                form.set_labels(&image[x], &image[y], FormValue(lift(&four_a.form.gram()[(x, y)])))?;
            }
        }
    }
    for (i, j, k) in AXIS_PAIRS {
        products.set_labels(&axis_label(k, 1), &v_label(i, j), e(&p_label(k)))?;
        products.set_labels(&axis_label(k, -1), &v_label(i, j), shifted_p(k))?;
    }
    for (x, y, v) in representatives(which) {
        products.set_labels(&x, &y, v)?;
    }

    let p1 = p_label(1);
    let form_seeds = [
        ("a1", "v23", t()),
        ("v12", "v23", c(-8, 3) * t() + c(1, 2)),
        ("a1", p1.as_str(), t()),
        ("a-1", p1.as_str(), Rf::zero()),
        ("a2", p1.as_str(), c(3, 16) * t()),
        ("v12", p1.as_str(), c(-1, 4) * t()),
        ("v23", p1.as_str(), t()),
        (p1.as_str(), p1.as_str(), tp(&[(0, 1), (1, 4), (3, 4)])),
    ];
    for (x, y, value) in form_seeds {
        form.set_labels(x, y, FormValue(value))?;
    }
    form.set_labels(&p1, &p_label(2), FormValue(tp(&[(0, 1), (1, 16), (2, 16)])))?;

    let algebra = complete_table(&products, &group)?.into_algebra()?;
    let form = complete_table(&form, &group)?.into_form()?;
    let axes = (1..=3).flat_map(|i| [algebra.e(&axis_label(i, 1)), algebra.e(&axis_label(i, -1))]).collect();
    Ok(M4a { algebra, form, axes, symmetry })
}

/// `(a_i - a_-i) · v_jk - t (a_i - a_-i)` for `i = 1, 2, 3`; all zero in a
/// correctly built algebra.
pub fn dependency_residuals(m: &M4a) -> Vec<Vec<Rf>> {
    (1..=3)
        .map(|i| {
            let (j, k) = others(i);
            let diff = linalg::sub(&m.algebra.e(&axis_label(i, 1)), &m.algebra.e(&axis_label(i, -1)));
            let prod = m.algebra.mul(&diff, &m.v(j, k)).expect("basis vectors");
            linalg::sub(&prod, &linalg::scale(&t(), &diff))
        })
        .collect()
}

/// Eigenvectors of `a1` for the eigenvalues `0, 1/4, 1/32`.
pub fn a1_eigenvectors() -> Vec<(Rf, Vec<Rf>)> {
    let l = |s: &str| s.to_string();
    let (p1, p2, p3) = (p_label(1), p_label(2), p_label(3));
    let half_t = c(1, 2) * t();
    vec![
        (
            Rf::zero(),
            vector(&[
                (l("a1"), c(-1, 4) * t()),
                (l("a2"), -half_t.clone()),
                (l("a-2"), half_t.clone()),
                (l("a3"), -half_t.clone()),
                (l("a-3"), half_t.clone()),
                (l("v23"), c(-1, 8)),
                (p2.clone(), Rf::one()),
                (p3.clone(), Rf::one()),
            ]),
        ),
        (Rf::zero(), vector(&[(l("a1"), c(-3, 4) * t()), (l("v23"), c(-1, 4)), (p1.clone(), Rf::one())])),
        (Rf::zero(), vector(&[(l("a1"), c(-1, 2)), (l("a2"), c(2, 1)), (l("a-2"), c(2, 1)), (l("v12"), Rf::one())])),
        (Rf::zero(), vector(&[(l("a1"), c(-1, 2)), (l("a3"), c(2, 1)), (l("a-3"), c(2, 1)), (l("v13"), Rf::one())])),
        (Rf::zero(), e("a-1")),
        (
            c(1, 4),
            vector(&[
                (l("a2"), half_t.clone()),
                (l("a-2"), -half_t.clone()),
                (l("a3"), -half_t.clone()),
                (l("a-3"), half_t),
                (p2, -Rf::one()),
                (p3, Rf::one()),
            ]),
        ),
        (c(1, 4), vector(&[(l("a1"), -t()), (p1, Rf::one())])),
        (
            c(1, 4),
            vector(&[
                (l("a1"), c(-1, 3)),
                (l("a-1"), c(-1, 3)),
                (l("a2"), c(-2, 3)),
                (l("a-2"), c(-2, 3)),
                (l("v12"), Rf::one()),
            ]),
        ),
        (
            c(1, 4),
            vector(&[
                (l("a1"), c(-1, 3)),
                (l("a-1"), c(-1, 3)),
                (l("a3"), c(-2, 3)),
                (l("a-3"), c(-2, 3)),
                (l("v13"), Rf::one()),
            ]),
        ),
        (c(1, 32), vector(&[(l("a2"), Rf::one()), (l("a-2"), -Rf::one())])),
        (c(1, 32), vector(&[(l("a3"), Rf::one()), (l("a-3"), -Rf::one())])),
    ]
}

/// Eigenvectors of `v_ij` for the eigenvalues `0, 1/2, 3/8, t`, where `k` is
/// the third index. The two `a_i·v_jk` zero-eigenvectors carry
/// `-3/16 (v_ik + v_jk)`, and the `a_k·v_ij` one has `a_-k` coefficient `(2t - 1)/4`.
pub fn v_eigenvectors(i: usize, j: usize) -> Vec<(Rf, Vec<Rf>)> {
    let k = 6 - i - j;
    let (ai, ani, aj, anj, ak, ank) =
        (axis_label(i, 1), axis_label(i, -1), axis_label(j, 1), axis_label(j, -1), axis_label(k, 1), axis_label(k, -1));
    let (vij, vik, vjk) = (v_label(i, j), v_label(i, k), v_label(j, k));
    let (pi, pj, pk) = (p_label(i), p_label(j), p_label(k));
    let one = Rf::one;
    let pair_sum = |x: &str, y: &str, coeff: Rf| vec![(x.to_string(), coeff.clone()), (y.to_string(), coeff)];
    let mut zero_1 = pair_sum(&ai, &ani, c(-4, 3));
    zero_1.extend(pair_sum(&aj, &anj, c(-4, 3)));
    zero_1.push((vij.clone(), one()));

    let side = |x: &str, nx: &str, y: &str, ny: &str, px: &str| {
        let mut terms = vec![(x.to_string(), c(1, 8) - c(5, 6) * t()), (nx.to_string(), c(1, 8) + c(1, 6) * t())];
        terms.extend(pair_sum(y, ny, c(1, 8)));
        terms.extend(pair_sum(&ak, &ank, c(-1, 4)));
        terms.extend(pair_sum(&vik, &vjk, c(-3, 16)));
        terms.push((px.to_string(), one()));
        terms
    };
    let mut zero_4 = pair_sum(&ai, &ani, c(-1, 3) * t());
    zero_4.extend(pair_sum(&aj, &anj, c(-1, 3) * t()));
    zero_4.push((ak.clone(), tp(&[(-1, 4), (-1, 2)])));
    zero_4.push((ank.clone(), tp(&[(-1, 4), (1, 2)])));
    zero_4.push((pk.clone(), one()));

    let half_side = |x: &str, nx: &str, px: &str, sign: i64| {
        vec![
            (x.to_string(), c(-3, 2) * t()),
            (nx.to_string(), c(-1, 2) * t()),
            (vij.clone(), c(1, 2) * t()),
            (vik.clone(), c(sign, 16)),
            (vjk.clone(), c(-sign, 16)),
            (px.to_string(), one()),
        ]
    };
    let half_4 = vec![
        (ak.clone(), c(-1, 2) * t()),
        (ank.clone(), c(1, 2) * t()),
        (vij.clone(), c(-1, 2) * t()),
        (pk, one()),
    ];
    let diff = |x: &str, y: &str| vec![(x.to_string(), one()), (y.to_string(), -one())];
    let mut half_1 = pair_sum(&ai, &ani, one());
    half_1.extend(pair_sum(&aj, &anj, -one()));

    vec![
        (Rf::zero(), vector(&zero_1)),
        (Rf::zero(), vector(&side(&ai, &ani, &aj, &anj, &pi))),
        (Rf::zero(), vector(&side(&aj, &anj, &ai, &ani, &pj))),
        (Rf::zero(), vector(&zero_4)),
        (c(1, 2), vector(&half_1)),
        (c(1, 2), vector(&half_side(&ai, &ani, &pi, 1))),
        (c(1, 2), vector(&half_side(&aj, &anj, &pj, -1))),
        (c(1, 2), vector(&half_4)),
        (c(3, 8), vector(&diff(&ai, &ani))),
        (c(3, 8), vector(&diff(&aj, &anj))),
        (t(), vector(&diff(&ak, &ank))),
    ]
}

/// Spanning set of `⟨⟨v12, v13, v23⟩⟩`: the three 4A axes and
/// `t a_i - a_i·v_jk`, `t a_-i + a_i·v_jk`.
pub fn jordan_spanning_set() -> Vec<Vec<Rf>> {
    let mut out: Vec<Vec<Rf>> = AXIS_PAIRS.iter().map(|&(i, j, _)| e(&v_label(i, j))).collect();
    for i in 1..=3 {
        out.push(vector(&[(axis_label(i, 1), t()), (p_label(i), -Rf::one())]));
        out.push(vector(&[(axis_label(i, -1), t()), (p_label(i), Rf::one())]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_and_generators() {
        let labels = m4a_labels();
        assert_eq!(labels.len(), 12);
        assert_eq!(labels[9], "a1*v23");
        assert_eq!(labels[11], "a3*v12");
        for g in ["tau1", "tau2", "tau3"] {
            assert!(m4a_symmetry().generator(g).unwrap().is_involution());
        }
        let s = sigma();
        assert!(s.compose(&s).compose(&s).is_identity());
        assert_eq!(s.apply(&e("v12")), e("v23"));
        assert_eq!(s.apply(&e("a-3")), e("a-1"));
        assert_eq!(tau(1).apply(&e(&p_label(2))), shifted_p(2));
        assert!(tau(1).compose(&tau(2)) == tau(2).compose(&tau(1)));
        assert_eq!(m4a_symmetry().group(64).unwrap().len(), 24);
    }
}
