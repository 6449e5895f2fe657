use std::fmt;
use std::str::FromStr;

use axia::axial::{document_field, from_json, AlgebraDocument, Algebra, BilinearForm, LoadedAlgebra};
use axia::catalog::{dihedral, DihedralType};
use axia::construct::{build_m4a, build_m4b, m4a_symmetry, specialize, specialize_vector, M4a};
use axia::scalar::{Field, FieldKind, Rational, RationalFunction};

use crate::CliError;

/// A named built-in algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    M4a,
    M4b,
    Dihedral(DihedralType),
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "m4a" => Ok(Target::M4a),
            "m4b" => Ok(Target::M4b),
            _ => match s.strip_prefix("dihedral:") {
                Some(kind) => kind.parse().map(Target::Dihedral).map_err(|e| format!("{e}")),
                None => Err(format!("unknown target {s:?}; expected m4a, m4b or dihedral:<type>")),
            },
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::M4a => f.write_str("m4a"),
            Target::M4b => f.write_str("m4b"),
            Target::Dihedral(kind) => write!(f, "dihedral:{kind}"),
        }
    }
}

/// An algebra with its form and axes, as built or as loaded from JSON.
#[derive(Clone, Debug)]
pub struct Subject<S> {
    pub name: Option<String>,
    pub algebra: Algebra<S>,
    pub form: BilinearForm<S>,
    pub axes: Vec<Vec<S>>,
}

impl<S: Field> Subject<S> {
    pub fn document(&self) -> AlgebraDocument<S> {
        let doc = AlgebraDocument::new(&self.algebra, Some(&self.form), &self.axes);
        match &self.name {
            Some(name) => doc.named(name.clone()),
            None => doc,
        }
    }

    fn from_loaded(loaded: LoadedAlgebra<S>) -> Result<Self, CliError> {
        let form = loaded.form.ok_or_else(|| CliError::Usage("algebra file has no gram matrix".into()))?;
        Ok(Subject { name: loaded.name, algebra: loaded.algebra, form, axes: loaded.axes })
    }
}

#[derive(Clone, Debug)]
pub enum AnySubject {
    Symbolic(Subject<RationalFunction>),
    Exact(Subject<Rational>),
}

impl AnySubject {
    pub fn build(target: Target) -> Result<Self, CliError> {
        let name = Some(target.to_string());
        Ok(match target {
            Target::M4a => {
                let m = build_m4a()?;
                AnySubject::Symbolic(Subject { name, algebra: m.algebra, form: m.form, axes: m.axes })
            }
            Target::M4b => {
                let m = build_m4b()?;
                AnySubject::Exact(Subject { name, algebra: m.algebra, form: m.form, axes: m.axes })
            }
            Target::Dihedral(kind) => {
                let d = dihedral(kind)?;
                AnySubject::Exact(Subject { name, algebra: d.algebra, form: d.form, axes: d.axes })
            }
        })
    }

    pub fn load(json: &str) -> Result<Self, CliError> {
        Ok(match document_field(json)? {
            FieldKind::RationalFunctions => AnySubject::Symbolic(Subject::from_loaded(from_json(json)?)?),
            FieldKind::Rationals => AnySubject::Exact(Subject::from_loaded(from_json(json)?)?),
        })
    }

    /// Substitutes `t = t0`; exact subjects are returned unchanged.
    pub fn at(self, t0: Option<&Rational>) -> Result<Self, CliError> {
        match (self, t0) {
            (AnySubject::Symbolic(s), Some(t0)) => {
                let (algebra, form) = specialize(&s.algebra, &s.form, t0)?;
                let axes = s.axes.iter().map(|a| specialize_vector(a, t0)).collect::<Result<_, _>>()?;
                let name = s.name.map(|n| format!("{n}@{t0}"));
                Ok(AnySubject::Exact(Subject { name, algebra, form, axes }))
            }
            (AnySubject::Exact(_), Some(_)) => Err(CliError::Usage("--t applies only to the symbolic family".into())),
            (subject, None) => Ok(subject),
        }
    }

    pub fn to_json(&self) -> String {
        let pretty = |v: serde_json::Result<String>| v.expect("scalars serialize as strings");
        match self {
            AnySubject::Symbolic(s) => pretty(serde_json::to_string_pretty(&s.document())),
            AnySubject::Exact(s) => pretty(serde_json::to_string_pretty(&s.document())),
        }
    }

    pub fn summary(&self) -> String {
        let (name, dim, field, axes) = match self {
            AnySubject::Symbolic(s) => (&s.name, s.algebra.dim(), FieldKind::RationalFunctions, s.axes.len()),
            AnySubject::Exact(s) => (&s.name, s.algebra.dim(), FieldKind::Rationals, s.axes.len()),
        };
        let name = name.as_deref().unwrap_or("algebra");
        format!("{name}: {dim}-dimensional over {field}, {axes} axes")
    }
}

/// The 12-dimensional family, either freshly built or reassembled from a
/// loaded subject named `m4a`.
pub fn m4a_from(subject: Subject<RationalFunction>) -> M4a {
    M4a { algebra: subject.algebra, form: subject.form, axes: subject.axes, symmetry: m4a_symmetry() }
}

pub fn build_family() -> Result<M4a, CliError> {
    Ok(build_m4a()?)
}
