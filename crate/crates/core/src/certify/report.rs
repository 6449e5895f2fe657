use std::fmt::Display;

use serde::Serialize;

/// One named comparison of an expected and an actual value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// `{t0, checks}`; `t0` is a rational string or `"symbolic"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertReport {
    pub t0: String,
    pub checks: Vec<Check>,
}

impl CertReport {
    pub fn new(t0: impl Into<String>) -> Self {
        CertReport { t0: t0.into(), checks: Vec::new() }
    }

    pub fn symbolic() -> Self {
        CertReport::new("symbolic")
    }

    pub fn check(&mut self, name: &str, expected: impl Display, actual: impl Display, pass: bool) -> &mut Self {
        self.checks.push(Check { name: name.into(), expected: expected.to_string(), actual: actual.to_string(), pass });
        self
    }

    pub fn check_eq<T: Display + PartialEq>(&mut self, name: &str, expected: T, actual: T) -> &mut Self {
        let pass = expected == actual;
        self.check(name, expected, actual, pass)
    }

    pub fn extend(&mut self, other: CertReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
