//! `axia`: build, verify and certify axial algebras of Monster type.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or
//! build errors.

mod subject;
mod suite;

use std::path::PathBuf;
use std::process::ExitCode;

use axia::catalog::DihedralType;
use axia::certify::{certify_grid, CertReport, CertifyError, DEFAULT_DEGREE_CAP};
use axia::scalar::Rational;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use subject::{build_family, AnySubject, Target};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

macro_rules! via_certify {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Certify(e.into())
            }
        }
    )*};
}

via_certify!(
    axia::construct::ConstructError,
    axia::axial::AxialError,
    axia::linalg::LinalgError,
    axia::scalar::ScalarError
);

#[derive(Parser, Debug)]
#[command(name = "axia", version, about = "Exact construction and certification of axial algebras of Monster type")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct Output {
    /// Write the JSON result to this path instead of printing a summary.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct Points {
    /// Exact parameter value, `p` or `p/q`.
    #[arg(long = "t", value_parser = parse_rational, allow_hyphen_values = true)]
    t: Option<Rational>,
    /// Comma-separated exact values; one verdict per point, in input order.
    #[arg(long, value_parser = parse_rational, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "t")]
    grid: Option<Vec<Rational>>,
}

impl Points {
    fn list(&self) -> Option<Vec<Rational>> {
        match (&self.t, &self.grid) {
            (Some(t), _) => Some(vec![t.clone()]),
            (None, Some(g)) => Some(g.clone()),
            (None, None) => None,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CertifyKind {
    Majorana,
    Quotient,
    V4a,
    Psd,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Build an algebra and write its JSON document.
    Build {
        #[arg(value_parser = parse_target)]
        target: Target,
        #[arg(long = "t", value_parser = parse_rational, allow_hyphen_values = true)]
        t: Option<Rational>,
        #[command(flatten)]
        output: Output,
    },
    /// Run the default verification suite on a built-in target or a saved document.
    Verify {
        #[arg(value_parser = parse_target, required_unless_present = "input", conflicts_with = "input")]
        target: Option<Target>,
        /// Algebra JSON written by `build`.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long = "t", value_parser = parse_rational, allow_hyphen_values = true)]
        t: Option<Rational>,
        #[command(flatten)]
        output: Output,
    },
    /// Gram determinant, LDLT diagonal and definiteness.
    Gram {
        #[arg(value_parser = parse_target, default_value = "m4a")]
        target: Target,
        #[command(flatten)]
        points: Points,
        #[command(flatten)]
        output: Output,
    },
    /// Norton's inequality via the semidefinite-aware LDLT of the Norton matrix.
    Norton {
        #[arg(value_parser = parse_target, default_value = "m4a")]
        target: Target,
        #[command(flatten)]
        points: Points,
        /// Symbolic elimination over Q(t), capped by AXIA_DEGREE_CAP.
        #[arg(long)]
        symbolic: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Dimension of the radical of the form.
    Radical {
        #[arg(value_parser = parse_target, default_value = "m4a")]
        target: Target,
        #[command(flatten)]
        points: Points,
        #[command(flatten)]
        output: Output,
    },
    /// Certificates for the 12-dimensional family.
    Certify {
        #[arg(value_enum)]
        kind: CertifyKind,
        #[command(flatten)]
        points: Points,
        /// Interval for `psd`, as `lower,upper`.
        #[arg(long, value_parser = parse_rational, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
        interval: Option<Vec<Rational>>,
        #[command(flatten)]
        output: Output,
    },
    /// The dihedral catalog: all types, or one type in detail.
    Catalog {
        #[arg(value_parser = parse_dihedral)]
        kind: Option<DihedralType>,
        #[command(flatten)]
        output: Output,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_target(s: &str) -> Result<Target, String> {
    s.parse()
}

fn parse_dihedral(s: &str) -> Result<DihedralType, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn degree_cap() -> Result<usize, CliError> {
    match std::env::var("AXIA_DEGREE_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("AXIA_DEGREE_CAP must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_DEGREE_CAP),
    }
}

fn require_family(target: Target) -> Result<(), CliError> {
    match target {
        Target::M4a => Ok(()),
        other => Err(CliError::Usage(format!("--t/--grid apply only to m4a, not {other}"))),
    }
}

/// What a verb produced: reports to judge, or a document to write.
enum Outcome {
    Reports(Vec<CertReport>),
    Document { json: String, summary: String },
}

fn exact_subject(target: Target) -> Result<subject::Subject<Rational>, CliError> {
    match AnySubject::build(target)? {
        AnySubject::Exact(s) => Ok(s),
        AnySubject::Symbolic(_) => Err(CliError::Usage(format!("{target} needs --t, --grid or a symbolic mode"))),
    }
}

fn run(verb: &Verb) -> Result<Outcome, CliError> {
    let reports = match verb {
        Verb::Build { target, t, .. } => {
            let subject = AnySubject::build(*target)?.at(t.as_ref())?;
            return Ok(Outcome::Document { json: subject.to_json(), summary: subject.summary() });
        }
        Verb::Verify { target, input, t, .. } => {
            let subject = match (target, input) {
                (_, Some(path)) => AnySubject::load(&std::fs::read_to_string(path)?)?,
                (Some(target), None) => AnySubject::build(*target)?,
                (None, None) => return Err(CliError::Usage("verify needs a target or --input".into())),
            };
            vec![suite::verify(&subject.at(t.as_ref())?, t.as_ref())?]
        }
        Verb::Gram { target, points, .. } => match points.list() {
            Some(list) => {
                require_family(*target)?;
                let m = build_family()?;
                list.iter().map(|t0| suite::gram_at(&m, t0)).collect::<Result<_, _>>()?
            }
            None if *target == Target::M4a => vec![suite::gram_symbolic(&build_family()?)?],
            None => vec![suite::exact_definiteness(&exact_subject(*target)?)?],
        },
        Verb::Norton { target, points, symbolic, .. } => match (points.list(), symbolic) {
            (Some(_), true) => return Err(CliError::Usage("--symbolic excludes --t and --grid".into())),
            (Some(list), false) => {
                require_family(*target)?;
                suite::norton_reports(&build_family()?, &list)?
            }
            (None, true) => {
                require_family(*target)?;
                vec![suite::norton_symbolic_report(&build_family()?, degree_cap()?)?]
            }
            (None, false) if *target == Target::M4a => suite::norton_reports(&build_family()?, &certify_grid())?,
            (None, false) => vec![suite::exact_definiteness(&exact_subject(*target)?)?],
        },
        Verb::Radical { target, points, .. } => {
            require_family(*target)?;
            let list = points.list().unwrap_or_else(certify_grid);
            suite::radical_reports(&build_family()?, &list)?
        }
        Verb::Certify { kind, points, interval, .. } => {
            let list = points.list();
            match kind {
                CertifyKind::Psd => {
                    let bounds = interval.clone().unwrap_or_else(|| vec![Rational::zero(), Rational::new(1, 6)]);
                    match bounds.as_slice() {
                        [lower, upper] if lower < upper => vec![suite::psd_interval(lower, upper)?],
                        _ => return Err(CliError::Usage("--interval takes lower,upper with lower < upper".into())),
                    }
                }
                CertifyKind::V4a if list.is_none() => vec![suite::v4a_symbolic(&build_family()?)?],
                CertifyKind::V4a => suite::v4a_reports(&build_family()?, &list.unwrap_or_default())?,
                CertifyKind::Majorana | CertifyKind::Quotient => {
                    let list = list.ok_or_else(|| CliError::Usage("certify majorana/quotient need --t or --grid".into()))?;
                    let m = build_family()?;
                    match kind {
                        CertifyKind::Majorana => suite::majorana_reports(&m, &list)?,
                        _ => suite::quotient_reports(&m, &list)?,
                    }
                }
            }
        }
        Verb::Catalog { kind, .. } => match kind {
            Some(kind) => vec![suite::catalog_report(*kind)?],
            None => DihedralType::ALL.iter().map(|&k| suite::catalog_report(k)).collect::<Result<_, _>>()?,
        },
    };
    Ok(Outcome::Reports(reports))
}

fn output_of(verb: &Verb) -> &Output {
    match verb {
        Verb::Build { output, .. }
        | Verb::Verify { output, .. }
        | Verb::Gram { output, .. }
        | Verb::Norton { output, .. }
        | Verb::Radical { output, .. }
        | Verb::Certify { output, .. }
        | Verb::Catalog { output, .. } => output,
    }
}

fn render_text(reports: &[CertReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let passed = r.checks.iter().filter(|c| c.pass).count();
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{verdict} t0={} ({passed}/{} checks)\n", r.t0, r.checks.len()));
        for c in &r.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            match c.pass {
                true => out.push_str(&format!("  {mark} {}: {}\n", c.name, c.actual)),
                false => out.push_str(&format!("  {mark} {}: expected {}, got {}\n", c.name, c.expected, c.actual)),
            }
        }
    }
    out
}

fn emit(verb: &Verb, outcome: Outcome) -> Result<bool, CliError> {
    let output = output_of(verb);
    let (json, text, passed) = match outcome {
        Outcome::Document { json, summary } => (json, format!("{summary}\n"), true),
        Outcome::Reports(reports) => {
            let json = match reports.as_slice() {
                [single] => serde_json::to_string_pretty(single),
                many => serde_json::to_string_pretty(many),
            }
            .expect("reports serialize");
            let passed = reports.iter().all(CertReport::passed);
            (json, render_text(&reports), passed)
        }
    };
    match (&output.out, output.format) {
        (Some(path), _) => {
            std::fs::write(path, format!("{json}\n"))?;
            print!("{text}");
        }
        (None, Format::Json) => println!("{json}"),
        (None, Format::Text) => print!("{text}"),
    }
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli.verb).and_then(|outcome| emit(&cli.verb, outcome));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_rejected() {
        assert!(parse_rational("0.1").is_err());
        assert_eq!(parse_rational("-1/10").unwrap(), Rational::new(-1, 10));
    }

    #[test]
    fn targets_parse() {
        assert_eq!(parse_target("m4a").unwrap(), Target::M4a);
        assert_eq!(parse_target("dihedral:4B").unwrap(), Target::Dihedral(DihedralType::FourB));
        assert!(parse_target("dihedral:7A").is_err());
        assert!(parse_target("m5").is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn grid_keeps_input_order_and_negative_values() {
        let cli = Cli::try_parse_from(["axia", "radical", "--grid", "-1/10,9/4,0"]).unwrap();
        let Verb::Radical { points, .. } = cli.verb else { panic!("wrong verb") };
        assert_eq!(points.list().unwrap(), vec![Rational::new(-1, 10), Rational::new(9, 4), Rational::zero()]);
    }
}
