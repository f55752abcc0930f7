//! The `cu` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::dsl::{self, lower_element, parse_element_literal, Catalog, DslError};
use crate::element::Element;
use crate::error::CuError;
use crate::functionals::functional_family;
use crate::invariants::dim::{dim_at_most, dim_bracket};
use crate::invariants::rc_bracket;
use crate::json::{exit_code, JsonReport};
use crate::regularity::{check_implication, check_property, Implication, Property};
use crate::report::Verdict;
use crate::sample::SampleSpec;
use crate::semigroup::Semigroup;
use crate::soft::{sigma, soft_certificate, SoftCertificate};
use crate::suite::{bracket_note, grid_label, run_suite, run_suite_on, Suite};
use crate::value::{fmt_rational, parse_rational};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPABILITY: i32 = 3;
pub const EXIT_FAIL: i32 = 4;
pub const EXIT_INCONCLUSIVE: i32 = 5;

/// Environment variable overriding the sampling threshold.
pub const MAX_TUPLES_VAR: &str = "CU_MAX_TUPLES";

#[derive(Parser, Debug)]
#[command(name = "cu", version, about = "Checks Cu-semigroup properties on enumerated grids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Grid {
    /// Value cap of the grid.
    #[arg(long)]
    cap: Option<u64>,
    /// Denominator cap of the grid.
    #[arg(long)]
    denom: Option<u64>,
    /// Seed for sampled searches.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
struct Target {
    /// Spec file describing the instances.
    spec: PathBuf,
    #[arg(long)]
    instance: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Runs one property check.
    Check {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        property: String,
        #[command(flatten)]
        grid: Grid,
    },
    /// Prints the soft retraction of an element.
    Sigma {
        #[command(flatten)]
        target: Target,
        /// A literal or the name of an element in the spec file.
        #[arg(long)]
        element: String,
        #[command(flatten)]
        grid: Grid,
    },
    /// Decides strong softness and prints the witnesses.
    Soft {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        element: String,
        #[command(flatten)]
        grid: Grid,
    },
    /// Brackets the covering dimension.
    Dim {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 1)]
        max: u32,
        #[command(flatten)]
        grid: Grid,
    },
    /// Brackets the radius of comparison.
    Rc {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        unit: String,
        #[arg(long, default_value = "1/16")]
        tol: String,
        #[command(flatten)]
        grid: Grid,
    },
    /// Runs a check suite over every instance of the spec file.
    VerifyPaper {
        spec: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        grid: Grid,
    },
}

enum Failure {
    Dsl(DslError),
    Cu(CuError),
    Usage(String),
}

impl From<CuError> for Failure {
    fn from(e: CuError) -> Self {
        Failure::Cu(e)
    }
}

impl From<DslError> for Failure {
    fn from(e: DslError) -> Self {
        Failure::Dsl(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Dsl(DslError::Capability { .. }) => EXIT_CAPABILITY,
            Failure::Dsl(_) | Failure::Usage(_) => EXIT_USAGE,
            Failure::Cu(CuError::CapabilityMissing { .. } | CuError::NotRealizable(_)) => EXIT_CAPABILITY,
            Failure::Cu(CuError::Inconclusive(_)) => EXIT_INCONCLUSIVE,
            Failure::Cu(CuError::Internal(_)) => 1,
            Failure::Cu(_) => EXIT_USAGE,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Dsl(e) => e.to_string(),
            Failure::Cu(e) => e.to_string(),
            Failure::Usage(m) => m.clone(),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn sample_of(grid: &Grid) -> Result<SampleSpec, Failure> {
    let mut s = SampleSpec::default();
    if let Some(c) = grid.cap {
        s.value_cap = c;
    }
    if let Some(d) = grid.denom {
        s.denominator_cap = d;
    }
    if let Some(seed) = grid.seed {
        s.seed = seed;
    }
    if let Ok(v) = std::env::var(MAX_TUPLES_VAR) {
        s.max_tuples = v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_TUPLES_VAR} must be a positive integer, got `{v}`")))?;
    }
    s.validate()?;
    Ok(s)
}

fn load(spec: &PathBuf) -> Result<Catalog, Failure> {
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", spec.display())))?;
    Ok(dsl::load(&text)?)
}

fn instance<'c>(cat: &'c Catalog, name: &str) -> Result<&'c Semigroup, Failure> {
    cat.instance(name).ok_or_else(|| Failure::Usage(format!("no instance named `{name}` in the spec file")))
}

/// A named element of the instance, or else a literal.
fn element(cat: &Catalog, inst: &str, s: &Semigroup, text: &str) -> Result<Element, Failure> {
    if let Some(e) = cat.element(text).filter(|e| e.instance == inst) {
        return Ok(e.element.clone());
    }
    Ok(lower_element(s, &parse_element_literal(text)?, 1)?)
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| Failure::Usage(e.to_string()))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Check { target, property, grid } => {
            let sample = sample_of(&grid)?;
            let cat = load(&target.spec)?;
            let s = instance(&cat, &target.instance)?;
            let start = Instant::now();
            let report = if let Ok(p) = Property::from_str(&property) {
                check_property(s, p, &sample)?
            } else if let Ok(i) = Implication::from_str(&property) {
                check_implication(s, i, &sample)?
            } else if let Some(n) = property.strip_prefix("dim<=").and_then(|n| n.parse().ok()) {
                dim_at_most(s, n, &sample)?
            } else {
                let entries = run_suite_on(&cat, Suite::All, &sample, Some(&target.instance))?;
                let found = entries.into_iter().find(|e| e.report.property == property);
                found.ok_or_else(|| CuError::UnknownProperty(property.clone()))?.report
            };
            let json = JsonReport::new(s, &target.instance, &report, start.elapsed().as_millis() as u64);
            emit(out, &json)?;
            Ok(exit_code([&report.verdict]))
        }
        Command::Sigma { target, element: text, grid } => {
            sample_of(&grid)?;
            let cat = load(&target.spec)?;
            let s = instance(&cat, &target.instance)?;
            let x = element(&cat, &target.instance, s, &text)?;
            writeln!(out, "{}", s.literal(&sigma(s, &x)?)).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(0)
        }
        Command::Soft { target, element: text, grid } => {
            let sample = sample_of(&grid)?;
            let cat = load(&target.spec)?;
            let s = instance(&cat, &target.instance)?;
            let x = element(&cat, &target.instance, s, &text)?;
            let value = match soft_certificate(s, &x, &sample)? {
                SoftCertificate::Soft(ws) => json!({
                    "instance": target.instance,
                    "element": s.literal(&x),
                    "soft": true,
                    "witnesses": ws.iter().map(|w| json!({
                        "xPrime": s.literal(&w.x_prime),
                        "t": s.literal(&w.t),
                    })).collect::<Vec<_>>(),
                }),
                SoftCertificate::NotSoft { x_prime, functional } => json!({
                    "instance": target.instance,
                    "element": s.literal(&x),
                    "soft": false,
                    "obstruction": { "xPrime": s.literal(&x_prime), "functional": functional.to_string() },
                }),
            };
            emit(out, &value)?;
            Ok(0)
        }
        Command::Dim { target, max, grid } => {
            let sample = sample_of(&grid)?;
            let cat = load(&target.spec)?;
            let s = instance(&cat, &target.instance)?;
            let start = Instant::now();
            let b = dim_bracket(s, max, &sample)?;
            let ms = start.elapsed().as_millis() as u64;
            let g = grid_label(&sample);
            let (statement, code) = match b.first_pass {
                Some(n) if b.lower_bound_certified() => (bracket_note(n, &sample), 0),
                Some(n) => (format!("≤ {n} at grid {g}"), 0),
                None if b.reports.iter().all(|r| r.verdict == Verdict::Fail) => {
                    (format!("counterexample to ≤ {max} at grid {g}"), EXIT_FAIL)
                }
                None => (format!("undecided up to {max} at grid {g}"), EXIT_INCONCLUSIVE),
            };
            let steps: Vec<JsonReport> = b.reports.iter().map(|r| JsonReport::new(s, &target.instance, r, ms)).collect();
            emit(
                out,
                &json!({
                    "instance": target.instance,
                    "max": max,
                    "upperBound": b.first_pass,
                    "statement": statement,
                    "steps": steps,
                }),
            )?;
            Ok(code)
        }
        Command::Rc { target, unit, tol, grid } => {
            let sample = sample_of(&grid)?;
            let tol = parse_rational(&tol).ok_or_else(|| Failure::Usage(format!("`{tol}` is not a rational")))?;
            let cat = load(&target.spec)?;
            let s = instance(&cat, &target.instance)?;
            let e = element(&cat, &target.instance, s, &unit)?;
            let b = rc_bracket(s, &e, tol, &functional_family(s, &sample), &sample)?;
            let note = b.zero_failure.as_ref().map(|r| {
                let lits: Vec<String> = r.witness().iter().map(|x| s.literal(x)).collect();
                format!("r=0 fails: ({})", lits.join(", "))
            });
            let tested: Vec<_> = b
                .tested
                .iter()
                .map(|(r, v)| json!({ "r": fmt_rational(r), "verdict": v }))
                .collect();
            emit(
                out,
                &json!({
                    "instance": target.instance,
                    "unit": s.literal(&e),
                    "tolerance": fmt_rational(&b.tolerance),
                    "lower": fmt_rational(&b.lower),
                    "upper": b.upper.as_ref().map(fmt_rational),
                    "note": note,
                    "tested": tested,
                    "exhaustive": b.exhaustive,
                    "sample": sample,
                }),
            )?;
            Ok(if b.upper.is_some() { 0 } else { EXIT_INCONCLUSIVE })
        }
        Command::VerifyPaper { spec, suite, grid } => {
            let sample = sample_of(&grid)?;
            let suite = Suite::from_str(&suite)?;
            let cat = load(&spec)?;
            let entries = run_suite(&cat, suite, &sample)?;
            let reports: Vec<JsonReport> = entries
                .iter()
                .map(|e| JsonReport::new(&e.semigroup, &e.instance, &e.report, e.elapsed_ms))
                .collect();
            emit(out, &reports)?;
            Ok(exit_code(reports.iter().map(|r| &r.verdict)))
        }
    }
}
