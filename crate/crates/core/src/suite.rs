//! Named check suites over a resolved catalog.
//!
//! Each suite selects, per instance, the checks whose hypotheses the
//! instance's capabilities meet, so every emitted check is expected to pass.
//! Checks run concurrently; the output is sorted by catalog position of the
//! instance and then by check id.

use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::dsl::Catalog;
use crate::element::Element;
use crate::error::{CuError, Result};
use crate::functionals::duality_laws;
use crate::invariants::{dim_bracket, verify_dim_sandwich, verify_rc_embedding_monotone, verify_rc_soft_equality, Embedding};
use crate::laws::{core_laws, fixed_point_audits, way_below_matches_chains};
use crate::regularity::{audit_claims, check_implication, check_property, Implication, Property};
use crate::report::{Report, SearchMode, Verdict};
use crate::sample::SampleSpec;
use crate::semigroup::{Kind, Semigroup};
use crate::soft::{indicator_characterization, lx_laws, sigma_laws, softness_laws};
use crate::value::Rational;

/// Tolerance of the radius-of-comparison brackets.
pub fn rc_tolerance() -> Rational {
    Rational::new(1, 16)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Core,
    Regularity,
    Soft,
    Retract,
    Functionals,
    Dim,
    Rc,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] =
        [Suite::Core, Suite::Regularity, Suite::Soft, Suite::Retract, Suite::Functionals, Suite::Dim, Suite::Rc, Suite::All];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Regularity => "regularity",
            Suite::Soft => "soft",
            Suite::Retract => "retract",
            Suite::Functionals => "functionals",
            Suite::Dim => "dim",
            Suite::Rc => "rc",
            Suite::All => "all",
        }
    }

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::ALL[..7].to_vec(),
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = CuError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id() == s)
            .ok_or_else(|| CuError::Spec(format!("unknown suite `{s}`")))
    }
}

/// A report together with the instance it belongs to.
#[derive(Clone, Debug)]
pub struct SuiteEntry {
    pub instance: String,
    pub semigroup: Semigroup,
    pub report: Report,
    /// Wall time of the task that produced the report.
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug)]
enum Task {
    Core,
    WayBelowChains,
    FixedAudits,
    Softness,
    Indicator,
    Sigma,
    Lx,
    Duality,
    Claims,
    Implication(Implication),
    Axiom(Property),
    DimSandwich,
    DimBracket,
    RcSoft { name: String, unit: Element },
    RcEmbedding { name: String, unit: Element, ambient: Semigroup, embedding: Embedding },
}

impl Task {
    /// The id used when the task fails to produce reports.
    fn label(&self) -> String {
        match self {
            Task::Core => "core".into(),
            Task::WayBelowChains => "way-below-chains".into(),
            Task::FixedAudits => "fixed".into(),
            Task::Softness => "soft".into(),
            Task::Indicator => "soft:indicator-of-up-set".into(),
            Task::Sigma => "sigma".into(),
            Task::Lx => "lx".into(),
            Task::Duality => "duality".into(),
            Task::Claims => "claim".into(),
            Task::Implication(i) => i.id().into(),
            Task::Axiom(p) => p.id().into(),
            Task::DimSandwich => "dim-sandwich".into(),
            Task::DimBracket => "dim-bracket".into(),
            Task::RcSoft { name, .. } => format!("rc-soft-equality@{name}"),
            Task::RcEmbedding { name, .. } => format!("rc-embedding-monotone@{name}"),
        }
    }

    /// Instances larger than this at the requested grid run on the coarse
    /// grid instead.
    fn grid_limit(&self) -> usize {
        match self {
            Task::WayBelowChains => 0,
            Task::Core | Task::FixedAudits | Task::Softness | Task::Indicator | Task::Claims | Task::Axiom(_) => 200,
            Task::Sigma => 1000,
            Task::Implication(_) | Task::Lx | Task::Duality => 100,
            Task::DimSandwich | Task::DimBracket => 100,
            Task::RcSoft { .. } | Task::RcEmbedding { .. } => 100,
        }
    }

    fn run(&self, s: &Semigroup, sample: &SampleSpec) -> Result<Vec<Report>> {
        Ok(match self {
            Task::Core => core_laws(s, sample)?,
            Task::WayBelowChains => vec![way_below_matches_chains(s, &sample.with_max_tuples(sample.max_tuples.min(20_000)))?],
            Task::FixedAudits => fixed_point_audits(s, sample)?,
            Task::Softness => softness_laws(s, sample)?,
            Task::Indicator => vec![indicator_characterization(s, sample)?],
            Task::Sigma => sigma_laws(s, sample)?,
            Task::Lx => lx_laws(s, sample)?,
            Task::Duality => duality_laws(s, sample)?,
            Task::Claims => audit_claims(s, sample)?,
            Task::Implication(i) => vec![check_implication(s, *i, sample)?],
            Task::Axiom(p) => vec![check_property(s, *p, sample)?],
            Task::DimSandwich => vec![verify_dim_sandwich(s, sample)?.report],
            Task::DimBracket => {
                let b = dim_bracket(s, crate::invariants::dim::DIM_MAX_N, sample)?;
                let searched = b.reports.iter().map(|r| r.searched).sum();
                let mode = if b.reports.iter().all(|r| r.mode == SearchMode::Exhaustive) {
                    SearchMode::Exhaustive
                } else {
                    SearchMode::Sampled
                };
                let base = Report::pass("dim-bracket", *sample, mode, searched);
                vec![match b.first_pass {
                    Some(n) if b.lower_bound_certified() => base.with_note(bracket_note(n, sample)),
                    Some(n) => Report { verdict: Verdict::Inconclusive, ..base }
                        .with_note(format!("≤ {n} at grid {}; lower bound not certified", grid_label(sample))),
                    None => Report { verdict: Verdict::Inconclusive, ..base }
                        .with_note(format!("no n ≤ {} passed", crate::invariants::dim::DIM_MAX_N)),
                }]
            }
            Task::RcSoft { name, unit } => {
                let mut r = verify_rc_soft_equality(s, unit, rc_tolerance(), sample)?.report;
                r.property = format!("rc-soft-equality@{name}");
                vec![r]
            }
            Task::RcEmbedding { name, unit, ambient, embedding } => {
                let mut r = verify_rc_embedding_monotone(s, ambient, *embedding, unit, rc_tolerance(), sample)?.report;
                r.property = format!("rc-embedding-monotone@{name}");
                vec![r]
            }
        })
    }
}

pub fn grid_label(sample: &SampleSpec) -> String {
    format!("(cap {}, denom {})", sample.value_cap, sample.denominator_cap)
}

/// The wording of a dimension bracket: an upper bound, and the counterexample
/// one below it when there is one.
pub fn bracket_note(n: u32, sample: &SampleSpec) -> String {
    let g = grid_label(sample);
    if n == 0 {
        format!("≤ 0 at grid {g}")
    } else {
        format!("≤ {n} at grid {g}; counterexample to ≤ {} at grid {g}", n - 1)
    }
}

/// The grid used when the requested one is too large for a task.
pub fn coarse(sample: &SampleSpec) -> SampleSpec {
    SampleSpec {
        value_cap: sample.value_cap.min(2),
        denominator_cap: sample.denominator_cap.min(2),
        ..*sample
    }
}

fn fit(s: &Semigroup, task: &Task, sample: &SampleSpec) -> Result<(SampleSpec, bool)> {
    let size = s.enumerate(sample)?.len();
    if size > task.grid_limit() && coarse(sample) != *sample {
        Ok((coarse(sample), true))
    } else {
        Ok((*sample, false))
    }
}

fn is_fixed_ambient(cat: &Catalog, s: &Semigroup) -> bool {
    cat.instances().any(|(_, t)| matches!(t.kind(), Kind::Fixed { ambient, .. } if ambient.describe() == s.describe()))
}

fn plan(cat: &Catalog, suite: Suite) -> Vec<(usize, String, Semigroup, Task)> {
    let mut tasks = Vec::new();
    for (order, (name, s)) in cat.instances().enumerate() {
        let caps = s.capabilities();
        let divisible = caps.divisible2w;
        let cancellative = divisible && caps.weakly_cancellative;
        let mut add = |t: Task| tasks.push((order, name.to_string(), s.clone(), t));
        for part in suite.parts() {
            match part {
                Suite::Core => {
                    add(Task::Core);
                    add(Task::WayBelowChains);
                    if matches!(s.kind(), Kind::Fixed { .. }) {
                        add(Task::FixedAudits);
                    }
                }
                Suite::Regularity => {
                    add(Task::Claims);
                    for i in Implication::ALL {
                        add(Task::Implication(i));
                    }
                    if matches!(s.kind(), Kind::Fixed { .. }) || is_fixed_ambient(cat, s) {
                        for p in [Property::O5, Property::O6, Property::O7] {
                            add(Task::Axiom(p));
                        }
                    }
                }
                Suite::Soft => {
                    add(Task::Softness);
                    if matches!(s.kind(), Kind::LscNat(_)) {
                        add(Task::Indicator);
                    }
                }
                Suite::Retract if divisible => {
                    add(Task::Sigma);
                    add(Task::Lx);
                }
                Suite::Functionals if divisible => add(Task::Duality),
                Suite::Dim if cancellative && !matches!(s.kind(), Kind::SoftPart(_)) => add(Task::DimSandwich),
                Suite::Dim => add(Task::DimBracket),
                Suite::Rc => {
                    for e in cat.elements().iter().filter(|e| e.instance == name) {
                        let unit = e.element.clone();
                        match s.kind() {
                            Kind::SoftPart(a) => add(Task::RcEmbedding {
                                name: e.name.clone(),
                                unit,
                                ambient: a.clone(),
                                embedding: Embedding::SoftPart,
                            }),
                            _ if cancellative => add(Task::RcSoft { name: e.name.clone(), unit }),
                            _ => {}
                        }
                    }
                }
                _ => {}
            }
        }
    }
    tasks
}

fn execute(order: usize, name: &str, s: &Semigroup, task: &Task, sample: &SampleSpec) -> Vec<(usize, SuiteEntry)> {
    let start = Instant::now();
    let outcome = fit(s, task, sample).and_then(|(used, coarsened)| {
        let reports = task.run(s, &used)?;
        Ok(reports
            .into_iter()
            .map(|r| if coarsened { r.with_note(format!("run on the coarse grid {}", grid_label(&used))) } else { r })
            .collect::<Vec<_>>())
    });
    let reports = outcome.unwrap_or_else(|e| {
        let r = Report {
            verdict: Verdict::Inconclusive,
            ..Report::pass(task.label(), *sample, SearchMode::Exhaustive, 0)
        };
        vec![r.with_note(e.to_string())]
    });
    let elapsed_ms = start.elapsed().as_millis() as u64;
    reports
        .into_iter()
        .map(|report| (order, SuiteEntry { instance: name.to_string(), semigroup: s.clone(), report, elapsed_ms }))
        .collect()
}

/// Runs `suite` on every instance of `cat`.
pub fn run_suite(cat: &Catalog, suite: Suite, sample: &SampleSpec) -> Result<Vec<SuiteEntry>> {
    run_suite_on(cat, suite, sample, None)
}

/// Runs `suite`, restricted to one instance when `instance` is given.
pub fn run_suite_on(cat: &Catalog, suite: Suite, sample: &SampleSpec, instance: Option<&str>) -> Result<Vec<SuiteEntry>> {
    sample.validate()?;
    let mut tasks = plan(cat, suite);
    if let Some(name) = instance {
        tasks.retain(|(_, n, _, _)| n == name);
    }
    let mut out: Vec<(usize, SuiteEntry)> = tasks
        .par_iter()
        .flat_map_iter(|(order, name, s, task)| execute(*order, name, s, task, sample))
        .collect();
    out.sort_by(|(a, x), (b, y)| a.cmp(b).then_with(|| x.report.property.cmp(&y.report.property)));
    Ok(out.into_iter().map(|(_, e)| e).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::load;

    #[test]
    fn reports_are_sorted_by_instance_then_check() {
        let cat = load("semigroup T = two-point\nsemigroup N = ext-nat").unwrap();
        let out = run_suite(&cat, Suite::Soft, &SampleSpec::new(2, 2)).unwrap();
        let keys: Vec<(&str, &str)> = out.iter().map(|e| (e.instance.as_str(), e.report.property.as_str())).collect();
        assert_eq!(
            keys,
            vec![
                ("T", "soft:add-closed"),
                ("T", "soft:generic-matches-closed-form"),
                ("N", "soft:add-closed"),
                ("N", "soft:generic-matches-closed-form"),
            ]
        );
        assert!(out.iter().all(|e| e.report.is_pass()));
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.id().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }
}
