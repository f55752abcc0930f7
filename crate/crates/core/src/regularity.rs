//! Regularity and cancellation properties, checked on grids.
//!
//! Every property is a list of typed variables with premise filters plus a
//! conclusion. Universally quantified variables range over the sample grid
//! (or its strongly soft part); existential witnesses over a refined grid
//! that also holds differences, halves and midpoints of grid values.

use std::fmt;
use std::str::FromStr;

use crate::element::Element;
use crate::error::{CuError, Result};
use crate::report::{Report, SearchMode, Verdict};
use crate::sample::SampleSpec;
use crate::search::{exists, search, Var};
use crate::semigroup::Semigroup;
use crate::soft::closed_form;

/// Largest multiplier used by the perforation properties.
pub const PERFORATION_N: u64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    O5,
    O5Full,
    O6,
    O7,
    WeakCancellation,
    Separative,
    LeftSoftSeparative,
    LeftSoftSeparativeEq,
    Divisible2w,
    Unperforated,
    NearlyUnperforated,
    AlmostUnperforated,
    /// Almost unperforation on all of `S`, not only on the soft part.
    AlmostUnperforatedAll,
    InfSemilattice,
    SoftCancellation,
}

impl Property {
    pub const ALL: [Property; 15] = [
        Property::O5,
        Property::O5Full,
        Property::O6,
        Property::O7,
        Property::WeakCancellation,
        Property::Separative,
        Property::LeftSoftSeparative,
        Property::LeftSoftSeparativeEq,
        Property::Divisible2w,
        Property::Unperforated,
        Property::NearlyUnperforated,
        Property::AlmostUnperforated,
        Property::AlmostUnperforatedAll,
        Property::InfSemilattice,
        Property::SoftCancellation,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Property::O5 => "o5",
            Property::O5Full => "o5-full",
            Property::O6 => "o6",
            Property::O7 => "o7",
            Property::WeakCancellation => "wc",
            Property::Separative => "sep",
            Property::LeftSoftSeparative => "lss",
            Property::LeftSoftSeparativeEq => "lss-eq",
            Property::Divisible2w => "div2",
            Property::Unperforated => "unperf",
            Property::NearlyUnperforated => "near-unperf",
            Property::AlmostUnperforated => "almost-unperf",
            Property::AlmostUnperforatedAll => "au",
            Property::InfSemilattice => "inf-sl",
            Property::SoftCancellation => "soft-cancel",
        }
    }

    /// Refinement factor of the existential witness grid, if any.
    fn witness_factor(self) -> Option<u64> {
        match self {
            Property::O5Full => Some(4),
            Property::O5 | Property::O6 | Property::O7 | Property::Divisible2w => Some(2),
            _ => None,
        }
    }

    fn shape(self) -> Shape {
        use Dom::{All, Soft};
        let v = |name, dom, admit| VarSpec { name, dom, admit };
        match self {
            Property::O5 => Shape {
                vars: vec![
                    v("x", All, None),
                    v("x'", All, Some(|c, b| c.s.wb(b[1], b[0]))),
                    v("y", All, None),
                    v("y'", All, Some(|c, b| c.s.wb(b[3], b[2]))),
                    v("z", All, Some(|c, b| c.s.le(&c.s.plus(b[0], b[2]), b[4]))),
                ],
                conclusion: |c, b| {
                    let (x, xp, yp, z) = (b[0], b[1], b[3], b[4]);
                    Ok(exists(&c.w, |cc| {
                        c.s.wb(yp, cc) && c.s.le(&c.s.plus(xp, cc), z) && c.s.le(z, &c.s.plus(x, cc))
                    })
                    .is_some())
                },
            },
            Property::O5Full => Shape {
                vars: vec![
                    v("x", All, None),
                    v("x'", All, Some(|c, b| c.s.wb(b[1], b[0]))),
                    v("y", All, None),
                    v("y'", All, Some(|c, b| c.s.wb(b[3], b[2]))),
                    v("z'", All, Some(|c, b| c.s.wb(&c.s.plus(b[0], b[2]), b[4]))),
                    v("z", All, Some(|c, b| c.s.wb(b[4], b[5]))),
                ],
                conclusion: |c, b| {
                    let (x, xp, yp, zp, z) = (b[0], b[1], b[3], b[4], b[5]);
                    Ok(c.w.iter().any(|c1| {
                        c.s.wb(yp, c1)
                            && c.s.wb(zp, &c.s.plus(x, c1))
                            && c.w.iter().any(|c2| c.s.wb(c1, c2) && c.s.wb(&c.s.plus(xp, c2), z))
                    }))
                },
            },
            Property::O6 => Shape {
                vars: vec![
                    v("x", All, None),
                    v("x'", All, Some(|c, b| c.s.wb(b[1], b[0]))),
                    v("y", All, None),
                    v("z", All, Some(|c, b| c.s.wb(b[0], &c.s.plus(b[2], b[3])))),
                ],
                conclusion: |c, b| {
                    let (x, xp, y, z) = (b[0], b[1], b[2], b[3]);
                    if c.s.capabilities().has_infima {
                        // Any witness pair lies below (x ∧ y, x ∧ z).
                        return Ok(c.s.le(xp, &c.s.plus(&c.s.meet(x, y), &c.s.meet(x, z))));
                    }
                    let vs: Vec<&Element> = c.w.iter().filter(|v| c.s.le(v, x) && c.s.le(v, y)).collect();
                    let ws: Vec<&Element> = c.w.iter().filter(|w| c.s.le(w, x) && c.s.le(w, z)).collect();
                    Ok(vs.iter().any(|v| ws.iter().any(|w| c.s.le(xp, &c.s.plus(v, w)))))
                },
            },
            Property::O7 => Shape {
                vars: vec![
                    v("x", All, None),
                    v("x'", All, Some(|c, b| c.s.wb(b[1], b[0]))),
                    v("y", All, None),
                    v("y'", All, Some(|c, b| c.s.wb(b[3], b[2]))),
                    v("w", All, Some(|c, b| c.s.le(b[0], b[4]) && c.s.le(b[2], b[4]))),
                ],
                conclusion: |c, b| {
                    let (x, xp, y, yp, w) = (b[0], b[1], b[2], b[3], b[4]);
                    let xy = c.s.plus(x, y);
                    if c.s.capabilities().has_infima {
                        // Every witness lies below w ∧ (x + y).
                        let m = c.s.meet(w, &xy);
                        return Ok(c.s.wb(xp, &m) && c.s.wb(yp, &m));
                    }
                    Ok(exists(&c.w, |z| c.s.wb(xp, z) && c.s.wb(yp, z) && c.s.le(z, w) && c.s.le(z, &xy))
                        .is_some())
                },
            },
            Property::WeakCancellation => Shape {
                vars: vec![
                    v("x", All, None),
                    v("y", All, None),
                    v("z", All, Some(|c, b| c.s.wb(&c.s.plus(b[0], b[2]), &c.s.plus(b[1], b[2])))),
                ],
                conclusion: |c, b| Ok(c.s.wb(b[0], b[1])),
            },
            Property::Separative | Property::LeftSoftSeparative => Shape {
                vars: vec![
                    v("x", if self == Property::Separative { All } else { Soft }, None),
                    v("y", All, None),
                    v("t", All, Some(|c, b| separation_premise(&c.s, b[0], b[1], b[2]))),
                ],
                conclusion: |c, b| Ok(c.s.wb(b[0], b[1])),
            },
            Property::LeftSoftSeparativeEq => Shape {
                vars: vec![
                    v("x", Soft, None),
                    v("y", All, None),
                    v("t'", All, Some(|c, b| {
                        c.s.wb(b[2], &b[1].times_infinity()) && c.s.wb(b[2], &b[0].times_infinity())
                    })),
                    v("t", All, Some(|c, b| {
                        c.s.wb(b[2], b[3]) && c.s.le(&c.s.plus(b[0], b[3]), &c.s.plus(b[1], b[2]))
                    })),
                ],
                conclusion: |c, b| Ok(c.s.le(b[0], b[1])),
            },
            Property::SoftCancellation => Shape {
                vars: vec![
                    v("x", Soft, None),
                    v("y", All, None),
                    v("t'", All, Some(|c, b| c.s.wb(b[2], &b[1].times_infinity()))),
                    v("t", Soft, Some(|c, b| {
                        c.s.wb(b[2], b[3]) && c.s.le(&c.s.plus(b[0], b[3]), &c.s.plus(b[1], b[2]))
                    })),
                ],
                conclusion: |c, b| Ok(c.s.le(b[0], b[1])),
            },
            Property::Divisible2w => Shape {
                vars: vec![v("x", All, None), v("x'", All, Some(|c, b| c.s.wb(b[1], b[0])))],
                conclusion: |c, b| {
                    let (x, xp) = (b[0], b[1]);
                    Ok(exists(&c.w, |y| c.s.le(&y.scale(2), x) && c.s.le(xp, &y.times_infinity())).is_some())
                },
            },
            Property::Unperforated => Shape {
                vars: vec![
                    v("x", Soft, None),
                    v("y", Soft, Some(|c, b| (1..=PERFORATION_N).any(|n| c.s.le(&b[0].scale(n), &b[1].scale(n))))),
                ],
                conclusion: |c, b| Ok(c.s.le(b[0], b[1])),
            },
            Property::NearlyUnperforated => Shape {
                vars: vec![
                    v("x", Soft, None),
                    v("y", Soft, Some(|c, b| {
                        (PERFORATION_N..=2 * PERFORATION_N).all(|n| c.s.le(&b[0].scale(n), &b[1].scale(n)))
                    })),
                ],
                conclusion: |c, b| Ok(c.s.le(b[0], b[1])),
            },
            Property::AlmostUnperforated | Property::AlmostUnperforatedAll => Shape {
                vars: vec![
                    v("x", if self == Property::AlmostUnperforated { Soft } else { All }, None),
                    v("y", if self == Property::AlmostUnperforated { Soft } else { All }, Some(|c, b| {
                        (1..=PERFORATION_N).any(|n| c.s.le(&b[0].scale(n + 1), &b[1].scale(n)))
                    })),
                ],
                conclusion: |c, b| Ok(c.s.le(b[0], b[1])),
            },
            Property::InfSemilattice => Shape {
                vars: vec![v("x", All, None), v("y", All, None), v("z", All, None)],
                conclusion: |c, b| {
                    let (x, y, z) = (b[0], b[1], b[2]);
                    let lhs = c.s.meet(&c.s.plus(x, z), &c.s.plus(y, z));
                    Ok(lhs == c.s.plus(&c.s.meet(x, y), z))
                },
            },
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Property {
    type Err = CuError;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| CuError::UnknownProperty(s.to_string()))
    }
}

/// `x + t ≪ y + t`, `t ≪ ∞x` and `t ≪ ∞y`.
fn separation_premise(s: &Semigroup, x: &Element, y: &Element, t: &Element) -> bool {
    s.wb(&s.plus(x, t), &s.plus(y, t)) && s.wb(t, &x.times_infinity()) && s.wb(t, &y.times_infinity())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dom {
    All,
    Soft,
}

type Admit = fn(&Ctx, &[&Element]) -> bool;
type Conclusion = fn(&Ctx, &[&Element]) -> Result<bool>;

struct VarSpec {
    name: &'static str,
    dom: Dom,
    admit: Option<Admit>,
}

struct Shape {
    vars: Vec<VarSpec>,
    conclusion: Conclusion,
}

/// The handle plus the grids a property is evaluated on.
struct Ctx {
    s: Semigroup,
    all: Vec<Element>,
    soft: Vec<Element>,
    w: Vec<Element>,
}

impl Ctx {
    fn new(s: &Semigroup, sample: &SampleSpec, witness_factor: Option<u64>) -> Result<Self> {
        let all = s.enumerate(sample)?;
        let soft = all.iter().filter(|x| closed_form(s, x)).cloned().collect();
        let w = match witness_factor {
            Some(f) => s.enumerate_grid(&sample.witness_grid(f))?,
            None => Vec::new(),
        };
        Ok(Ctx { s: s.clone(), all, soft, w })
    }

    fn domain(&self, d: Dom) -> &[Element] {
        match d {
            Dom::All => &self.all,
            Dom::Soft => &self.soft,
        }
    }
}

fn require_infima(s: &Semigroup) -> Result<()> {
    if s.capabilities().has_infima {
        Ok(())
    } else {
        Err(CuError::CapabilityMissing { instance: s.name().to_string(), capability: "hasInfima" })
    }
}

const SAMPLED_NOTE: &str = "sampled: a pass is evidence, not proof";

fn annotate(r: Report) -> Report {
    if r.mode == SearchMode::Sampled && r.verdict == Verdict::Pass {
        r.with_note(SAMPLED_NOTE)
    } else {
        r
    }
}

/// Checks one property on the grid of `sample`.
pub fn check_property(s: &Semigroup, property: Property, sample: &SampleSpec) -> Result<Report> {
    sample.validate()?;
    if property == Property::InfSemilattice {
        require_infima(s)?;
    }
    let ctx = Ctx::new(s, sample, property.witness_factor())?;
    let shape = property.shape();
    let vars: Vec<Var<'_>> = shape
        .vars
        .iter()
        .map(|spec| {
            let var = Var::new(spec.name, ctx.domain(spec.dom));
            match spec.admit {
                Some(f) => {
                    let ctx = &ctx;
                    var.admit(move |b| f(ctx, b))
                }
                None => var,
            }
        })
        .collect();
    let report = search(property.id(), &vars, sample, |b| (shape.conclusion)(&ctx, b))?;
    Ok(annotate(report))
}

/// Re-evaluates a counterexample: `true` when every premise holds and the
/// conclusion fails.
pub fn replay(s: &Semigroup, property: Property, sample: &SampleSpec, tuple: &[Element]) -> Result<bool> {
    let shape = property.shape();
    if tuple.len() != shape.vars.len() {
        return Err(CuError::Internal(format!(
            "{property} binds {} variables, got {}",
            shape.vars.len(),
            tuple.len()
        )));
    }
    for x in tuple {
        s.validate(x)?;
    }
    let ctx = Ctx::new(s, sample, property.witness_factor())?;
    let bound: Vec<&Element> = tuple.iter().collect();
    for (i, spec) in shape.vars.iter().enumerate() {
        if spec.dom == Dom::Soft && !closed_form(s, &tuple[i]) {
            return Ok(false);
        }
        if let Some(f) = spec.admit {
            if !f(&ctx, &bound[..=i]) {
                return Ok(false);
            }
        }
    }
    Ok(!(shape.conclusion)(&ctx, &bound)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Implication {
    /// Weak cancellation ⇒ separativity ⇒ left-soft separativity.
    WcSepLss,
    /// Almost unperforation together with O5 ⇒ left-soft separativity.
    AuO5Lss,
    /// Unperforation, near and almost unperforation agree on the soft part.
    TrichotomyOnSoft,
}

impl Implication {
    pub const ALL: [Implication; 3] = [Implication::WcSepLss, Implication::AuO5Lss, Implication::TrichotomyOnSoft];

    pub fn id(self) -> &'static str {
        match self {
            Implication::WcSepLss => "wc=>sep=>lss",
            Implication::AuO5Lss => "au+o5=>lss",
            Implication::TrichotomyOnSoft => "trichotomy-on-soft",
        }
    }
}

impl FromStr for Implication {
    type Err = CuError;

    fn from_str(s: &str) -> Result<Self> {
        Implication::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| CuError::UnknownProperty(s.to_string()))
    }
}

fn verdict_summary(parts: &[&Report]) -> String {
    let shown: Vec<String> = parts.iter().map(|r| format!("{}={:?}", r.property, r.verdict).to_lowercase()).collect();
    shown.join(", ")
}

fn weakest_mode(parts: &[&Report]) -> SearchMode {
    if parts.iter().all(|r| r.mode == SearchMode::Exhaustive) {
        SearchMode::Exhaustive
    } else {
        SearchMode::Sampled
    }
}

/// Evaluates both sides of an implication on the same grid.
pub fn check_implication(s: &Semigroup, which: Implication, sample: &SampleSpec) -> Result<Report> {
    sample.validate()?;
    let id = which.id();
    match which {
        Implication::WcSepLss => {
            let wc = check_property(s, Property::WeakCancellation, sample)?;
            let sep = check_property(s, Property::Separative, sample)?;
            let lss = check_property(s, Property::LeftSoftSeparative, sample)?;
            let ctx = Ctx::new(s, sample, None)?;
            let vars = [Var::new("x", &ctx.all), Var::new("y", &ctx.all), Var::new("t", &ctx.all)];
            let scan = search(id, &vars, sample, |b| {
                let (x, y, t) = (b[0], b[1], b[2]);
                let holds = s.wb(x, y);
                let wc_i = !s.wb(&s.plus(x, t), &s.plus(y, t)) || holds;
                let sep_prem = separation_premise(s, x, y, t);
                let sep_i = !sep_prem || holds;
                let lss_i = !(sep_prem && closed_form(s, x)) || holds;
                Ok(!(wc_i && !sep_i) && !(sep_i && !lss_i))
            })?;
            let parts = [&wc, &sep, &lss];
            let searched = scan.searched + parts.iter().map(|r| r.searched).sum::<u64>();
            let mode = weakest_mode(&[&wc, &sep, &lss, &scan]);
            if scan.is_fail() {
                return Ok(Report { searched, mode, ..scan });
            }
            let broken = if wc.is_pass() && sep.is_fail() {
                Some(&sep)
            } else if sep.is_pass() && lss.is_fail() {
                Some(&lss)
            } else {
                None
            };
            Ok(match broken {
                Some(r) => Report::fail(id, *sample, mode, searched, r.counterexample.clone().unwrap_or_default()),
                None => Report::pass(id, *sample, mode, searched),
            }
            .with_note(verdict_summary(&parts)))
        }
        Implication::AuO5Lss => {
            let au = check_property(s, Property::AlmostUnperforatedAll, sample)?;
            let o5 = check_property(s, Property::O5, sample)?;
            let lss = check_property(s, Property::LeftSoftSeparative, sample)?;
            let parts = [&au, &o5, &lss];
            let searched = parts.iter().map(|r| r.searched).sum();
            let mode = weakest_mode(&parts);
            Ok(if au.is_pass() && o5.is_pass() && lss.is_fail() {
                Report::fail(id, *sample, mode, searched, lss.counterexample.clone().unwrap_or_default())
            } else {
                Report::pass(id, *sample, mode, searched)
            }
            .with_note(verdict_summary(&parts)))
        }
        Implication::TrichotomyOnSoft => {
            let un = check_property(s, Property::Unperforated, sample)?;
            let near = check_property(s, Property::NearlyUnperforated, sample)?;
            let almost = check_property(s, Property::AlmostUnperforated, sample)?;
            let parts = [&un, &near, &almost];
            let searched = parts.iter().map(|r| r.searched).sum();
            let mode = weakest_mode(&parts);
            let decided: Vec<&&Report> = parts.iter().filter(|r| r.verdict != Verdict::Inconclusive).collect();
            let agree = decided.windows(2).all(|w| w[0].verdict == w[1].verdict);
            Ok(if agree {
                Report::pass(id, *sample, mode, searched)
            } else {
                let failing = parts.iter().find(|r| r.is_fail()).expect("disagreement needs a failure");
                Report::fail(id, *sample, mode, searched, failing.counterexample.clone().unwrap_or_default())
            }
            .with_note(verdict_summary(&parts)))
        }
    }
}

/// Searches for `x, y, z, w` with `w = 2w`, `x ≤ y + z`, `x ≤ y + w` and
/// `x ≰ y + (z ∧ w)`.
pub fn search_inf_idempotent_property(s: &Semigroup, sample: &SampleSpec) -> Result<Report> {
    require_infima(s)?;
    sample.validate()?;
    let all = s.enumerate(sample)?;
    let vars = [
        Var::new("w", &all).admit(|b| s.plus(b[0], b[0]) == *b[0]),
        Var::new("y", &all),
        Var::new("z", &all),
        Var::new("x", &all).admit(|b| s.le(b[3], &s.plus(b[1], b[2])) && s.le(b[3], &s.plus(b[1], b[0]))),
    ];
    let report = search("inf-idempotent", &vars, sample, |b| {
        let (w, y, z, x) = (b[0], b[1], b[2], b[3]);
        Ok(s.le(x, &s.plus(y, &s.meet(z, w))))
    })?;
    Ok(annotate(report))
}

/// Checks each capability claim of `s` against the matching property: a
/// true claim must pass, a false one must fail.
pub fn audit_claims(s: &Semigroup, sample: &SampleSpec) -> Result<Vec<Report>> {
    let caps = s.capabilities();
    let mut out = Vec::new();
    let claims = [
        ("divisible2w", caps.divisible2w, Property::Divisible2w),
        ("weaklyCancellative", caps.weakly_cancellative, Property::WeakCancellation),
    ];
    for (name, claimed, p) in claims {
        out.push(claim_report(name, claimed, check_property(s, p, sample)?));
    }
    if caps.has_infima {
        out.push(claim_report("hasInfima", true, infima_are_greatest(s, sample)?));
        if caps.inf_semilattice {
            out.push(claim_report("infSemilattice", true, check_property(s, Property::InfSemilattice, sample)?));
        }
    }
    let all = s.enumerate(sample)?;
    let vars = [Var::new("x", &all)];
    let soft = search("all-soft", &vars, sample, |b| Ok(closed_form(s, b[0])))?;
    out.push(claim_report("allSoft", caps.all_soft, soft));
    Ok(out)
}

fn claim_report(name: &str, claimed: bool, r: Report) -> Report {
    let id = format!("claim:{name}");
    let agrees = match r.verdict {
        Verdict::Pass => claimed,
        Verdict::Fail => !claimed,
        Verdict::Inconclusive => false,
    };
    let note = format!("claimed {claimed}, {} {:?}", r.property, r.verdict).to_lowercase();
    let out = if agrees {
        Report { property: id, verdict: Verdict::Pass, counterexample: None, note: None, ..r }
    } else if r.verdict == Verdict::Inconclusive || (r.verdict == Verdict::Pass && !claimed) {
        Report { property: id, verdict: Verdict::Inconclusive, counterexample: None, note: None, ..r }
    } else {
        Report { property: id, ..r }
    };
    out.with_note(note)
}

/// `x ∧ y` is a lower bound of `x, y` and dominates every grid lower bound.
fn infima_are_greatest(s: &Semigroup, sample: &SampleSpec) -> Result<Report> {
    let all = s.enumerate(sample)?;
    let vars = [Var::new("x", &all), Var::new("y", &all)];
    search("infimum", &vars, sample, |b| {
        let m = s.meet(b[0], b[1]);
        Ok(s.contains(&m)
            && s.le(&m, b[0])
            && s.le(&m, b[1])
            && all.iter().all(|z| !(s.le(z, b[0]) && s.le(z, b[1])) || s.le(z, &m)))
    })
}

/// The first failing binding of a report as `(variable, literal)` pairs.
pub fn describe_counterexample(s: &Semigroup, r: &Report) -> Vec<(String, String)> {
    r.counterexample
        .iter()
        .flatten()
        .map(|b| (b.variable.clone(), s.literal(&b.element)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::Poset;

    #[test]
    fn div2_fails_on_ext_nat_at_one() {
        let r = check_property(&Semigroup::ext_nat(), Property::Divisible2w, &SampleSpec::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.witness(), vec![Element::nat(1), Element::nat(1)]);
        assert!(replay(&Semigroup::ext_nat(), Property::Divisible2w, &SampleSpec::default(), &r.witness()).unwrap());
    }

    #[test]
    fn two_point_is_not_weakly_cancellative() {
        let r = check_property(&Semigroup::two_point(), Property::WeakCancellation, &SampleSpec::default()).unwrap();
        assert!(r.is_fail());
    }

    #[test]
    fn lsc_q_o5_exhaustive() {
        let l = Semigroup::lsc_q(Poset::antichain(&["a", "b"]));
        let r = check_property(&l, Property::O5, &SampleSpec::new(2, 2)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn property_ids_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.id().parse::<Property>().unwrap(), p);
        }
        assert!("o8".parse::<Property>().is_err());
    }
}
