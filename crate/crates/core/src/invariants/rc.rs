//! Radius of comparison, bracketed by bisection.
//!
//! `(S, e)` satisfies (R1) at `r` when `λ(x) + r·λ(e) ≤ λ(y)` for every
//! functional `λ` forces `x ≤ y`; `rc(S, e)` is the infimum of such `r`.
//! Functionals come from a declared finite family.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use crate::element::Element;
use crate::error::{CuError, Result};
use crate::functionals::{functional_family, rank_unchecked, Functional, RankVector};
use crate::report::{Report, SearchMode, Verdict};
use crate::sample::SampleSpec;
use crate::search::{search, Var};
use crate::semigroup::{Kind, Semigroup};
use crate::soft::sigma;
use crate::value::{fmt_rational, ExtValue, Rational};

/// Checks that `∞e` dominates every grid element.
pub fn check_full(s: &Semigroup, e: &Element, sample: &SampleSpec) -> Result<()> {
    s.validate(e)?;
    let top = e.times_infinity();
    match s.enumerate(sample)?.into_iter().find(|x| !s.le(x, &top)) {
        Some(x) => Err(CuError::NotFull(format!(
            "∞·{} does not dominate {} in {}",
            s.literal(e),
            s.literal(&x),
            s.name()
        ))),
        None => Ok(()),
    }
}

/// Condition (R1) at `r` over all grid pairs.
pub fn r1_holds(
    s: &Semigroup,
    e: &Element,
    r: Rational,
    family: &[Functional],
    sample: &SampleSpec,
) -> Result<Report> {
    if r.is_negative() {
        return Err(CuError::InvalidSample(format!("r must be nonnegative, got {}", fmt_rational(&r))));
    }
    check_full(s, e, sample)?;
    let grid = s.enumerate(sample)?;
    let ranks: Vec<RankVector> = grid.iter().map(|x| rank_unchecked(x, family)).collect::<Result<_>>()?;
    let index: HashMap<&Element, usize> = grid.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let rv = ExtValue::from_rational(r).expect("r is nonnegative");
    let shifted: Vec<Vec<ExtValue>> = {
        let re = rank_unchecked(e, family)?;
        ranks
            .iter()
            .map(|rx| rx.0.iter().zip(&re.0).map(|(a, b)| *a + rv * *b).collect())
            .collect()
    };
    let dominated = |x: &Element, y: &Element| {
        let (i, j) = (index[x], index[y]);
        shifted[i].iter().zip(&ranks[j].0).all(|(a, b)| a <= b)
    };
    let vars = [Var::new("x", &grid), Var::new("y", &grid).admit(|b| dominated(b[0], b[1]))];
    let id = format!("r1@{}", fmt_rational(&r));
    search(&id, &vars, sample, |b| Ok(s.le(b[0], b[1])))
}

/// `lower ≤ rc ≤ upper`, with `upper = None` when no tested `r` passed.
#[derive(Clone, Debug)]
pub struct RcBracket {
    pub lower: Rational,
    pub upper: Option<Rational>,
    pub tolerance: Rational,
    /// The (R1) failure at `r = 0`, recorded when the infimum is not attained
    /// there.
    pub zero_failure: Option<Report>,
    /// Every tested `r` in test order with its verdict.
    pub tested: Vec<(Rational, Verdict)>,
    /// Whether every (R1) check enumerated the grid fully.
    pub exhaustive: bool,
}

impl RcBracket {
    pub fn contains_interval(&self, lo: Rational, hi: Rational) -> bool {
        lo <= self.lower && self.upper.is_some_and(|u| u <= hi)
    }
}

/// Bisection on `r ∈ [0, value_cap]` until `upper − lower ≤ tol`.
pub fn rc_bracket(
    s: &Semigroup,
    e: &Element,
    tol: Rational,
    family: &[Functional],
    sample: &SampleSpec,
) -> Result<RcBracket> {
    if !tol.is_positive() {
        return Err(CuError::InvalidSample("the tolerance must be positive".into()));
    }
    let mut tested: Vec<(Rational, Verdict)> = Vec::new();
    let mut exhaustive = true;
    let mut run = |r: Rational, tested: &mut Vec<(Rational, Verdict)>| -> Result<Report> {
        let rep = r1_holds(s, e, r, family, sample)?;
        exhaustive &= rep.mode == SearchMode::Exhaustive;
        if rep.verdict == Verdict::Inconclusive {
            return Err(CuError::Inconclusive(format!("(R1) undecided at r = {}", fmt_rational(&r))));
        }
        // (R1) is monotone in r: no failure may sit above a pass.
        if let Some((p, _)) = tested.iter().find(|(p, v)| *v == Verdict::Pass && *p < r && rep.is_fail()) {
            return Err(CuError::Internal(format!(
                "(R1) passed at r = {} but failed at r = {}",
                fmt_rational(p),
                fmt_rational(&r)
            )));
        }
        if let Some((f, _)) = tested.iter().find(|(f, v)| *v == Verdict::Fail && *f > r && rep.is_pass()) {
            return Err(CuError::Internal(format!(
                "(R1) passed at r = {} but failed at r = {}",
                fmt_rational(&r),
                fmt_rational(f)
            )));
        }
        tested.push((r, rep.verdict));
        Ok(rep)
    };
    let zero = run(Rational::zero(), &mut tested)?;
    if zero.is_pass() {
        return Ok(RcBracket {
            lower: Rational::zero(),
            upper: Some(Rational::zero()),
            tolerance: tol,
            zero_failure: None,
            tested,
            exhaustive,
        });
    }
    let cap = Rational::from_integer(sample.value_cap as i64);
    let mut lo = Rational::zero();
    let mut hi = cap;
    if run(cap, &mut tested)?.is_fail() {
        return Ok(RcBracket { lower: cap, upper: None, tolerance: tol, zero_failure: Some(zero), tested, exhaustive });
    }
    while hi - lo > tol {
        let mid = (lo + hi) / Rational::from_integer(2);
        if run(mid, &mut tested)?.is_pass() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(RcBracket { lower: lo, upper: Some(hi), tolerance: tol, zero_failure: Some(zero), tested, exhaustive })
}

fn overlap(a: &RcBracket, b: &RcBracket, tol: Rational) -> bool {
    let le = |l: Rational, u: Option<Rational>| u.is_none_or(|u| l <= u + tol);
    le(a.lower, b.upper) && le(b.lower, a.upper)
}

fn show(b: &RcBracket) -> String {
    let upper = b.upper.as_ref().map_or_else(|| "unknown".into(), fmt_rational);
    format!("[{}, {}]", fmt_rational(&b.lower), upper)
}

fn mode_of(bs: &[&RcBracket]) -> SearchMode {
    if bs.iter().all(|b| b.exhaustive) {
        SearchMode::Exhaustive
    } else {
        SearchMode::Sampled
    }
}

/// Outcome of an rc comparison, with both brackets.
#[derive(Clone, Debug)]
pub struct RcComparison {
    pub report: Report,
    pub left: RcBracket,
    pub right: RcBracket,
}

/// `rc(S, e) = rc(S_soft, σ(e))`: audits `ê = σ(e)̂` on the family and
/// checks that the two brackets overlap within `tol`.
pub fn verify_rc_soft_equality(s: &Semigroup, e: &Element, tol: Rational, sample: &SampleSpec) -> Result<RcComparison> {
    let caps = s.capabilities();
    if !caps.divisible2w {
        return Err(CuError::CapabilityMissing { instance: s.name().to_string(), capability: "divisible2w" });
    }
    if !caps.weakly_cancellative {
        return Err(CuError::CapabilityMissing {
            instance: s.name().to_string(),
            capability: "weaklyCancellative",
        });
    }
    let se = sigma(s, e)?;
    let family = functional_family(s, sample);
    let soft = Semigroup::soft_part(s.clone())?;
    let soft_family = functional_family(&soft, sample);
    let left = rc_bracket(s, e, tol, &family, sample)?;
    let right = rc_bracket(&soft, &se, tol, &soft_family, sample)?;
    let mode = mode_of(&[&left, &right]);
    let searched = (left.tested.len() + right.tested.len()) as u64;
    let id = "rc-soft-equality";
    let note = format!("rc(S, e) in {}, rc(S_soft, σ(e)) in {}", show(&left), show(&right));
    let report = if rank_unchecked(e, &family)? != rank_unchecked(&se, &family)? {
        Report::fail(id, *sample, mode, searched, crate::report::bindings(&[("e", e), ("sigma(e)", &se)]))
            .with_note("rank of e differs from the rank of σ(e)")
    } else if overlap(&left, &right, tol) {
        Report::pass(id, *sample, mode, searched)
    } else {
        Report::fail(id, *sample, mode, searched, crate::report::bindings(&[("e", e)]))
    };
    Ok(RcComparison { report: report.with_note(note), left, right })
}

/// How a sub-instance sits inside its ambient instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Embedding {
    SoftPart,
    FixedPart,
    /// The `i`-th summand (0-based).
    Summand(usize),
}

impl Embedding {
    fn map(self, ambient: &Semigroup, x: &Element) -> Element {
        match (self, ambient.kind()) {
            (Embedding::Summand(i), Kind::Sum(cs)) => Element::Tuple(
                cs.iter().enumerate().map(|(k, c)| if k == i { x.clone() } else { c.zero() }).collect(),
            ),
            _ => x.clone(),
        }
    }

    fn declared(self, sub: &Semigroup, ambient: &Semigroup) -> bool {
        match (self, sub.kind()) {
            (Embedding::SoftPart, Kind::SoftPart(a)) | (Embedding::FixedPart, Kind::Fixed { ambient: a, .. }) => {
                a.describe() == ambient.describe()
            }
            (Embedding::Summand(i), _) => {
                ambient.components().and_then(|cs| cs.get(i)).is_some_and(|c| c.describe() == sub.describe())
            }
            _ => false,
        }
    }
}

/// Grid audit of the inclusion: it must be additive, an order embedding,
/// send zero to zero and preserve the suprema of basis chains.
pub fn audit_embedding(sub: &Semigroup, ambient: &Semigroup, emb: Embedding, sample: &SampleSpec) -> Result<()> {
    let bad = |m: String| Err(CuError::NotAnEmbedding(m));
    if !emb.declared(sub, ambient) {
        return bad(format!("{} is not declared as {emb:?} of {}", sub.name(), ambient.name()));
    }
    if emb.map(ambient, &sub.zero()) != ambient.zero() {
        return bad("zero is not preserved".into());
    }
    let grid = sub.enumerate(sample)?;
    let image: Vec<Element> = grid.iter().map(|x| emb.map(ambient, x)).collect();
    for (x, ix) in grid.iter().zip(&image) {
        if !ambient.contains(ix) {
            return bad(format!("{} leaves {}", sub.literal(x), ambient.name()));
        }
        let chain = sub.basis_chain_unchecked(x);
        let mut prev: Option<Element> = None;
        for entry in chain.entries(crate::semigroup::CHAIN_PROBE) {
            let ie = emb.map(ambient, &entry);
            if !ambient.le(&ie, ix) || prev.as_ref().is_some_and(|p| !ambient.le(p, &ie)) {
                return bad(format!("basis chain of {} is not carried below its image", sub.literal(x)));
            }
            prev = Some(ie);
        }
        if emb.map(ambient, &sub.sup_chain(&chain)?) != *ix {
            return bad(format!("supremum of the basis chain of {} moves", sub.literal(x)));
        }
    }
    for (i, x) in grid.iter().enumerate() {
        for (j, y) in grid.iter().enumerate() {
            if sub.le(x, y) != ambient.le(&image[i], &image[j]) {
                return bad(format!("order differs on ({}, {})", sub.literal(x), sub.literal(y)));
            }
            if emb.map(ambient, &sub.plus(x, y)) != ambient.plus(&image[i], &image[j]) {
                return bad(format!("addition differs on ({}, {})", sub.literal(x), sub.literal(y)));
            }
        }
    }
    Ok(())
}

/// `rc(S_sub, e) ≤ rc(S, ι(e))` for a declared order embedding `ι`.
pub fn verify_rc_embedding_monotone(
    sub: &Semigroup,
    ambient: &Semigroup,
    emb: Embedding,
    e: &Element,
    tol: Rational,
    sample: &SampleSpec,
) -> Result<RcComparison> {
    audit_embedding(sub, ambient, emb, sample)?;
    check_full(sub, e, sample)?;
    let ie = emb.map(ambient, e);
    check_full(ambient, &ie, sample)?;
    let left = rc_bracket(sub, e, tol, &functional_family(sub, sample), sample)?;
    let right = rc_bracket(ambient, &ie, tol, &functional_family(ambient, sample), sample)?;
    let mode = mode_of(&[&left, &right]);
    let searched = (left.tested.len() + right.tested.len()) as u64;
    let id = "rc-embedding-monotone";
    let ok = right.upper.is_none_or(|u| left.lower <= u + tol);
    let report = if ok {
        Report::pass(id, *sample, mode, searched)
    } else {
        Report::fail(id, *sample, mode, searched, crate::report::bindings(&[("e", e)]))
    };
    let note = format!("rc(sub, e) in {}, rc(ambient, ι(e)) in {}", show(&left), show(&right));
    Ok(RcComparison { report: report.with_note(note), left, right })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn z_fails_at_zero_with_compact_one_over_soft_one() {
        let z = Semigroup::jiang_su();
        let sample = SampleSpec::default();
        let fam = functional_family(&z, &sample);
        let r = r1_holds(&z, &Element::compact(1), q(0, 1), &fam, &sample).unwrap();
        assert_eq!(r.witness(), vec![Element::compact(1), Element::soft(ExtValue::nat(1))]);
        assert!(r1_holds(&z, &Element::compact(1), q(1, 4), &fam, &sample).unwrap().is_pass());
    }

    #[test]
    fn ext_q_bracket_is_zero() {
        let s = Semigroup::ext_q();
        let sample = SampleSpec::default();
        let b = rc_bracket(&s, &Element::nat(1), q(1, 16), &functional_family(&s, &sample), &sample).unwrap();
        assert_eq!((b.lower, b.upper), (q(0, 1), Some(q(0, 1))));
    }

    #[test]
    fn summand_unit_is_not_full() {
        let z = Semigroup::jiang_su();
        let zz = Semigroup::sum(vec![z.clone(), z.clone()]).unwrap();
        let err = verify_rc_embedding_monotone(
            &z,
            &zz,
            Embedding::Summand(0),
            &Element::compact(1),
            q(1, 16),
            &SampleSpec::new(2, 2),
        )
        .unwrap_err();
        assert!(matches!(err, CuError::NotFull(_)));
    }
}
