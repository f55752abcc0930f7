//! Strongly soft elements, the sets `L_x`, and the soft retraction `σ`.
//!
//! `x` is strongly soft when every `x′ ≪ x` admits `t` with `x′ + t ≪ x`
//! and `x′ ≪ ∞t`. The generic checker only quantifies `x′` over the basis
//! chain of `x`: if `x′ ≤ x″` and `t` works for `x″`, then `t` works for `x′`,
//! and every `x′ ≪ x` lies below some basis entry.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::element::{Element, ZElement};
use crate::error::{CuError, Result};
use crate::functionals::{functional_family, rank_unchecked, Functional, RankVector};
use crate::laws::{chain_entries, is_sup_of};
use crate::report::Report;
use crate::sample::{SampleSpec, ValueGrid};
use crate::search::{search, Var};
use crate::semigroup::{Kind, Semigroup};
use crate::value::ExtValue;

/// Tail entries of the basis chain inspected by the generic checker.
pub const TAIL_DEPTH: u64 = 8;

/// `x′ + t ≪ x` and `x′ ≪ ∞t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoftWitness {
    pub x_prime: Element,
    pub t: Element,
}

/// Outcome of the generic search.
#[derive(Clone, Debug, PartialEq)]
pub enum SoftCertificate {
    /// One witness per inspected basis-chain entry.
    Soft(Vec<SoftWitness>),
    /// A chain entry `x′` and a functional with `0 < λ(x′) = λ(x) < ∞`, which
    /// rules out every `t`.
    NotSoft { x_prime: Element, functional: Functional },
}

impl SoftCertificate {
    pub fn is_soft(&self) -> bool {
        matches!(self, SoftCertificate::Soft(_))
    }
}

/// Decides strong softness through the instance's closed form.
pub fn is_strongly_soft(s: &Semigroup, x: &Element) -> Result<bool> {
    s.validate(x)?;
    Ok(closed_form(s, x))
}

pub(crate) fn closed_form(s: &Semigroup, x: &Element) -> bool {
    match (s.kind(), x) {
        (Kind::ExtNat, Element::Scalar(v)) => v.is_zero() || v.is_infinite(),
        (Kind::ExtQ | Kind::LscQ(_) | Kind::TwoPoint | Kind::SoftPart(_), _) => true,
        (Kind::JiangSu, Element::Z(z)) => !matches!(z, ZElement::Compact(n) if *n > 0),
        (Kind::LscNat(_), Element::Lsc(vs)) => vs.iter().all(|v| v.is_zero() || v.is_infinite()),
        (Kind::Sum(cs), Element::Tuple(xs)) => cs.iter().zip(xs).all(|(c, x)| closed_form(c, x)),
        (Kind::Fixed { ambient, .. }, _) => closed_form(ambient, x),
        _ => false,
    }
}

/// Searches the definition directly, without closed forms.
///
/// `x′` runs over the basis-chain prefix and the first [`TAIL_DEPTH`] tail
/// entries; `t` over the grid of `sample`, a grid of tiny values and the
/// chain entries themselves. When some `x′` has no `t`, a functional
/// obstruction is sought; failing that the result is `Inconclusive`.
pub fn soft_certificate(s: &Semigroup, x: &Element, sample: &SampleSpec) -> Result<SoftCertificate> {
    s.validate(x)?;
    let chain = s.basis_chain_unchecked(x);
    let mut entries = chain.entries(TAIL_DEPTH);
    entries.dedup();
    let mut candidates = s.enumerate(sample)?;
    if !s.is_integral() {
        let tiny = ValueGrid::custom(1, vec![ExtValue::ratio(1, 2 * TAIL_DEPTH)]);
        candidates.extend(s.enumerate_grid(&tiny)?);
    }
    candidates.extend(entries.iter().cloned());
    let mut witnesses = Vec::new();
    for xp in &entries {
        let found = candidates
            .iter()
            .find(|t| s.wb(&s.plus(xp, t), x) && s.wb(xp, &t.times_infinity()));
        match found {
            Some(t) => witnesses.push(SoftWitness { x_prime: xp.clone(), t: t.clone() }),
            None => {
                return match obstruction(s, xp, x, sample)? {
                    Some(functional) => Ok(SoftCertificate::NotSoft { x_prime: xp.clone(), functional }),
                    None => Err(CuError::Inconclusive(format!(
                        "no t found for x′ = {} and no functional obstruction",
                        s.literal(xp)
                    ))),
                };
            }
        }
    }
    Ok(SoftCertificate::Soft(witnesses))
}

/// A family functional with `0 < λ(x′) = λ(x) < ∞`.
fn obstruction(s: &Semigroup, xp: &Element, x: &Element, sample: &SampleSpec) -> Result<Option<Functional>> {
    for f in functional_family(s, sample) {
        let a = f.eval(xp)?;
        if !a.is_zero() && a.is_finite() && a == f.eval(x)? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// Generic decision with the same contract as [`is_strongly_soft`].
pub fn is_strongly_soft_generic(s: &Semigroup, x: &Element, sample: &SampleSpec) -> Result<bool> {
    Ok(soft_certificate(s, x, sample)?.is_soft())
}

/// Grid elements of `L_x = {u′ : u′ ≪ u ≪ x for some strongly soft u}`.
pub fn lx_members(s: &Semigroup, x: &Element, sample: &SampleSpec) -> Result<Vec<Element>> {
    s.validate(x)?;
    sample.validate()?;
    lx_members_grid(s, x, &sample.grid(), &sample.grid())
}

/// `L_x` with `u′` drawn from `grid` and the soft witnesses `u` from
/// `witnesses`.
pub fn lx_members_grid(s: &Semigroup, x: &Element, grid: &ValueGrid, witnesses: &ValueGrid) -> Result<Vec<Element>> {
    let us: Vec<Element> = s
        .enumerate_grid(witnesses)?
        .into_iter()
        .filter(|u| closed_form(s, u) && s.wb(u, x))
        .collect();
    Ok(s.enumerate_grid(grid)?
        .into_iter()
        .filter(|up| us.iter().any(|u| s.wb(up, u)))
        .collect())
}

/// Membership in `L_x`, with soft witnesses drawn from `witnesses`.
pub fn in_lx(s: &Semigroup, up: &Element, x: &Element, witnesses: &[Element]) -> bool {
    witnesses.iter().any(|u| closed_form(s, u) && s.wb(up, u) && s.wb(u, x))
}

/// The largest strongly soft element below `x`.
///
/// On non-divisible instances (`ℕ̄`, `Lsc(P, ℕ̄)`) this is still the closed
/// form, although `σ(x) = sup L_x` fails there.
pub fn sigma(s: &Semigroup, x: &Element) -> Result<Element> {
    s.validate(x)?;
    let y = sigma_closed_form(s, x);
    if let Kind::Fixed { action, .. } = s.kind() {
        if !action.fixes(&y) {
            return Err(CuError::Internal(format!(
                "σ({}) = {} left the fixed-point carrier",
                s.literal(x),
                s.literal(&y)
            )));
        }
    }
    Ok(y)
}

pub(crate) fn sigma_closed_form(s: &Semigroup, x: &Element) -> Element {
    match (s.kind(), x) {
        (Kind::ExtNat, Element::Scalar(v)) => Element::Scalar(if v.is_finite() { ExtValue::zero() } else { *v }),
        (Kind::JiangSu, Element::Z(ZElement::Compact(n))) if *n > 0 => Element::soft(ExtValue::nat(*n)),
        (Kind::LscNat(_), Element::Lsc(vs)) => Element::Lsc(
            vs.iter().map(|v| if v.is_infinite() { *v } else { ExtValue::zero() }).collect(),
        ),
        (Kind::Sum(cs), Element::Tuple(xs)) => {
            Element::Tuple(cs.iter().zip(xs).map(|(c, x)| sigma_closed_form(c, x)).collect())
        }
        (Kind::Fixed { ambient, .. }, _) => sigma_closed_form(ambient, x),
        _ => x.clone(),
    }
}

/// Oracle for `σ`: the maximum of the grid's strongly soft elements below
/// `x`, found by the generic checker. `Inconclusive` when there is no maximum.
pub fn sigma_search(s: &Semigroup, x: &Element, sample: &SampleSpec) -> Result<Element> {
    s.validate(x)?;
    let mut below = Vec::new();
    for v in s.enumerate(sample)? {
        if s.le(&v, x) && is_strongly_soft_generic(s, &v, sample)? {
            below.push(v);
        }
    }
    below
        .iter()
        .find(|m| below.iter().all(|v| s.le(v, m)))
        .cloned()
        .ok_or_else(|| CuError::Inconclusive(format!("no largest soft grid element below {}", s.literal(x))))
}

/// `sup L′_x` on `ℕ̄`, with `L′_x = {u′ : u′ ≪ u ≤ ∞s, u + s ≪ x}`:
/// `0 ↦ 0`, finite `x ↦ x − 1`, `∞ ↦ ∞`. It is not soft unless zero or
/// infinite, which is why `L_x` rather than `L′_x` defines `σ`.
pub fn sup_lx_prime(s: &Semigroup, x: &Element) -> Result<Element> {
    if !matches!(s.kind(), Kind::ExtNat) {
        return Err(CuError::CapabilityMissing { instance: s.name().to_string(), capability: "ext-nat" });
    }
    s.validate(x)?;
    Ok(match x {
        Element::Scalar(ExtValue::Finite(r)) if *r.numer() > 0 => {
            Element::nat(r.to_integer() as u64 - 1)
        }
        other => other.clone(),
    })
}

/// Largest `k` in the directedness check for `L_x`.
pub const DIRECTEDNESS_K: u64 = 4;

fn require_divisible(s: &Semigroup) -> Result<()> {
    if s.capabilities().divisible2w {
        Ok(())
    } else {
        Err(CuError::CapabilityMissing { instance: s.name().to_string(), capability: "divisible2w" })
    }
}

/// Generic softness of every grid element, compared with the closed form.
pub fn softness_laws(s: &Semigroup, sample: &SampleSpec) -> Result<Vec<Report>> {
    let g = s.enumerate(sample)?;
    let one = [Var::new("x", &g)];
    let agree = search("soft:generic-matches-closed-form", &one, sample, |b| {
        Ok(is_strongly_soft_generic(s, b[0], sample)? == closed_form(s, b[0]))
    })?;
    let softs: Vec<Element> = g.iter().filter(|x| closed_form(s, x)).cloned().collect();
    let pair = [Var::new("x", &softs), Var::new("y", &softs)];
    let closed = search("soft:add-closed", &pair, sample, |b| {
        let sum = s.plus(b[0], b[1]);
        Ok(closed_form(s, &sum) && is_strongly_soft_generic(s, &sum, sample)?)
    })?;
    Ok(vec![agree, closed])
}

/// On Lsc instances: an element is strongly soft (by the generic checker)
/// exactly when it is `∞χ_U` for an up-set `U`.
pub fn indicator_characterization(s: &Semigroup, sample: &SampleSpec) -> Result<Report> {
    let Some(p) = s.poset() else {
        return Err(CuError::CapabilityMissing { instance: s.name().to_string(), capability: "poset" });
    };
    let g = s.enumerate(sample)?;
    let one = [Var::new("x", &g)];
    search("soft:indicator-of-up-set", &one, sample, |b| {
        let Element::Lsc(vs) = b[0] else { return Ok(false) };
        let mask = vs.iter().enumerate().filter(|(_, v)| v.is_infinite()).fold(0u32, |m, (i, _)| m | (1 << i));
        let indicator = vs.iter().all(|v| v.is_zero() || v.is_infinite()) && p.is_up_set(mask);
        Ok(is_strongly_soft_generic(s, b[0], sample)? == indicator)
    })
}

/// The laws of `σ` on a divisible instance. Softness of grid elements is
/// decided by the generic checker, independently of the closed form of `σ`.
pub fn sigma_laws(s: &Semigroup, sample: &SampleSpec) -> Result<Vec<Report>> {
    require_divisible(s)?;
    let g = s.enumerate(sample)?;
    let soft = g
        .iter()
        .map(|x| is_strongly_soft_generic(s, x, sample))
        .collect::<Result<Vec<bool>>>()?;
    let softs: Vec<&Element> = g.iter().zip(&soft).filter(|(_, &f)| f).map(|(x, _)| x).collect();
    let is_soft = |x: &Element| g.iter().position(|y| y == x).map_or_else(|| closed_form(s, x), |i| soft[i]);
    let sig = |x: &Element| sigma_closed_form(s, x);
    let mut out = Vec::new();

    let one = [Var::new("x", &g)];
    out.push(search("sigma:maximal", &one, sample, |b| {
        let (x, sx) = (b[0], sig(b[0]));
        Ok(is_soft(&sx) && s.le(&sx, x) && softs.iter().filter(|w| s.le(w, x)).all(|w| s.le(w, &sx)))
    })?);
    out.push(search("sigma:times-infinity", &one, sample, |b| Ok(b[0].times_infinity() == sig(b[0]).times_infinity()))?);
    out.push(search("sigma:fixed-points", &one, sample, |b| Ok((sig(b[0]) == *b[0]) == is_soft(b[0])))?);
    out.push(search("sigma:doubling", &one, sample, |b| {
        let sx = sig(b[0]);
        Ok(s.plus(&sx, &sx) == s.plus(b[0], &sx))
    })?);
    out.push(search("sigma:chain-sup", &one, sample, |b| {
        let images: Vec<Element> = chain_entries(&s.basis_chain_unchecked(b[0])).iter().map(&sig).collect();
        let increasing = images.windows(2).all(|w| s.le(&w[0], &w[1]));
        Ok(increasing && is_sup_of(s, &images, &sig(b[0]), &g))
    })?);
    let dom = [Var::new("x", &g), Var::new("t", &g).admit(|b| s.le(b[0], &b[1].times_infinity()))];
    out.push(search("sigma:domination", &dom, sample, |b| Ok(s.le(b[0], &s.plus(&sig(b[0]), b[1]))))?);
    let ordered = [Var::new("x", &g), Var::new("y", &g).admit(|b| s.le(b[0], b[1]))];
    out.push(search("sigma:order", &ordered, sample, |b| Ok(s.le(&sig(b[0]), &sig(b[1]))))?);
    let pair = [Var::new("x", &g), Var::new("y", &g)];
    out.push(search("sigma:superadditive", &pair, sample, |b| {
        Ok(s.le(&s.plus(&sig(b[0]), &sig(b[1])), &sig(&s.plus(b[0], b[1]))))
    })?);
    out.push(search("sigma:double-additive", &pair, sample, |b| {
        let whole = sig(&s.plus(b[0], b[1]));
        let parts = s.plus(&sig(b[0]), &sig(b[1]));
        Ok(s.plus(&whole, &whole) == s.plus(&parts, &parts))
    })?);
    if s.capabilities().weakly_cancellative {
        out.push(search("sigma:additive", &pair, sample, |b| {
            Ok(sig(&s.plus(b[0], b[1])) == s.plus(&sig(b[0]), &sig(b[1])))
        })?);
        let soft_owned: Vec<Element> = softs.iter().map(|x| (*x).clone()).collect();
        let retract = [Var::new("v", &soft_owned)];
        out.push(search("sigma:retract", &retract, sample, |b| Ok(sig(b[0]) == *b[0]))?);
    }
    Ok(out)
}

/// Grid data for the `L_x` checks. Members are drawn from the grid refined
/// by a factor 2 and their soft witnesses from the grid refined by a factor
/// 4, so that members strictly between neighbouring grid values exist.
pub(crate) struct LxTable {
    pub(crate) grid: Vec<Element>,
    grid_index: HashMap<Element, usize>,
    pub(crate) cands: Vec<Element>,
    cand_index: HashMap<Element, usize>,
    members: Vec<Vec<usize>>,
}

impl LxTable {
    pub(crate) fn new(s: &Semigroup, sample: &SampleSpec) -> Result<Self> {
        let grid = s.enumerate(sample)?;
        let cands = s.enumerate_grid(&sample.witness_grid(2))?;
        let witnesses: Vec<Element> = s
            .enumerate_grid(&sample.witness_grid(4))?
            .into_iter()
            .filter(|u| closed_form(s, u))
            .collect();
        let members = grid
            .par_iter()
            .map(|x| {
                let us: Vec<&Element> = witnesses.iter().filter(|u| s.wb(u, x)).collect();
                (0..cands.len()).filter(|&i| us.iter().any(|u| s.wb(&cands[i], u))).collect()
            })
            .collect();
        let grid_index = grid.iter().cloned().zip(0..).collect();
        let cand_index = cands.iter().cloned().zip(0..).collect();
        Ok(LxTable { grid, grid_index, cands, cand_index, members })
    }

    /// Members of `L_x` for a grid element `x`, as candidate indices.
    pub(crate) fn member_indices(&self, x: &Element) -> &[usize] {
        &self.members[self.grid_index[x]]
    }

    pub(crate) fn of(&self, x: &Element) -> impl Iterator<Item = &Element> {
        self.member_indices(x).iter().map(|&i| &self.cands[i])
    }

    pub(crate) fn cand_position(&self, u: &Element) -> Option<usize> {
        self.cand_index.get(u).copied()
    }

    pub(crate) fn contains(&self, x: &Element, u: &Element) -> bool {
        self.cand_position(u).is_some_and(|i| self.member_indices(x).binary_search(&i).is_ok())
    }
}

fn scaled(r: &RankVector, k: u64) -> RankVector {
    let f = ExtValue::ratio(k, k + 1);
    RankVector(r.0.iter().map(|v| *v * f).collect())
}

/// `σ(x) = sup L_x`, directedness of `L_x` in rank, and the approximation
/// of `x′ ≪ x ≤ ∞t` through `L_x + t`.
pub fn lx_laws(s: &Semigroup, sample: &SampleSpec) -> Result<Vec<Report>> {
    require_divisible(s)?;
    let lx = LxTable::new(s, sample)?;
    let g = &lx.grid;
    let family = functional_family(s, sample);
    let ranks = lx.cands.iter().map(|x| rank_unchecked(x, &family)).collect::<Result<Vec<_>>>()?;
    let rank_of = |x: &Element| &ranks[lx.cand_position(x).expect("candidate")];
    let mut out = Vec::new();

    let one = [Var::new("x", g)];
    out.push(search("lx:sup-is-sigma", &one, sample, |b| {
        let members: Vec<Element> = lx.of(b[0]).cloned().collect();
        Ok(is_sup_of(s, &members, &sigma_closed_form(s, b[0]), g))
    })?);
    let vars = [
        Var::new("x", g),
        Var::new("u'", g).admit(|b| lx.contains(b[0], b[1])),
        Var::new("v'", g).admit(|b| lx.contains(b[0], b[2])),
    ];
    out.push(search("lx:directed", &vars, sample, |b| {
        let (x, u, v) = (b[0], b[1], b[2]);
        Ok((1..=DIRECTEDNESS_K).all(|k| {
            let need = scaled(rank_of(v), k);
            lx.member_indices(x).iter().any(|&i| s.wb(u, &lx.cands[i]) && need.le(&ranks[i]))
        }))
    })?);
    let approx = [
        Var::new("x", g),
        Var::new("x'", g).admit(|b| s.wb(b[1], b[0])),
        Var::new("t", g).admit(|b| s.le(b[0], &b[2].times_infinity())),
    ];
    out.push(search("lx:approximates", &approx, sample, |b| {
        Ok(lx.of(b[0]).any(|u| s.wb(b[1], &s.plus(u, b[2]))))
    })?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::Poset;

    #[test]
    fn ext_nat_one_is_not_soft() {
        let n = Semigroup::ext_nat();
        let cert = soft_certificate(&n, &Element::nat(1), &SampleSpec::default()).unwrap();
        assert!(!cert.is_soft());
        assert!(!is_strongly_soft(&n, &Element::nat(1)).unwrap());
    }

    #[test]
    fn ext_q_three_halves_is_soft() {
        let q = Semigroup::ext_q();
        let x = Element::Scalar(ExtValue::ratio(3, 2));
        assert!(is_strongly_soft_generic(&q, &x, &SampleSpec::default()).unwrap());
    }

    #[test]
    fn indicator_is_soft() {
        let l = Semigroup::lsc_nat(Poset::antichain(&["a", "b"]));
        let f = Element::Lsc(vec![ExtValue::Infinite, ExtValue::zero()]);
        assert!(is_strongly_soft_generic(&l, &f, &SampleSpec::default()).unwrap());
    }

    #[test]
    fn z_sigma_of_compact() {
        let z = Semigroup::jiang_su();
        assert_eq!(sigma(&z, &Element::compact(3)).unwrap(), Element::soft(ExtValue::nat(3)));
    }

    #[test]
    fn ext_nat_l_x() {
        let n = Semigroup::ext_nat();
        assert_eq!(lx_members(&n, &Element::nat(5), &SampleSpec::default()).unwrap(), vec![Element::nat(0)]);
    }

    #[test]
    fn sup_l_prime_table() {
        let n = Semigroup::ext_nat();
        assert_eq!(sup_lx_prime(&n, &Element::nat(5)).unwrap(), Element::nat(4));
        assert_eq!(sup_lx_prime(&n, &Element::nat(0)).unwrap(), Element::nat(0));
        assert_eq!(sup_lx_prime(&n, &Element::infinity()).unwrap(), Element::infinity());
    }
}
