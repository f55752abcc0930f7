//! Finite functional families, ranks, and the passage between functionals
//! on `S` and on its soft part.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::element::Element;
use crate::error::{CuError, Result};
use crate::laws::chain_entries;
use crate::report::Report;
use crate::sample::SampleSpec;
use crate::search::{search, Var};
use crate::semigroup::{Kind, Semigroup};
use crate::soft::{closed_form, sigma_closed_form, LxTable};
use crate::value::ExtValue;

/// Families larger than this fall back to coarser weights.
const FAMILY_LIMIT: usize = 20_000;

/// One member of an implemented functional family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Functional {
    /// `x ↦ c·x` on scalar instances and `c·(payload)` on `Z`.
    Scale(ExtValue),
    /// `f ↦ Σ_p w(p)·f(p)` on Lsc instances.
    Weights(Vec<ExtValue>),
    /// Sum of component functionals on a direct sum.
    Components(Vec<Functional>),
}

impl Functional {
    /// Evaluates with `0·∞ = 0`.
    pub fn eval(&self, x: &Element) -> Result<ExtValue> {
        match (self, x) {
            (Functional::Scale(c), Element::Scalar(v)) => Ok(*c * *v),
            (Functional::Scale(c), Element::Z(z)) => Ok(*c * z.value()),
            (Functional::Weights(ws), Element::Lsc(vs)) if ws.len() == vs.len() => {
                Ok(ws.iter().zip(vs).map(|(w, v)| *w * *v).sum())
            }
            (Functional::Components(fs), Element::Tuple(xs)) if fs.len() == xs.len() => {
                let mut total = ExtValue::zero();
                for (f, x) in fs.iter().zip(xs) {
                    total = total + f.eval(x)?;
                }
                Ok(total)
            }
            _ => Err(CuError::MixedInstance(format!("functional {self} applied to a {} element", x.tag()))),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Functional::Scale(c) => c.is_zero(),
            Functional::Weights(ws) => ws.iter().all(ExtValue::is_zero),
            Functional::Components(fs) => fs.iter().all(Functional::is_zero),
        }
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Functional::Scale(c) => write!(f, "c={c}"),
            Functional::Weights(ws) => {
                let parts: Vec<String> = ws.iter().map(ExtValue::to_string).collect();
                write!(f, "w=[{}]", parts.join(", "))
            }
            Functional::Components(fs) => {
                let parts: Vec<String> = fs.iter().map(Functional::to_string).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
    }
}

/// `{0} ∪ {1/k, k : 1 ≤ k ≤ cap} ∪ {∞}`, sorted.
pub fn scale_values(cap: u64) -> Vec<ExtValue> {
    let mut out = vec![ExtValue::zero(), ExtValue::Infinite];
    for k in 1..=cap.max(1) {
        out.push(ExtValue::nat(k));
        out.push(ExtValue::ratio(1, k));
    }
    out.sort();
    out.dedup();
    out
}

/// The deterministic family attached to `s` at the value cap of `sample`.
/// It contains the zero functional and the `{0, ∞}`-valued ones.
pub fn functional_family(s: &Semigroup, sample: &SampleSpec) -> Vec<Functional> {
    let scales = scale_values(sample.value_cap);
    family_with(s, &scales)
}

fn family_with(s: &Semigroup, scales: &[ExtValue]) -> Vec<Functional> {
    match s.kind() {
        Kind::ExtNat | Kind::ExtQ | Kind::TwoPoint | Kind::JiangSu => {
            scales.iter().map(|c| Functional::Scale(*c)).collect()
        }
        Kind::LscNat(p) | Kind::LscQ(p) => {
            let coarse = [ExtValue::zero(), ExtValue::nat(1), ExtValue::Infinite];
            let values = if fits(scales.len(), p.len()) { scales } else { &coarse[..] };
            if fits(values.len(), p.len()) {
                powers(values, p.len()).into_iter().map(Functional::Weights).collect()
            } else {
                single_point_weights(scales, p.len())
            }
        }
        Kind::Sum(cs) => {
            let parts: Vec<Vec<Functional>> = cs.iter().map(|c| family_with(c, scales)).collect();
            let count: usize = parts.iter().map(Vec::len).product();
            if count <= FAMILY_LIMIT {
                let mut out: Vec<Vec<Functional>> = vec![Vec::new()];
                for part in &parts {
                    out = out
                        .into_iter()
                        .flat_map(|pre| {
                            part.iter().map(move |f| {
                                let mut v = pre.clone();
                                v.push(f.clone());
                                v
                            })
                        })
                        .collect();
                }
                out.into_iter().map(Functional::Components).collect()
            } else {
                supported_on_one_summand(cs, &parts)
            }
        }
        Kind::Fixed { ambient, .. } | Kind::SoftPart(ambient) => family_with(ambient, scales),
    }
}

fn fits(base: usize, exp: usize) -> bool {
    (base as f64).powi(exp as i32) <= FAMILY_LIMIT as f64
}

fn powers(values: &[ExtValue], n: usize) -> Vec<Vec<ExtValue>> {
    let mut out: Vec<Vec<ExtValue>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|pre| {
                values.iter().map(move |v| {
                    let mut w = pre.clone();
                    w.push(*v);
                    w
                })
            })
            .collect();
    }
    out
}

fn single_point_weights(scales: &[ExtValue], n: usize) -> Vec<Functional> {
    let mut out = vec![Functional::Weights(vec![ExtValue::zero(); n])];
    for p in 0..n {
        for c in scales.iter().filter(|c| !c.is_zero()) {
            let mut w = vec![ExtValue::zero(); n];
            w[p] = *c;
            out.push(Functional::Weights(w));
        }
    }
    out
}

fn supported_on_one_summand(cs: &[Semigroup], parts: &[Vec<Functional>]) -> Vec<Functional> {
    let zeros: Vec<Functional> = parts.iter().map(|p| p[0].clone()).collect();
    let mut out = vec![Functional::Components(zeros.clone())];
    for (i, part) in parts.iter().enumerate().take(cs.len()) {
        for f in part.iter().filter(|f| !f.is_zero()) {
            let mut v = zeros.clone();
            v[i] = f.clone();
            out.push(Functional::Components(v));
        }
    }
    out
}

/// `x̂` restricted to a family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RankVector(pub Vec<ExtValue>);

impl RankVector {
    /// Pointwise `≤`.
    pub fn le(&self, other: &RankVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

pub fn rank(s: &Semigroup, x: &Element, family: &[Functional]) -> Result<RankVector> {
    s.validate(x)?;
    rank_unchecked(x, family)
}

pub(crate) fn rank_unchecked(x: &Element, family: &[Functional]) -> Result<RankVector> {
    family.iter().map(|f| f.eval(x)).collect::<Result<Vec<_>>>().map(RankVector)
}

/// `ι*(λ) = λ∘ι`: the same parameters, evaluated only on strongly soft
/// elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SoftFunctional(pub Functional);

pub fn restrict_to_soft(f: &Functional) -> SoftFunctional {
    SoftFunctional(f.clone())
}

impl SoftFunctional {
    /// Evaluates on a strongly soft element of `s`.
    pub fn eval(&self, s: &Semigroup, x: &Element) -> Result<ExtValue> {
        s.validate(x)?;
        if !closed_form(s, x) {
            return Err(CuError::InvalidElement {
                instance: format!("soft({})", s.name()),
                reason: format!("{} is not strongly soft", s.literal(x)),
            });
        }
        self.0.eval(x)
    }
}

/// For each grid element, the strongly soft grid elements below it.
pub struct SoftMinorants {
    grid: Vec<Element>,
    index: HashMap<Element, usize>,
    below: Vec<Vec<usize>>,
}

impl SoftMinorants {
    pub fn new(s: &Semigroup, sample: &SampleSpec) -> Result<Self> {
        let grid = s.enumerate(sample)?;
        let softs: Vec<usize> = (0..grid.len()).filter(|&i| closed_form(s, &grid[i])).collect();
        let below = grid
            .iter()
            .map(|x| softs.iter().copied().filter(|&i| s.le(&grid[i], x)).collect())
            .collect();
        let index = grid.iter().cloned().zip(0..).collect();
        Ok(SoftMinorants { grid, index, below })
    }

    pub fn grid(&self) -> &[Element] {
        &self.grid
    }

    pub fn position(&self, x: &Element) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// `sup {λ(v) : v soft, v ≤ grid[i]}` over the grid.
    pub fn sup(&self, f: &Functional, i: usize) -> Result<ExtValue> {
        let mut best = ExtValue::zero();
        for &j in &self.below[i] {
            best = best.max(f.eval(&self.grid[j])?);
        }
        Ok(best)
    }
}

/// `λ_soft(x) = sup {λ(v) : v soft, v ≤ x}`. The result is returned in closed
/// form `x ↦ λ(σ(x))` after comparing both sides on every grid element.
pub fn softify(s: &Semigroup, soft: &SoftFunctional, sample: &SampleSpec) -> Result<Functional> {
    let minorants = SoftMinorants::new(s, sample)?;
    softify_with(s, soft, &minorants)
}

pub fn softify_with(s: &Semigroup, soft: &SoftFunctional, minorants: &SoftMinorants) -> Result<Functional> {
    if !s.capabilities().divisible2w {
        return Err(CuError::CapabilityMissing { instance: s.name().to_string(), capability: "divisible2w" });
    }
    let f = &soft.0;
    for (i, x) in minorants.grid().iter().enumerate() {
        let closed = f.eval(&sigma_closed_form(s, x))?;
        let sup = minorants.sup(f, i)?;
        if closed != sup {
            return Err(CuError::Internal(format!(
                "λ_soft({}) = {sup} by search but λ(σ(x)) = {closed} for {f}",
                s.literal(x)
            )));
        }
    }
    Ok(f.clone())
}

/// Evaluates a softified functional: `λ(σ(x))`.
pub fn eval_softified(s: &Semigroup, f: &Functional, x: &Element) -> Result<ExtValue> {
    s.validate(x)?;
    f.eval(&sigma_closed_form(s, x))
}

/// A strongly soft `w` with the rank of `x`.
///
/// On divisible instances `w = σ(x)`, verified to satisfy `w ≤ x ≤ ∞w` and
/// `ŵ = x̂` on the whole family. Elsewhere the soft grid is searched.
pub fn soft_rank_witness(s: &Semigroup, x: &Element, sample: &SampleSpec) -> Result<Element> {
    s.validate(x)?;
    let family = functional_family(s, sample);
    let rx = rank_unchecked(x, &family)?;
    if s.capabilities().divisible2w {
        let w = sigma_closed_form(s, x);
        let ok = closed_form(s, &w) && s.le(&w, x) && s.le(x, &w.times_infinity());
        if !ok {
            return Err(CuError::Internal(format!("σ({}) fails w ≤ x ≤ ∞w", s.literal(x))));
        }
        if rank_unchecked(&w, &family)? != rx {
            return Err(CuError::Internal(format!("rank of σ({}) differs from its rank", s.literal(x))));
        }
        return Ok(w);
    }
    for w in s.enumerate(sample)? {
        if closed_form(s, &w) && rank_unchecked(&w, &family)? == rx {
            return Ok(w);
        }
    }
    Err(CuError::NotRealizable(s.literal(x)))
}

/// Pairs `x ≰ y` that no family member separates by `λ(x) > λ(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationAudit {
    pub pairs_checked: u64,
    pub unseparated: Vec<(Element, Element)>,
}

pub fn separation_audit(s: &Semigroup, family: &[Functional], sample: &SampleSpec) -> Result<SeparationAudit> {
    let grid = s.enumerate(sample)?;
    let ranks = grid.iter().map(|x| rank_unchecked(x, family)).collect::<Result<Vec<_>>>()?;
    let mut audit = SeparationAudit { pairs_checked: 0, unseparated: Vec::new() };
    for (i, x) in grid.iter().enumerate() {
        for (j, y) in grid.iter().enumerate() {
            if i == j || s.le(x, y) {
                continue;
            }
            audit.pairs_checked += 1;
            if ranks[i].le(&ranks[j]) {
                audit.unseparated.push((x.clone(), y.clone()));
            }
        }
    }
    Ok(audit)
}

/// `sup {λ(v′) : v′ ∈ L_x}`. Grid members contribute their values; when
/// the basis chain of `σ(x)` runs inside `L_x` (each entry way below the
/// next, which is soft and way below `x`), its supremum `σ(x)` contributes
/// `λ(σ(x))`, since functionals preserve suprema of increasing sequences.
fn sup_over_lx(s: &Semigroup, lx: &LxTable, f: &Functional, x: &Element) -> Result<ExtValue> {
    let mut best = ExtValue::zero();
    for v in lx.of(x) {
        best = best.max(f.eval(v)?);
    }
    let target = sigma_closed_form(s, x);
    let entries = chain_entries(&s.basis_chain_unchecked(&target));
    let inside = entries
        .windows(2)
        .all(|w| s.wb(&w[0], &w[1]) && closed_form(s, &w[1]) && s.wb(&w[1], x));
    let reaches = entries.last().is_some_and(|e| *e == target) || !s.wb(&target, &target);
    if inside && reaches {
        best = best.max(f.eval(&target)?);
    }
    Ok(best)
}

/// The passage between functionals on `S` and on its soft part, on the grid
/// of `sample` and the implemented family.
pub fn duality_laws(s: &Semigroup, sample: &SampleSpec) -> Result<Vec<Report>> {
    if !s.capabilities().divisible2w {
        return Err(CuError::CapabilityMissing { instance: s.name().to_string(), capability: "divisible2w" });
    }
    let family = functional_family(s, sample);
    let minorants = SoftMinorants::new(s, sample)?;
    let lx = LxTable::new(s, sample)?;
    let g = minorants.grid().to_vec();
    let softs: Vec<Element> = g.iter().filter(|x| closed_form(s, x)).cloned().collect();
    let sig = |x: &Element| sigma_closed_form(s, x);
    let all = |body: &dyn Fn(&Functional) -> Result<bool>| -> Result<bool> {
        for f in &family {
            if !body(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut out = Vec::new();

    let one = [Var::new("x", &g)];
    out.push(search("duality:softify-is-sup", &one, sample, |b| {
        let i = minorants.position(b[0]).expect("grid element");
        all(&|f| Ok(minorants.sup(f, i)? == f.eval(&sig(b[0]))?))
    })?);
    let soft_one = [Var::new("v", &softs)];
    out.push(search("duality:restrict-after-softify", &soft_one, sample, |b| {
        all(&|f| Ok(SoftFunctional(f.clone()).eval(s, b[0])? == f.eval(&sig(b[0]))?))
    })?);
    out.push(search("duality:softify-after-restrict", &one, sample, |b| {
        all(&|f| Ok(eval_softified(s, f, b[0])? == f.eval(b[0])?))
    })?);
    out.push(search("duality:sup-over-lx", &one, sample, |b| {
        let i = minorants.position(b[0]).expect("grid element");
        all(&|f| Ok(minorants.sup(f, i)? == sup_over_lx(s, &lx, f, b[0])?))
    })?);
    let members = [Var::new("x", &g), Var::new("u'", &g).admit(|b| lx.contains(b[0], b[1]))];
    out.push(search("duality:soft-majorant", &members, sample, |b| {
        let (x, u) = (b[0], b[1]);
        let w = sig(x);
        let placed = s.wb(u, &w) && s.le(&w, x) && s.le(x, &w.times_infinity()) && closed_form(s, &w);
        Ok(placed && all(&|f| Ok(f.eval(&w)? == sup_over_lx(s, &lx, f, x)?))?)
    })?);
    let pair = [Var::new("x", &g), Var::new("y", &g)];
    out.push(search("duality:softified-additive", &pair, sample, |b| {
        let xy = s.plus(b[0], b[1]);
        all(&|f| Ok(eval_softified(s, f, &xy)? == eval_softified(s, f, b[0])? + eval_softified(s, f, b[1])?))
    })?);
    out.push(search("rank:sigma-realizes", &one, sample, |b| {
        let w = soft_rank_witness(s, b[0], sample)?;
        Ok(w == sig(b[0]) && rank_unchecked(&w, &family)? == rank_unchecked(b[0], &family)?)
    })?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::Poset;

    #[test]
    fn scale_family_at_cap_two() {
        let shown: Vec<String> = scale_values(2).iter().map(|v| v.to_string()).collect();
        assert_eq!(shown, ["0", "1/2", "1", "2", "inf"]);
    }

    #[test]
    fn lsc_family_at_cap_one() {
        let l = Semigroup::lsc_nat(Poset::antichain(&["a", "b"]));
        assert_eq!(functional_family(&l, &SampleSpec::new(1, 1)).len(), 9);
    }

    #[test]
    fn zero_times_infinity_in_weights() {
        let f = Functional::Weights(vec![ExtValue::nat(1), ExtValue::Infinite]);
        let x = Element::Lsc(vec![ExtValue::nat(2), ExtValue::zero()]);
        assert_eq!(f.eval(&x).unwrap(), ExtValue::nat(2));
    }

    #[test]
    fn z_compact_three_at_scale_two() {
        let f = Functional::Scale(ExtValue::nat(2));
        assert_eq!(f.eval(&Element::compact(3)).unwrap(), ExtValue::nat(6));
    }

    #[test]
    fn ext_nat_one_is_not_realizable() {
        let n = Semigroup::ext_nat();
        let err = soft_rank_witness(&n, &Element::nat(1), &SampleSpec::default()).unwrap_err();
        assert!(matches!(err, CuError::NotRealizable(_)));
    }

    #[test]
    fn z_audit_flags_compact_one_over_soft_one() {
        let z = Semigroup::jiang_su();
        let sample = SampleSpec::new(2, 1);
        let audit = separation_audit(&z, &functional_family(&z, &sample), &sample).unwrap();
        assert!(audit.unseparated.contains(&(Element::compact(1), Element::soft(ExtValue::nat(1)))));
    }
}
