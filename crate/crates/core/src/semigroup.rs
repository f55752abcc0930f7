//! The semigroup handle: an immutable instance descriptor bundling its
//! decision procedures.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::chain::{AscendingChain, Tail};
use crate::element::{Element, ElementTag, ZElement};
use crate::error::{CuError, Result};
use crate::instances::{GroupAction, Poset};
use crate::value::ExtValue;

/// Number of tail entries inspected when validating a chain.
pub const CHAIN_PROBE: u64 = 8;

/// Claimed structural properties, used as preconditions. Each one can be
/// checked with the regularity module on the same handle.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Capabilities {
    pub divisible2w: bool,
    pub weakly_cancellative: bool,
    pub inf_semilattice: bool,
    pub has_infima: bool,
    pub all_soft: bool,
}

impl Capabilities {
    fn and(self, o: Capabilities) -> Capabilities {
        Capabilities {
            divisible2w: self.divisible2w && o.divisible2w,
            weakly_cancellative: self.weakly_cancellative && o.weakly_cancellative,
            inf_semilattice: self.inf_semilattice && o.inf_semilattice,
            has_infima: self.has_infima && o.has_infima,
            all_soft: self.all_soft && o.all_soft,
        }
    }

    const ALL: Capabilities = Capabilities {
        divisible2w: true,
        weakly_cancellative: true,
        inf_semilattice: true,
        has_infima: true,
        all_soft: true,
    };
}

#[derive(Clone, Debug)]
pub enum Kind {
    /// `ℕ̄ = {0, 1, 2, …, ∞}`.
    ExtNat,
    /// `[0, ∞]` with rational finite values.
    ExtQ,
    /// `{0, ∞}`.
    TwoPoint,
    /// `Z = ℕ ⊔ (0, ∞]`.
    JiangSu,
    /// Monotone maps `P → ℕ̄`.
    LscNat(Poset),
    /// Monotone maps `P → [0, ∞]`.
    LscQ(Poset),
    Sum(Vec<Semigroup>),
    /// Elements fixed by a finite group action.
    Fixed { ambient: Semigroup, action: GroupAction },
    /// The strongly soft elements of a divisible instance.
    SoftPart(Semigroup),
}

#[derive(Debug)]
struct Inner {
    name: String,
    kind: Kind,
    caps: Capabilities,
}

/// Cheap to clone; all operations are pure.
#[derive(Clone, Debug)]
pub struct Semigroup(Arc<Inner>);

impl Semigroup {
    fn build(name: String, kind: Kind, caps: Capabilities) -> Self {
        Semigroup(Arc::new(Inner { name, kind, caps }))
    }

    pub fn ext_nat() -> Self {
        let caps = Capabilities { divisible2w: false, all_soft: false, ..Capabilities::ALL };
        Self::build("ext-nat".into(), Kind::ExtNat, caps)
    }

    pub fn ext_q() -> Self {
        Self::build("ext-q".into(), Kind::ExtQ, Capabilities::ALL)
    }

    /// `{0, ∞}` is not weakly cancellative: `∞ + ∞ ≪ 0 + ∞` but not `∞ ≪ 0`.
    pub fn two_point() -> Self {
        let caps = Capabilities { weakly_cancellative: false, ..Capabilities::ALL };
        Self::build("two-point".into(), Kind::TwoPoint, caps)
    }

    pub fn jiang_su() -> Self {
        let caps = Capabilities { all_soft: false, ..Capabilities::ALL };
        Self::build("jiang-su".into(), Kind::JiangSu, caps)
    }

    pub fn lsc_nat(poset: Poset) -> Self {
        let trivial = poset.is_empty();
        let caps = Capabilities { divisible2w: trivial, all_soft: trivial, ..Capabilities::ALL };
        Self::build("lsc-nat".into(), Kind::LscNat(poset), caps)
    }

    pub fn lsc_q(poset: Poset) -> Self {
        Self::build("lsc-q".into(), Kind::LscQ(poset), Capabilities::ALL)
    }

    pub fn sum(components: Vec<Semigroup>) -> Result<Self> {
        if components.is_empty() {
            return Err(CuError::Spec("a direct sum needs at least one summand".into()));
        }
        let caps = components.iter().fold(Capabilities::ALL, |c, s| c.and(s.capabilities()));
        let names: Vec<&str> = components.iter().map(Semigroup::name).collect();
        let name = format!("sum({})", names.join(", "));
        Ok(Self::build(name, Kind::Sum(components), caps))
    }

    /// The fixed-point subsemigroup. The action must permute poset atoms by
    /// automorphisms (Lsc) or summands of identical kind (sums).
    pub fn fixed(ambient: Semigroup, action: GroupAction) -> Result<Self> {
        if !ambient.capabilities().has_infima {
            return Err(CuError::CapabilityMissing {
                instance: ambient.name().to_string(),
                capability: "hasInfima",
            });
        }
        match ambient.kind() {
            Kind::LscNat(p) | Kind::LscQ(p) => {
                if action.degree() != p.len() {
                    return Err(CuError::Spec(format!(
                        "action moves {} points but the poset has {}",
                        action.degree(),
                        p.len()
                    )));
                }
                if let Some(g) = action.generators().iter().find(|g| !p.is_automorphism(g)) {
                    return Err(CuError::Spec(format!("{g:?} is not an order automorphism")));
                }
            }
            Kind::Sum(cs) => {
                if action.degree() != cs.len() {
                    return Err(CuError::Spec(format!(
                        "action moves {} summands but the sum has {}",
                        action.degree(),
                        cs.len()
                    )));
                }
                for g in action.generators() {
                    for (i, &j) in g.iter().enumerate() {
                        if cs[i].describe() != cs[j].describe() {
                            return Err(CuError::Spec(format!(
                                "summands {} and {} are not of the same kind",
                                i + 1,
                                j + 1
                            )));
                        }
                    }
                }
            }
            _ => {
                return Err(CuError::Spec(format!(
                    "{} has no atoms or summands to permute",
                    ambient.name()
                )))
            }
        }
        let caps = ambient.capabilities();
        let name = format!("fixed({})", ambient.name());
        Ok(Self::build(name, Kind::Fixed { ambient, action }, caps))
    }

    /// The soft part, as a sub-instance. Only divisible ambients qualify:
    /// there the soft part is a sub-Cu-semigroup with the inherited `≪`.
    pub fn soft_part(ambient: Semigroup) -> Result<Self> {
        if !ambient.capabilities().divisible2w {
            return Err(CuError::CapabilityMissing {
                instance: ambient.name().to_string(),
                capability: "divisible2w",
            });
        }
        let caps = Capabilities { all_soft: true, ..ambient.capabilities() };
        let name = format!("soft({})", ambient.name());
        Ok(Self::build(name, Kind::SoftPart(ambient), caps))
    }

    /// Same instance, different display name.
    pub fn named(&self, name: impl Into<String>) -> Self {
        Self::build(name.into(), self.0.kind.clone(), self.0.caps)
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn kind(&self) -> &Kind {
        &self.0.kind
    }

    pub fn capabilities(&self) -> Capabilities {
        self.0.caps
    }

    /// The ambient instance of a fixed-point or soft-part handle.
    pub fn ambient(&self) -> Option<&Semigroup> {
        match self.kind() {
            Kind::Fixed { ambient, .. } | Kind::SoftPart(ambient) => Some(ambient),
            _ => None,
        }
    }

    /// The poset of an Lsc instance, looking through sub-instances.
    pub fn poset(&self) -> Option<&Poset> {
        match self.kind() {
            Kind::LscNat(p) | Kind::LscQ(p) => Some(p),
            _ => self.ambient().and_then(Semigroup::poset),
        }
    }

    /// The summands of a sum, looking through sub-instances.
    pub fn components(&self) -> Option<&[Semigroup]> {
        match self.kind() {
            Kind::Sum(cs) => Some(cs),
            _ => self.ambient().and_then(Semigroup::components),
        }
    }

    /// Structural description independent of names, e.g. `lsc-nat{a b;a<b}`.
    pub fn describe(&self) -> String {
        match self.kind() {
            Kind::ExtNat => "ext-nat".into(),
            Kind::ExtQ => "ext-q".into(),
            Kind::TwoPoint => "two-point".into(),
            Kind::JiangSu => "jiang-su".into(),
            Kind::LscNat(p) => format!("lsc-nat{}", describe_poset(p)),
            Kind::LscQ(p) => format!("lsc-q{}", describe_poset(p)),
            Kind::Sum(cs) => {
                let parts: Vec<String> = cs.iter().map(Semigroup::describe).collect();
                format!("sum({})", parts.join(","))
            }
            Kind::Fixed { ambient, action } => {
                format!("fixed({},{:?})", ambient.describe(), action.generators())
            }
            Kind::SoftPart(a) => format!("soft({})", a.describe()),
        }
    }

    /// True for instances whose finite values are integers.
    pub fn is_integral(&self) -> bool {
        match self.kind() {
            Kind::ExtNat | Kind::LscNat(_) | Kind::TwoPoint => true,
            Kind::ExtQ | Kind::JiangSu | Kind::LscQ(_) => false,
            Kind::Sum(cs) => cs.iter().all(Semigroup::is_integral),
            Kind::Fixed { ambient, .. } | Kind::SoftPart(ambient) => ambient.is_integral(),
        }
    }

    pub fn zero(&self) -> Element {
        match self.kind() {
            Kind::ExtNat | Kind::ExtQ | Kind::TwoPoint => Element::Scalar(ExtValue::zero()),
            Kind::JiangSu => Element::compact(0),
            Kind::LscNat(p) | Kind::LscQ(p) => Element::Lsc(vec![ExtValue::zero(); p.len()]),
            Kind::Sum(cs) => Element::Tuple(cs.iter().map(Semigroup::zero).collect()),
            Kind::Fixed { ambient, .. } | Kind::SoftPart(ambient) => ambient.zero(),
        }
    }

    fn expected_tag(&self) -> ElementTag {
        match self.kind() {
            Kind::ExtNat | Kind::ExtQ | Kind::TwoPoint => ElementTag::Scalar,
            Kind::JiangSu => ElementTag::JiangSu,
            Kind::LscNat(_) | Kind::LscQ(_) => ElementTag::Lsc,
            Kind::Sum(_) => ElementTag::Tuple,
            Kind::Fixed { ambient, .. } | Kind::SoftPart(ambient) => ambient.expected_tag(),
        }
    }

    fn invalid(&self, reason: impl Into<String>) -> CuError {
        CuError::InvalidElement { instance: self.name().to_string(), reason: reason.into() }
    }

    /// Checks that `x` is an element of this instance.
    pub fn validate(&self, x: &Element) -> Result<()> {
        if x.tag() != self.expected_tag() {
            return Err(self.invalid(format!("expected a {} element, got {}", self.expected_tag(), x.tag())));
        }
        match (self.kind(), x) {
            (Kind::ExtNat, Element::Scalar(v)) if !v.is_integral() => {
                Err(self.invalid(format!("{v} is not an extended natural")))
            }
            (Kind::TwoPoint, Element::Scalar(v)) if !(v.is_zero() || v.is_infinite()) => {
                Err(self.invalid(format!("{v} is neither 0 nor inf")))
            }
            (Kind::JiangSu, Element::Z(ZElement::Soft(q))) if q.is_zero() => {
                Err(self.invalid("soft payloads are strictly positive"))
            }
            (Kind::LscNat(p) | Kind::LscQ(p), Element::Lsc(vs)) => {
                if vs.len() != p.len() {
                    return Err(self.invalid(format!("expected {} values, got {}", p.len(), vs.len())));
                }
                if matches!(self.kind(), Kind::LscNat(_)) && !vs.iter().all(ExtValue::is_integral) {
                    return Err(self.invalid("values must be extended naturals"));
                }
                if !p.is_monotone(vs) {
                    return Err(self.invalid("map is not order-preserving"));
                }
                Ok(())
            }
            (Kind::Sum(cs), Element::Tuple(xs)) => {
                if xs.len() != cs.len() {
                    return Err(self.invalid(format!("expected {} components, got {}", cs.len(), xs.len())));
                }
                cs.iter().zip(xs).try_for_each(|(c, x)| c.validate(x))
            }
            (Kind::Fixed { ambient, action }, _) => {
                ambient.validate(x)?;
                if action.fixes(x) {
                    Ok(())
                } else {
                    Err(self.invalid(format!("{} is not fixed by the action", ambient.literal(x))))
                }
            }
            (Kind::SoftPart(ambient), _) => {
                ambient.validate(x)?;
                if crate::soft::closed_form(ambient, x) {
                    Ok(())
                } else {
                    Err(self.invalid(format!("{} is not strongly soft", ambient.literal(x))))
                }
            }
            _ => Ok(()),
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.validate(x).is_ok()
    }

    fn check_pair(&self, x: &Element, y: &Element) -> Result<()> {
        if x.tag() != y.tag() {
            return Err(CuError::MixedInstance(format!("{} vs {}", x.tag(), y.tag())));
        }
        self.validate(x)?;
        self.validate(y)
    }

    pub fn leq(&self, x: &Element, y: &Element) -> Result<bool> {
        self.check_pair(x, y)?;
        Ok(self.le(x, y))
    }

    pub fn add(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_pair(x, y)?;
        Ok(self.plus(x, y))
    }

    pub fn way_below(&self, x: &Element, y: &Element) -> Result<bool> {
        self.check_pair(x, y)?;
        Ok(self.wb(x, y))
    }

    pub fn times_infinity(&self, x: &Element) -> Result<Element> {
        self.validate(x)?;
        Ok(x.times_infinity())
    }

    /// `n·x`.
    pub fn multiple(&self, x: &Element, n: u64) -> Result<Element> {
        self.validate(x)?;
        Ok(x.scale(n))
    }

    pub fn infimum(&self, x: &Element, y: &Element) -> Result<Element> {
        if !self.capabilities().has_infima {
            return Err(CuError::CapabilityMissing {
                instance: self.name().to_string(),
                capability: "hasInfima",
            });
        }
        self.check_pair(x, y)?;
        Ok(self.meet(x, y))
    }

    /// `Φ(x) = ⋀_g α_g(x)`, the orbit infimum, for fixed-point handles.
    /// `x` may be any element of the ambient instance.
    pub fn phi(&self, x: &Element) -> Result<Element> {
        match self.kind() {
            Kind::Fixed { ambient, action } => {
                ambient.validate(x)?;
                Ok(phi_unchecked(ambient, action, x))
            }
            _ => Err(CuError::CapabilityMissing {
                instance: self.name().to_string(),
                capability: "fixed-point projection",
            }),
        }
    }

    /// Returns the chain's supremum after checking the prefix is
    /// `≪`-increasing and every inspected entry lies below the target.
    pub fn sup_chain(&self, c: &AscendingChain) -> Result<Element> {
        let bad = |m: String| CuError::InvalidChain(m);
        if let Tail::Componentwise(parts) = &c.tail {
            let cs = self
                .components()
                .filter(|cs| cs.len() == parts.len())
                .ok_or_else(|| bad("componentwise tail does not match the summands".into()))?;
            for (s, part) in cs.iter().zip(parts) {
                s.sup_chain(part)?;
            }
        }
        let target = c.target();
        self.validate(&target).map_err(|e| bad(format!("target: {e}")))?;
        for (i, w) in c.prefix.windows(2).enumerate() {
            if !self.wb(&w[0], &w[1]) {
                return Err(bad(format!("prefix entries {i} and {} are not way-below related", i + 1)));
            }
        }
        for (i, p) in c.prefix.iter().enumerate() {
            self.validate(p).map_err(|e| bad(format!("prefix entry {i}: {e}")))?;
            if !self.le(p, &target) {
                return Err(bad(format!("tail target lies below prefix entry {i}")));
            }
        }
        let mut prev: Option<Element> = None;
        for k in 1..=CHAIN_PROBE {
            let e = c.tail_entry(k);
            self.validate(&e).map_err(|err| bad(format!("tail entry {k}: {err}")))?;
            if !self.le(&e, &target) {
                return Err(bad(format!("tail entry {k} exceeds the target")));
            }
            if let Some(p) = &prev {
                if !self.le(p, &e) {
                    return Err(bad(format!("tail entries {} and {k} decrease", k - 1)));
                }
            }
            prev = Some(e);
        }
        Ok(target)
    }

    /// A canonical `≪`-increasing chain with supremum `x`.
    pub fn basis_chain(&self, x: &Element) -> Result<AscendingChain> {
        self.validate(x)?;
        Ok(self.basis_chain_unchecked(x))
    }

    pub(crate) fn basis_chain_unchecked(&self, x: &Element) -> AscendingChain {
        match (self.kind(), x) {
            (Kind::ExtNat, Element::Scalar(v)) => match v.finite() {
                Some(r) => {
                    let n = r.to_integer() as u64;
                    AscendingChain::stationary((0..=n).map(Element::nat).collect(), x.clone())
                }
                None => AscendingChain::cap(x.clone()),
            },
            (Kind::TwoPoint, _) => {
                let mut prefix = vec![self.zero()];
                if !x.is_zero() {
                    prefix.push(x.clone());
                }
                AscendingChain::stationary(prefix, x.clone())
            }
            (Kind::JiangSu, Element::Z(ZElement::Compact(n))) => {
                AscendingChain::stationary((0..=*n).map(Element::compact).collect(), x.clone())
            }
            (Kind::LscNat(_), Element::Lsc(vs)) => {
                if vs.iter().all(ExtValue::is_finite) {
                    let top = vs.iter().max().and_then(|v| v.finite()).map_or(0, |r| r.to_integer() as u64);
                    let prefix = (0..=top)
                        .map(|k| Element::Lsc(vs.iter().map(|v| (*v).min(ExtValue::nat(k))).collect()))
                        .collect();
                    AscendingChain::stationary(prefix, x.clone())
                } else {
                    AscendingChain::cap(x.clone())
                }
            }
            (Kind::Sum(cs), Element::Tuple(xs)) => AscendingChain {
                prefix: Vec::new(),
                tail: Tail::Componentwise(
                    cs.iter().zip(xs).map(|(c, x)| c.basis_chain_unchecked(x)).collect(),
                ),
            },
            (Kind::Fixed { ambient, action }, _) => {
                let mut c = ambient.basis_chain_unchecked(x);
                c.prefix = c.prefix.iter().map(|p| phi_unchecked(ambient, action, p)).collect();
                c
            }
            (Kind::SoftPart(ambient), _) => ambient.basis_chain_unchecked(x),
            _ if x.is_zero() => AscendingChain::stationary(vec![x.clone()], x.clone()),
            _ => AscendingChain::numeric(x.clone()),
        }
    }

    /// Instance-aware element literal in the spec-file grammar.
    pub fn literal(&self, x: &Element) -> String {
        match (self.kind(), x) {
            (Kind::Fixed { ambient, .. } | Kind::SoftPart(ambient), _) => ambient.literal(x),
            (Kind::LscNat(p) | Kind::LscQ(p), Element::Lsc(vs)) if vs.len() == p.len() => {
                if vs.is_empty() {
                    return "{ }".into();
                }
                let parts: Vec<String> =
                    p.atoms().iter().zip(vs).map(|(a, v)| format!("{a}:{v}")).collect();
                format!("{{ {} }}", parts.join(" ; "))
            }
            (Kind::Sum(cs), Element::Tuple(xs)) if xs.len() == cs.len() => {
                let parts: Vec<String> = cs.iter().zip(xs).map(|(c, x)| c.literal(x)).collect();
                format!("({})", parts.join(", "))
            }
            _ => x.to_string(),
        }
    }

    // Unchecked fast paths, used by the search engines after validation.

    pub(crate) fn le(&self, x: &Element, y: &Element) -> bool {
        x.le(y)
    }

    pub(crate) fn plus(&self, x: &Element, y: &Element) -> Element {
        x.plus(y)
    }

    pub(crate) fn meet(&self, x: &Element, y: &Element) -> Element {
        match self.kind() {
            Kind::SoftPart(ambient) => {
                let m = x.meet(y);
                if crate::soft::closed_form(ambient, &m) {
                    m
                } else {
                    crate::soft::sigma_closed_form(ambient, &m)
                }
            }
            _ => x.meet(y),
        }
    }

    pub(crate) fn wb(&self, x: &Element, y: &Element) -> bool {
        match (self.kind(), x, y) {
            (Kind::ExtNat, Element::Scalar(a), Element::Scalar(b)) => a.is_finite() && a <= b,
            (Kind::ExtQ, Element::Scalar(a), Element::Scalar(b)) => q_wb(*a, *b),
            (Kind::TwoPoint, Element::Scalar(a), Element::Scalar(b)) => a <= b,
            (Kind::JiangSu, Element::Z(a), Element::Z(b)) => z_wb(a, b),
            (Kind::LscNat(_), Element::Lsc(a), Element::Lsc(b)) => {
                a.iter().zip(b).all(|(u, v)| u.is_finite() && u <= v)
            }
            (Kind::LscQ(_), Element::Lsc(a), Element::Lsc(b)) => {
                a.iter().zip(b).all(|(u, v)| q_wb(*u, *v))
            }
            (Kind::Sum(cs), Element::Tuple(a), Element::Tuple(b)) => {
                cs.iter().zip(a.iter().zip(b)).all(|(c, (u, v))| c.wb(u, v))
            }
            (Kind::Fixed { ambient, .. } | Kind::SoftPart(ambient), _, _) => ambient.wb(x, y),
            _ => panic!("shape mismatch in way-below on {}: {x:?} vs {y:?}", self.name()),
        }
    }
}

fn q_wb(a: ExtValue, b: ExtValue) -> bool {
    a.is_zero() || (a.is_finite() && a < b)
}

fn z_wb(a: &ZElement, b: &ZElement) -> bool {
    match (a, b) {
        (ZElement::Compact(_), _) => a.le(b),
        (ZElement::Soft(p), ZElement::Soft(q)) => p.is_finite() && p < q,
        (ZElement::Soft(p), ZElement::Compact(_)) => p.is_finite() && a.le(b),
    }
}

pub(crate) fn phi_unchecked(ambient: &Semigroup, action: &GroupAction, x: &Element) -> Element {
    action
        .group()
        .iter()
        .map(|g| action.apply(g, x))
        .reduce(|a, b| ambient.meet(&a, &b))
        .expect("a group contains the identity")
}

fn describe_poset(p: &Poset) -> String {
    let rels: Vec<String> = p
        .covers()
        .into_iter()
        .map(|(a, b)| format!("{}<{}", p.atoms()[a], p.atoms()[b]))
        .collect();
    format!("{{{};{}}}", p.atoms().join(" "), rels.join(";"))
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn soft(n: u64, d: u64) -> Element {
        Element::soft(ExtValue::ratio(n, d))
    }

    #[test]
    fn z_way_below_table() {
        let z = Semigroup::jiang_su();
        assert!(z.wb(&soft(1, 1), &Element::compact(1)));
        assert!(!z.wb(&soft(1, 1), &soft(1, 1)));
        assert!(z.wb(&Element::compact(1), &Element::compact(1)));
        assert!(!z.wb(&Element::compact(1), &soft(1, 1)));
        assert!(!z.wb(&Element::soft(ExtValue::Infinite), &Element::soft(ExtValue::Infinite)));
    }

    #[test]
    fn mixed_tags_are_rejected() {
        let z = Semigroup::jiang_su();
        let err = z.leq(&Element::nat(1), &Element::compact(1)).unwrap_err();
        assert!(matches!(err, CuError::MixedInstance(_)));
    }

    #[test]
    fn lsc_validation_checks_monotonicity() {
        let l = Semigroup::lsc_nat(Poset::chain(&["a", "b"]));
        assert!(l.contains(&Element::Lsc(vec![ExtValue::nat(1), ExtValue::Infinite])));
        assert!(!l.contains(&Element::Lsc(vec![ExtValue::Infinite, ExtValue::nat(1)])));
        assert!(!l.contains(&Element::Lsc(vec![ExtValue::ratio(1, 2), ExtValue::nat(1)])));
    }

    #[test]
    fn infimum_requires_capability() {
        let z = Semigroup::jiang_su();
        assert_eq!(z.infimum(&Element::compact(2), &soft(2, 1)).unwrap(), soft(2, 1));
    }

    #[test]
    fn sum_basis_chain_is_componentwise() {
        let zz = Semigroup::sum(vec![Semigroup::jiang_su(), Semigroup::jiang_su()]).unwrap();
        let x = Element::Tuple(vec![Element::compact(1), soft(1, 2)]);
        let c = zz.basis_chain(&x).unwrap();
        assert_eq!(zz.sup_chain(&c).unwrap(), x);
        assert_eq!(c.tail_entry(1), Element::Tuple(vec![Element::compact(0), Element::compact(0)]));
    }

    #[test]
    fn prefix_must_be_way_below_increasing() {
        let n = Semigroup::ext_nat();
        let c = AscendingChain::stationary(vec![Element::infinity(), Element::infinity()], Element::infinity());
        assert!(matches!(n.sup_chain(&c), Err(CuError::InvalidChain(_))));
    }
}
