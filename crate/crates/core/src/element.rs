//! Instance-tagged elements and the tag-level order/addition tables.
//!
//! These tables do not know which instance an element belongs to; validity
//! (monotonicity, integrality, fixedness) is checked by the handle.

use std::fmt;

use crate::value::ExtValue;

/// An element of the Jiang–Su semigroup `Z = ℕ ⊔ (0, ∞]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZElement {
    Compact(u64),
    /// Strictly positive, possibly infinite.
    Soft(ExtValue),
}

impl ZElement {
    /// Numeric payload, the value every functional scales.
    pub fn value(&self) -> ExtValue {
        match self {
            ZElement::Compact(n) => ExtValue::nat(*n),
            ZElement::Soft(q) => *q,
        }
    }

    pub fn zero() -> Self {
        ZElement::Compact(0)
    }

    pub(crate) fn le(&self, other: &ZElement) -> bool {
        use ZElement::*;
        match (self, other) {
            (Compact(n), Compact(m)) => n <= m,
            (Soft(p), Soft(q)) => p <= q,
            (Soft(p), Compact(n)) => *p <= ExtValue::nat(*n),
            (Compact(n), Soft(q)) => ExtValue::nat(*n) < *q,
        }
    }

    pub(crate) fn plus(&self, other: &ZElement) -> ZElement {
        use ZElement::*;
        match (self, other) {
            (Compact(n), Compact(m)) => Compact(n + m),
            _ => Soft(self.value() + other.value()),
        }
    }

    pub(crate) fn meet(&self, other: &ZElement) -> ZElement {
        use ZElement::*;
        match (self, other) {
            (Compact(n), Compact(m)) => Compact(*n.min(m)),
            (Soft(p), Soft(q)) => Soft(*p.min(q)),
            (Compact(n), Soft(q)) | (Soft(q), Compact(n)) => {
                if ExtValue::nat(*n) < *q {
                    Compact(*n)
                } else {
                    Soft(*q)
                }
            }
        }
    }

    pub(crate) fn times_infinity(&self) -> ZElement {
        match self {
            ZElement::Compact(0) => ZElement::Compact(0),
            _ => ZElement::Soft(ExtValue::Infinite),
        }
    }
}

/// An element of some instance. Equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// `ℕ̄`, `[0, ∞]` or `{0, ∞}`.
    Scalar(ExtValue),
    Z(ZElement),
    /// A monotone map on a finite poset, indexed by atom position.
    Lsc(Vec<ExtValue>),
    /// An element of a direct sum.
    Tuple(Vec<Element>),
}

/// The shape of an element, used for mixed-instance diagnostics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementTag {
    Scalar,
    JiangSu,
    Lsc,
    Tuple,
}

impl fmt::Display for ElementTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ElementTag::Scalar => "scalar",
            ElementTag::JiangSu => "jiang-su",
            ElementTag::Lsc => "lsc",
            ElementTag::Tuple => "tuple",
        })
    }
}

impl Element {
    pub fn tag(&self) -> ElementTag {
        match self {
            Element::Scalar(_) => ElementTag::Scalar,
            Element::Z(_) => ElementTag::JiangSu,
            Element::Lsc(_) => ElementTag::Lsc,
            Element::Tuple(_) => ElementTag::Tuple,
        }
    }

    pub fn compact(n: u64) -> Self {
        Element::Z(ZElement::Compact(n))
    }

    pub fn soft(q: ExtValue) -> Self {
        Element::Z(ZElement::Soft(q))
    }

    pub fn nat(n: u64) -> Self {
        Element::Scalar(ExtValue::nat(n))
    }

    pub fn infinity() -> Self {
        Element::Scalar(ExtValue::Infinite)
    }

    /// True when every coordinate value is zero.
    pub fn is_zero(&self) -> bool {
        match self {
            Element::Scalar(v) => v.is_zero(),
            Element::Z(z) => *z == ZElement::Compact(0),
            Element::Lsc(vs) => vs.iter().all(ExtValue::is_zero),
            Element::Tuple(xs) => xs.iter().all(Element::is_zero),
        }
    }

    /// Applies `f` to every numeric coordinate. Jiang–Su entries are passed
    /// through `z`.
    pub(crate) fn map_values(
        &self,
        f: &dyn Fn(ExtValue) -> ExtValue,
        z: &dyn Fn(&ZElement) -> ZElement,
    ) -> Element {
        match self {
            Element::Scalar(v) => Element::Scalar(f(*v)),
            Element::Z(e) => Element::Z(z(e)),
            Element::Lsc(vs) => Element::Lsc(vs.iter().map(|v| f(*v)).collect()),
            Element::Tuple(xs) => Element::Tuple(xs.iter().map(|x| x.map_values(f, z)).collect()),
        }
    }

    /// Largest finite coordinate value, ignoring `∞`.
    pub(crate) fn max_finite(&self) -> ExtValue {
        match self {
            Element::Scalar(v) => finite_or_zero(*v),
            Element::Z(z) => finite_or_zero(z.value()),
            Element::Lsc(vs) => vs.iter().map(|v| finite_or_zero(*v)).max().unwrap_or_default(),
            Element::Tuple(xs) => xs.iter().map(Element::max_finite).max().unwrap_or_default(),
        }
    }

    /// Tag-level order. Panics on mismatched shapes; handles check tags first.
    pub(crate) fn le(&self, other: &Element) -> bool {
        match (self, other) {
            (Element::Scalar(a), Element::Scalar(b)) => a <= b,
            (Element::Z(a), Element::Z(b)) => a.le(b),
            (Element::Lsc(a), Element::Lsc(b)) => a.iter().zip(b).all(|(x, y)| x <= y),
            (Element::Tuple(a), Element::Tuple(b)) => a.iter().zip(b).all(|(x, y)| x.le(y)),
            _ => panic!("shape mismatch in order: {self:?} vs {other:?}"),
        }
    }

    pub(crate) fn plus(&self, other: &Element) -> Element {
        match (self, other) {
            (Element::Scalar(a), Element::Scalar(b)) => Element::Scalar(*a + *b),
            (Element::Z(a), Element::Z(b)) => Element::Z(a.plus(b)),
            (Element::Lsc(a), Element::Lsc(b)) => {
                Element::Lsc(a.iter().zip(b).map(|(x, y)| *x + *y).collect())
            }
            (Element::Tuple(a), Element::Tuple(b)) => {
                Element::Tuple(a.iter().zip(b).map(|(x, y)| x.plus(y)).collect())
            }
            _ => panic!("shape mismatch in addition: {self:?} vs {other:?}"),
        }
    }

    pub(crate) fn meet(&self, other: &Element) -> Element {
        match (self, other) {
            (Element::Scalar(a), Element::Scalar(b)) => Element::Scalar(*a.min(b)),
            (Element::Z(a), Element::Z(b)) => Element::Z(a.meet(b)),
            (Element::Lsc(a), Element::Lsc(b)) => {
                Element::Lsc(a.iter().zip(b).map(|(x, y)| *x.min(y)).collect())
            }
            (Element::Tuple(a), Element::Tuple(b)) => {
                Element::Tuple(a.iter().zip(b).map(|(x, y)| x.meet(y)).collect())
            }
            _ => panic!("shape mismatch in infimum: {self:?} vs {other:?}"),
        }
    }

    pub(crate) fn times_infinity(&self) -> Element {
        self.map_values(&|v| v.times_infinity(), &|z| z.times_infinity())
    }

    /// `n·x`.
    pub(crate) fn scale(&self, n: u64) -> Element {
        if n == 0 {
            return self.map_values(&|_| ExtValue::zero(), &|_| ZElement::Compact(0));
        }
        self.map_values(&|v| v.scale(n), &|z| match z {
            ZElement::Compact(m) => ZElement::Compact(m * n),
            ZElement::Soft(q) => ZElement::Soft(q.scale(n)),
        })
    }
}

fn finite_or_zero(v: ExtValue) -> ExtValue {
    if v.is_finite() {
        v
    } else {
        ExtValue::zero()
    }
}

/// Positional rendering, e.g. `[1, inf]` for Lsc maps. Instance-aware
/// literals (with atom names) come from `Semigroup::literal`.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Scalar(v) => write!(f, "{v}"),
            Element::Z(ZElement::Compact(n)) => write!(f, "compact {n}"),
            Element::Z(ZElement::Soft(q)) => write!(f, "soft {q}"),
            Element::Lsc(vs) => {
                f.write_str("[")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
            Element::Tuple(xs) => {
                f.write_str("(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u64, d: u64) -> ZElement {
        ZElement::Soft(ExtValue::ratio(n, d))
    }

    #[test]
    fn z_mixed_order() {
        assert!(s(1, 1).le(&ZElement::Compact(1)));
        assert!(!ZElement::Compact(1).le(&s(1, 1)));
        assert!(ZElement::Compact(1).le(&s(3, 2)));
        assert!(ZElement::Compact(0).le(&s(1, 8)));
    }

    #[test]
    fn z_soft_absorbs_compacts() {
        assert_eq!(ZElement::Compact(2).plus(&s(1, 2)), s(5, 2));
        assert_eq!(ZElement::Compact(0).plus(&s(1, 2)), s(1, 2));
        assert_eq!(ZElement::Compact(2).plus(&ZElement::Compact(3)), ZElement::Compact(5));
    }

    #[test]
    fn z_meet_table() {
        assert_eq!(ZElement::Compact(2).meet(&s(2, 1)), s(2, 1));
        assert_eq!(ZElement::Compact(2).meet(&s(5, 2)), ZElement::Compact(2));
        assert_eq!(ZElement::Compact(0).meet(&s(1, 4)), ZElement::Compact(0));
    }

    #[test]
    fn lsc_times_infinity_keeps_zeros() {
        let f = Element::Lsc(vec![ExtValue::nat(1), ExtValue::zero()]);
        assert_eq!(
            f.times_infinity(),
            Element::Lsc(vec![ExtValue::Infinite, ExtValue::zero()])
        );
    }
}
