//! Ascending chains: a finite `≪`-increasing prefix followed by a tail rule.

use crate::element::{Element, ZElement};
use crate::value::{ExtValue, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tail {
    /// Every tail entry is `e`.
    Stationary(Element),
    /// Entry `k` lowers each finite coordinate by `1/k` (clamped at zero) and
    /// replaces each infinite one by `M + k`, `M` the largest finite
    /// coordinate of the target.
    ApproachNumeric(Element),
    /// Entry `k` truncates each coordinate at `k`.
    ApproachCap(Element),
    /// One chain per summand, advanced in lockstep.
    Componentwise(Vec<AscendingChain>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscendingChain {
    pub prefix: Vec<Element>,
    pub tail: Tail,
}

impl AscendingChain {
    pub fn stationary(prefix: Vec<Element>, e: Element) -> Self {
        AscendingChain { prefix, tail: Tail::Stationary(e) }
    }

    pub fn numeric(target: Element) -> Self {
        AscendingChain { prefix: Vec::new(), tail: Tail::ApproachNumeric(target) }
    }

    pub fn cap(target: Element) -> Self {
        AscendingChain { prefix: Vec::new(), tail: Tail::ApproachCap(target) }
    }

    /// The supremum dictated by the tail rule.
    pub fn target(&self) -> Element {
        match &self.tail {
            Tail::Stationary(e) | Tail::ApproachNumeric(e) | Tail::ApproachCap(e) => e.clone(),
            Tail::Componentwise(cs) => Element::Tuple(cs.iter().map(AscendingChain::target).collect()),
        }
    }

    /// Tail entry `k`, for `k >= 1`.
    pub fn tail_entry(&self, k: u64) -> Element {
        assert!(k >= 1, "tail entries are numbered from 1");
        match &self.tail {
            Tail::Stationary(e) => e.clone(),
            Tail::ApproachNumeric(t) => numeric_entry(t, k),
            Tail::ApproachCap(t) => cap_entry(t, k),
            Tail::Componentwise(cs) => {
                Element::Tuple(cs.iter().map(|c| c.nth(k as usize - 1)).collect())
            }
        }
    }

    /// Entry `i` of the whole sequence, prefix first.
    pub fn nth(&self, i: usize) -> Element {
        match self.prefix.get(i) {
            Some(e) => e.clone(),
            None => self.tail_entry((i - self.prefix.len() + 1) as u64),
        }
    }

    /// The prefix followed by the first `k` tail entries.
    pub fn entries(&self, k: u64) -> Vec<Element> {
        let mut out = self.prefix.clone();
        out.extend((1..=k).map(|j| self.tail_entry(j)));
        out
    }
}

fn numeric_entry(t: &Element, k: u64) -> Element {
    let step = Rational::new(1, k as i64);
    let top = t.max_finite() + ExtValue::nat(k);
    let f = move |v: ExtValue| match v {
        ExtValue::Infinite => top,
        v => v.saturating_sub(step),
    };
    t.map_values(&f, &|z| match z {
        ZElement::Compact(n) => ZElement::Compact(*n),
        ZElement::Soft(q) => match f(*q) {
            v if v.is_zero() => ZElement::Compact(0),
            v => ZElement::Soft(v),
        },
    })
}

fn cap_entry(t: &Element, k: u64) -> Element {
    let c = ExtValue::nat(k);
    t.map_values(&|v| v.min(c), &|z| match z {
        ZElement::Compact(n) => ZElement::Compact(*n.min(&k)),
        ZElement::Soft(q) => ZElement::Soft((*q).min(c)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_tail_on_z() {
        let c = AscendingChain::numeric(Element::soft(ExtValue::nat(2)));
        assert_eq!(c.tail_entry(1), Element::soft(ExtValue::nat(1)));
        assert_eq!(c.tail_entry(4), Element::soft(ExtValue::ratio(7, 4)));
        let half = AscendingChain::numeric(Element::soft(ExtValue::ratio(1, 2)));
        assert_eq!(half.tail_entry(1), Element::compact(0));
    }

    #[test]
    fn numeric_tail_lifts_infinite_coordinates_above_finite_ones() {
        let t = Element::Lsc(vec![ExtValue::nat(3), ExtValue::Infinite]);
        assert_eq!(
            AscendingChain::numeric(t).tail_entry(2),
            Element::Lsc(vec![ExtValue::ratio(5, 2), ExtValue::nat(5)])
        );
    }

    #[test]
    fn cap_tail_truncates() {
        let c = AscendingChain::cap(Element::infinity());
        assert_eq!(c.entries(3)[2], Element::nat(3));
        assert_eq!(c.target(), Element::infinity());
    }

    #[test]
    fn nth_runs_through_prefix_then_tail() {
        let c = AscendingChain::stationary(vec![Element::nat(0), Element::nat(1)], Element::nat(1));
        assert_eq!(c.nth(0), Element::nat(0));
        assert_eq!(c.nth(5), Element::nat(1));
    }
}
