//! Structural laws of a Cu-semigroup, checked on grids: order and monoid
//! axioms, the way-below table against chain semantics, suprema of basis
//! chains, and the fixed-point audits.

use crate::chain::{AscendingChain, Tail};
use crate::element::Element;
use crate::error::{CuError, Result};
use crate::report::Report;
use crate::sample::SampleSpec;
use crate::search::{search, Var};
use crate::semigroup::{phi_unchecked, Kind, Semigroup};

/// Chain entries inspected when a chain has to reach a grid element. On
/// grids with denominators up to 16 and values up to 16 every approach tail
/// dominates its grid minorants well before this depth.
pub const CHAIN_DEPTH: u64 = 64;

/// The first entries of `c`: the prefix plus [`CHAIN_DEPTH`] tail entries.
pub fn chain_entries(c: &AscendingChain) -> Vec<Element> {
    c.entries(CHAIN_DEPTH)
}

/// `target` is the supremum of the increasing `entries`, as seen from the
/// grid: every entry lies below it and every grid element way below it lies
/// below some entry.
pub fn is_sup_of(s: &Semigroup, entries: &[Element], target: &Element, grid: &[Element]) -> bool {
    entries.iter().all(|e| s.le(e, target))
        && grid
            .iter()
            .filter(|w| s.wb(w, target))
            .all(|w| entries.iter().any(|e| s.le(w, e)))
}

/// Chains with supremum `t` built from the tail rules, restricted to those
/// whose inspected entries are elements of `s`.
pub fn candidate_chains(s: &Semigroup, t: &Element) -> Vec<AscendingChain> {
    let raw = match (s.kind(), t) {
        (Kind::Sum(cs), Element::Tuple(ts)) => {
            let parts: Vec<Vec<AscendingChain>> =
                cs.iter().zip(ts).map(|(c, t)| candidate_chains(c, t)).collect();
            let mut out: Vec<Vec<AscendingChain>> = vec![Vec::new()];
            for part in &parts {
                out = out
                    .into_iter()
                    .flat_map(|pre| {
                        part.iter().map(move |c| {
                            let mut v = pre.clone();
                            v.push(c.clone());
                            v
                        })
                    })
                    .collect();
            }
            out.into_iter()
                .map(|cs| AscendingChain { prefix: Vec::new(), tail: Tail::Componentwise(cs) })
                .collect()
        }
        _ => vec![
            AscendingChain::stationary(Vec::new(), t.clone()),
            AscendingChain::numeric(t.clone()),
            AscendingChain::cap(t.clone()),
            s.basis_chain_unchecked(t),
        ],
    };
    raw.into_iter()
        .filter(|c| s.sup_chain(c).is_ok() && chain_entries(c).iter().all(|e| s.contains(e)))
        .collect()
}

/// A chain with supremum at least `y` none of whose inspected entries
/// dominates `x`, with targets drawn from `targets`. `None` means `x ≪ y`
/// by the chain definition restricted to these chains.
pub fn refuting_chain(s: &Semigroup, x: &Element, y: &Element, targets: &[Element]) -> Option<AscendingChain> {
    targets
        .iter()
        .filter(|t| s.le(y, t))
        .flat_map(|t| candidate_chains(s, t))
        .find(|c| !chain_entries(c).iter().any(|e| s.le(x, e)))
}

/// Order, monoid, way-below and supremum laws on the grid of `sample`.
pub fn core_laws(s: &Semigroup, sample: &SampleSpec) -> Result<Vec<Report>> {
    let g = s.enumerate(sample)?;
    let z = s.zero();
    let mut out = Vec::new();

    let v3 = [Var::new("x", &g), Var::new("y", &g), Var::new("z", &g)];
    out.push(search("partial-order", &v3, sample, |b| {
        let (x, y, w) = (b[0], b[1], b[2]);
        let antisym = !(s.le(x, y) && s.le(y, x)) || x == y;
        let trans = !(s.le(x, y) && s.le(y, w)) || s.le(x, w);
        Ok(s.le(x, x) && antisym && trans)
    })?);
    out.push(search("monoid", &v3, sample, |b| {
        let (x, y, w) = (b[0], b[1], b[2]);
        Ok(s.plus(x, y) == s.plus(y, x)
            && s.plus(&s.plus(x, y), w) == s.plus(x, &s.plus(y, w))
            && s.plus(x, &z) == *x
            && s.le(&z, x))
    })?);
    let v3le = [Var::new("x", &g), Var::new("y", &g).admit(|b| s.le(b[0], b[1])), Var::new("z", &g)];
    out.push(search("order-compatible", &v3le, sample, |b| Ok(s.le(&s.plus(b[0], b[2]), &s.plus(b[1], b[2]))))?);
    out.push(search("way-below-order", &v3, sample, |b| {
        let (x, y, w) = (b[0], b[1], b[2]);
        let into_le = !s.wb(x, y) || s.le(x, y);
        let right = !(s.wb(x, y) && s.le(y, w)) || s.wb(x, w);
        let left = !(s.le(x, y) && s.wb(y, w)) || s.wb(x, w);
        Ok(into_le && right && left)
    })?);
    let v4 = [
        Var::new("x", &g),
        Var::new("x'", &g).admit(|b| s.wb(b[1], b[0])),
        Var::new("y", &g),
        Var::new("y'", &g).admit(|b| s.wb(b[3], b[2])),
    ];
    out.push(search("o3", &v4, sample, |b| Ok(s.wb(&s.plus(b[1], b[3]), &s.plus(b[0], b[2]))))?);

    let v1 = [Var::new("x", &g)];
    out.push(search("basis-chain-sup", &v1, sample, |b| {
        let c = s.basis_chain_unchecked(b[0]);
        let sup = s.sup_chain(&c).map_err(|e| CuError::Internal(e.to_string()))?;
        let entries = chain_entries(&c);
        let increasing = entries.windows(2).all(|w| s.le(&w[0], &w[1]));
        Ok(sup == *b[0] && increasing && is_sup_of(s, &entries, b[0], &g))
    })?);
    let v2 = [Var::new("x", &g), Var::new("y", &g)];
    out.push(search("o4-chains", &v2, sample, |b| {
        let cx = chain_entries(&s.basis_chain_unchecked(b[0]));
        let cy = chain_entries(&s.basis_chain_unchecked(b[1]));
        let n = cx.len().max(cy.len());
        let at = |c: &[Element], i: usize| c[i.min(c.len() - 1)].clone();
        let sum: Vec<Element> = (0..n).map(|i| s.plus(&at(&cx, i), &at(&cy, i))).collect();
        Ok(is_sup_of(s, &sum, &s.plus(b[0], b[1]), &g))
    })?);
    out.push(search("times-infinity", &v1, sample, |b| {
        let x = b[0];
        let t = x.times_infinity();
        let multiples: Vec<Element> = (1..=CHAIN_DEPTH).map(|n| x.scale(n)).collect();
        Ok(s.plus(&t, &t) == t && s.le(x, &t) && s.contains(&t) && is_sup_of(s, &multiples, &t, &g))
    })?);
    Ok(out)
}

/// The way-below table against the chain definition: `x ≪ y` exactly when
/// no chain with a grid target above `y` avoids dominating `x`.
pub fn way_below_matches_chains(s: &Semigroup, sample: &SampleSpec) -> Result<Report> {
    let g = s.enumerate(sample)?;
    let vars = [Var::new("x", &g), Var::new("y", &g)];
    search("way-below-chains", &vars, sample, |b| Ok(s.wb(b[0], b[1]) == refuting_chain(s, b[0], b[1], &g).is_none()))
}

/// Sub-Cu-semigroup audits for a fixed-point instance, and the laws of the
/// orbit-infimum projection `Φ` over the ambient grid.
pub fn fixed_point_audits(s: &Semigroup, sample: &SampleSpec) -> Result<Vec<Report>> {
    let Kind::Fixed { ambient, action } = s.kind() else {
        return Err(CuError::CapabilityMissing { instance: s.name().to_string(), capability: "fixed-point action" });
    };
    let carrier = s.enumerate(sample)?;
    let amb = ambient.enumerate(sample)?;
    let phi = |x: &Element| phi_unchecked(ambient, action, x);
    let mut out = Vec::new();

    let pair = [Var::new("x", &carrier), Var::new("y", &carrier)];
    out.push(search("fixed:add-closed", &pair, sample, |b| Ok(action.fixes(&s.plus(b[0], b[1]))))?);
    let one = [Var::new("x", &carrier)];
    out.push(search("fixed:basis-chain", &one, sample, |b| {
        let c = s.basis_chain_unchecked(b[0]);
        let entries = chain_entries(&c);
        Ok(s.sup_chain(&c).is_ok_and(|t| t == *b[0])
            && entries.iter().all(|e| action.fixes(e))
            && is_sup_of(s, &entries, b[0], &carrier))
    })?);
    out.push(search("fixed:chain-sup-closed", &one, sample, |b| {
        // Every chain of fixed elements reaching a fixed target stays in the
        // carrier; chains of the ambient with fixed entries have fixed sups.
        Ok(candidate_chains(ambient, b[0])
            .iter()
            .filter(|c| chain_entries(c).iter().all(|e| action.fixes(e)))
            .all(|c| action.fixes(&c.target())))
    })?);

    let all = [Var::new("x", &amb)];
    out.push(search("phi:idempotent", &all, sample, |b| {
        let p = phi(b[0]);
        Ok(phi(&p) == p)
    })?);
    out.push(search("phi:orbit-lower-bound", &all, sample, |b| {
        let x = b[0];
        let p = phi(x);
        let orbit: Vec<Element> = action.group().iter().map(|g| action.apply(g, x)).collect();
        let below = orbit.iter().all(|o| ambient.le(&p, o));
        // Greatest fixed lower bound of the orbit among grid elements.
        let greatest = carrier
            .iter()
            .filter(|w| orbit.iter().all(|o| ambient.le(w, o)))
            .all(|w| ambient.le(w, &p));
        Ok(below && action.fixes(&p) && ambient.le(&p, x) && greatest)
    })?);
    out.push(search("phi:fixes-exactly-carrier", &all, sample, |b| Ok(action.fixes(b[0]) == (phi(b[0]) == *b[0])))?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::ExtValue;

    #[test]
    fn infinity_is_not_compact_in_ext_nat() {
        let n = Semigroup::ext_nat();
        let g = n.enumerate(&SampleSpec::new(3, 1)).unwrap();
        let c = refuting_chain(&n, &Element::infinity(), &Element::infinity(), &g).unwrap();
        assert!(!matches!(c.tail, Tail::Stationary(_)));
        assert!(refuting_chain(&n, &Element::nat(3), &Element::nat(3), &g).is_none());
    }

    #[test]
    fn soft_two_is_not_way_below_itself_in_z() {
        let z = Semigroup::jiang_su();
        let g = z.enumerate(&SampleSpec::new(3, 2)).unwrap();
        let two = Element::soft(ExtValue::nat(2));
        assert!(refuting_chain(&z, &two, &two, &g).is_some());
        assert!(refuting_chain(&z, &Element::soft(ExtValue::nat(1)), &Element::compact(1), &g).is_none());
    }

    #[test]
    fn z_laws_hold_on_a_small_grid() {
        let z = Semigroup::jiang_su();
        for r in core_laws(&z, &SampleSpec::new(2, 2)).unwrap() {
            assert!(r.is_pass(), "{r:?}");
        }
    }
}
