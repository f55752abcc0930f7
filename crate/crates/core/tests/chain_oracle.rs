//! `x ≪ y` against its definition: for every increasing sequence whose
//! supremum dominates `y`, some member dominates `x`.
//!
//! The sequences and their suprema are built here from explicit values,
//! independently of the crate's chain machinery. Each family covers the
//! stationary sequences and every way of approaching a value from below.

use cu_workbench::instances::Poset;
use cu_workbench::{Element, ExtValue, SampleSpec, Semigroup};

/// Length of the explicit sequences; members approach their limit to within
/// `2^-DEPTH` of it.
const DEPTH: u32 = 30;

struct Seq {
    members: Vec<Element>,
    sup: Element,
}

/// Values `t(1 − 2^-k)` rising to a finite `t`, or `k` rising to `∞`.
fn rising(t: ExtValue) -> Vec<ExtValue> {
    (1..=DEPTH)
        .map(|k| match t.finite() {
            Some(r) => {
                let frac = cu_workbench::Rational::new((1i64 << k) - 1, 1i64 << k);
                ExtValue::from_rational(r * frac).unwrap()
            }
            None => ExtValue::nat(k as u64),
        })
        .collect()
}

fn stationary(e: &Element) -> Seq {
    Seq { members: vec![e.clone(); DEPTH as usize], sup: e.clone() }
}

/// Limits worth approaching: every grid value and a value just above each.
fn limits(grid: &[ExtValue]) -> Vec<ExtValue> {
    let nudge = ExtValue::ratio(1, 1000);
    let mut out: Vec<ExtValue> = grid.iter().filter(|v| !v.is_zero()).copied().collect();
    out.extend(grid.iter().filter(|v| v.is_finite()).map(|v| *v + nudge));
    out.push(ExtValue::Infinite);
    out.sort();
    out.dedup();
    out
}

fn scalar_seqs(grid: &[ExtValue], integral: bool) -> Vec<(Vec<ExtValue>, ExtValue)> {
    let mut seqs: Vec<(Vec<ExtValue>, ExtValue)> = grid
        .iter()
        .filter(|v| !integral || v.is_integral())
        .map(|v| (vec![*v; DEPTH as usize], *v))
        .collect();
    for t in limits(grid) {
        if integral && t.is_finite() {
            continue;
        }
        seqs.push((rising(t), t));
    }
    seqs
}

fn value_grid(sample: &SampleSpec) -> Vec<ExtValue> {
    sample.grid().rationals().to_vec()
}

fn sequences(s: &Semigroup, sample: &SampleSpec) -> Vec<Seq> {
    let grid = s.enumerate(sample).unwrap();
    let values = value_grid(sample);
    let mut out: Vec<Seq> = grid.iter().map(stationary).collect();
    match s.kind() {
        cu_workbench::Kind::ExtNat | cu_workbench::Kind::ExtQ => {
            let integral = matches!(s.kind(), cu_workbench::Kind::ExtNat);
            for (vs, t) in scalar_seqs(&values, integral) {
                out.push(Seq { members: vs.into_iter().map(Element::Scalar).collect(), sup: Element::Scalar(t) });
            }
        }
        cu_workbench::Kind::JiangSu => out.extend(z_rising(&values)),
        cu_workbench::Kind::LscQ(p) => {
            let per: Vec<(Vec<ExtValue>, ExtValue)> = scalar_seqs(&values, false);
            for combo in product(&vec![per; p.len()]) {
                let members: Vec<Element> =
                    (0..DEPTH as usize).map(|k| Element::Lsc(combo.iter().map(|c| c.0[k]).collect())).collect();
                let sup = Element::Lsc(combo.iter().map(|c| c.1).collect());
                if s.contains(&sup) && members.iter().all(|m| s.contains(m)) {
                    out.push(Seq { members, sup });
                }
            }
        }
        cu_workbench::Kind::Sum(cs) => {
            let per: Vec<Vec<Seq>> = cs.iter().map(|c| sequences(c, sample)).collect();
            for combo in product(&per) {
                let members =
                    (0..DEPTH as usize).map(|k| Element::Tuple(combo.iter().map(|c| c.members[k].clone()).collect())).collect();
                let sup = Element::Tuple(combo.iter().map(|c| c.sup.clone()).collect());
                out.push(Seq { members, sup });
            }
        }
        k => panic!("no sequence family for {k:?}"),
    }
    out
}

/// Soft values rising to `soft t`, and compact values rising to `soft ∞`.
fn z_rising(values: &[ExtValue]) -> Vec<Seq> {
    let mut out = Vec::new();
    for t in limits(values) {
        let members = rising(t).into_iter().filter(|v| !v.is_zero()).map(Element::soft).collect::<Vec<_>>();
        out.push(Seq { members, sup: Element::soft(t) });
    }
    out.push(Seq { members: (1..=DEPTH as u64).map(Element::compact).collect(), sup: Element::soft(ExtValue::Infinite) });
    out
}

fn product<T>(parts: &[Vec<T>]) -> Vec<Vec<&T>> {
    let mut acc: Vec<Vec<&T>> = vec![vec![]];
    for part in parts {
        acc = acc.into_iter().flat_map(|pre| part.iter().map(move |x| [pre.clone(), vec![x]].concat())).collect();
    }
    acc
}

fn by_definition(s: &Semigroup, seqs: &[Seq], x: &Element, y: &Element) -> bool {
    seqs.iter()
        .filter(|q| s.leq(y, &q.sup).unwrap())
        .all(|q| q.members.iter().any(|m| s.leq(x, m).unwrap()))
}

fn agree(s: &Semigroup, sample: &SampleSpec) {
    let seqs = sequences(s, sample);
    for q in &seqs {
        assert!(q.members.windows(2).all(|w| s.leq(&w[0], &w[1]).unwrap()), "sequence not increasing");
        assert!(q.members.iter().all(|m| s.leq(m, &q.sup).unwrap()), "member above the supremum");
    }
    let grid = s.enumerate(sample).unwrap();
    for x in &grid {
        for y in &grid {
            assert_eq!(
                s.way_below(x, y).unwrap(),
                by_definition(s, &seqs, x, y),
                "{} ≪ {} in {}",
                s.literal(x),
                s.literal(y),
                s.name()
            );
        }
    }
}

#[test]
fn ext_nat() {
    agree(&Semigroup::ext_nat(), &SampleSpec::default());
}

#[test]
fn ext_q() {
    agree(&Semigroup::ext_q(), &SampleSpec::default());
}

#[test]
fn jiang_su() {
    agree(&Semigroup::jiang_su(), &SampleSpec::default());
}

#[test]
fn lsc_q_on_two_points() {
    agree(&Semigroup::lsc_q(Poset::antichain(&["a", "b"])), &SampleSpec::new(2, 2));
    agree(&Semigroup::lsc_q(Poset::chain(&["a", "b"])), &SampleSpec::new(2, 2));
}

#[test]
fn z_plus_z() {
    agree(&Semigroup::sum(vec![Semigroup::jiang_su(), Semigroup::jiang_su()]).unwrap(), &SampleSpec::new(2, 1));
}

#[test]
fn soft_two_is_below_compact_two_but_not_way_below_soft_two() {
    let z = Semigroup::jiang_su();
    let two = ExtValue::nat(2);
    assert!(z.way_below(&Element::soft(two), &Element::compact(2)).unwrap());
    assert!(!z.way_below(&Element::soft(two), &Element::soft(two)).unwrap());
    assert!(z.way_below(&Element::compact(2), &Element::compact(2)).unwrap());
}
