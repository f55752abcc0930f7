//! Algebraic laws on random elements drawn off-grid, with proptest shrinking
//! any counterexample.

use cu_workbench::functionals::{functional_family, rank};
use cu_workbench::instances::Poset;
use cu_workbench::soft::{is_strongly_soft, sigma};
use cu_workbench::{Element, ExtValue, SampleSpec, Semigroup};
use proptest::prelude::*;

fn value() -> impl Strategy<Value = ExtValue> {
    prop_oneof![
        1 => Just(ExtValue::Infinite),
        8 => (0u64..=48, 1u64..=12).prop_map(|(n, d)| ExtValue::ratio(n, d)),
    ]
}

fn z_element() -> impl Strategy<Value = Element> {
    prop_oneof![
        (0u64..=6).prop_map(Element::compact),
        value().prop_filter("soft values are positive", |v| !v.is_zero()).prop_map(Element::soft),
    ]
}

fn instances() -> Vec<Semigroup> {
    vec![
        Semigroup::jiang_su(),
        Semigroup::ext_q(),
        Semigroup::lsc_q(Poset::new(vec!["a".into(), "b".into(), "c".into()], &[(0, 2), (1, 2)]).unwrap()),
        Semigroup::sum(vec![Semigroup::jiang_su(), Semigroup::jiang_su()]).unwrap(),
    ]
}

/// An element of instance `i`, sorted so that Lsc maps are monotone on the
/// poset `a, b < c`.
fn element(i: usize) -> BoxedStrategy<Element> {
    match i {
        0 => z_element().boxed(),
        1 => value().prop_map(Element::Scalar).boxed(),
        2 => (value(), value(), value())
            .prop_map(|(a, b, c)| {
                let top = a.max(b).max(c);
                Element::Lsc(vec![a.min(top), b.min(top), top])
            })
            .boxed(),
        _ => (z_element(), z_element()).prop_map(|(x, y)| Element::Tuple(vec![x, y])).boxed(),
    }
}

fn triple() -> impl Strategy<Value = (usize, Element, Element, Element)> {
    (0usize..4).prop_flat_map(|i| (Just(i), element(i), element(i), element(i)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn monoid_and_order((i, x, y, z) in triple()) {
        let s = &instances()[i];
        let add = |a: &Element, b: &Element| s.add(a, b).unwrap();
        let le = |a: &Element, b: &Element| s.leq(a, b).unwrap();
        prop_assert_eq!(add(&x, &y), add(&y, &x));
        prop_assert_eq!(add(&add(&x, &y), &z), add(&x, &add(&y, &z)));
        prop_assert_eq!(add(&x, &s.zero()), x.clone());
        prop_assert!(le(&s.zero(), &x));
        prop_assert!(le(&x, &x));
        if le(&x, &y) && le(&y, &x) {
            prop_assert_eq!(&x, &y);
        }
        if le(&x, &y) && le(&y, &z) {
            prop_assert!(le(&x, &z));
        }
        if le(&x, &y) {
            prop_assert!(le(&add(&x, &z), &add(&y, &z)));
        }
    }

    #[test]
    fn way_below((i, x, y, z) in triple()) {
        let s = &instances()[i];
        let wb = |a: &Element, b: &Element| s.way_below(a, b).unwrap();
        let le = |a: &Element, b: &Element| s.leq(a, b).unwrap();
        prop_assert!(wb(&s.zero(), &x));
        if wb(&x, &y) {
            prop_assert!(le(&x, &y));
            if le(&y, &z) {
                prop_assert!(wb(&x, &z));
            }
        }
        if le(&x, &y) && wb(&y, &z) {
            prop_assert!(wb(&x, &z));
        }
        if wb(&x, &y) && wb(&z, &z) {
            prop_assert!(wb(&s.add(&x, &z).unwrap(), &s.add(&y, &z).unwrap()));
        }
    }

    #[test]
    fn sigma_is_a_superadditive_retraction((i, x, y, _z) in triple()) {
        let s = &instances()[i];
        let le = |a: &Element, b: &Element| s.leq(a, b).unwrap();
        let (sx, sy) = (sigma(s, &x).unwrap(), sigma(s, &y).unwrap());
        prop_assert!(is_strongly_soft(s, &sx).unwrap());
        prop_assert!(le(&sx, &x));
        prop_assert_eq!(sigma(s, &sx).unwrap(), sx.clone());
        if le(&x, &y) {
            prop_assert!(le(&sx, &sy));
        }
        let sum = s.add(&x, &y).unwrap();
        prop_assert!(le(&s.add(&sx, &sy).unwrap(), &sigma(s, &sum).unwrap()));
        prop_assert_eq!(s.times_infinity(&x).unwrap(), s.times_infinity(&sx).unwrap());
        if is_strongly_soft(s, &x).unwrap() {
            prop_assert_eq!(sx, x);
        }
    }

    #[test]
    fn sigma_keeps_the_rank((i, x, _y, _z) in triple()) {
        let s = &instances()[i];
        let family = functional_family(s, &SampleSpec::new(3, 3));
        prop_assert_eq!(rank(s, &sigma(s, &x).unwrap(), &family).unwrap(), rank(s, &x, &family).unwrap());
    }
}
