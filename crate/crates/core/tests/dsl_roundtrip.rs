//! The spec grammar: golden files reparse to identical structures after
//! printing, and element literals survive print/parse/lower.

use std::fs;
use std::path::Path;

use cu_workbench::dsl::{load, lower_element, parse_element_literal, parse_spec, print_element_literal, print_spec, ElementLit};
use cu_workbench::instances::Poset;
use cu_workbench::{ExtValue, SampleSpec, Semigroup};
use proptest::prelude::*;

fn golden() -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("specs");
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "spec"))
        .collect();
    files.sort();
    files.into_iter().map(|p| (p.display().to_string(), fs::read_to_string(&p).unwrap())).collect()
}

#[test]
fn golden_specs_round_trip() {
    let files = golden();
    assert!(files.len() >= 3);
    for (name, text) in files {
        let spec = parse_spec(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let printed = print_spec(&spec);
        assert_eq!(parse_spec(&printed).unwrap(), spec, "{name}");
        assert_eq!(print_spec(&parse_spec(&printed).unwrap()), printed, "{name}");
        load(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn whitespace_inside_lines_is_insignificant() {
    let a = parse_spec("semigroup L=lsc-nat poset{a b;a<b}\nelement f in L={a:1;b:inf}").unwrap();
    let b = parse_spec("  semigroup   L =  lsc-nat  poset {  a  b ;  a < b }  \n element f in L = { a : 1 ; b : inf }").unwrap();
    assert_eq!(a, b);
}

#[test]
fn named_elements_lower_to_the_expected_values() {
    let text = fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("specs/sums.spec")).unwrap();
    let cat = load(&text).unwrap();
    let mixed = cat.element("mixed").unwrap();
    let s = cat.instance("ZQN").unwrap();
    assert_eq!(s.literal(&mixed.element), "(compact 2, 5/2, inf)");
    assert!(cat.instance("F").unwrap().contains(&cat.element("diag").unwrap().element));
}

fn value() -> impl Strategy<Value = ExtValue> {
    prop_oneof![
        1 => Just(ExtValue::Infinite),
        6 => (0u64..40, 1u64..9).prop_map(|(n, d)| ExtValue::ratio(n, d)),
    ]
}

fn literal() -> impl Strategy<Value = ElementLit> {
    let leaf = prop_oneof![
        (0u64..20).prop_map(ElementLit::Compact),
        value().prop_map(ElementLit::Soft),
        value().prop_map(ElementLit::Value),
        proptest::collection::vec(value(), 0..4).prop_map(|vs| {
            ElementLit::Map(vs.into_iter().enumerate().map(|(i, v)| (format!("p{i}"), v)).collect())
        }),
    ];
    leaf.prop_recursive(2, 8, 3, |inner| proptest::collection::vec(inner, 1..4).prop_map(ElementLit::Tuple))
}

proptest! {
    #[test]
    fn literals_print_and_reparse(lit in literal()) {
        let text = print_element_literal(&lit);
        prop_assert_eq!(parse_element_literal(&text).unwrap(), lit);
    }

    #[test]
    fn instance_literals_lower_back(i in 0usize..64) {
        let v = Poset::new(vec!["a".into(), "b".into(), "c".into()], &[(0, 2), (1, 2)]).unwrap();
        let s = Semigroup::sum(vec![Semigroup::jiang_su(), Semigroup::lsc_q(v)]).unwrap();
        let grid = s.enumerate(&SampleSpec::new(2, 2)).unwrap();
        let x = &grid[i * grid.len() / 64];
        let back = lower_element(&s, &parse_element_literal(&s.literal(x)).unwrap(), 1).unwrap();
        prop_assert_eq!(&back, x);
    }
}
