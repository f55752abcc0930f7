use crate::element::Element;
use crate::error::CuError;
use crate::instances::{GroupAction, Poset};
use crate::semigroup::{Kind, Semigroup};
use crate::value::ExtValue;

use super::{BaseKind, DslError, ElementLit, Item, SemigroupDef, SpecFile};

#[derive(Clone, Debug)]
pub struct NamedElement {
    pub name: String,
    pub instance: String,
    pub element: Element,
}

/// A resolved spec file: instances, actions and elements in file order.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    instances: Vec<(String, Semigroup)>,
    actions: Vec<(String, String, GroupAction)>,
    elements: Vec<NamedElement>,
}

fn resolve_err(line: usize, message: String) -> DslError {
    DslError::Resolve { line, message }
}

fn invalid(line: usize, message: impl Into<String>) -> DslError {
    DslError::Validation { line, message: message.into() }
}

impl Catalog {
    pub fn resolve(spec: &SpecFile) -> Result<Catalog, DslError> {
        let mut cat = Catalog::default();
        for s in &spec.items {
            let line = s.line;
            match &s.item {
                Item::Semigroup { name, def } => {
                    cat.fresh(line, name)?;
                    let sg = cat.build(line, def)?.named(name.clone());
                    cat.instances.push((name.clone(), sg));
                }
                Item::Action { name, on, generators } => {
                    cat.fresh(line, name)?;
                    let target = cat.lookup(line, on)?;
                    let action = build_action(line, target, generators)?;
                    cat.actions.push((name.clone(), on.clone(), action));
                }
                Item::Element { name, instance, value } => {
                    cat.fresh(line, name)?;
                    let s = cat.lookup(line, instance)?;
                    let element = lower_element(s, value, line)?;
                    cat.elements.push(NamedElement { name: name.clone(), instance: instance.clone(), element });
                }
            }
        }
        Ok(cat)
    }

    fn fresh(&self, line: usize, name: &str) -> Result<(), DslError> {
        let taken = self.instances.iter().any(|(n, _)| n == name)
            || self.actions.iter().any(|(n, _, _)| n == name)
            || self.elements.iter().any(|e| e.name == name);
        if taken {
            Err(resolve_err(line, format!("`{name}` is already defined")))
        } else {
            Ok(())
        }
    }

    fn lookup(&self, line: usize, name: &str) -> Result<&Semigroup, DslError> {
        self.instance(name).ok_or_else(|| resolve_err(line, format!("no semigroup named `{name}` defined above")))
    }

    fn build(&self, line: usize, def: &SemigroupDef) -> Result<Semigroup, DslError> {
        let wrap = |e: CuError| match e {
            CuError::CapabilityMissing { .. } => DslError::Capability { line, message: e.to_string() },
            _ => invalid(line, e.to_string()),
        };
        Ok(match def {
            SemigroupDef::Base(BaseKind::ExtNat) => Semigroup::ext_nat(),
            SemigroupDef::Base(BaseKind::ExtQ) => Semigroup::ext_q(),
            SemigroupDef::Base(BaseKind::TwoPoint) => Semigroup::two_point(),
            SemigroupDef::Base(BaseKind::JiangSu) => Semigroup::jiang_su(),
            SemigroupDef::Lsc { rational, atoms, less } => {
                let index = |a: &str| {
                    atoms
                        .iter()
                        .position(|x| x == a)
                        .ok_or_else(|| resolve_err(line, format!("relation mentions unknown atom `{a}`")))
                };
                let pairs = less
                    .iter()
                    .map(|(a, b)| Ok((index(a)?, index(b)?)))
                    .collect::<Result<Vec<_>, DslError>>()?;
                let poset = Poset::new(atoms.clone(), &pairs).map_err(|m| invalid(line, m))?;
                if *rational {
                    Semigroup::lsc_q(poset)
                } else {
                    Semigroup::lsc_nat(poset)
                }
            }
            SemigroupDef::Sum(names) => {
                let parts = names.iter().map(|n| self.lookup(line, n).cloned()).collect::<Result<Vec<_>, _>>()?;
                Semigroup::sum(parts).map_err(wrap)?
            }
            SemigroupDef::Fixed { ambient, action } => {
                let a = self
                    .actions
                    .iter()
                    .find(|(n, _, _)| n == action)
                    .ok_or_else(|| resolve_err(line, format!("no action named `{action}` defined above")))?;
                if a.1 != *ambient {
                    return Err(invalid(line, format!("action `{action}` acts on `{}`, not on `{ambient}`", a.1)));
                }
                Semigroup::fixed(self.lookup(line, ambient)?.clone(), a.2.clone()).map_err(wrap)?
            }
            SemigroupDef::Soft(ambient) => Semigroup::soft_part(self.lookup(line, ambient)?.clone()).map_err(wrap)?,
        })
    }

    pub fn instance(&self, name: &str) -> Option<&Semigroup> {
        self.instances.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn instances(&self) -> impl Iterator<Item = (&str, &Semigroup)> {
        self.instances.iter().map(|(n, s)| (n.as_str(), s))
    }

    pub fn action(&self, name: &str) -> Option<&GroupAction> {
        self.actions.iter().find(|(n, _, _)| n == name).map(|(_, _, a)| a)
    }

    pub fn element(&self, name: &str) -> Option<&NamedElement> {
        self.elements.iter().find(|e| e.name == name)
    }

    pub fn elements(&self) -> &[NamedElement] {
        &self.elements
    }
}

/// Maps an atom or summand name to its 0-based index.
type PointLookup<'a> = Box<dyn Fn(&str) -> Option<usize> + 'a>;

fn build_action(line: usize, target: &Semigroup, generators: &[Vec<Vec<String>>]) -> Result<GroupAction, DslError> {
    let (degree, point): (usize, PointLookup) = match target.kind() {
        Kind::LscNat(p) | Kind::LscQ(p) => (p.len(), Box::new(|a: &str| p.index_of(a))),
        Kind::Sum(cs) => {
            let n = cs.len();
            (n, Box::new(move |a: &str| a.parse::<usize>().ok().filter(|&i| 1 <= i && i <= n).map(|i| i - 1)))
        }
        _ => {
            return Err(invalid(line, format!("`{}` has neither poset atoms nor summands to permute", target.name())))
        }
    };
    let mut perms = Vec::new();
    for cycles in generators {
        let idx = cycles
            .iter()
            .map(|c| {
                c.iter()
                    .map(|a| point(a).ok_or_else(|| resolve_err(line, format!("`{a}` is not a point of `{}`", target.name()))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let perm = GroupAction::from_cycles(degree, &idx).map_err(|m| invalid(line, m))?;
        if let Some(p) = target.poset() {
            if !p.is_automorphism(&perm) {
                return Err(invalid(line, "permutation is not an automorphism of the poset"));
            }
        }
        perms.push(perm);
    }
    GroupAction::new(degree, perms).map_err(|m| invalid(line, m))
}

/// Interprets a literal in `s`. Plain numbers are compact elements of `Z`
/// and constant maps on Lsc instances.
pub fn lower_element(s: &Semigroup, lit: &ElementLit, line: usize) -> Result<Element, DslError> {
    let x = lower_unchecked(s, lit, line)?;
    s.validate(&x).map_err(|e| invalid(line, e.to_string()))?;
    Ok(x)
}

fn lower_unchecked(s: &Semigroup, lit: &ElementLit, line: usize) -> Result<Element, DslError> {
    let mismatch = || invalid(line, format!("`{}` is not a literal of a {} element", super::print_element_literal(lit), s.name()));
    match (s.kind(), lit) {
        (Kind::Fixed { ambient, .. } | Kind::SoftPart(ambient), _) => lower_unchecked(ambient, lit, line),
        (Kind::ExtNat | Kind::ExtQ | Kind::TwoPoint, ElementLit::Value(v)) => Ok(Element::Scalar(*v)),
        (Kind::JiangSu, ElementLit::Compact(n)) => Ok(Element::compact(*n)),
        (Kind::JiangSu, ElementLit::Soft(q)) => Ok(Element::soft(*q)),
        (Kind::JiangSu, ElementLit::Value(v)) => match v.finite() {
            Some(r) if r.is_integer() => Ok(Element::compact(r.to_integer() as u64)),
            Some(_) => Err(invalid(line, format!("write `soft {v}` for a non-integral element of Z"))),
            None => Ok(Element::soft(ExtValue::Infinite)),
        },
        (Kind::LscNat(p) | Kind::LscQ(p), ElementLit::Value(v)) => Ok(Element::Lsc(vec![*v; p.len()])),
        (Kind::LscNat(p) | Kind::LscQ(p), ElementLit::Map(entries)) => {
            let mut vs: Vec<Option<ExtValue>> = vec![None; p.len()];
            for (a, v) in entries {
                let i = p.index_of(a).ok_or_else(|| resolve_err(line, format!("`{a}` is not an atom of `{}`", s.name())))?;
                if vs[i].replace(*v).is_some() {
                    return Err(invalid(line, format!("atom `{a}` given twice")));
                }
            }
            let vs = vs
                .into_iter()
                .zip(p.atoms())
                .map(|(v, a)| v.ok_or_else(|| invalid(line, format!("no value for atom `{a}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Element::Lsc(vs))
        }
        (Kind::Sum(cs), ElementLit::Tuple(parts)) => {
            if parts.len() != cs.len() {
                return Err(invalid(line, format!("expected {} components, got {}", cs.len(), parts.len())));
            }
            let xs = cs.iter().zip(parts).map(|(c, p)| lower_unchecked(c, p, line)).collect::<Result<Vec<_>, _>>()?;
            Ok(Element::Tuple(xs))
        }
        _ => Err(mismatch()),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{load, parse_element_literal};
    use super::*;

    const L: &str = "semigroup L = lsc-nat poset { a b ; a<b }\n";

    #[test]
    fn monotone_map_is_accepted() {
        let cat = load(&format!("{L}element f in L = {{ a:1 ; b:inf }}")).unwrap();
        assert_eq!(cat.element("f").unwrap().element, Element::Lsc(vec![ExtValue::nat(1), ExtValue::Infinite]));
    }

    #[test]
    fn decreasing_map_is_rejected() {
        let err = load(&format!("{L}element f in L = {{ a:inf ; b:1 }}")).unwrap_err();
        assert!(matches!(err, DslError::Validation { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn dangling_names_are_resolve_errors() {
        let err = load("semigroup S = sum(Z, Z)").unwrap_err();
        assert!(matches!(err, DslError::Resolve { line: 1, .. }), "{err:?}");
    }

    #[test]
    fn soft_part_needs_divisibility() {
        let err = load("semigroup N = ext-nat\nsemigroup S = soft(N)").unwrap_err();
        assert!(matches!(err, DslError::Capability { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn swap_on_a_chain_is_rejected() {
        let err = load(&format!("{L}action r on L = perm(a b)")).unwrap_err();
        assert!(matches!(err, DslError::Validation { .. }), "{err:?}");
    }

    #[test]
    fn summand_swap_and_fixed_points() {
        let cat = load(
            "semigroup Z = jiang-su\nsemigroup S = sum(Z, Z)\naction w on S = perm(1 2)\nsemigroup F = fixed(S, w)\n",
        )
        .unwrap();
        let f = cat.instance("F").unwrap();
        assert_eq!(f.name(), "F");
        let x = lower_element(f, &parse_element_literal("(soft 1, soft 1)").unwrap(), 1).unwrap();
        assert!(f.contains(&x));
        assert!(lower_element(f, &parse_element_literal("(soft 1, compact 1)").unwrap(), 1).is_err());
    }

    #[test]
    fn literals_round_trip_through_the_instance() {
        let cat = load("semigroup Z = jiang-su\nsemigroup S = sum(Z, Z)").unwrap();
        let s = cat.instance("S").unwrap();
        for x in s.enumerate(&crate::sample::SampleSpec::new(2, 2)).unwrap() {
            let back = lower_element(s, &parse_element_literal(&s.literal(&x)).unwrap(), 1).unwrap();
            assert_eq!(back, x);
        }
    }
}
