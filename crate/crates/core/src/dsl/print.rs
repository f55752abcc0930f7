use super::{ElementLit, Item, SemigroupDef, SpecFile};

pub fn print_element_literal(lit: &ElementLit) -> String {
    match lit {
        ElementLit::Compact(n) => format!("compact {n}"),
        ElementLit::Soft(v) => format!("soft {v}"),
        ElementLit::Value(v) => v.to_string(),
        ElementLit::Map(entries) if entries.is_empty() => "{ }".into(),
        ElementLit::Map(entries) => {
            let parts: Vec<String> = entries.iter().map(|(a, v)| format!("{a}:{v}")).collect();
            format!("{{ {} }}", parts.join(" ; "))
        }
        ElementLit::Tuple(parts) => {
            let parts: Vec<String> = parts.iter().map(print_element_literal).collect();
            format!("({})", parts.join(", "))
        }
    }
}

fn print_def(def: &SemigroupDef) -> String {
    match def {
        SemigroupDef::Base(b) => b.keyword().to_string(),
        SemigroupDef::Lsc { rational, atoms, less } => {
            let mut inner = atoms.join(" ");
            for (a, b) in less {
                inner.push_str(&format!(" ; {a}<{b}"));
            }
            let kind = if *rational { "lsc-q" } else { "lsc-nat" };
            if inner.is_empty() {
                format!("{kind} poset {{ }}")
            } else {
                format!("{kind} poset {{ {inner} }}")
            }
        }
        SemigroupDef::Sum(names) => format!("sum({})", names.join(", ")),
        SemigroupDef::Fixed { ambient, action } => format!("fixed({ambient}, {action})"),
        SemigroupDef::Soft(a) => format!("soft({a})"),
    }
}

fn print_item(item: &Item) -> String {
    match item {
        Item::Semigroup { name, def } => format!("semigroup {name} = {}", print_def(def)),
        Item::Action { name, on, generators } => {
            let gens: Vec<String> = generators
                .iter()
                .map(|cycles| {
                    let cs: String = cycles.iter().map(|c| format!("({})", c.join(" "))).collect();
                    format!("perm{cs}")
                })
                .collect();
            format!("action {name} on {on} = {}", gens.join(" "))
        }
        Item::Element { name, instance, value } => {
            format!("element {name} in {instance} = {}", print_element_literal(value))
        }
    }
}

/// Canonical text: one item per line, comments dropped.
pub fn print_spec(spec: &SpecFile) -> String {
    spec.items.iter().map(|s| print_item(&s.item) + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::super::parse_spec;
    use super::*;

    #[test]
    fn printed_spec_reparses_to_the_same_items() {
        let text = "semigroup L = lsc-nat poset {a b c; a<c; b<c}\n\
                    semigroup E = lsc-q poset {}\n\
                    action r on L = perm(a b)(c) perm(a)\n\
                    element e in L = {a:1;b:1;c:inf}\n";
        let spec = parse_spec(text).unwrap();
        let printed = print_spec(&spec);
        assert!(printed.contains("lsc-nat poset { a b c ; a<c ; b<c }"), "{printed}");
        assert_eq!(parse_spec(&printed).unwrap(), spec);
    }
}
