use crate::value::ExtValue;

use super::{BaseKind, DslError, ElementLit, Item, SemigroupDef, Spanned, SpecFile};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u64),
    Punct(char),
}

impl Tok {
    fn text(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Num(n) => format!("`{n}`"),
            Tok::Punct(c) => format!("`{c}`"),
        }
    }
}

const PUNCT: &str = "={};:<(),/";

fn lex(line: usize, text: &str) -> Result<Vec<(usize, Tok)>, DslError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || "_-'".contains(chars[i])) {
                i += 1;
            }
            out.push((col, Tok::Ident(chars[start..i].iter().collect())));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n = digits.parse().map_err(|_| DslError::Parse {
                line,
                col,
                expected: vec!["a number below 2^63".into()],
                found: format!("`{digits}`"),
            })?;
            if n > i64::MAX as u64 {
                return Err(DslError::Parse {
                    line,
                    col,
                    expected: vec!["a number below 2^63".into()],
                    found: format!("`{digits}`"),
                });
            }
            out.push((col, Tok::Num(n)));
        } else if c == '∞' {
            out.push((col, Tok::Ident("inf".into())));
            i += 1;
        } else if PUNCT.contains(c) {
            out.push((col, Tok::Punct(c)));
            i += 1;
        } else {
            return Err(DslError::Parse { line, col, expected: vec!["a token".into()], found: format!("`{c}`") });
        }
    }
    Ok(out)
}

/// Atoms and `(lower, upper)` relations of a poset literal.
type PosetParts = (Vec<String>, Vec<(String, String)>);

struct Parser {
    line: usize,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn new(line: usize, text: &str) -> Result<Self, DslError> {
        let toks = lex(line, text)?;
        let end_col = text.chars().count() + 1;
        Ok(Parser { line, toks, pos: 0, end_col })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn error(&self, expected: &[&str]) -> DslError {
        let (col, found) = match self.toks.get(self.pos) {
            Some((c, t)) => (*c, t.text()),
            None => (self.end_col, "end of line".to_string()),
        };
        DslError::Parse { line: self.line, col, expected: expected.iter().map(|s| s.to_string()).collect(), found }
    }

    fn at_punct(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Punct(c))
    }

    fn at_word(&self, w: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == w)
    }

    fn punct(&mut self, c: char) -> Result<(), DslError> {
        if self.at_punct(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&[&format!("`{c}`")]))
        }
    }

    fn word(&mut self, w: &str) -> Result<(), DslError> {
        if self.at_word(w) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&[&format!("`{w}`")]))
        }
    }

    /// One of `words`, returned as written.
    fn one_of(&mut self, words: &[&str]) -> Result<String, DslError> {
        match self.peek() {
            Some(Tok::Ident(s)) if words.contains(&s.as_str()) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => {
                let quoted: Vec<String> = words.iter().map(|w| format!("`{w}`")).collect();
                let refs: Vec<&str> = quoted.iter().map(String::as_str).collect();
                Err(self.error(&refs))
            }
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, DslError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error(&[what])),
        }
    }

    fn num(&mut self) -> Result<u64, DslError> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.error(&["a number"])),
        }
    }

    fn end(&self) -> Result<(), DslError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.error(&["end of line"]))
        }
    }

    /// `inf`, `n` or `p/q`.
    fn value(&mut self) -> Result<ExtValue, DslError> {
        if self.at_word("inf") {
            self.pos += 1;
            return Ok(ExtValue::Infinite);
        }
        if !matches!(self.peek(), Some(Tok::Num(_))) {
            return Err(self.error(&["a number", "`inf`"]));
        }
        let n = self.num()?;
        if self.at_punct('/') {
            self.pos += 1;
            let col = self.toks.get(self.pos).map_or(self.end_col, |(c, _)| *c);
            let d = self.num()?;
            if d == 0 {
                return Err(DslError::Validation { line: self.line, message: format!("column {col}: zero denominator") });
            }
            return Ok(ExtValue::ratio(n, d));
        }
        Ok(ExtValue::nat(n))
    }

    fn element(&mut self) -> Result<ElementLit, DslError> {
        if self.at_word("compact") {
            self.pos += 1;
            return Ok(ElementLit::Compact(self.num()?));
        }
        if self.at_word("soft") {
            self.pos += 1;
            return Ok(ElementLit::Soft(self.value()?));
        }
        if self.at_punct('{') {
            self.pos += 1;
            let mut entries = Vec::new();
            if !self.at_punct('}') {
                loop {
                    let atom = self.ident("an atom name")?;
                    self.punct(':')?;
                    entries.push((atom, self.value()?));
                    if self.at_punct(';') {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
            }
            if !self.at_punct('}') {
                return Err(self.error(&["`;`", "`}`"]));
            }
            self.pos += 1;
            return Ok(ElementLit::Map(entries));
        }
        if self.at_punct('(') {
            self.pos += 1;
            let mut parts = vec![self.element()?];
            while self.at_punct(',') {
                self.pos += 1;
                parts.push(self.element()?);
            }
            if !self.at_punct(')') {
                return Err(self.error(&["`,`", "`)`"]));
            }
            self.pos += 1;
            return Ok(ElementLit::Tuple(parts));
        }
        if matches!(self.peek(), Some(Tok::Num(_))) || self.at_word("inf") {
            return Ok(ElementLit::Value(self.value()?));
        }
        Err(self.error(&["`compact`", "`soft`", "a number", "`inf`", "`{`", "`(`"]))
    }

    fn poset(&mut self) -> Result<PosetParts, DslError> {
        self.punct('{')?;
        let mut atoms = Vec::new();
        while let Some(Tok::Ident(_)) = self.peek() {
            atoms.push(self.ident("an atom name")?);
        }
        let mut less = Vec::new();
        while self.at_punct(';') {
            self.pos += 1;
            let a = self.ident("an atom name")?;
            self.punct('<')?;
            let b = self.ident("an atom name")?;
            less.push((a, b));
        }
        if !self.at_punct('}') {
            return Err(self.error(&["an atom name", "`;`", "`}`"]));
        }
        self.pos += 1;
        Ok((atoms, less))
    }

    fn names_in_parens(&mut self) -> Result<Vec<String>, DslError> {
        self.punct('(')?;
        let mut names = vec![self.ident("a semigroup name")?];
        while self.at_punct(',') {
            self.pos += 1;
            names.push(self.ident("a semigroup name")?);
        }
        if !self.at_punct(')') {
            return Err(self.error(&["`,`", "`)`"]));
        }
        self.pos += 1;
        Ok(names)
    }

    fn semigroup_def(&mut self) -> Result<SemigroupDef, DslError> {
        let mut kinds: Vec<&str> = BaseKind::ALL.iter().map(|k| k.keyword()).collect();
        kinds.extend(["lsc-nat", "lsc-q", "sum", "fixed", "soft"]);
        let kind = self.one_of(&kinds)?;
        if let Some(b) = BaseKind::ALL.into_iter().find(|b| b.keyword() == kind) {
            return Ok(SemigroupDef::Base(b));
        }
        match kind.as_str() {
            "lsc-nat" | "lsc-q" => {
                self.word("poset")?;
                let (atoms, less) = self.poset()?;
                Ok(SemigroupDef::Lsc { rational: kind == "lsc-q", atoms, less })
            }
            "sum" => Ok(SemigroupDef::Sum(self.names_in_parens()?)),
            "fixed" => {
                self.punct('(')?;
                let ambient = self.ident("a semigroup name")?;
                self.punct(',')?;
                let action = self.ident("an action name")?;
                self.punct(')')?;
                Ok(SemigroupDef::Fixed { ambient, action })
            }
            _ => {
                self.punct('(')?;
                let ambient = self.ident("a semigroup name")?;
                self.punct(')')?;
                Ok(SemigroupDef::Soft(ambient))
            }
        }
    }

    fn generators(&mut self) -> Result<Vec<Vec<Vec<String>>>, DslError> {
        let mut gens = Vec::new();
        loop {
            self.word("perm")?;
            let mut cycles = Vec::new();
            loop {
                self.punct('(')?;
                let mut points = Vec::new();
                loop {
                    match self.peek() {
                        Some(Tok::Ident(s)) => points.push(s.clone()),
                        Some(Tok::Num(n)) => points.push(n.to_string()),
                        _ => break,
                    }
                    self.pos += 1;
                }
                if !self.at_punct(')') {
                    return Err(self.error(&["a point", "`)`"]));
                }
                self.pos += 1;
                cycles.push(points);
                if !self.at_punct('(') {
                    break;
                }
            }
            gens.push(cycles);
            if !self.at_word("perm") {
                return Ok(gens);
            }
        }
    }

    fn statement(&mut self) -> Result<Item, DslError> {
        let head = self.one_of(&["semigroup", "action", "element"])?;
        let name = self.ident("a name")?;
        let item = match head.as_str() {
            "semigroup" => {
                self.punct('=')?;
                Item::Semigroup { name, def: self.semigroup_def()? }
            }
            "action" => {
                self.word("on")?;
                let on = self.ident("a semigroup name")?;
                self.punct('=')?;
                Item::Action { name, on, generators: self.generators()? }
            }
            _ => {
                self.word("in")?;
                let instance = self.ident("a semigroup name")?;
                self.punct('=')?;
                Item::Element { name, instance, value: self.element()? }
            }
        };
        self.end()?;
        Ok(item)
    }
}

/// Parses a spec file without resolving names.
pub fn parse_spec(text: &str) -> Result<SpecFile, DslError> {
    let mut items = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut p = Parser::new(line, raw)?;
        if p.toks.is_empty() {
            continue;
        }
        items.push(Spanned { line, item: p.statement()? });
    }
    Ok(SpecFile { items })
}

/// Parses a single element literal, as given on the command line.
pub fn parse_element_literal(text: &str) -> Result<ElementLit, DslError> {
    let mut p = Parser::new(1, text)?;
    let lit = p.element()?;
    p.end()?;
    Ok(lit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_instance() {
        let spec = parse_spec("semigroup Z = jiang-su").unwrap();
        assert_eq!(spec.items.len(), 1);
        assert_eq!(
            spec.items[0].item,
            Item::Semigroup { name: "Z".into(), def: SemigroupDef::Base(BaseKind::JiangSu) }
        );
    }

    #[test]
    fn poset_with_relations() {
        let spec = parse_spec("semigroup L = lsc-q poset { a b c ; a<c ; b<c }  # comment").unwrap();
        let Item::Semigroup { def: SemigroupDef::Lsc { rational, atoms, less }, .. } = &spec.items[0].item else {
            panic!("not an Lsc definition");
        };
        assert!(rational);
        assert_eq!(atoms, &["a", "b", "c"]);
        assert_eq!(less.len(), 2);
    }

    #[test]
    fn element_forms() {
        assert_eq!(parse_element_literal("soft 5/2").unwrap(), ElementLit::Soft(ExtValue::ratio(5, 2)));
        assert_eq!(parse_element_literal("inf").unwrap(), ElementLit::Value(ExtValue::Infinite));
        assert_eq!(
            parse_element_literal("(compact 1, { a:1 ; b:inf })").unwrap(),
            ElementLit::Tuple(vec![
                ElementLit::Compact(1),
                ElementLit::Map(vec![("a".into(), ExtValue::nat(1)), ("b".into(), ExtValue::Infinite)]),
            ])
        );
    }

    #[test]
    fn errors_carry_position_and_expectations() {
        let err = parse_spec("\nsemigroup Z = jiang").unwrap_err();
        let DslError::Parse { line, col, expected, found } = err else { panic!("not a parse error") };
        assert_eq!((line, col), (2, 15));
        assert!(expected.contains(&"`jiang-su`".to_string()));
        assert_eq!(found, "`jiang`");
        let err = parse_spec("element e in Z = compact").unwrap_err();
        assert!(matches!(err, DslError::Parse { col: 25, .. }), "{err:?}");
    }
}
