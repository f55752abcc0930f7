//! The spec-file language: a line-oriented description of instances, group
//! actions and named elements.
//!
//! ```text
//! semigroup Z = jiang-su
//! semigroup L = lsc-nat poset { a b c ; a<c ; b<c }
//! semigroup S = sum(Z, Z)
//! action swap on S = perm(1 2)
//! semigroup F = fixed(S, swap)
//! semigroup Zs = soft(Z)
//! element e in S = (compact 1, soft 5/2)
//! ```
//!
//! `#` starts a comment. Action points are atom names for Lsc instances and
//! 1-based summand positions for sums.

mod lower;
mod parse;
mod print;

use thiserror::Error;

use crate::value::ExtValue;

pub use lower::{lower_element, Catalog, NamedElement};
pub use parse::{parse_element_literal, parse_spec};
pub use print::{print_element_literal, print_spec};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("line {line}, column {col}: expected {}, found {found}", expected.join(" or "))]
    Parse { line: usize, col: usize, expected: Vec<String>, found: String },
    #[error("line {line}: {message}")]
    Resolve { line: usize, message: String },
    #[error("line {line}: {message}")]
    Validation { line: usize, message: String },
    /// A constructor whose argument lacks a required capability.
    #[error("line {line}: {message}")]
    Capability { line: usize, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseKind {
    ExtNat,
    ExtQ,
    TwoPoint,
    JiangSu,
}

impl BaseKind {
    pub const ALL: [BaseKind; 4] = [BaseKind::ExtNat, BaseKind::ExtQ, BaseKind::TwoPoint, BaseKind::JiangSu];

    pub fn keyword(self) -> &'static str {
        match self {
            BaseKind::ExtNat => "ext-nat",
            BaseKind::ExtQ => "ext-q",
            BaseKind::TwoPoint => "two-point",
            BaseKind::JiangSu => "jiang-su",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemigroupDef {
    Base(BaseKind),
    /// `lsc-nat` (`rational = false`) or `lsc-q` over a poset given by atoms
    /// and strict relations.
    Lsc { rational: bool, atoms: Vec<String>, less: Vec<(String, String)> },
    Sum(Vec<String>),
    Fixed { ambient: String, action: String },
    Soft(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementLit {
    Compact(u64),
    Soft(ExtValue),
    Value(ExtValue),
    Map(Vec<(String, ExtValue)>),
    Tuple(Vec<ElementLit>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Semigroup { name: String, def: SemigroupDef },
    /// Each generator is a list of cycles; points are kept as written.
    Action { name: String, on: String, generators: Vec<Vec<Vec<String>>> },
    Element { name: String, instance: String, value: ElementLit },
}

/// An item with the line it came from. Lines are not part of the structure:
/// two specs are equal when their items are.
#[derive(Clone, Debug)]
pub struct Spanned {
    pub line: usize,
    pub item: Item,
}

impl PartialEq for Spanned {
    fn eq(&self, other: &Self) -> bool {
        self.item == other.item
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SpecFile {
    pub items: Vec<Spanned>,
}

/// Parses and resolves a spec file.
pub fn load(text: &str) -> Result<Catalog, DslError> {
    Catalog::resolve(&parse_spec(text)?)
}
