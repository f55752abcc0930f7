//! A workbench for abstract Cuntz semigroups.
//!
//! Concrete instances are enumerated on finite value grids; regularity
//! properties are searched over the resulting tuples, and invariants such as
//! dimension and radius of comparison are bracketed from the same grids.

pub mod chain;
pub mod cli;
pub mod dsl;
pub mod element;
pub mod error;
pub mod functionals;
pub mod instances;
pub mod invariants;
pub mod json;
pub mod laws;
pub mod regularity;
pub mod report;
pub mod search;
pub mod sample;
pub mod semigroup;
pub mod soft;
pub mod suite;
pub mod value;

pub use chain::{AscendingChain, Tail};
pub use element::{Element, ElementTag, ZElement};
pub use error::{CuError, Result};
pub use report::{Binding, Report, SearchMode, Verdict};
pub use sample::{SampleSpec, ValueGrid};
pub use semigroup::{Capabilities, Kind, Semigroup};
pub use value::{ExtValue, Rational};
