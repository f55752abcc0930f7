use serde::{Deserialize, Serialize};

use crate::element::Element;
use crate::sample::SampleSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// How the universally quantified variables were covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Every premise-satisfying grid tuple was evaluated; a pass is a proof
    /// over the grid.
    Exhaustive,
    /// Seeded sampling; a pass is evidence only.
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binding {
    pub variable: String,
    pub element: Element,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub property: String,
    pub verdict: Verdict,
    pub counterexample: Option<Vec<Binding>>,
    /// Number of premise-satisfying tuples evaluated.
    pub searched: u64,
    pub mode: SearchMode,
    pub sample: SampleSpec,
    pub note: Option<String>,
}

impl Report {
    pub fn pass(property: impl Into<String>, sample: SampleSpec, mode: SearchMode, searched: u64) -> Self {
        Report {
            property: property.into(),
            verdict: Verdict::Pass,
            counterexample: None,
            searched,
            mode,
            sample,
            note: None,
        }
    }

    pub fn fail(
        property: impl Into<String>,
        sample: SampleSpec,
        mode: SearchMode,
        searched: u64,
        counterexample: Vec<Binding>,
    ) -> Self {
        Report {
            verdict: Verdict::Fail,
            counterexample: Some(counterexample),
            ..Report::pass(property, sample, mode, searched)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        self.note = Some(match self.note.take() {
            Some(old) => format!("{old}; {note}"),
            None => note,
        });
        self
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    /// The counterexample elements in variable order.
    pub fn witness(&self) -> Vec<Element> {
        self.counterexample
            .iter()
            .flatten()
            .map(|b| b.element.clone())
            .collect()
    }
}

/// Shorthand for building counterexamples.
pub fn bindings(pairs: &[(&str, &Element)]) -> Vec<Binding> {
    pairs
        .iter()
        .map(|(v, e)| Binding { variable: v.to_string(), element: (*e).clone() })
        .collect()
}
