//! The JSON form of a [`Report`], as emitted by the `cu` binary.

use serde::{Deserialize, Serialize};

use crate::report::{Report, SearchMode, Verdict};
use crate::sample::SampleSpec;
use crate::semigroup::Semigroup;

pub const SCHEMA_VERSION: &str = "1";

/// The published schema, bundled for validation.
pub const SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonBinding {
    pub variable: String,
    /// An element literal of the instance, in spec-file syntax.
    pub element: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct JsonReport {
    pub schema_version: String,
    pub instance: String,
    pub check: String,
    pub verdict: Verdict,
    pub counterexample: Option<Vec<JsonBinding>>,
    pub sample: SampleSpec,
    pub elapsed_ms: u64,
    pub mode: SearchMode,
    pub searched: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl JsonReport {
    pub fn new(s: &Semigroup, instance: &str, r: &Report, elapsed_ms: u64) -> Self {
        JsonReport {
            schema_version: SCHEMA_VERSION.into(),
            instance: instance.into(),
            check: r.property.clone(),
            verdict: r.verdict,
            counterexample: r.counterexample.as_ref().map(|bs| {
                bs.iter()
                    .map(|b| JsonBinding { variable: b.variable.clone(), element: s.literal(&b.element) })
                    .collect()
            }),
            sample: r.sample,
            elapsed_ms,
            mode: r.mode,
            searched: r.searched,
            note: r.note.clone(),
        }
    }
}

/// The exit status for a set of verdicts: 0 when all pass, 4 on any fail,
/// otherwise 5 on any inconclusive verdict.
pub fn exit_code<'a>(verdicts: impl IntoIterator<Item = &'a Verdict>) -> i32 {
    let mut code = 0;
    for v in verdicts {
        match v {
            Verdict::Fail => return 4,
            Verdict::Inconclusive => code = 5,
            Verdict::Pass => {}
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Element;
    use crate::report::bindings;

    #[test]
    fn field_names_follow_the_schema() {
        let z = Semigroup::jiang_su().named("Z");
        let r = Report::fail("o5", SampleSpec::default(), SearchMode::Exhaustive, 3, bindings(&[("x", &Element::compact(1))]));
        let v = serde_json::to_value(JsonReport::new(&z, "Z", &r, 7)).unwrap();
        assert_eq!(v["schemaVersion"], "1");
        assert_eq!(v["verdict"], "fail");
        assert_eq!(v["counterexample"][0]["element"], "compact 1");
        assert_eq!(v["sample"]["valueCap"], 4);
        assert_eq!(v["elapsedMs"], 7);
        assert!(v.get("note").is_none());
    }

    #[test]
    fn fail_outranks_inconclusive() {
        assert_eq!(exit_code(&[Verdict::Pass, Verdict::Inconclusive, Verdict::Fail]), 4);
        assert_eq!(exit_code(&[Verdict::Inconclusive, Verdict::Pass]), 5);
        assert_eq!(exit_code(&[]), 0);
    }
}
