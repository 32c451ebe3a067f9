//! Pass/fail reports shared by the verification suites.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub schema: String,
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, schema: &str, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { schema: schema.into(), label: label.into(), passed, detail: detail.into() });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// (passed, total) per schema.
    pub fn tally(&self) -> BTreeMap<String, (usize, usize)> {
        let mut out: BTreeMap<String, (usize, usize)> = BTreeMap::new();
        for c in &self.checks {
            let e = out.entry(c.schema.clone()).or_default();
            e.1 += 1;
            if c.passed {
                e.0 += 1;
            }
        }
        out
    }

    pub fn count(&self, schema: &str) -> usize {
        self.checks.iter().filter(|c| c.schema == schema).count()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.title);
        for (schema, (ok, total)) in self.tally() {
            s.push_str(&format!("  {schema}: {ok}/{total}\n"));
        }
        for c in self.failures() {
            s.push_str(&format!("  FAIL {} {}: {}\n", c.schema, c.label, c.detail));
        }
        s.push_str(if self.all_passed() { "result: pass\n" } else { "result: FAIL\n" });
        s
    }
}
