//! Pass/fail reports shared by the verifiers.

use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub relation: String,
    pub object: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, relation: impl Into<String>, object: impl Into<String>, pass: bool, witness: Option<String>) {
        self.checks.push(Check {
            relation: relation.into(),
            object: object.into(),
            pass,
            witness,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.checks
                .iter()
                .map(|c| {
                    json!({
                        "relation": c.relation,
                        "object": c.object,
                        "status": if c.pass { "pass" } else { "fail" },
                        "witness": c.witness,
                    })
                })
                .collect(),
        )
    }
}
