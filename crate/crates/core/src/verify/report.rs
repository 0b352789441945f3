use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One mismatch inside a [`CheckReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailureEntry {
    pub input: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of a named verification check. Serializes to
/// `{check_name, params, passes, failures: [{input, expected, got}]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_name: String,
    pub params: Value,
    pub passes: bool,
    pub failures: Vec<FailureEntry>,
}

impl CheckReport {
    pub fn new(check_name: impl Into<String>, params: Value) -> Self {
        CheckReport { check_name: check_name.into(), params, passes: true, failures: Vec::new() }
    }

    pub fn fail(&mut self, input: impl Into<String>, expected: impl Into<String>, got: impl Into<String>) {
        self.passes = false;
        self.failures.push(FailureEntry { input: input.into(), expected: expected.into(), got: got.into() });
    }

    /// Record a failure unless `ok`.
    pub fn expect(&mut self, ok: bool, input: impl Into<String>, expected: impl Into<String>, got: impl Into<String>) {
        if !ok {
            self.fail(input, expected, got);
        }
    }

    /// One human-readable status line.
    pub fn summary_line(&self) -> String {
        if self.passes {
            format!("PASS  {} {}", self.check_name, self.params)
        } else {
            format!("FAIL  {} {} ({} failures)", self.check_name, self.params, self.failures.len())
        }
    }
}
