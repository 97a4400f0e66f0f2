//! Named checks. Each returns a [`CheckReport`] carrying a verdict, the
//! parameters it ran with, and witnesses: counterexamples on failure and
//! summary numbers on success.

mod checks;

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

pub use checks::{
    verify_disjoint_vertices, verify_excluded_cases, verify_expansion_formula,
    verify_filtration_and_locals, verify_flag, verify_heavy_light, verify_main_theorem,
    verify_realize_product, verify_reconstruction, verify_structure, verify_wreath_example,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Value,
    pub verdict: Verdict,
    pub witnesses: Value,
    pub duration_ms: u128,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Summary value recorded under `key`.
    pub fn summary(&self, key: &str) -> Option<&Value> {
        self.witnesses.get("summary")?.get(key)
    }

    pub fn failures(&self) -> &[Value] {
        self.witnesses
            .get("failures")
            .and_then(Value::as_array)
            .map_or(&[], Vec::as_slice)
    }
}

/// Collects failures for one check run.
pub(crate) struct Recorder {
    check: &'static str,
    params: Value,
    start: Instant,
    failures: Vec<Value>,
    summary: serde_json::Map<String, Value>,
}

/// Failures kept in a report; later ones are only counted.
const MAX_RECORDED_FAILURES: usize = 20;

impl Recorder {
    pub(crate) fn new(check: &'static str, params: Value) -> Self {
        Recorder {
            check,
            params,
            start: Instant::now(),
            failures: Vec::new(),
            summary: Default::default(),
        }
    }

    pub(crate) fn fail(&mut self, what: Value) {
        self.failures.push(what);
    }

    pub(crate) fn expect(&mut self, ok: bool, what: impl FnOnce() -> Value) {
        if !ok {
            self.fail(what());
        }
    }

    pub(crate) fn note(&mut self, key: &str, value: impl Serialize) {
        self.summary
            .insert(key.to_string(), serde_json::to_value(value).unwrap_or(Value::Null));
    }

    pub(crate) fn finish(self) -> CheckReport {
        let total = self.failures.len();
        let verdict = if total == 0 { Verdict::Pass } else { Verdict::Fail };
        let kept: Vec<Value> = self.failures.into_iter().take(MAX_RECORDED_FAILURES).collect();
        CheckReport {
            check: self.check.to_string(),
            params: self.params,
            verdict,
            witnesses: json!({
                "summary": Value::Object(self.summary),
                "failure_count": total,
                "failures": kept,
            }),
            duration_ms: self.start.elapsed().as_millis(),
        }
    }
}
