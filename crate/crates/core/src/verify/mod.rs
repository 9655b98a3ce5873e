//! Verification pipelines with pass/fail reports, shared by the `nearreg`
//! binary and by library callers.

mod check;
mod laws;
mod m12;
mod obstruction;

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

pub use check::{check_iconn4, check_iso, check_modular, check_pmatrix, check_rank, load_matrix, load_matroid};
pub use laws::{random_p_matrix, verify_laws};
pub use m12::{m12_automorphism_generators, verify_m12};
pub use obstruction::write_obstruction;

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Runs `f`, timing it. An error becomes a failed check carrying the message.
pub(crate) fn run_check(name: &str, f: impl FnOnce() -> Result<(bool, String, Option<Value>)>) -> CheckResult {
    let start = Instant::now();
    let (passed, detail, witness) = match f() {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}"), None),
    };
    CheckResult {
        name: name.to_string(),
        passed,
        detail,
        witness,
        elapsed: start.elapsed(),
    }
}

pub(crate) fn to_value<T: Serialize>(v: &T) -> Option<Value> {
    Some(serde_json::to_value(v).expect("report values serialize"))
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<CheckResult>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    command: &'a str,
    passed: bool,
    checks: Vec<CheckJson<'a>>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CheckJson<'a> {
    #[serde(flatten)]
    check: &'a CheckResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Human-readable form. Wall times are included only on request, so
    /// that reruns produce identical output by default.
    pub fn to_text(&self, timings: bool) -> String {
        let mut out = format!("{}\n", self.command);
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let _ = write!(out, "[{tag}] {}: {}", c.name, c.detail);
            if timings {
                let _ = write!(out, " ({} ms)", c.elapsed.as_millis());
            }
            out.push('\n');
            if let (false, Some(w)) = (c.passed, &c.witness) {
                let _ = writeln!(out, "       witness: {w}");
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "result: {verdict} ({passed}/{} checks)", self.checks.len());
        out
    }

    pub fn to_json(&self, timings: bool) -> String {
        let json = ReportJson {
            command: &self.command,
            passed: self.passed(),
            checks: self
                .checks
                .iter()
                .map(|check| CheckJson {
                    check,
                    elapsed_ms: timings.then_some(check.elapsed.as_millis()),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&json).expect("report serializes")
    }
}

/// `2` for malformed input or arguments, `1` for anything else.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::UnknownLabel(_)
        | Error::DuplicateLabel(_)
        | Error::OutsideCarrier(_)
        | Error::InvalidArgument(_)
        | Error::Json(_)
        | Error::Io(_) => 2,
        _ => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_agree() {
        let mut r = Report::new("demo");
        r.push(run_check("ok", || Ok((true, "fine".into(), None))));
        r.push(run_check("bad", || Err(Error::InvalidArgument("boom".into()))));
        assert!(!r.passed());
        assert_eq!(r.exit_code(), 1);
        let text = r.to_text(false);
        assert!(text.contains("[PASS] ok: fine"));
        assert!(text.contains("[FAIL] bad: error: boom"));
        let json: Value = serde_json::from_str(&r.to_json(false)).unwrap();
        assert_eq!(json["passed"], false);
        assert_eq!(json["checks"][0]["passed"], true);
        assert_eq!(json["checks"][1]["passed"], false);
        assert!(json["checks"][0].get("elapsedMs").is_none());
        assert!(r.to_json(true).contains("elapsedMs"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(error_exit_code(&Error::InvalidArgument("x".into())), 2);
        assert_eq!(error_exit_code(&Error::RestrictionMismatch), 1);
    }
}
