//! Machine-readable reports.

use serde::Serialize;
use serde_json::Value;

use solvlie_core::{Error, LieAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instances: Option<usize>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub witness: Value,
}

impl Check {
    pub fn new(check: impl Into<String>, status: Status) -> Self {
        Check {
            check: check.into(),
            algebra: None,
            status,
            reason: None,
            instances: None,
            witness: Value::Null,
        }
    }

    pub fn pass(check: impl Into<String>) -> Self {
        Check::new(check, Status::Pass)
    }

    pub fn fail(check: impl Into<String>) -> Self {
        Check::new(check, Status::Fail)
    }

    pub fn skipped(check: impl Into<String>, reason: impl Into<String>) -> Self {
        Check::new(check, Status::Skipped).reason(reason)
    }

    /// A failed check for `err`, or a skipped one when a cap was hit or the
    /// field is unsupported.
    pub fn from_error(check: impl Into<String>, err: &Error) -> Self {
        let status = match err {
            Error::CapExceeded { .. } | Error::UnsupportedField(_) => Status::Skipped,
            _ => Status::Fail,
        };
        Check::new(check, status).reason(format!("{}: {err}", err.kind()))
    }

    pub fn reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }

    pub fn algebra(mut self, id: impl Into<String>) -> Self {
        self.algebra = Some(id.into());
        self
    }

    pub fn instances(mut self, n: usize) -> Self {
        self.instances = Some(n);
        self
    }

    pub fn witness(mut self, w: impl Serialize) -> Self {
        self.witness = serde_json::to_value(w).expect("witness serializes");
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Digest {
    pub id: String,
    pub dim: usize,
    pub field: String,
    pub solvable: bool,
    pub derived_length: Option<usize>,
}

impl Digest {
    pub fn of(id: impl Into<String>, l: &LieAlgebra) -> Self {
        Digest {
            id: id.into(),
            dim: l.dim(),
            field: l.field().to_string(),
            solvable: l.is_solvable(),
            derived_length: l.derived_length(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: Value,
    pub algebras: Vec<Digest>,
    pub checks: Vec<Check>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: impl Serialize) -> Self {
        Report {
            command: serde_json::to_value(command).expect("command serializes"),
            algebras: Vec::new(),
            checks: Vec::new(),
            summary: Summary::default(),
            timing_ms: None,
        }
    }

    pub fn push(&mut self, check: Check) {
        match check.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Skipped => self.summary.skipped += 1,
        }
        self.checks.push(check);
    }

    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
