use std::fmt;
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one check on one arrangement.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub fixture: String,
    pub check: String,
    pub status: Status,
    pub lhs: Value,
    pub rhs: Value,
    pub witnesses: Map<String, Value>,
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn new(fixture: impl Into<String>, check: impl Into<String>, status: Status) -> Self {
        Report {
            fixture: fixture.into(),
            check: check.into(),
            status,
            lhs: Value::Null,
            rhs: Value::Null,
            witnesses: Map::new(),
            elapsed: None,
        }
    }

    pub fn sides(mut self, lhs: Value, rhs: Value) -> Self {
        self.lhs = lhs;
        self.rhs = rhs;
        self
    }

    pub fn witness(mut self, key: &str, v: Value) -> Self {
        self.witnesses.insert(key.to_string(), v);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The report as JSON; timing is included only on request so that runs
    /// are reproducible byte for byte.
    pub fn to_json_value(&self, with_timing: bool) -> Value {
        let mut v = json!({
            "fixture": self.fixture,
            "check": self.check,
            "pass": self.status == Status::Pass,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "witnesses": self.witnesses,
        });
        if with_timing {
            if let Some(d) = self.elapsed {
                v["elapsed_ms"] = json!(d.as_millis() as u64);
            }
        }
        v
    }

    /// One line: `fixture check status`.
    pub fn summary_line(&self) -> String {
        format!("{:<12} {:<16} {}", self.fixture, self.check, self.status)
    }
}

/// Combines per-hyperplane reports into one, failing if any part fails.
pub fn aggregate(fixture: &str, check: &str, parts: Vec<Report>) -> Report {
    let status = if parts.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else if parts.iter().all(|r| r.status == Status::Skipped) && !parts.is_empty() {
        Status::Skipped
    } else {
        Status::Pass
    };
    let items: Vec<Value> = parts
        .iter()
        .map(|r| {
            json!({
                "status": r.status,
                "lhs": r.lhs,
                "rhs": r.rhs,
                "witnesses": r.witnesses,
            })
        })
        .collect();
    Report::new(fixture, check, status).witness("parts", Value::Array(items))
}
