//! Reports: `{version, config, results, timings}` with sorted keys inside
//! results, so that output is byte-stable for a fixed config.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::error::exit;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Certified,
    Inconclusive,
    Fail,
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
            Status::Certified => "certified",
            Status::Inconclusive => "inconclusive",
            Status::Fail => "fail",
        }
    }
}

/// One line of a report: a named check, its status and free-form details.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub status: Status,
    pub details: Value,
}

impl CheckResult {
    pub fn new(check: impl Into<String>, status: Status, details: Value) -> Self {
        CheckResult {
            check: check.into(),
            status,
            details,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Version {
    pub tool: String,
    pub schema: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: Version,
    pub config: RunConfig,
    pub results: Vec<CheckResult>,
    /// Wall-clock seconds per phase. Not covered by the determinism contract.
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(config: RunConfig) -> Self {
        Report {
            version: Version {
                tool: env!("CARGO_PKG_VERSION").to_string(),
                schema: SCHEMA_VERSION,
            },
            config,
            results: Vec::new(),
            timings: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, r: CheckResult) {
        self.results.push(r);
    }

    /// 0 if everything passed or was certified, 1 on any failure, 2 if the
    /// only shortfall is an inconclusive result.
    pub fn exit_code(&self) -> i32 {
        match self.results.iter().map(|r| r.status).max() {
            Some(Status::Fail) => exit::FAIL,
            Some(Status::Inconclusive) => exit::INCONCLUSIVE,
            _ => exit::PASS,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&format!("{}: {}", r.check, r.status.as_str()));
            if let Some(obj) = r.details.as_object() {
                let parts: Vec<String> = obj.iter().map(|(k, v)| format!("{k}={v}")).collect();
                if !parts.is_empty() {
                    out.push_str(&format!(" ({})", parts.join(", ")));
                }
            }
            out.push('\n');
        }
        out
    }
}

/// The JSON report with `timings` emptied, for determinism comparisons.
pub fn without_timings(json_text: &str) -> String {
    let mut v: Value = serde_json::from_str(json_text).expect("valid report");
    v["timings"] = json!({});
    serde_json::to_string_pretty(&v).expect("serializes")
}
