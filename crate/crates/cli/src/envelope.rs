//! The JSON report envelope shared by every subcommand.

use std::collections::BTreeMap;
use std::fmt::Display;

use chrono::{DateTime, SecondsFormat, Utc};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL: &str = "dirosc";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub dimension: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    /// Zero for exact comparisons.
    pub tolerance: f64,
}

impl CheckResult {
    /// An exact comparison: passes iff `pass`.
    pub fn exact(name: &str, dimension: impl Display, pass: bool, expected: impl Display, actual: impl Display) -> Self {
        CheckResult {
            name: name.to_string(),
            dimension: dimension.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            expected: expected.to_string(),
            actual: actual.to_string(),
            tolerance: 0.0,
        }
    }

    /// A numeric bound: passes iff `value < tolerance`.
    pub fn bound(name: &str, dimension: impl Display, value: f64, tolerance: f64) -> Self {
        CheckResult {
            name: name.to_string(),
            dimension: dimension.to_string(),
            status: if value < tolerance { Status::Pass } else { Status::Fail },
            expected: format!("< {tolerance:e}"),
            actual: format!("{value:e}"),
            tolerance,
        }
    }

    pub fn skip(name: &str, dimension: impl Display, reason: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            dimension: dimension.to_string(),
            status: Status::Skip,
            expected: String::new(),
            actual: reason.to_string(),
            tolerance: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl Summary {
    pub fn of(checks: &[CheckResult]) -> Summary {
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        Summary { pass: count(Status::Pass), fail: count(Status::Fail), skip: count(Status::Skip) }
    }
}

/// 0 iff every non-skip check passes, else 1.
pub fn exit_code(checks: &[CheckResult]) -> i32 {
    if checks.iter().any(|c| c.status == Status::Fail) {
        1
    } else {
        0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportEnvelope {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    pub timestamp: String,
    pub command: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    /// Command-specific data, keyed and serialized in sorted order.
    pub payloads: BTreeMap<String, serde_json::Value>,
}

/// RFC 3339 time, pinned by `SOURCE_DATE_EPOCH` when set so reports reproduce.
pub fn timestamp() -> String {
    let pinned = std::env::var("SOURCE_DATE_EPOCH").ok().and_then(|s| s.trim().parse::<i64>().ok());
    let t = match pinned.and_then(|s| DateTime::<Utc>::from_timestamp(s, 0)) {
        Some(t) => t,
        None => Utc::now(),
    };
    t.to_rfc3339_opts(SecondsFormat::Secs, true)
}

impl ReportEnvelope {
    pub fn new(command: &str, seed: u64, checks: Vec<CheckResult>) -> Self {
        ReportEnvelope {
            schema_version: SCHEMA_VERSION,
            tool: TOOL.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: timestamp(),
            command: command.to_string(),
            seed,
            summary: Summary::of(&checks),
            checks,
            payloads: BTreeMap::new(),
        }
    }

    pub fn with_payload(mut self, key: &str, value: impl Serialize) -> Result<Self, serde_json::Error> {
        self.payloads.insert(key.to_string(), serde_json::to_value(value)?);
        Ok(self)
    }

    pub fn exit_code(&self) -> i32 {
        exit_code(&self.checks)
    }

    pub fn to_json(&self) -> Result<String, serde_json::Error> {
        serde_json::to_string_pretty(self)
    }
}
