//! Machine-readable reports.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::matrix::IntMatrix;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Check {
    pub id: String,
    pub description: String,
    /// Label of the claim the check replays.
    pub anchor: String,
    pub status: Status,
    pub data: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    /// Appends a check and updates the summary. Ids must be unique.
    pub fn push(&mut self, id: &str, description: &str, anchor: &str, status: Status, data: Value) {
        assert!(
            self.checks.iter().all(|c| c.id != id),
            "duplicate check id {id}"
        );
        match status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Inconclusive => self.summary.inconclusive += 1,
            Status::Skipped => self.summary.skipped += 1,
        }
        self.checks.push(Check {
            id: id.to_string(),
            description: description.to_string(),
            anchor: anchor.to_string(),
            status,
            data,
        });
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// 1 if anything failed, else 2 if anything was inconclusive, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.inconclusive > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| ints(m.row(i))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_exit_codes() {
        let mut r = Report::new("demo");
        r.push("a", "first", "x", Status::Pass, json!({"v": int(&BigInt::from(3))}));
        assert_eq!(r.exit_code(), 0);
        r.push("b", "big", "y", Status::Inconclusive, ints(&[BigInt::from(10).pow(30)]));
        assert_eq!(r.exit_code(), 2);
        r.push("c", "third", "z", Status::Fail, Value::Null);
        assert_eq!(r.exit_code(), 1);
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        assert_eq!(r.checks[1].data, json!(["1000000000000000000000000000000"]));
    }
}
