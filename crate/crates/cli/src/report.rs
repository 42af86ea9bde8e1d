//! JSON output.
//!
//! ```text
//! {"command": str,
//!  "group": {"spec": str, "order": int, "degree": int},
//!  "result": {"count": int}
//!          | {"polynomial": [{"coefficient": {"num": str, "den": str},
//!                             "exponents": {var: int}}]}
//!          | {"orbits": [{"representative": str, "size": int,
//!                         "composition": {color: int}}]}
//!          | {"elements": [str]}}
//! ```
//!
//! Object keys are emitted in sorted order, so parsing a report into a
//! `serde_json::Value` and printing it again reproduces the same bytes.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigUint;
use polya_core::polynomial::TermRecord;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub group: GroupInfo,
    pub result: ResultBody,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupInfo {
    pub spec: String,
    pub order: u64,
    pub degree: u64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum ResultBody {
    Count { count: serde_json::Number },
    Polynomial { polynomial: Vec<TermRecord> },
    Orbits { orbits: Vec<OrbitRecord> },
    Elements { elements: Vec<String> },
}

impl ResultBody {
    /// Counts of any size are written as exact JSON integers.
    pub fn count(n: &BigUint) -> Self {
        ResultBody::Count {
            count: serde_json::Number::from_str(&n.to_string()).expect("decimal integer"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitRecord {
    pub representative: String,
    pub size: u64,
    pub composition: BTreeMap<String, u64>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report is serializable");
        serde_json::to_string_pretty(&value).expect("value is serializable")
    }
}

/// Pretty-prints any JSON text the way reports are printed.
pub fn normalize(json: &str) -> serde_json::Result<String> {
    let value: serde_json::Value = serde_json::from_str(json)?;
    serde_json::to_string_pretty(&value)
}
