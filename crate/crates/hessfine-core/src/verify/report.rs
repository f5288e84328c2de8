//! Verification output types with a stable serialized form.
//!
//! Reports serialize the same bytes for the same inputs: field order is
//! fixed by declaration order, values are exact decimal strings, and
//! timing stays out of the JSON.

use std::time::Duration;

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
    pub route: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub records: Vec<CheckRecord>,
    pub pass: bool,
    /// Wall time of the run; informative only, never serialized.
    #[serde(skip)]
    pub wall: Option<Duration>,
    /// Clamps and skipped routes, for human output.
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
