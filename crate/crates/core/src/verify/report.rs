use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// How `observed` is compared with `bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `observed <= bound`
    AtMost,
    /// `observed < bound`
    Below,
    /// `observed >= bound`
    AtLeast,
    /// `observed > bound`
    Above,
}

impl Relation {
    fn holds(self, observed: f64, bound: f64) -> bool {
        match self {
            Relation::AtMost => observed <= bound,
            Relation::Below => observed < bound,
            Relation::AtLeast => observed >= bound,
            Relation::Above => observed > bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub parameters: BTreeMap<String, Value>,
    pub observed: f64,
    pub bound: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub parameters: BTreeMap<String, Value>,
    pub checks: Vec<CheckRecord>,
    pub overall_pass: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, parameters: BTreeMap<String, Value>) -> Self {
        Self {
            suite: suite.into(),
            parameters,
            checks: Vec::new(),
            overall_pass: true,
        }
    }

    /// Appends a check; NaN observations always fail.
    pub fn record(
        &mut self,
        id: impl Into<String>,
        parameters: BTreeMap<String, Value>,
        observed: f64,
        relation: Relation,
        bound: f64,
    ) {
        let pass = !observed.is_nan() && relation.holds(observed, bound);
        self.overall_pass &= pass;
        self.checks.push(CheckRecord {
            id: id.into(),
            parameters,
            observed,
            bound,
            pass,
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.overall_pass &= other.overall_pass;
        self.checks.extend(other.checks);
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Builds a parameter map from `(name, value)` pairs.
pub fn params<const N: usize>(pairs: [(&str, Value); N]) -> BTreeMap<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
