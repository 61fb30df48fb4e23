//! Machine-readable run reports: named results, toleranced checks, and
//! deterministic JSON serialization. Exit status of every command is
//! pass-iff-all-checks-pass.

use std::collections::BTreeMap;

use crate::jsonfmt::Json;

/// Report schema version written into every JSON document.
pub const REPORT_SCHEMA: i64 = 1;

/// One verdict: a measured value against an explicit tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// Pass iff `value <= tolerance` (and the value is a number).
    pub fn le(name: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            value,
            tolerance,
            pass: value.is_finite() && value <= tolerance,
        }
    }

    /// Pass iff `value > threshold`; used for documented expected
    /// discrepancies, where smallness would indicate a regression.
    pub fn gt(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self {
            name: name.into(),
            value,
            tolerance: threshold,
            pass: value.is_finite() && value > threshold,
        }
    }

    fn to_json(&self) -> Json {
        let mut obj = Json::obj();
        obj.insert("name".into(), Json::Str(self.name.clone()));
        obj.insert("pass".into(), Json::Bool(self.pass));
        obj.insert("tolerance".into(), Json::Float(self.tolerance));
        obj.insert("value".into(), Json::Float(self.value));
        Json::Obj(obj)
    }
}

/// Aggregated outcome of one CLI command.
#[derive(Debug, Clone, Default)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, Json>,
    pub results: BTreeMap<String, Json>,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            ..Default::default()
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Json>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Json>) -> &mut Self {
        self.results.insert(key.to_string(), value.into());
        self
    }

    pub fn result_f64(&mut self, key: &str, value: f64) -> &mut Self {
        self.results.insert(key.to_string(), Json::Float(value));
        self
    }

    pub fn push_check(&mut self, check: Check) -> &mut Self {
        self.checks.push(check);
        self
    }

    pub fn warn(&mut self, message: impl Into<String>) -> &mut Self {
        self.warnings.push(message.into());
        self
    }

    /// A report passes iff every check passes.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Fetch a numeric result by name (convenience for tests and audits).
    pub fn result_value(&self, key: &str) -> Option<f64> {
        match self.results.get(key) {
            Some(Json::Float(v)) => Some(*v),
            Some(Json::Int(v)) => Some(*v as f64),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Json {
        let mut obj = Json::obj();
        obj.insert("schema".into(), Json::Int(REPORT_SCHEMA));
        obj.insert("command".into(), Json::Str(self.command.clone()));
        obj.insert("inputs".into(), Json::Obj(self.inputs.clone()));
        obj.insert("results".into(), Json::Obj(self.results.clone()));
        obj.insert(
            "checks".into(),
            Json::Arr(self.checks.iter().map(Check::to_json).collect()),
        );
        obj.insert(
            "warnings".into(),
            Json::Arr(self.warnings.iter().map(|w| Json::Str(w.clone())).collect()),
        );
        obj.insert("pass".into(), Json::Bool(self.passed()));
        Json::Obj(obj)
    }

    pub fn to_json_string(&self) -> String {
        self.to_json().pretty()
    }
}
