use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One named pass/fail outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub results: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub passed: bool,
    pub wall_time_ms: u64,
    pub version: String,
}

impl RunReport {
    pub fn new(command: &str, parameters: BTreeMap<String, Value>) -> Self {
        Self {
            command: command.to_string(),
            parameters,
            results: BTreeMap::new(),
            checks: Vec::new(),
            passed: true,
            wall_time_ms: 0,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable"),
        );
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// `section,name,value` rows.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["section", "name", "value"])
            .expect("in-memory");
        w.write_record(["meta", "command", &self.command])
            .expect("in-memory");
        for (k, v) in &self.parameters {
            w.write_record(["parameter", k, &scalar(v)])
                .expect("in-memory");
        }
        for (k, v) in &self.results {
            w.write_record(["result", k, &scalar(v)])
                .expect("in-memory");
        }
        for c in &self.checks {
            w.write_record(["check", &c.name, if c.passed { "pass" } else { "fail" }])
                .expect("in-memory");
        }
        w.write_record(["meta", "passed", &self.passed.to_string()])
            .expect("in-memory");
        w.write_record(["meta", "wall_time_ms", &self.wall_time_ms.to_string()])
            .expect("in-memory");
        w.write_record(["meta", "version", &self.version])
            .expect("in-memory");
        String::from_utf8(w.into_inner().expect("in-memory")).expect("utf-8")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={}", scalar(v)))
            .collect();
        writeln!(out, "{} ({})", self.command, params.join(", ")).unwrap();
        let width = self.results.keys().map(|k| k.len()).max().unwrap_or(0);
        for (k, v) in &self.results {
            writeln!(out, "  {k:<width$}  {}", scalar(v)).unwrap();
        }
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(out, "  [{mark}] {}", c.name).unwrap();
            } else {
                writeln!(out, "  [{mark}] {} ({})", c.name, c.detail).unwrap();
            }
        }
        writeln!(out, "{}", if self.passed { "passed" } else { "FAILED" }).unwrap();
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
