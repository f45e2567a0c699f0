//! Machine-readable command reports.
//!
//! Inputs and outputs are JSON objects with sorted keys, so serialization is
//! byte-stable for identical inputs. Exact scalars are written as `"p/q"`
//! strings; float scalars as JSON numbers.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::matrix::{Matrix, Vector};
use crate::scalar::{Mode, Scalar};
use crate::verify::Check;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<Check> for CheckRecord {
    fn from(c: Check) -> Self {
        Self {
            name: c.name,
            status: if c.passed { Status::Pass } else { Status::Fail },
            witness: c.witness,
            note: c.note,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub mode: Mode,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(command: &str, mode: Mode) -> Self {
        Self {
            command: command.to_string(),
            mode,
            inputs: Map::new(),
            outputs: Map::new(),
            checks: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn output(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.outputs.insert(key.to_string(), value.into());
        self
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) {
        self.checks.push(CheckRecord {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            witness: if passed { None } else { witness },
            note: None,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are plain JSON")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\nmode: {}\n", self.command, self.mode);
        for (title, map) in [("inputs", &self.inputs), ("outputs", &self.outputs)] {
            if map.is_empty() {
                continue;
            }
            out.push_str(title);
            out.push_str(":\n");
            for (k, v) in map {
                match v {
                    Value::Array(items) if items.iter().all(Value::is_string) && is_rows(k) => {
                        out.push_str(&format!("  {k}:\n"));
                        for item in items {
                            out.push_str(&format!("    {}\n", plain(item)));
                        }
                    }
                    _ => out.push_str(&format!("  {k}: {}\n", plain(v))),
                }
            }
        }
        if !self.checks.is_empty() {
            let passed = self
                .checks
                .iter()
                .filter(|c| c.status == Status::Pass)
                .count();
            out.push_str(&format!("checks: {passed}/{} passed\n", self.checks.len()));
            for c in &self.checks {
                let tag = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                };
                out.push_str(&format!("  [{tag}] {}\n", c.name));
                if let Some(w) = &c.witness {
                    out.push_str(&format!("         witness: {w}\n"));
                }
                if let Some(n) = &c.note {
                    out.push_str(&format!("         note: {n}\n"));
                }
            }
        }
        out
    }
}

// Keys whose string arrays are matrix rows, printed one per line.
fn is_rows(key: &str) -> bool {
    matches!(key, "matrix" | "system" | "reversed")
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(plain).collect();
            format!("({})", parts.join(", "))
        }
        other => other.to_string(),
    }
}

pub fn scalar_value<S: Scalar>(x: &S) -> Value {
    match S::MODE {
        Mode::Exact => Value::String(x.render()),
        Mode::Float => x
            .render()
            .parse::<f64>()
            .ok()
            .and_then(serde_json::Number::from_f64)
            .map_or(Value::Null, Value::Number),
    }
}

pub fn vector_value<S: Scalar>(v: &Vector<S>) -> Value {
    Value::Array(v.entries().iter().map(scalar_value).collect())
}

/// Rows in the matrix text format, so they parse back to the same matrix.
pub fn matrix_rows_value<S: Scalar>(m: &Matrix<S>) -> Value {
    Value::Array(m.to_text_rows().into_iter().map(Value::String).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    #[test]
    fn exact_scalars_are_strings() {
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(scalar_value(&half), Value::String("1/2".into()));
        assert_eq!(scalar_value(&int(-3)), Value::String("-3".into()));
        assert_eq!(scalar_value(&2.5f64), serde_json::json!(2.5));
    }

    #[test]
    fn json_has_stable_key_order() {
        let mut r = Report::new("wedge", Mode::Exact);
        r.output("z", 1).output("a", 2);
        r.input("matrix", vec!["1 2"]);
        r.check("ok", true, Some("ignored".into()));
        let json = r.to_json();
        assert!(json.find("\"a\"").unwrap() < json.find("\"z\"").unwrap());
        let order: Vec<usize> = ["command", "mode", "inputs", "outputs", "checks"]
            .iter()
            .map(|k| json.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]));
        assert!(!json.contains("ignored"));
        assert!(r.all_passed());
    }

    #[test]
    fn text_lists_failures_with_witness() {
        let mut r = Report::new("cross", Mode::Float);
        r.check("dot", false, Some("A_1".into()));
        let text = r.to_text();
        assert!(text.contains("[FAIL] dot"));
        assert!(text.contains("witness: A_1"));
        assert!(!r.all_passed());
    }
}
