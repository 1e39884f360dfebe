//! Report assembly: stable JSON or human-readable text.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use quadrics_core::exact::field::{Field, Scalar};
use quadrics_core::exact::matrix::Matrix;
use quadrics_core::quadform::Subspace;

pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub seed: u64,
    pub warnings: Vec<String>,
    pub result: Value,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        Report {
            command: command.to_string(),
            inputs: Map::new(),
            seed,
            warnings: Vec::new(),
            result: Value::Null,
        }
    }

    pub fn record_input(&mut self, path: &str, contents: &str) {
        let mut hasher = Sha256::new();
        hasher.update(contents.as_bytes());
        let digest = hasher.finalize();
        let hex: String = digest.iter().take(8).map(|b| format!("{b:02x}")).collect();
        self.inputs.insert(path.to_string(), Value::String(format!("sha256:{hex}")));
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "seed": self.seed,
            "result": self.result,
            "warnings": self.warnings,
            "status": "ok",
        })
    }

    /// Pretty text: a fixed-order walk of the result tree.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for (k, v) in &self.inputs {
            out.push_str(&format!("input {k}: {}\n", v.as_str().unwrap_or("?")));
        }
        out.push_str(&format!("seed: {}\n", self.seed));
        render_value(&mut out, "result", &self.result, 0);
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

fn render_value(out: &mut String, key: &str, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, x) in map {
                render_value(out, k, x, indent + 1);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let inner: Vec<String> = items.iter().map(plain).collect();
            out.push_str(&format!("{pad}{key}: [{}]\n", inner.join(", ")));
        }
        Value::Array(items) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (i, x) in items.iter().enumerate() {
                render_value(out, &format!("[{i}]"), x, indent + 1);
            }
        }
        other => out.push_str(&format!("{pad}{key}: {}\n", plain(other))),
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn scalar_json(field: &Field, s: &Scalar) -> Value {
    Value::String(field.format(s))
}

pub fn matrix_json(field: &Field, m: &Matrix<Scalar>) -> Value {
    Value::Array(
        m.rows_iter()
            .map(|row| Value::Array(row.iter().map(|s| scalar_json(field, s)).collect()))
            .collect(),
    )
}

pub fn subspace_json(field: &Field, s: &Subspace) -> Value {
    matrix_json(field, &s.basis)
}

pub fn poly_matrix_json(m: &Matrix<quadrics_core::exact::poly::MultiPoly>) -> Value {
    Value::Array(
        m.rows_iter()
            .map(|row| Value::Array(row.iter().map(|p| Value::String(p.to_string())).collect()))
            .collect(),
    )
}
