//! The report document and its JSON and text renderings.

use serde_json::{json, Map, Value};

use sympair_core::lie::LieAlgebra;
use sympair_core::poly::MultiPoly;
use sympair_core::scalar::to_fraction_string;
use sympair_core::Scalar;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
    pub witness: Value,
}

impl Check {
    pub fn new(id: impl Into<String>, ok: bool) -> Self {
        Check {
            id: id.into(),
            status: Status::from_bool(ok),
            detail: String::new(),
            witness: Value::Null,
        }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = d.into();
        self
    }

    pub fn witness(mut self, w: Value) -> Self {
        self.witness = w;
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub target: String,
    pub input_digest: String,
    pub seed: Option<u64>,
    pub parameters: Value,
    pub checks: Vec<Check>,
    pub data: Value,
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn to_json(&self) -> Value {
        let mut checks = self.checks.clone();
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let checks: Vec<Value> = checks
            .iter()
            .map(|c| {
                let mut m = Map::new();
                m.insert("id".into(), json!(c.id));
                m.insert("status".into(), json!(c.status.as_str()));
                if !c.detail.is_empty() {
                    m.insert("detail".into(), json!(c.detail));
                }
                if !c.witness.is_null() {
                    m.insert("witness".into(), c.witness.clone());
                }
                Value::Object(m)
            })
            .collect();
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "target": self.target,
            "input_digest": self.input_digest,
            "seed": self.seed,
            "parameters": self.parameters,
            "status": if self.passed() { "pass" } else { "fail" },
            "checks": checks,
            "data": self.data,
            "timing_ms": self.timing_ms,
        })
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{} {}: {status}\n", self.command, self.target));
        out.push_str(&format!("input {}\n", self.input_digest));
        if let Some(seed) = self.seed {
            out.push_str(&format!("seed {seed}\n"));
        }
        let mut checks = self.checks.clone();
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        for c in &checks {
            out.push_str(&format!("[{}] {}", c.status.as_str().to_uppercase(), c.id));
            if !c.detail.is_empty() {
                out.push_str(&format!(" ({})", c.detail));
            }
            out.push('\n');
        }
        out.push_str("data:\n");
        render_value(&self.data, 1, &mut out);
        if let Some(t) = self.timing_ms {
            out.push_str(&format!("timing {t} ms\n"));
        }
        out
    }
}

fn is_scalar_value(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("[{}]", xs.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn render_value(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if is_scalar_value(x) || matches!(x, Value::Array(a) if a.iter().all(is_scalar_value)) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_value(x, depth + 1, out);
                }
            }
        }
        Value::Array(xs) => {
            for x in xs {
                if is_scalar_value(x) || matches!(x, Value::Array(a) if a.iter().all(is_scalar_value)) {
                    out.push_str(&format!("{pad}- {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_value(x, depth + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

pub fn scalar(x: &Scalar) -> Value {
    json!(to_fraction_string(x))
}

pub fn vector(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

/// Linear combination of labelled basis vectors, e.g. `1/16*H+ - E+`.
pub fn element_text(labels: &[String], v: &[Scalar]) -> String {
    let p = MultiPoly::linear(v);
    p.to_string_with(labels)
}

pub fn element(g: &LieAlgebra, v: &[Scalar]) -> Value {
    json!({ "coords": vector(v), "text": element_text(g.labels(), v) })
}

/// A polynomial as exact terms plus a readable rendering.
pub fn poly(p: &MultiPoly, names: &[String]) -> Value {
    let terms: Vec<Value> = p
        .sorted_terms()
        .into_iter()
        .map(|(e, c)| json!({ "exponents": e, "coeff": to_fraction_string(c) }))
        .collect();
    json!({ "text": p.to_string_with(names), "terms": terms })
}
