//! Table and structured (JSON Lines) rendering.
//!
//! Every result is a [`Record`]: a `record` tag plus fields. In structured
//! mode each record becomes one JSON object on its own line, keys sorted.
//! Integers that may exceed 64 bits are decimal strings and rationals are
//! `{"num": "...", "den": "..."}` objects.

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Table,
    Structured,
}

pub struct Record {
    kind: &'static str,
    fields: Map<String, Value>,
    table: Vec<String>,
}

impl Record {
    pub fn new(kind: &'static str) -> Self {
        Record { kind, fields: Map::new(), table: Vec::new() }
    }

    pub fn field(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    /// Line shown in table mode; records with no lines fall back to
    /// `key: value` pairs.
    pub fn line(mut self, text: impl Into<String>) -> Self {
        self.table.push(text.into());
        self
    }

    pub fn render(&self, mode: Mode) -> String {
        match mode {
            Mode::Structured => {
                let mut obj = self.fields.clone();
                obj.insert("record".into(), Value::String(self.kind.into()));
                Value::Object(obj).to_string()
            }
            Mode::Table if !self.table.is_empty() => self.table.join("\n"),
            Mode::Table => self
                .fields
                .iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k}: {s}"),
                    other => format!("{k}: {other}"),
                })
                .collect::<Vec<_>>()
                .join("\n"),
        }
    }
}

pub fn big(v: &BigUint) -> Value {
    Value::String(v.to_string())
}

pub fn ratio(num: &BigUint, den: &BigUint) -> Value {
    json!({ "num": num.to_string(), "den": den.to_string() })
}

pub fn list(values: &[u64]) -> String {
    let parts: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn set(values: impl IntoIterator<Item = usize>) -> String {
    let parts: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}
