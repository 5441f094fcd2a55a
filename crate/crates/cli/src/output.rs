//! Output envelope, 15-significant-digit rounding, and CSV rendering.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

pub const SCHEMA_VERSION: &str = "1";
pub const SIGNIFICANT_DIGITS: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub code: String,
    pub exit_code: i32,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub schema_version: String,
    pub command: String,
    pub error: ErrorBody,
}

/// Rounds to 15 significant digits; ties go to even.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .unwrap_or(x)
}

/// Applies [`round_sig`] to every float in a JSON tree.
pub fn round_value(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().unwrap_or_default());
            Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(round_value).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_value(v))).collect()),
        other => other,
    }
}

pub fn to_rounded<T: Serialize>(value: &T) -> Value {
    round_value(serde_json::to_value(value).unwrap_or(Value::Null))
}

impl OutputRecord {
    pub fn new(command: &str, inputs: Value, payload: Value, diagnostics: Vec<String>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs: round_value(inputs),
            payload: round_value(payload),
            diagnostics,
        }
    }
}

/// `path,value` rows for every leaf of a JSON tree, with array indices and
/// object keys joined by dots.
pub fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&join(k), child, rows);
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                rows.push((prefix.to_string(), String::new()));
            }
            for (i, child) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), child, rows);
            }
        }
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        Value::Null => rows.push((prefix.to_string(), String::new())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

/// Renders a scalar leaf exactly as it appears in the JSON output.
pub fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

pub type CsvTable = (Vec<String>, Vec<Vec<String>>);

/// Default CSV: the flattened payload as `field,value`.
pub fn flat_table(payload: &Value) -> CsvTable {
    let mut rows = Vec::new();
    flatten("", payload, &mut rows);
    (
        vec!["field".into(), "value".into()],
        rows.into_iter().map(|(k, v)| vec![k, v]).collect(),
    )
}

pub fn render_csv((header, rows): &CsvTable) -> std::io::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))
}

pub fn render_json(record: &OutputRecord) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(record).unwrap_or_default();
    out.push(b'\n');
    out
}

pub fn write_output(bytes: &[u8], out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, bytes),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()
        }
    }
}

pub fn emit_error(command: &str, body: ErrorBody) {
    let record = ErrorRecord {
        schema_version: SCHEMA_VERSION.to_string(),
        command: command.to_string(),
        error: body,
    };
    let text = serde_json::to_string(&record).unwrap_or_default();
    eprintln!("{text}");
}
