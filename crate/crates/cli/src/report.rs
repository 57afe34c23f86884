//! Run reports: a fixed JSON schema plus an optional CSV table.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// Hash over every input the command read, in the order it read them.
#[derive(Default)]
pub struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    pub fn feed(&mut self, label: &str, bytes: &[u8]) {
        self.hasher.update((label.len() as u64).to_le_bytes());
        self.hasher.update(label.as_bytes());
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(bytes);
    }

    fn digest(&self) -> String {
        hex::encode(self.hasher.clone().finalize())
    }
}

pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub input_hash: String,
    pub params: Map<String, Value>,
    pub values: Map<String, Value>,
    pub bounds: Map<String, Value>,
    pub witness_files: Vec<String>,
    pub elapsed_ms: u128,
    pub seed: u64,
    #[serde(skip)]
    pub table: Option<Table>,
    /// Set when the run completed but a checked property failed; the report
    /// is still written and the process then exits non-zero.
    #[serde(skip)]
    pub failure: Option<String>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        Report {
            command: command.to_string(),
            input_hash: String::new(),
            params: Map::new(),
            values: Map::new(),
            bounds: Map::new(),
            witness_files: Vec::new(),
            elapsed_ms: 0,
            seed,
            table: None,
            failure: None,
        }
    }

    pub fn param(mut self, key: &str, v: impl Serialize) -> Self {
        self.params.insert(key.into(), serde_json::to_value(v).expect("plain data"));
        self
    }

    pub fn value(&mut self, key: &str, v: impl Serialize) {
        self.values.insert(key.into(), serde_json::to_value(v).expect("plain data"));
    }

    pub fn bound(&mut self, key: &str, v: impl Serialize) {
        self.bounds.insert(key.into(), serde_json::to_value(v).expect("plain data"));
    }

    pub fn witness(&mut self, path: &Path) {
        self.witness_files.push(path.display().to_string());
    }

    pub fn finish(&mut self, inputs: &Inputs, elapsed_ms: u128) {
        self.input_hash = inputs.digest();
        self.elapsed_ms = elapsed_ms;
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self)? + "\n";
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }

    /// The table when the command produced one, otherwise `key,value` rows.
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut out = String::new();
        match &self.table {
            Some(t) => {
                line(&mut out, t.header.iter().map(|h| h.to_string()));
                for row in &t.rows {
                    line(&mut out, row.iter().cloned());
                }
            }
            None => {
                line(&mut out, ["key".to_string(), "value".to_string()]);
                for (k, v) in &self.values {
                    let v = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    line(&mut out, [k.clone(), v]);
                }
            }
        }
        std::fs::write(path, out).with_context(|| format!("writing {}", path.display()))
    }
}

fn line(out: &mut String, fields: impl IntoIterator<Item = String>) {
    let cells: Vec<String> = fields
        .into_iter()
        .map(|f| {
            if f.contains([',', '"', '\n']) {
                format!("\"{}\"", f.replace('"', "\"\""))
            } else {
                f
            }
        })
        .collect();
    writeln!(out, "{}", cells.join(",")).unwrap();
}
