use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A command result: a flat table for text/CSV and a JSON document.
pub struct Output {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub json: Value,
    /// Emitted after the table when a checked property fails.
    pub counterexample: Option<Value>,
}

impl Output {
    pub fn table(header: &[&str], rows: Vec<Vec<String>>) -> Self {
        let header: Vec<String> = header.iter().map(|s| s.to_string()).collect();
        let json = Value::Array(
            rows.iter()
                .map(|row| {
                    Value::Object(
                        header
                            .iter()
                            .cloned()
                            .zip(row.iter().map(|c| Value::String(c.clone())))
                            .collect(),
                    )
                })
                .collect(),
        );
        Self {
            header,
            rows,
            json,
            counterexample: None,
        }
    }

    pub fn with_json(mut self, json: Value) -> Self {
        self.json = json;
        self
    }

    pub fn with_counterexample(mut self, witness: Option<Value>) -> Self {
        self.counterexample = witness;
        self
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
            Format::Text => {
                if self.header.len() > 1 {
                    writeln!(out, "{}", self.header.join("\t"))?;
                }
                for row in &self.rows {
                    writeln!(out, "{}", row.join("\t"))?;
                }
            }
        }
        if format != Format::Json {
            if let Some(witness) = &self.counterexample {
                writeln!(out, "{}", serde_json::to_string(witness)?)?;
            }
        }
        Ok(())
    }
}

pub fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// JSON integer when it fits in `u64`, otherwise a decimal string.
pub fn num(x: u128) -> Value {
    u64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}
