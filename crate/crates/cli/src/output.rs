//! JSON records, plain-text tables and exit codes.

use std::io::{self, Write};
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Compute(_) => 2,
        }
    }
}

pub fn compute_err(e: impl std::fmt::Display) -> CliError {
    CliError::Compute(e.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct Timings {
    pub total_ms: f64,
}

/// Plain-text table: a header row followed by data rows.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// Two-column field table.
    pub fn fields() -> Self {
        Self::new(&["field", "value"])
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn field(&mut self, name: &str, value: impl ToString) {
        self.rows.push(vec![name.to_string(), value.to_string()]);
    }

    pub fn render(&self) -> String {
        let cols = self.header.len();
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| -> String {
            let mut s = String::new();
            for (k, cell) in cells.iter().enumerate() {
                if k + 1 == cols {
                    s += cell;
                } else {
                    s += cell;
                    s += &" ".repeat(widths[k] - cell.chars().count() + 2);
                }
            }
            s.trim_end().to_string() + "\n"
        };
        let mut out = line(&self.header);
        out += &line(&widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>());
        for row in &self.rows {
            out += &line(row);
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub command: &'static str,
    pub input: Value,
    pub result: Value,
    pub warnings: Vec<String>,
    pub timings: Option<Timings>,
    #[serde(skip)]
    pub table: Table,
    /// A property or reproduction check failed; exit code 3.
    #[serde(skip)]
    pub failed: bool,
}

impl Record {
    pub fn new(command: &'static str, input: Value, result: impl Serialize, table: Table) -> Result<Self, CliError> {
        Ok(Self {
            command,
            input,
            result: serde_json::to_value(result).map_err(compute_err)?,
            warnings: Vec::new(),
            timings: None,
            table,
            failed: false,
        })
    }

    pub fn set_elapsed(&mut self, d: Duration) {
        self.timings = Some(Timings {
            total_ms: d.as_secs_f64() * 1e3,
        });
    }

    pub fn exit_code(&self) -> u8 {
        if self.failed {
            3
        } else {
            0
        }
    }
}

pub fn emit(record: &Record, json: bool) -> io::Result<()> {
    let mut out = io::stdout().lock();
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(record).expect("records serialize"))?;
        return out.flush();
    }
    write!(out, "{}", record.table.render())?;
    for w in &record.warnings {
        writeln!(out, "warning: {w}")?;
    }
    if let Some(t) = &record.timings {
        writeln!(out, "time: {:.1} ms", t.total_ms)?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_align_columns() {
        let mut t = Table::new(&["a", "bb"]);
        t.push(vec!["long".into(), "x".into()]);
        assert_eq!(t.render(), "a     bb\n----  --\nlong  x\n");
    }
}
