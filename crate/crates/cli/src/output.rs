//! Deterministic CSV/JSON table writing.
//!
//! Floats are printed with 17 significant digits ({:.16e}) so re-runs of
//! the same configuration are byte-identical and downstream regression
//! diffs see full double precision.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::config::Format;

#[derive(Debug, Clone)]
pub enum Cell {
    Str(String),
    Int(i64),
    F64(f64),
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Str(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::F64(x) => fmt_f64(*x),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Str(s) => format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\"")),
            Cell::Int(i) => i.to_string(),
            Cell::F64(x) => fmt_f64(*x),
        }
    }
}

impl Table {
    pub fn write<W: Write>(&self, format: Format, out: &mut W) -> io::Result<()> {
        match format {
            Format::Csv => {
                writeln!(out, "{}", self.columns.join(","))?;
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::csv).collect();
                    writeln!(out, "{}", cells.join(","))?;
                }
            }
            Format::Json => {
                writeln!(out, "{{")?;
                let cols: Vec<String> = self.columns.iter().map(|c| format!("\"{c}\"")).collect();
                writeln!(out, "  \"columns\": [{}],", cols.join(", "))?;
                writeln!(out, "  \"rows\": [")?;
                for (i, row) in self.rows.iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(Cell::json).collect();
                    let comma = if i + 1 < self.rows.len() { "," } else { "" };
                    writeln!(out, "    [{}]{comma}", cells.join(", "))?;
                }
                writeln!(out, "  ]")?;
                writeln!(out, "}}")?;
            }
        }
        Ok(())
    }
}

// A closed stdout pipe (e.g. | head) is not an error for a batch tool.
fn ignore_broken_pipe(r: io::Result<()>) -> io::Result<()> {
    match r {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

/// Writes to the path when given, stdout otherwise.
pub fn emit(table: &Table, format: Format, out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            table.write(format, &mut w)
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            ignore_broken_pipe(table.write(format, &mut w))
        }
    }
}

/// Raw text sink for non-tabular output (check reports).
pub fn emit_text(text: &str, out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => ignore_broken_pipe(io::stdout().write_all(text.as_bytes())),
    }
}
