//! Line-oriented sparse text format for Fock operators.
//!
//! Layout: '#' header lines recording the operator name, dimension, mode
//! set and ordering, followed by one `row col re im` entry per line
//! (0-based indices, 17-significant-digit floats). Deterministic for a
//! given operator: entries are emitted in CSR order.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use super::{FockOperator, ModeSet};
use crate::error::{Error, Result};

pub fn write_operator<W: Write>(
    out: &mut W,
    name: &str,
    modeset: &ModeSet,
    op: &FockOperator,
) -> Result<()> {
    writeln!(out, "# diracosc sparse operator")?;
    writeln!(out, "# operator: {name}")?;
    writeln!(out, "# dimension: {}", op.dim())?;
    writeln!(out, "# modes: {}", modeset.len())?;
    writeln!(out, "# ordering: ascending (energy, label)")?;
    for (i, mode) in modeset.modes().iter().enumerate() {
        writeln!(out, "# mode {i}: {} energy={:.16e}", mode.label, mode.energy)?;
    }
    writeln!(out, "# entries: row col re im")?;
    for (r, c, v) in op.entries() {
        writeln!(out, "{r} {c} {:.16e} {:.16e}", v.re, v.im)?;
    }
    Ok(())
}

#[derive(Debug)]
pub struct ImportedOperator {
    pub name: String,
    pub dim: usize,
    pub matrix: FockOperator,
}

pub fn read_operator<R: BufRead>(input: R) -> Result<ImportedOperator> {
    let mut name = String::new();
    let mut dim: Option<usize> = None;
    let mut triplets = Vec::new();
    for line in input.lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(v) = rest.strip_prefix("operator:") {
                name = v.trim().to_string();
            } else if let Some(v) = rest.strip_prefix("dimension:") {
                dim = Some(
                    v.trim().parse().map_err(|e| Error::Parse(format!("bad dimension: {e}")))?,
                );
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(Error::Parse(format!(
                "expected 'row col re im', got {} fields: {line:?}",
                fields.len()
            )));
        }
        let row: u32 = fields[0].parse().map_err(|e| Error::Parse(format!("bad row: {e}")))?;
        let col: u32 = fields[1].parse().map_err(|e| Error::Parse(format!("bad col: {e}")))?;
        let re: f64 = fields[2].parse().map_err(|e| Error::Parse(format!("bad re: {e}")))?;
        let im: f64 = fields[3].parse().map_err(|e| Error::Parse(format!("bad im: {e}")))?;
        triplets.push((row, col, Complex64::new(re, im)));
    }
    let dim = dim.ok_or_else(|| Error::Parse("missing '# dimension:' header".into()))?;
    if let Some(&(r, c, _)) =
        triplets.iter().find(|&&(r, c, _)| r as usize >= dim || c as usize >= dim)
    {
        return Err(Error::Parse(format!("entry ({r}, {c}) outside dimension {dim}")));
    }
    Ok(ImportedOperator { name, dim, matrix: FockOperator::from_triplets(dim, triplets) })
}
