//! `wavefn`: sample one eigenfunction on a grid.

use diracosc::osc1d::Grid1D;
use diracosc::osc3d::{Qnum3D, Sign};
use diracosc::{osc1d, osc3d, Spinor};

use super::{linear_points, parse_grid, GridSpec};
use crate::config::{CliError, RunConfig};
use crate::output::{emit, Cell, Table};

fn component_columns(first: &str) -> Vec<String> {
    let mut cols = vec![first.to_string()];
    for c in 1..=4 {
        cols.push(format!("re_c{c}"));
        cols.push(format!("im_c{c}"));
    }
    cols
}

fn spinor_cells(coord: f64, psi: &Spinor) -> Vec<Cell> {
    let mut row = vec![Cell::F64(coord)];
    for c in 0..4 {
        row.push(Cell::F64(psi[c].re));
        row.push(Cell::F64(psi[c].im));
    }
    row
}

/// Parses "+0" / "-0" / signed integers into a 3D (sign, |n|) pair.
fn parse_signed_n(text: &str) -> Result<(Sign, u32), CliError> {
    let trimmed = text.trim();
    let (sign, digits) = match trimmed.strip_prefix('-') {
        Some(rest) => (Sign::Minus, rest),
        None => (Sign::Plus, trimmed.strip_prefix('+').unwrap_or(trimmed)),
    };
    let n_abs: u32 =
        digits.parse().map_err(|e| CliError::Config(format!("bad quantum number n: {e}")))?;
    Ok((sign, n_abs))
}

/// Parses half-integers: "1/2", "-3/2", "0.5", "-1.5".
fn parse_half_integer(text: &str) -> Result<i32, CliError> {
    let trimmed = text.trim();
    if let Some((num, den)) = trimmed.split_once('/') {
        let num: i32 =
            num.trim().parse().map_err(|e| CliError::Config(format!("bad g numerator: {e}")))?;
        let den: i32 =
            den.trim().parse().map_err(|e| CliError::Config(format!("bad g denominator: {e}")))?;
        if den != 2 {
            return Err(CliError::Config(format!("g must be a half-integer, got {trimmed:?}")));
        }
        return Ok(num);
    }
    let value: f64 = trimmed.parse().map_err(|e| CliError::Config(format!("bad g: {e}")))?;
    let twice = 2.0 * value;
    if twice.fract() != 0.0 {
        return Err(CliError::Config(format!("g must be a half-integer, got {trimmed:?}")));
    }
    Ok(twice as i32)
}

#[allow(clippy::too_many_arguments)]
pub fn run(
    cfg: &RunConfig,
    n: &str,
    kappa: Option<i32>,
    g: Option<&str>,
    grid: &str,
    theta: f64,
    phi: f64,
) -> Result<(), CliError> {
    let params = cfg.params()?;
    let spec = parse_grid(grid)?;
    let table = match cfg.dim {
        1 => {
            if n.trim() == "-0" {
                return Err(CliError::Config(
                    "the one-dimensional oscillator has a single n = 0 state".into(),
                ));
            }
            let n: i64 = n.trim().parse().map_err(|e| CliError::Config(format!("bad n: {e}")))?;
            let zs = match spec {
                GridSpec::Linear { min, max, count } => linear_points(min, max, count),
                GridSpec::Hermite { order } => {
                    Grid1D::HermiteCollocation { order }.points(&params)?
                }
            };
            let mut t = Table { columns: component_columns("z"), rows: vec![] };
            for z in zs {
                let psi = osc1d::wavefunction(&params, n, z)?;
                t.rows.push(spinor_cells(z, &psi));
            }
            t
        }
        3 => {
            let (n_sign, n_abs) = parse_signed_n(n)?;
            let kappa =
                kappa.ok_or_else(|| CliError::Config("--kappa is required when dim = 3".into()))?;
            let twice_g = parse_half_integer(
                g.ok_or_else(|| CliError::Config("--g is required when dim = 3".into()))?,
            )?;
            let qn = Qnum3D::new(n_sign, n_abs, kappa, twice_g)?;
            let rs = match spec {
                GridSpec::Linear { min, max, count } => {
                    if min <= 0.0 {
                        return Err(CliError::Config("3D grids need min > 0 (r > 0)".into()));
                    }
                    linear_points(min, max, count)
                }
                GridSpec::Hermite { .. } => {
                    return Err(CliError::Config(
                        "hermite collocation grids apply to dim = 1 only".into(),
                    ))
                }
            };
            let mut t = Table { columns: component_columns("r"), rows: vec![] };
            for r in rs {
                let psi = osc3d::wavefunction3d(&params, &qn, r, theta, phi)?;
                t.rows.push(spinor_cells(r, &psi));
            }
            t
        }
        _ => unreachable!(),
    };
    emit(&table, cfg.format, cfg.out.as_deref())?;
    Ok(())
}
