//! `propagator`: grid sweeps of the coordinate- or momentum-space mode sum.

use diracosc::propagator as prop;
use nalgebra::Matrix4;
use num_complex::Complex64;

use super::{linear_points, parse_grid, GridSpec};
use crate::config::{CliError, RunConfig};
use crate::output::{emit, Cell, Table};
use crate::PropagatorSpace;

fn entry_columns(sweep: &str) -> Vec<String> {
    let mut cols = vec![sweep.to_string()];
    for r in 1..=4 {
        for c in 1..=4 {
            cols.push(format!("re_{r}{c}"));
            cols.push(format!("im_{r}{c}"));
        }
    }
    cols
}

fn matrix_cells(coord: f64, m: &Matrix4<Complex64>) -> Vec<Cell> {
    let mut row = vec![Cell::F64(coord)];
    for r in 0..4 {
        for c in 0..4 {
            row.push(Cell::F64(m[(r, c)].re));
            row.push(Cell::F64(m[(r, c)].im));
        }
    }
    row
}

#[allow(clippy::too_many_arguments)]
pub fn run(
    cfg: &RunConfig,
    space: PropagatorSpace,
    grid: &str,
    z_prime: f64,
    t: f64,
    t_prime: f64,
    pz: f64,
    pz_prime: f64,
) -> Result<(), CliError> {
    let params = cfg.params()?;
    let points = match parse_grid(grid)? {
        GridSpec::Linear { min, max, count } => linear_points(min, max, count),
        GridSpec::Hermite { .. } => {
            return Err(CliError::Config("propagator sweeps use \"min,max,count\" grids".into()))
        }
    };
    let cutoff = cfg.n_max as usize;
    let table = match space {
        PropagatorSpace::Coordinate => {
            let mut t_out = Table { columns: entry_columns("z"), rows: vec![] };
            for z in points {
                let sample = prop::coordinate_propagator(&params, z, t, z_prime, t_prime, cutoff)?;
                t_out.rows.push(matrix_cells(z, &sample.matrix));
            }
            t_out
        }
        PropagatorSpace::Momentum => {
            let mut t_out = Table { columns: entry_columns("p0"), rows: vec![] };
            for p0 in points {
                let sample = prop::momentum_propagator(&params, p0, pz, pz_prime, cutoff)?;
                t_out.rows.push(matrix_cells(p0, &sample.matrix));
            }
            t_out
        }
    };
    emit(&table, cfg.format, cfg.out.as_deref())?;
    Ok(())
}
