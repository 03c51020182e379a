pub mod check;
pub mod fock;
pub mod propagator;
pub mod spectrum;
pub mod wavefn;

use crate::config::CliError;

/// Grid spec "min,max,count" or "hermite:ORDER".
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridSpec {
    Linear { min: f64, max: f64, count: usize },
    Hermite { order: usize },
}

pub fn parse_grid(spec: &str) -> Result<GridSpec, CliError> {
    if let Some(order) = spec.strip_prefix("hermite:") {
        let order: usize =
            order.parse().map_err(|e| CliError::Config(format!("bad hermite grid order: {e}")))?;
        if order < 2 {
            return Err(CliError::Config("hermite grid order must be >= 2".into()));
        }
        return Ok(GridSpec::Hermite { order });
    }
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Config(format!(
            "grid must be \"min,max,count\" or \"hermite:ORDER\", got {spec:?}"
        )));
    }
    let min: f64 =
        parts[0].trim().parse().map_err(|e| CliError::Config(format!("bad grid min: {e}")))?;
    let max: f64 =
        parts[1].trim().parse().map_err(|e| CliError::Config(format!("bad grid max: {e}")))?;
    let count: usize =
        parts[2].trim().parse().map_err(|e| CliError::Config(format!("bad grid count: {e}")))?;
    if count < 1 || !(max >= min) {
        return Err(CliError::Config("grid needs count >= 1 and max >= min".into()));
    }
    Ok(GridSpec::Linear { min, max, count })
}

pub fn linear_points(min: f64, max: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![min];
    }
    let h = (max - min) / (count - 1) as f64;
    (0..count).map(|i| min + i as f64 * h).collect()
}
