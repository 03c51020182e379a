//! Flag/config-file resolution.

use std::path::PathBuf;

use diracosc::OscParams;
use serde::Deserialize;

use crate::CommonArgs;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Runtime(String),
}

impl From<diracosc::Error> for CliError {
    fn from(e: diracosc::Error) -> Self {
        use diracosc::Error::*;
        match e {
            InvalidParams(_)
            | InvalidQuantumNumbers(_)
            | Domain(_)
            | QuadratureOrder(_)
            | ModeLimit { .. } => CliError::Config(e.to_string()),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

/// Flat JSON config file; every key mirrors a flag.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    mass: Option<f64>,
    omega: Option<f64>,
    dim: Option<u32>,
    n_max: Option<u32>,
    kappa_max: Option<u32>,
    fock_modes: Option<u32>,
    quad_order: Option<usize>,
    format: Option<String>,
    out: Option<PathBuf>,
    include_negative_zero: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Fully resolved run configuration (defaults < config file < flags).
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub mass: f64,
    pub omega: f64,
    pub dim: u32,
    pub n_max: u32,
    pub kappa_max: u32,
    pub fock_modes: u32,
    quad_order: Option<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub include_negative_zero: bool,
}

impl RunConfig {
    pub fn resolve(args: &CommonArgs) -> Result<Self, CliError> {
        let file: FileConfig = match &args.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    CliError::Config(format!("cannot read {}: {e}", path.display()))
                })?;
                serde_json::from_str(&text)
                    .map_err(|e| CliError::Config(format!("bad config {}: {e}", path.display())))?
            }
            None => FileConfig::default(),
        };
        let cfg = Self {
            mass: args.mass.or(file.mass).unwrap_or(1.0),
            omega: args.omega.or(file.omega).unwrap_or(1.0),
            dim: args.dim.or(file.dim).unwrap_or(1),
            n_max: args.n_max.or(file.n_max).unwrap_or(20),
            kappa_max: args.kappa_max.or(file.kappa_max).unwrap_or(3),
            fock_modes: args.fock_modes.or(file.fock_modes).unwrap_or(7),
            quad_order: args.quad_order.or(file.quad_order),
            format: match args
                .format
                .clone()
                .or(file.format)
                .unwrap_or_else(|| "csv".to_string())
                .as_str()
            {
                "csv" => Format::Csv,
                "json" => Format::Json,
                other => {
                    return Err(CliError::Config(format!(
                        "format must be csv or json, got {other:?}"
                    )))
                }
            },
            out: args.out.clone().or(file.out),
            include_negative_zero: args.include_negative_zero
                || file.include_negative_zero.unwrap_or(false),
        };
        if !(cfg.mass.is_finite() && cfg.mass > 0.0) {
            return Err(CliError::Config(format!("mass must be > 0, got {}", cfg.mass)));
        }
        if !(cfg.omega.is_finite() && cfg.omega >= 0.0) {
            return Err(CliError::Config(format!("omega must be >= 0, got {}", cfg.omega)));
        }
        if cfg.dim != 1 && cfg.dim != 3 {
            return Err(CliError::Config(format!("dim must be 1 or 3, got {}", cfg.dim)));
        }
        if cfg.fock_modes == 0 || cfg.fock_modes as usize > diracosc::fock::MAX_MODES {
            return Err(CliError::Config(format!(
                "fock_modes must lie in 1..={}, got {}",
                diracosc::fock::MAX_MODES,
                cfg.fock_modes
            )));
        }
        if let Some(q) = cfg.quad_order {
            if q < 2 {
                return Err(CliError::Config(format!("quad_order must be >= 2, got {q}")));
            }
        }
        Ok(cfg)
    }

    pub fn params(&self) -> Result<OscParams, CliError> {
        Ok(OscParams::new(self.mass, self.omega)?)
    }

    /// Caller-supplied order or the documented default 2 n_max + 32.
    pub fn quad_order(&self) -> usize {
        self.quad_order.unwrap_or(2 * self.n_max as usize + 32)
    }
}
