//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid oscillator parameters: {0}")]
    InvalidParams(String),

    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),

    #[error("invalid argument: {0}")]
    Domain(String),

    #[error("quadrature order must be >= 1, got {0}")]
    QuadratureOrder(usize),

    #[error("mode set of {modes} modes exceeds the truncation bound of {max} (dimension 2^{max})")]
    ModeLimit { modes: usize, max: usize },

    #[error("grid too coarse: differentiation self-test failed (relative error {err:.3e})")]
    GridTooCoarse { err: f64 },

    #[error("p0^2 = {p0_squared:.6e} is within {distance:.3e} of the n = {n} pole")]
    PoleProximity { n: usize, p0_squared: f64, distance: f64 },

    #[error("contour integration did not converge: {0}")]
    ContourNonConvergent(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
