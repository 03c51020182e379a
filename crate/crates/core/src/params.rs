//! Physical inputs of the oscillator.

use crate::error::{Error, Result};

/// Mass `m` and frequency `ω` in natural units (ħ = c = 1).
///
/// These are the only physical inputs. Lengths carry the inverse unit, so
/// the natural length scale of the oscillator is `1/sqrt(m ω)`.
///
/// `omega = 0` is representable because the spectrum and the gap admit a
/// free-field limit check; operations that need the oscillator length scale
/// (wavefunctions, quadrature scales) reject it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscParams {
    pub mass: f64,
    pub omega: f64,
}

impl OscParams {
    pub fn new(mass: f64, omega: f64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidParams(format!("mass must be > 0, got {mass}")));
        }
        if !(omega.is_finite() && omega >= 0.0) {
            return Err(Error::InvalidParams(format!("omega must be >= 0, got {omega}")));
        }
        Ok(Self { mass, omega })
    }

    /// `m ω`, the square of the inverse length scale.
    pub fn m_omega(&self) -> f64 {
        self.mass * self.omega
    }

    /// `sqrt(m ω)`, the inverse length scale of the oscillator.
    pub fn inv_length(&self) -> f64 {
        self.m_omega().sqrt()
    }

    /// Errors unless `omega > 0`, for operations where the length scale
    /// `1/sqrt(m ω)` degenerates.
    pub fn require_oscillator(&self) -> Result<()> {
        if self.omega <= 0.0 {
            return Err(Error::InvalidParams(
                "omega must be > 0 for this operation (the zeta scaling degenerates at omega = 0)"
                    .into(),
            ));
        }
        Ok(())
    }
}
