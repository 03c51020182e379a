//! Dirac oscillator toolkit.
//!
//! The Dirac oscillator is the Dirac equation with the substitution
//! `p -> p - i m ω β r`, an exactly solvable relativistic bound system.
//! This crate implements it end-to-end in natural units (ħ = c = 1):
//!
//! - [`specfun`]: stable Hermite/Laguerre/spherical-harmonic evaluation and
//!   the quadrature rules used by every integral in the test surface.
//! - [`osc1d`]: the (1+1)-dimensional oscillator: spectrum, spinor
//!   eigenfunctions, ladder structure, Hamiltonian residuals, covariant
//!   potential.
//! - [`osc3d`]: the (3+1)-dimensional oscillator: quantum-number algebra,
//!   radial solutions, both energy branches, orthonormality/completeness.
//! - [`fock`]: canonical quantization on a truncated fermionic Fock space:
//!   Jordan-Wigner ladder matrices, sea vacuum, normal ordering, charge.
//! - [`propagator`]: the Feynman propagator of the (1+1) oscillator field in
//!   coordinate and momentum space.

pub mod dirac;
pub mod error;
pub mod fock;
pub mod osc1d;
pub mod osc3d;
pub mod params;
pub mod propagator;
pub mod specfun;

pub use dirac::{GammaRep, Spinor};
pub use error::{Error, Result};
pub use params::OscParams;
