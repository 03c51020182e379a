//! Special functions and quadrature.
//!
//! Everything downstream (eigenfunctions, normalizations, inner products)
//! reduces to the functions in this module. All of them are pure and safe
//! for unlimited concurrent use.

mod gamma;
mod hermite;
mod laguerre;
mod quadrature;
mod spherical;

pub use gamma::ln_gamma;
pub use hermite::{
    hermite_function, hermite_function_derivative, hermite_function_series, hermite_h,
};
pub use laguerre::laguerre_l;
pub use quadrature::{QuadratureRule, RuleKind, WeightConvention};
pub use spherical::{spherical_harmonic, spinor_spherical_harmonic};

pub(crate) use laguerre::{laguerre_derivative, laguerre_unchecked};
pub(crate) use quadrature::legendre_rule;
