//! Associated Laguerre polynomials.

use crate::error::{Error, Result};

/// Associated Laguerre polynomial L_n^α(x) for α > -1, x ≥ 0.
///
/// Stable three-term recurrence
/// (k+1) L_{k+1}^α = (2k+1+α-x) L_k^α - (k+α) L_{k-1}^α.
pub fn laguerre_l(n: usize, alpha: f64, x: f64) -> Result<f64> {
    if !(alpha > -1.0) {
        return Err(Error::Domain(format!("laguerre alpha must be > -1, got {alpha}")));
    }
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("laguerre x must be >= 0, got {x}")));
    }
    Ok(laguerre_unchecked(n, alpha, x))
}

pub(crate) fn laguerre_unchecked(n: usize, alpha: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut lm = 1.0; // L_0
    let mut l = 1.0 + alpha - x; // L_1
    for k in 1..n {
        let kf = k as f64;
        let lp = ((2.0 * kf + 1.0 + alpha - x) * l - (kf + alpha) * lm) / (kf + 1.0);
        lm = l;
        l = lp;
    }
    l
}

/// d/dx L_n^α(x) = -L_{n-1}^{α+1}(x); zero for n = 0.
pub(crate) fn laguerre_derivative(n: usize, alpha: f64, x: f64) -> f64 {
    if n == 0 {
        0.0
    } else {
        -laguerre_unchecked(n - 1, alpha + 1.0, x)
    }
}
