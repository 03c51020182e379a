//! Spherical harmonics and spinor spherical harmonics.

use nalgebra::Vector2;
use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Orthonormal complex spherical harmonic Y_{l,mz}(θ, φ) with the
/// Condon-Shortley phase.
pub fn spherical_harmonic(l: usize, mz: i32, theta: f64, phi: f64) -> Result<Complex64> {
    if mz.unsigned_abs() as usize > l {
        return Err(Error::Domain(format!("|mz| = {} exceeds l = {l}", mz.abs())));
    }
    let m = mz.unsigned_abs() as usize;
    let plm = normalized_assoc_legendre(l, m, theta);
    let phase = Complex64::from_polar(1.0, m as f64 * phi);
    let y_pos = plm * phase;
    if mz >= 0 {
        Ok(y_pos)
    } else {
        // Y_{l,-m} = (-1)^m conj(Y_{l,m})
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        Ok(sign * y_pos.conj())
    }
}

/// Spinor spherical harmonic 𝒴_{κ,g}(θ, φ), a Clebsch-Gordan coupled pair
/// of spherical harmonics with total angular momentum j = |κ| - 1/2 and
/// z-projection g.
///
/// `twice_g` carries the half-integer g exactly as 2g. Requires κ ≠ 0 and
/// |g| ≤ j. The orbital momentum is l = |κ| - 1 for κ < 0 (j = l + 1/2
/// coupling) and l = κ for κ > 0 (j = l - 1/2 coupling); the companion
/// harmonic that pairs with κ in a Dirac spinor is obtained by calling with
/// -κ, which lands on the same j and the complementary l.
pub fn spinor_spherical_harmonic(
    kappa: i32,
    twice_g: i32,
    theta: f64,
    phi: f64,
) -> Result<Vector2<Complex64>> {
    if kappa == 0 {
        return Err(Error::InvalidQuantumNumbers("kappa must be nonzero".into()));
    }
    if twice_g.rem_euclid(2) == 0 {
        return Err(Error::InvalidQuantumNumbers(format!(
            "g must be a half-integer, got 2g = {twice_g}"
        )));
    }
    let twice_j = 2 * kappa.abs() - 1;
    if twice_g.abs() > twice_j {
        return Err(Error::InvalidQuantumNumbers(format!(
            "|g| = {}/2 exceeds j = {}/2 for kappa = {kappa}",
            twice_g.abs(),
            twice_j
        )));
    }
    let j = twice_j as f64 / 2.0;
    let g = twice_g as f64 / 2.0;
    let (l, c_up, c_down) = if kappa < 0 {
        // j = l + 1/2: ( sqrt((j+g)/2j), sqrt((j-g)/2j) )
        let l = (-kappa - 1) as usize;
        ((l), ((j + g) / (2.0 * j)).sqrt(), ((j - g) / (2.0 * j)).sqrt())
    } else {
        // j = l - 1/2: ( -sqrt((j-g+1)/(2j+2)), sqrt((j+g+1)/(2j+2)) )
        let l = kappa as usize;
        (l, -((j - g + 1.0) / (2.0 * j + 2.0)).sqrt(), ((j + g + 1.0) / (2.0 * j + 2.0)).sqrt())
    };
    let m_up = (twice_g - 1) / 2;
    let m_down = (twice_g + 1) / 2;
    let y_up = if m_up.unsigned_abs() as usize <= l {
        spherical_harmonic(l, m_up, theta, phi)?
    } else {
        Complex64::ZERO
    };
    let y_down = if m_down.unsigned_abs() as usize <= l {
        spherical_harmonic(l, m_down, theta, phi)?
    } else {
        Complex64::ZERO
    };
    Ok(Vector2::new(c_up * y_up, c_down * y_down))
}

// Fully normalized associated Legendre P̄_l^m(cos θ) for m ≥ 0, with the
// Condon-Shortley phase folded in, so that Y_{lm} = P̄_l^m e^{imφ}.
fn normalized_assoc_legendre(l: usize, m: usize, theta: f64) -> f64 {
    let (sin_t, cos_t) = theta.sin_cos();
    // P̄_m^m by the diagonal recurrence.
    let mut pmm = (1.0 / (4.0 * PI)).sqrt();
    for k in 1..=m {
        let kf = k as f64;
        pmm *= -((2.0 * kf + 1.0) / (2.0 * kf)).sqrt() * sin_t;
    }
    if l == m {
        return pmm;
    }
    let mf = m as f64;
    let mut pm1 = (2.0 * mf + 3.0).sqrt() * cos_t * pmm;
    if l == m + 1 {
        return pm1;
    }
    let mut pm2 = pmm;
    for k in (m + 2)..=l {
        let kf = k as f64;
        let a = ((4.0 * kf * kf - 1.0) / (kf * kf - mf * mf)).sqrt();
        let b =
            (((kf - 1.0) * (kf - 1.0) - mf * mf) / (4.0 * (kf - 1.0) * (kf - 1.0) - 1.0)).sqrt();
        let p = a * (cos_t * pm1 - b * pm2);
        pm2 = pm1;
        pm1 = p;
    }
    pm1
}
