//! Feynman propagator of the (1+1) Dirac oscillator field.
//!
//! The coordinate-space object is the truncated time-ordered two-point
//! function ⟨0| T ψ(z,t) ψ̄(z',t') |0⟩ = i S^F: a Θ-ordered mode sum over
//! the positive-energy spinors u_n and the negative-energy spinors ν_n.
//! The momentum-space mode sum and the contour identity that connects the
//! two live here as well.

use nalgebra::{Matrix4, RowVector4};
use num_complex::Complex64;

use crate::dirac::{GammaRep, Spinor};
use crate::error::{Error, Result};
use crate::osc1d;
use crate::params::OscParams;
use crate::specfun::{hermite_function_series, legendre_rule};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Coordinate,
    Momentum,
}

/// 4×4 value of a propagator mode sum at fixed arguments.
#[derive(Debug, Clone)]
pub struct PropagatorSample {
    pub matrix: Matrix4<Complex64>,
    pub cutoff: usize,
    pub space: Space,
}

fn outer(u: &Spinor, ubar: &RowVector4<Complex64>) -> Matrix4<Complex64> {
    u * ubar
}

fn bar(rep: &GammaRep, u: &Spinor) -> RowVector4<Complex64> {
    u.adjoint() * rep.beta
}

/// Θ(t-t') Σ_{n=0}^{N} u_n(z) ū_n(z') e^{-iE_n(t-t')}
/// - Θ(t'-t) Σ_{n=1}^{N} ν_n(z) ν̄_n(z') e^{+iE_n(t-t')}.
///
/// Equal times resolve to the particle ordering (the t → t'⁺ limit).
pub fn coordinate_propagator(
    params: &OscParams,
    z: f64,
    t: f64,
    zp: f64,
    tp: f64,
    cutoff: usize,
) -> Result<PropagatorSample> {
    let rep = GammaRep::standard();
    let dt = t - tp;
    let mut sum = Matrix4::<Complex64>::zeros();
    if dt >= 0.0 {
        for n in 0..=cutoff as i64 {
            let e = osc1d::energy(params, n);
            let u = osc1d::wavefunction(params, n, z)?;
            let ubar = bar(&rep, &osc1d::wavefunction(params, n, zp)?);
            let phase = Complex64::from_polar(1.0, -e * dt);
            sum += outer(&u, &ubar).map(|c| c * phase);
        }
    } else {
        for n in 1..=cutoff as i64 {
            let e = osc1d::energy(params, n);
            let v = osc1d::wavefunction(params, -n, z)?;
            let vbar = bar(&rep, &osc1d::wavefunction(params, -n, zp)?);
            let phase = Complex64::from_polar(1.0, e * dt);
            sum -= outer(&v, &vbar).map(|c| c * phase);
        }
    }
    Ok(PropagatorSample { matrix: sum, cutoff, space: Space::Coordinate })
}

/// Momentum-space mode spinor: the Fourier transform of ψ_n componentwise,
/// using F{h_k}(q) = (-i)^k h_k(q) with the ζ = sqrt(mω) z scaling tracked:
/// each component of ψ_n(z) maps to (mω)^{-1/4} (-i)^k h_k(p/sqrt(mω))
/// times its spinor weight (kernel e^{-ipz}/sqrt(2π)).
pub fn mode_spinor_momentum(params: &OscParams, n: i64, p: f64) -> Result<Spinor> {
    params.require_oscillator()?;
    let scale = params.inv_length();
    let q = p / scale;
    let pref = scale.sqrt().recip();
    let n_abs = n.unsigned_abs() as usize;
    let (xi1, xi2) = osc1d::spinor_xi(params, n);
    let series = hermite_function_series(n_abs, q);
    let phase = |k: usize| Complex64::i().powu(3 * k as u32); // (-i)^k
    let upper = Complex64::from(pref * series[n_abs]) * phase(n_abs);
    let lower = if n_abs >= 1 {
        Complex64::from(pref * series[n_abs - 1]) * phase(n_abs - 1)
    } else {
        Complex64::ZERO
    };
    Ok(Spinor::new(upper * xi1[0], upper * xi1[1], lower * xi2[0], lower * xi2[1]))
}

/// Squared pole positions p_n² = 2|n| m ω + m² of the momentum-space sum.
pub fn pole_squares(params: &OscParams, cutoff: usize) -> Vec<f64> {
    (0..=cutoff).map(|n| 2.0 * n as f64 * params.m_omega() + params.mass * params.mass).collect()
}

/// Relative pole-guard width of [`momentum_propagator`].
pub const POLE_GUARD: f64 = 1e-12;

/// Σ_{n=0}^{N} (-1)^n / (p0² - p_n²) ·
/// [u_n(p_z) ū_n(p_z') - v_{n-1}(p_z) v̄_{n-1}(p_z')], v term absent at
/// n = 0 (v_0 evaluates on the n = 0 mode, whose negative label coincides
/// with it). Errors out when p0² sits within the pole guard of some p_n².
pub fn momentum_propagator(
    params: &OscParams,
    p0: f64,
    pz: f64,
    pzp: f64,
    cutoff: usize,
) -> Result<PropagatorSample> {
    let rep = GammaRep::standard();
    let p0sq = p0 * p0;
    let mut sum = Matrix4::<Complex64>::zeros();
    for (n, pn2) in pole_squares(params, cutoff).into_iter().enumerate() {
        let denom = p0sq - pn2;
        if denom.abs() < POLE_GUARD * pn2.max(1.0) {
            return Err(Error::PoleProximity { n, p0_squared: p0sq, distance: denom.abs() });
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let u = mode_spinor_momentum(params, n as i64, pz)?;
        let ubar = bar(&rep, &mode_spinor_momentum(params, n as i64, pzp)?);
        let mut numerator = outer(&u, &ubar);
        if n >= 1 {
            let v = mode_spinor_momentum(params, -((n - 1) as i64), pz)?;
            let vbar = bar(&rep, &mode_spinor_momentum(params, -((n - 1) as i64), pzp)?);
            numerator -= outer(&v, &vbar);
        }
        sum += numerator.map(|c| c * Complex64::from(sign / denom));
    }
    Ok(PropagatorSample { matrix: sum, cutoff, space: Space::Momentum })
}

/// Both sides of the contour identity
/// i ∮ dp0/2π e^{-i p0 dt} / (p0² - p_n²)
///   = Θ(dt) e^{-iE_n dt}/2E_n + Θ(-dt) e^{+iE_n dt}/2E_n.
///
/// The left side is integrated numerically along the real axis with the
/// Feynman shift p_n² → p_n² - iε; ε = 1e-3 and 1e-4 are combined by
/// Richardson extrapolation (the leading ε-error of the shifted poles is
/// linear). Returns (lhs, rhs).
pub fn contour_identity_check(
    params: &OscParams,
    n: u32,
    dt: f64,
) -> Result<(Complex64, Complex64)> {
    if dt == 0.0 || !dt.is_finite() {
        return Err(Error::Domain("contour check needs dt != 0".into()));
    }
    let pn2 = 2.0 * n as f64 * params.m_omega() + params.mass * params.mass;
    let e_n = pn2.sqrt();
    let rhs = Complex64::from_polar(1.0, -e_n * dt.abs()) / Complex64::from(2.0 * e_n);

    let eps1 = 1e-3;
    let eps2 = 1e-4;
    let l1 = contour_lhs(pn2, dt, eps1)?;
    let l2 = contour_lhs(pn2, dt, eps2)?;
    let lhs =
        (l1 * Complex64::from(-eps2) + l2 * Complex64::from(eps1)) / Complex64::from(eps1 - eps2);
    Ok((lhs, rhs))
}

// i/2π ∫_{-P}^{P} e^{-i p0 dt} / (p0² - pn² + iε) dp0 plus first-order
// endpoint corrections for the truncated tails.
fn contour_lhs(pn2: f64, dt: f64, eps: f64) -> Result<Complex64> {
    let e_n = pn2.sqrt();
    let abs_dt = dt.abs();
    // Tail error after one integration by parts falls like 1/(dt² P³);
    // this cutoff targets ~1e-10 absolute.
    let p_max = (1.0 / (std::f64::consts::PI * 1e-10 * abs_dt * abs_dt))
        .powf(1.0 / 3.0)
        .max(8.0 * e_n + 20.0);
    // Panel breakpoints: oscillation-resolving uniform mesh plus geometric
    // refinement around the shifted poles at ±E_n.
    let base_step = (std::f64::consts::PI / (4.0 * abs_dt)).clamp(0.05, 4.0);
    let mut breaks = Vec::new();
    let mut x = -p_max;
    while x < p_max {
        breaks.push(x);
        x += base_step;
    }
    breaks.push(p_max);
    let eps_width = eps / (2.0 * e_n);
    for pole in [-e_n, e_n] {
        let mut d = 2.0f64.min(p_max - pole.abs());
        while d > eps_width / 4.0 {
            breaks.push(pole - d);
            breaks.push(pole + d);
            d *= 0.5;
        }
        breaks.push(pole);
    }
    breaks.retain(|b| b.abs() <= p_max);
    breaks.sort_by(f64::total_cmp);
    breaks.dedup_by(|a, b| (*a - *b).abs() < 1e-13);

    let (gl_nodes, gl_weights) = legendre_rule(16);
    let shift = Complex64::new(0.0, eps);
    let integrand = |p: f64| -> Complex64 {
        Complex64::from_polar(1.0, -p * dt) / (Complex64::from(p * p - pn2) + shift)
    };
    let mut acc = Complex64::ZERO;
    for w in breaks.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b - a <= 0.0 {
            continue;
        }
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        for (&xg, &wg) in gl_nodes.iter().zip(&gl_weights) {
            acc += integrand(mid + half * xg) * Complex64::from(half * wg);
        }
    }
    // First-order endpoint corrections: ∫_P^∞ e^{-ipt} g ≈ e^{-iPt} g(P)/(i dt)
    // and the mirrored term at -P.
    let g = |p: f64| Complex64::ONE / (Complex64::from(p * p - pn2) + shift);
    let idt = Complex64::new(0.0, dt);
    acc += Complex64::from_polar(1.0, -p_max * dt) * g(p_max) / idt;
    acc -= Complex64::from_polar(1.0, p_max * dt) * g(-p_max) / idt;

    let value = Complex64::new(0.0, 1.0 / (2.0 * std::f64::consts::PI)) * acc;
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::ContourNonConvergent(format!(
            "non-finite contour value at eps = {eps}"
        )));
    }
    Ok(value)
}
