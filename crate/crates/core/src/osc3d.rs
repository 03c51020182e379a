//! (3+1)-dimensional Dirac oscillator.
//!
//! States are labeled by (n, κ, g): a radial quantum number n with an
//! explicit sign (a signed zero distinguishes the E = ±m labels of the
//! κ < 0 branch), the angular-momentum/parity integer κ ≠ 0, and the
//! half-integer z-projection g with |g| ≤ |κ| - 1/2.
//!
//! Spectrum: E = ±sqrt(m² + 4|n| m ω) for κ < 0 and
//! E = ±sqrt(m² + 4(|n| + l + 1/2) m ω) with l = κ for κ > 0.

use nalgebra::Vector2;
use num_complex::Complex64;

use crate::dirac::Spinor;
use crate::error::{Error, Result};
use crate::params::OscParams;
use crate::specfun::{
    laguerre_derivative, laguerre_unchecked, legendre_rule, ln_gamma, spinor_spherical_harmonic,
    QuadratureRule,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Quantum numbers (n, κ, g); `twice_g` stores 2g exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Qnum3D {
    pub n_sign: Sign,
    pub n_abs: u32,
    pub kappa: i32,
    pub twice_g: i32,
}

impl Qnum3D {
    /// Validated constructor. The label (-0, κ > 0) is rejected here; the
    /// enumeration API exposes a switch for it (see [`enumerate_labels`]).
    pub fn new(n_sign: Sign, n_abs: u32, kappa: i32, twice_g: i32) -> Result<Self> {
        let qn = Self { n_sign, n_abs, kappa, twice_g };
        qn.validate(false)?;
        Ok(qn)
    }

    pub fn validate(&self, allow_negative_zero_positive_kappa: bool) -> Result<()> {
        if self.kappa == 0 {
            return Err(Error::InvalidQuantumNumbers("kappa must be nonzero".into()));
        }
        if self.twice_g.rem_euclid(2) == 0 {
            return Err(Error::InvalidQuantumNumbers(format!(
                "g must be half-integer, got 2g = {}",
                self.twice_g
            )));
        }
        if self.twice_g.abs() > 2 * self.kappa.abs() - 1 {
            return Err(Error::InvalidQuantumNumbers(format!(
                "|g| = {}/2 exceeds |kappa| - 1/2 for kappa = {}",
                self.twice_g.abs(),
                self.kappa
            )));
        }
        if self.n_sign == Sign::Minus
            && self.n_abs == 0
            && self.kappa > 0
            && !allow_negative_zero_positive_kappa
        {
            return Err(Error::InvalidQuantumNumbers(
                "the signed zero n = -0 belongs to the kappa < 0 branch".into(),
            ));
        }
        Ok(())
    }

    pub fn g(&self) -> f64 {
        self.twice_g as f64 / 2.0
    }

    /// Signed display label for n: "+0", "-0", "3", "-2".
    pub fn n_label(&self) -> String {
        match (self.n_sign, self.n_abs) {
            (Sign::Plus, 0) => "+0".to_string(),
            (Sign::Minus, 0) => "-0".to_string(),
            (Sign::Plus, n) => n.to_string(),
            (Sign::Minus, n) => format!("-{n}"),
        }
    }

    /// Strict ordering key used for deterministic listings.
    pub fn order_key(&self) -> (i32, i32, i64) {
        let n_key = match self.n_sign {
            Sign::Plus => 2 * self.n_abs as i64,
            Sign::Minus => -(2 * self.n_abs as i64) - 1,
        };
        (self.kappa, self.twice_g, n_key)
    }
}

/// Total angular momentum j, orbital momentum l of the upper component and
/// l' of the lower component, all fixed by κ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularNumbers {
    pub j: f64,
    pub l: u32,
    pub l_prime: u32,
}

/// κ = -(l+1) gives j = l + 1/2, l' = l + 1; κ = l gives j = l - 1/2,
/// l' = l - 1.
pub fn angular_numbers(kappa: i32) -> Result<AngularNumbers> {
    if kappa == 0 {
        return Err(Error::InvalidQuantumNumbers("kappa must be nonzero".into()));
    }
    let j = kappa.abs() as f64 - 0.5;
    if kappa < 0 {
        let l = (-kappa - 1) as u32;
        Ok(AngularNumbers { j, l, l_prime: l + 1 })
    } else {
        let l = kappa as u32;
        Ok(AngularNumbers { j, l, l_prime: l - 1 })
    }
}

/// Signed energy of the state; g-independent.
///
/// E(-n, κ) = -E(+n, κ) exactly, with the signed zero carrying E = ±m on
/// the κ < 0 branch.
pub fn energy3d(params: &OscParams, n_sign: Sign, n_abs: u32, kappa: i32) -> Result<f64> {
    if kappa == 0 {
        return Err(Error::InvalidQuantumNumbers("kappa must be nonzero".into()));
    }
    let m = params.mass;
    let mag = if kappa < 0 {
        if n_abs == 0 {
            m
        } else {
            (m * m + 4.0 * n_abs as f64 * params.m_omega()).sqrt()
        }
    } else {
        let l = kappa as f64;
        (m * m + 4.0 * (n_abs as f64 + l + 0.5) * params.m_omega()).sqrt()
    };
    Ok(n_sign.factor() * mag)
}

/// |n'| of the lower radial component: |n| - 1 for κ < 0 (with the G ≡ 0
/// flag at |n| = 0), |n| for κ > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NPrime {
    Value(u32),
    VanishingG,
}

pub fn nprime_abs(n_abs: u32, kappa: i32) -> Result<NPrime> {
    if kappa == 0 {
        return Err(Error::InvalidQuantumNumbers("kappa must be nonzero".into()));
    }
    if kappa < 0 {
        if n_abs == 0 {
            Ok(NPrime::VanishingG)
        } else {
            Ok(NPrime::Value(n_abs - 1))
        }
    } else {
        Ok(NPrime::Value(n_abs))
    }
}

/// Closed-form radial pair (F, G) with its normalization constants.
///
/// F(r) = A (sqrt(mω) r)^{l+1} e^{-mωr²/2} L_{|n|}^{l+1/2}(mωr²)
/// G(r) = sgn(κ)·sgn(E)·A' (sqrt(mω) r)^{l'+1} e^{-mωr²/2} L_{|n'|}^{l'+1/2}(mωr²)
///
/// A and A' are the Γ-function normalization constants evaluated on the
/// signed energy, under which both (E+m)/E and (E-m)/E stay nonnegative on
/// either branch; they make ∫ (F² + G²) dr = 1. The energy-sign factor in
/// G is what the coupled first-order system forces (an overall phase of
/// the pair is free, the relative one is not): with it the pair solves
/// [d/dr + (κ+mωr²)/r]F = (E+m)G and [-d/dr + (κ+mωr²)/r]G = (E-m)F on
/// both energy branches, and opposite-branch states come out orthogonal.
#[derive(Debug, Clone)]
pub struct RadialPair {
    pub qn: Qnum3D,
    pub energy: f64,
    pub norm_f: f64,
    /// Signed coefficient of G (branch sign folded in); 0 when G ≡ 0.
    pub norm_g: f64,
    pub vanishing_g: bool,
    l: u32,
    l_prime: u32,
    n_prime: u32,
    scale2: f64, // m ω
}

impl RadialPair {
    pub fn f(&self, r: f64) -> f64 {
        let u = self.scale2 * r * r;
        let rho = u.sqrt();
        self.norm_f
            * rho.powi(self.l as i32 + 1)
            * (-0.5 * u).exp()
            * laguerre_unchecked(self.qn.n_abs as usize, self.l as f64 + 0.5, u)
    }

    pub fn g(&self, r: f64) -> f64 {
        if self.vanishing_g {
            return 0.0;
        }
        let u = self.scale2 * r * r;
        let rho = u.sqrt();
        self.norm_g
            * rho.powi(self.l_prime as i32 + 1)
            * (-0.5 * u).exp()
            * laguerre_unchecked(self.n_prime as usize, self.l_prime as f64 + 0.5, u)
    }

    /// Analytic dF/dr.
    pub fn f_prime(&self, r: f64) -> f64 {
        radial_derivative(self.norm_f, self.l, self.qn.n_abs, self.scale2, r)
    }

    /// Analytic dG/dr.
    pub fn g_prime(&self, r: f64) -> f64 {
        if self.vanishing_g {
            return 0.0;
        }
        radial_derivative(self.norm_g, self.l_prime, self.n_prime, self.scale2, r)
    }
}

// d/dr of c · ρ^{l+1} e^{-u/2} L_n^{l+1/2}(u), ρ = sqrt(mω) r, u = ρ².
fn radial_derivative(c: f64, l: u32, n: u32, scale2: f64, r: f64) -> f64 {
    let sqrt_s = scale2.sqrt();
    let u = scale2 * r * r;
    let rho = u.sqrt();
    let alpha = l as f64 + 0.5;
    let lag = laguerre_unchecked(n as usize, alpha, u);
    let dlag = laguerre_derivative(n as usize, alpha, u);
    let lf = l as f64;
    c * sqrt_s
        * (-0.5 * u).exp()
        * ((lf + 1.0) * rho.powi(l as i32) * lag - rho.powi(l as i32 + 2) * lag
            + 2.0 * rho.powi(l as i32 + 2) * dlag)
}

/// Builds the normalized radial solution for a state label.
///
/// The label (-0, κ < 0) with E = -m exists in the spectrum bookkeeping
/// but carries no normalizable radial solution: the (E - m) factor
/// annihilates F, |n'| = |n| - 1 < 0 annihilates G, and the coupled system
/// admits no other square-integrable solution at E = -m. Asking for it is
/// an error rather than a silent zero function.
pub fn radial_solution(params: &OscParams, qn: &Qnum3D) -> Result<RadialPair> {
    qn.validate(true)?;
    params.require_oscillator()?;
    if qn.n_sign == Sign::Minus && qn.n_abs == 0 && qn.kappa < 0 {
        return Err(Error::InvalidQuantumNumbers(
            "the E = -m label (n = -0, kappa < 0) has no normalizable eigenfunction".into(),
        ));
    }
    let ang = angular_numbers(qn.kappa)?;
    let e = energy3d(params, qn.n_sign, qn.n_abs, qn.kappa)?;
    let s = params.m_omega();
    let sqrt_s = s.sqrt();
    let n = qn.n_abs;
    // A² = sqrt(mω) |n|! (E+m) / (Γ(|n|+l+3/2) E) on the signed energy.
    let ratio_f = (e + params.mass) / e;
    let a2 = sqrt_s
        * (ln_gamma(n as f64 + 1.0) - ln_gamma(n as f64 + ang.l as f64 + 1.5)).exp()
        * ratio_f;
    let norm_f = a2.max(0.0).sqrt();
    let (n_prime, vanishing_g) = match nprime_abs(n, qn.kappa)? {
        NPrime::Value(v) => (v, false),
        NPrime::VanishingG => (0, true),
    };
    let norm_g = if vanishing_g {
        0.0
    } else {
        let ratio_g = (e - params.mass) / e;
        let a2p = sqrt_s
            * (ln_gamma(n_prime as f64 + 1.0)
                - ln_gamma(n_prime as f64 + ang.l_prime as f64 + 1.5))
            .exp()
            * ratio_g;
        let branch = (qn.kappa.signum() as f64) * e.signum();
        branch * a2p.max(0.0).sqrt()
    };
    Ok(RadialPair {
        qn: *qn,
        energy: e,
        norm_f,
        norm_g,
        vanishing_g,
        l: ang.l,
        l_prime: ang.l_prime,
        n_prime,
        scale2: s,
    })
}

/// Full eigenfunction ψ = (1/r)·(F 𝒴_{κ,g}, i G 𝒴_{-κ,g}) as a 4-spinor.
pub fn wavefunction3d(
    params: &OscParams,
    qn: &Qnum3D,
    r: f64,
    theta: f64,
    phi: f64,
) -> Result<Spinor> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be > 0, got {r}")));
    }
    let pair = radial_solution(params, qn)?;
    let upper = spinor_spherical_harmonic(qn.kappa, qn.twice_g, theta, phi)?;
    let f_over_r = Complex64::from(pair.f(r) / r);
    let (lower, g_over_r) = if pair.vanishing_g {
        (Vector2::zeros(), Complex64::ZERO)
    } else {
        (
            spinor_spherical_harmonic(-qn.kappa, qn.twice_g, theta, phi)?,
            Complex64::new(0.0, pair.g(r) / r),
        )
    };
    Ok(Spinor::new(
        f_over_r * upper[0],
        f_over_r * upper[1],
        g_over_r * lower[0],
        g_over_r * lower[1],
    ))
}

/// Residuals of the coupled radial system at r, with analytic derivatives:
/// ([d/dr + (κ+mωr²)/r]F - (E+m)G, [-d/dr + (κ+mωr²)/r]G - (E-m)F).
pub fn radial_residual(params: &OscParams, qn: &Qnum3D, r: f64) -> Result<(f64, f64)> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be > 0, got {r}")));
    }
    let pair = radial_solution(params, qn)?;
    let w = (qn.kappa as f64 + params.m_omega() * r * r) / r;
    let e = pair.energy;
    let m = params.mass;
    let res_f = pair.f_prime(r) + w * pair.f(r) - (e + m) * pair.g(r);
    let res_g = -pair.g_prime(r) + w * pair.g(r) - (e - m) * pair.f(r);
    Ok((res_f, res_g))
}

/// ⟨ψ_a, ψ_b⟩ with the angular part done analytically:
/// δ_{κκ'} δ_{gg'} ∫ (F_a F_b + G_a G_b) dr by the supplied radial rule.
pub fn orthonormality3d(
    params: &OscParams,
    qn_a: &Qnum3D,
    qn_b: &Qnum3D,
    rule: &QuadratureRule,
) -> Result<Complex64> {
    if qn_a.kappa != qn_b.kappa || qn_a.twice_g != qn_b.twice_g {
        return Ok(Complex64::ZERO);
    }
    let pa = radial_solution(params, qn_a)?;
    let pb = radial_solution(params, qn_b)?;
    let value = rule.integrate(|r| pa.f(r) * pb.f(r) + pa.g(r) * pb.g(r));
    Ok(Complex64::from(value))
}

/// Every spectrum label within the cutoffs, in deterministic order.
///
/// κ runs over ±1..±kappa_max, g over the 2|κ| projections, n over
/// +0, ±1, ..., ±n_max, plus the signed zero -0 for κ < 0 (its E = -m row
/// belongs to the spectrum bookkeeping even though it carries no
/// eigenfunction) and, only when `include_negative_zero_positive_kappa`
/// is set, the -0 label on the κ > 0 branch.
pub fn enumerate_labels(
    n_max: u32,
    kappa_max: u32,
    include_negative_zero_positive_kappa: bool,
) -> Vec<Qnum3D> {
    enumerate(n_max, kappa_max, include_negative_zero_positive_kappa, true)
}

/// Every normalizable eigenstate within the cutoffs, in deterministic
/// order. Drops the (-0, κ < 0) bookkeeping label; when
/// `include_negative_zero_positive_kappa` is set it adds the genuine
/// negative-energy n = 0 states of the κ > 0 branch, which the κ > 0
/// two-component radial blocks need in order to be spanned (the
/// completeness probe always turns this on).
pub fn enumerate_eigenstates(
    n_max: u32,
    kappa_max: u32,
    include_negative_zero_positive_kappa: bool,
) -> Vec<Qnum3D> {
    enumerate(n_max, kappa_max, include_negative_zero_positive_kappa, false)
}

fn enumerate(
    n_max: u32,
    kappa_max: u32,
    include_neg_zero_pos_kappa: bool,
    labels: bool,
) -> Vec<Qnum3D> {
    let mut out = Vec::new();
    for k in 1..=kappa_max as i32 {
        for kappa in [-k, k] {
            let j2 = 2 * k - 1;
            let mut twice_g = -j2;
            while twice_g <= j2 {
                let mut push = |n_sign, n_abs| out.push(Qnum3D { n_sign, n_abs, kappa, twice_g });
                push(Sign::Plus, 0);
                if kappa < 0 && labels {
                    push(Sign::Minus, 0);
                }
                if kappa > 0 && include_neg_zero_pos_kappa {
                    push(Sign::Minus, 0);
                }
                for n in 1..=n_max {
                    push(Sign::Plus, n);
                    push(Sign::Minus, n);
                }
                twice_g += 2;
            }
        }
    }
    out.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
    out
}

/// Cutoffs for the completeness probe.
#[derive(Debug, Clone, Copy)]
pub struct Cutoffs {
    pub n_max: u32,
    pub kappa_max: u32,
}

/// Truncated-projector completeness residual
/// ‖f - Σ ψ ⟨ψ, f⟩‖₂ / ‖f‖₂ over the eigenstates within the cutoffs
/// (both energy signs of every radial block).
///
/// `f` maps (r, θ, φ) to a 4-spinor and must be square-integrable and
/// band-limited in the Gaussian × polynomial sense.
pub fn completeness_probe<F>(params: &OscParams, cutoffs: Cutoffs, f: F) -> Result<f64>
where
    F: Fn(f64, f64, f64) -> Spinor,
{
    params.require_oscillator()?;
    let scale = 1.0 / params.inv_length();
    let radial_order = (4 * (cutoffs.n_max + cutoffs.kappa_max) + 48) as usize;
    let rule = QuadratureRule::radial(radial_order, scale)?;
    let n_r = rule.nodes.len();

    // Angular product grid: Gauss-Legendre in cos θ, trapezoid in φ; both
    // are exact for the harmonic content within the κ cutoff.
    let n_theta = (2 * cutoffs.kappa_max + 10) as usize;
    let n_phi = (4 * cutoffs.kappa_max + 8) as usize;
    let (cos_nodes, cos_weights) = legendre_rule(n_theta);
    let phis: Vec<f64> =
        (0..n_phi).map(|k| 2.0 * std::f64::consts::PI * k as f64 / n_phi as f64).collect();
    let w_phi = 2.0 * std::f64::consts::PI / n_phi as f64;

    // f sampled on the product grid, flattened [r][theta][phi].
    let mut samples = Vec::with_capacity(n_r * n_theta * n_phi);
    for &r in &rule.nodes {
        for &ct in &cos_nodes {
            let theta = ct.acos();
            for &phi in &phis {
                samples.push(f(r, theta, phi));
            }
        }
    }
    let mut reconstruction = vec![Spinor::zeros(); samples.len()];

    let states = enumerate_eigenstates(cutoffs.n_max, cutoffs.kappa_max, true);
    let mut idx = 0usize;
    while idx < states.len() {
        let kappa = states[idx].kappa;
        let twice_g = states[idx].twice_g;
        let mut block = Vec::new();
        while idx < states.len() && states[idx].kappa == kappa && states[idx].twice_g == twice_g {
            block.push(states[idx]);
            idx += 1;
        }
        // Spinor harmonics of the block on the angular grid.
        let mut y_up = Vec::with_capacity(n_theta * n_phi);
        let mut y_dn = Vec::with_capacity(n_theta * n_phi);
        for &ct in &cos_nodes {
            let theta = ct.acos();
            for &phi in &phis {
                y_up.push(spinor_spherical_harmonic(kappa, twice_g, theta, phi)?);
                y_dn.push(spinor_spherical_harmonic(-kappa, twice_g, theta, phi)?);
            }
        }
        // Angular reductions a(r) = ∫ 𝒴†_up f_upper dΩ, b(r) = ∫ 𝒴†_dn f_lower dΩ.
        let mut a_r = vec![Complex64::ZERO; n_r];
        let mut b_r = vec![Complex64::ZERO; n_r];
        for ir in 0..n_r {
            let mut a = Complex64::ZERO;
            let mut b = Complex64::ZERO;
            for it in 0..n_theta {
                let wa = cos_weights[it] * w_phi;
                for ip in 0..n_phi {
                    let s = &samples[(ir * n_theta + it) * n_phi + ip];
                    let y1 = &y_up[it * n_phi + ip];
                    let y2 = &y_dn[it * n_phi + ip];
                    a += Complex64::from(wa) * (y1[0].conj() * s[0] + y1[1].conj() * s[1]);
                    b += Complex64::from(wa) * (y2[0].conj() * s[2] + y2[1].conj() * s[3]);
                }
            }
            a_r[ir] = a;
            b_r[ir] = b;
        }
        // Radial projections, accumulated into the block profiles P, Q.
        let mut p_r = vec![Complex64::ZERO; n_r];
        let mut q_r = vec![Complex64::ZERO; n_r];
        for qn in &block {
            let pair = radial_solution(params, qn)?;
            let f_vals: Vec<f64> = rule.nodes.iter().map(|&r| pair.f(r)).collect();
            let g_vals: Vec<f64> = rule.nodes.iter().map(|&r| pair.g(r)).collect();
            let mut coeff = Complex64::ZERO;
            for ir in 0..n_r {
                let w = rule.weights[ir] * rule.nodes[ir];
                // ⟨ψ, f⟩ = ∫ r dr [F·a - i G·b]
                coeff += Complex64::from(w)
                    * (Complex64::from(f_vals[ir]) * a_r[ir]
                        + Complex64::new(0.0, -g_vals[ir]) * b_r[ir]);
            }
            for ir in 0..n_r {
                p_r[ir] += coeff * Complex64::from(f_vals[ir]);
                q_r[ir] += coeff * Complex64::from(g_vals[ir]);
            }
        }
        for ir in 0..n_r {
            let r = rule.nodes[ir];
            let fu = p_r[ir] / Complex64::from(r);
            let gl = q_r[ir] * Complex64::new(0.0, 1.0) / Complex64::from(r);
            for it in 0..n_theta {
                for ip in 0..n_phi {
                    let y1 = &y_up[it * n_phi + ip];
                    let y2 = &y_dn[it * n_phi + ip];
                    let slot = &mut reconstruction[(ir * n_theta + it) * n_phi + ip];
                    slot[0] += fu * y1[0];
                    slot[1] += fu * y1[1];
                    slot[2] += gl * y2[0];
                    slot[3] += gl * y2[1];
                }
            }
        }
    }

    // Weighted L² residual with measure r² dr dΩ.
    let mut num = 0.0;
    let mut den = 0.0;
    for ir in 0..n_r {
        let wr = rule.weights[ir] * rule.nodes[ir] * rule.nodes[ir];
        for it in 0..n_theta {
            let w = wr * cos_weights[it] * w_phi;
            for ip in 0..n_phi {
                let k = (ir * n_theta + it) * n_phi + ip;
                num += w * (samples[k] - reconstruction[k]).norm_squared();
                den += w * samples[k].norm_squared();
            }
        }
    }
    if den == 0.0 {
        return Err(Error::Domain("completeness test function is identically zero".into()));
    }
    Ok((num / den).sqrt())
}
