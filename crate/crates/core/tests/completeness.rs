//! Truncated-basis completeness on a smooth test spinor.

use diracosc::osc3d::{completeness_probe, Cutoffs};
use diracosc::{OscParams, Spinor};
use num_complex::Complex64;

// Gaussian bump with content in a few low angular channels; smooth as a
// function of (x, y, z) and matched to the oscillator length scale.
fn bump(params: &OscParams) -> impl Fn(f64, f64, f64) -> Spinor + '_ {
    let a = 0.75 * params.m_omega();
    move |r: f64, theta: f64, phi: f64| {
        let e = (-a * r * r).exp();
        let z = r * theta.cos();
        let x = r * theta.sin() * phi.cos();
        Spinor::new(
            Complex64::from(e * (1.0 + 0.4 * z)),
            Complex64::from(0.5 * x * e),
            Complex64::new(0.0, 0.3 * e),
            Complex64::from(0.2 * z * e),
        )
    }
}

#[test]
fn residual_is_small_and_monotone_in_the_radial_cutoff() {
    let p = OscParams::new(1.0, 1.0).unwrap();
    let f = bump(&p);
    let r6 = completeness_probe(&p, Cutoffs { n_max: 6, kappa_max: 2 }, &f).unwrap();
    let r12 = completeness_probe(&p, Cutoffs { n_max: 12, kappa_max: 2 }, &f).unwrap();
    assert!(r12 < 1e-3, "residual at n_max = 12: {r12:e}");
    // monotone refinement, with a 5% jitter allowance
    assert!(r12 <= r6 * 1.05, "{r6:e} -> {r12:e}");
}

#[test]
fn full_wavefunction_norm_matches_the_radial_norm() {
    // ∫ ψ†ψ d³r = 1: the angular factor is exactly normalized, so the
    // product quadrature must reproduce the radial normalization.
    use diracosc::osc3d::{wavefunction3d, Qnum3D, Sign};
    use diracosc::specfun::QuadratureRule;
    let p = OscParams::new(1.0, 1.0).unwrap();
    let qn = Qnum3D::new(Sign::Plus, 1, -1, 1).unwrap();
    let rule = QuadratureRule::radial(80, 1.0 / p.inv_length()).unwrap();
    // the angular density is a low-degree polynomial in cos θ, for which
    // composite Simpson is exact; the trapezoid handles e^{imφ} exactly
    let panels = 12usize;
    let h = 2.0 / panels as f64;
    let n_phi = 12usize;
    let w_phi = 2.0 * std::f64::consts::PI / n_phi as f64;
    let mut norm = 0.0;
    for it in 0..=panels {
        let ct = (-1.0 + it as f64 * h).clamp(-1.0, 1.0);
        let theta = ct.acos();
        let simpson = if it == 0 || it == panels {
            1.0
        } else if it % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let w_t = simpson * h / 3.0;
        for ip in 0..n_phi {
            let phi = w_phi * ip as f64;
            norm += w_t
                * w_phi
                * rule.integrate(|r| {
                    let psi = wavefunction3d(&p, &qn, r, theta, phi).unwrap();
                    r * r * psi.norm_squared()
                });
        }
    }
    assert!((norm - 1.0).abs() <= 1e-8, "full 3D norm {norm}");
}
