//! The coordinate propagator must equal the time-ordered two-point
//! function of the field operator on a truncated Fock space carrying the
//! same modes.

use diracosc::dirac::GammaRep;
use diracosc::fock::{ladder, sea_vacuum, FockOperator, LadderKind, ModeLabel, ModeSet};
use diracosc::{osc1d, propagator, OscParams};
use nalgebra::Matrix4;
use num_complex::Complex64;

// Field operator component ψ̂_α(z, t) = Σ_n ψ_{n,α}(z) e^{-iE_n t} b_n as a
// Fock matrix.
fn field_component(p: &OscParams, ms: &ModeSet, alpha: usize, z: f64, t: f64) -> FockOperator {
    let mut op = FockOperator::zeros(ms.dim());
    for (i, mode) in ms.modes().iter().enumerate() {
        let n = match mode.label {
            ModeLabel::OneDim(n) => n,
            _ => unreachable!(),
        };
        let coeff = osc1d::wavefunction(p, n, z).unwrap()[alpha]
            * Complex64::from_polar(1.0, -mode.energy * t);
        if coeff != Complex64::ZERO {
            op = op.add_scaled(&ladder(ms, i, LadderKind::Annihilate).unwrap(), coeff);
        }
    }
    op
}

// ψ̄̂_β(z', t') = Σ_m (ψ̄_m(z'))_β e^{+iE_m t'} b†_m.
fn field_bar_component(p: &OscParams, ms: &ModeSet, beta: usize, z: f64, t: f64) -> FockOperator {
    let rep = GammaRep::standard();
    let mut op = FockOperator::zeros(ms.dim());
    for (i, mode) in ms.modes().iter().enumerate() {
        let n = match mode.label {
            ModeLabel::OneDim(n) => n,
            _ => unreachable!(),
        };
        let psi = osc1d::wavefunction(p, n, z).unwrap();
        let bar = psi.adjoint() * rep.beta;
        let coeff = bar[beta] * Complex64::from_polar(1.0, mode.energy * t);
        if coeff != Complex64::ZERO {
            op = op.add_scaled(&ladder(ms, i, LadderKind::Create).unwrap(), coeff);
        }
    }
    op
}

fn two_point(p: &OscParams, ms: &ModeSet, z: f64, t: f64, zp: f64, tp: f64) -> Matrix4<Complex64> {
    let vac = sea_vacuum(ms);
    let mut out = Matrix4::<Complex64>::zeros();
    for alpha in 0..4 {
        for beta in 0..4 {
            let psi = field_component(p, ms, alpha, z, t);
            let psibar = field_bar_component(p, ms, beta, zp, tp);
            // ⟨0| X |0⟩ = vac† (X vac)
            let value = if t >= tp {
                vac.dot(&vac.apply(&psi.matmul(&psibar)))
            } else {
                -vac.dot(&vac.apply(&psibar.matmul(&psi)))
            };
            out[(alpha, beta)] = value;
        }
    }
    out
}

#[test]
fn coordinate_propagator_equals_fock_two_point_function() {
    let p = OscParams::new(1.0, 1.0).unwrap();
    let cutoff = 4usize;
    let ms = ModeSet::one_dim(&p, cutoff as u32, cutoff as u32).unwrap(); // M = 9
    for &(z, t, zp, tp) in &[
        (0.4, 0.9, -0.3, 0.1), // t > t'
        (0.4, 0.1, -0.3, 0.9), // t < t'
        (-1.2, 0.5, 0.8, 0.5), // equal times resolve to the particle branch
        (0.0, 2.0, 0.0, -1.0),
    ] {
        let direct = propagator::coordinate_propagator(&p, z, t, zp, tp, cutoff).unwrap().matrix;
        let oracle = two_point(&p, &ms, z, t, zp, tp);
        let dev = (direct - oracle).iter().map(|c| c.norm()).fold(0.0, f64::max);
        assert!(dev <= 1e-10, "({z},{t},{zp},{tp}): deviation {dev:e}");
    }
}
