//! Fourier-route consistency: the coordinate propagator rebuilt from
//! momentum-space ingredients (mode spinors inverted by quadrature, the
//! p0 dependence supplied by the numerically integrated contour identity)
//! must match the direct mode sum. The printed momentum-space closed form
//! shares its pole set and lowest residue with that reconstruction; its
//! global normalization is reported, not asserted.

use diracosc::dirac::{GammaRep, Spinor};
use diracosc::{osc1d, propagator, OscParams};
use nalgebra::{Matrix4, RowVector4};
use num_complex::Complex64;

fn inverse_fourier(p: &OscParams, n: i64, z: f64) -> Spinor {
    // (1/sqrt(2π)) ∫ ũ_n(k) e^{+ikz} dk by a wide trapezoid window
    let (lo, hi, steps) = (-30.0, 30.0, 6001usize);
    let h = (hi - lo) / (steps - 1) as f64;
    let mut acc = Spinor::zeros();
    for i in 0..steps {
        let k = lo + i as f64 * h;
        let w = if i == 0 || i == steps - 1 { 0.5 } else { 1.0 };
        let kernel = Complex64::from_polar(1.0, k * z) * Complex64::from(w * h);
        acc += propagator::mode_spinor_momentum(p, n, k).unwrap().map(|c| c * kernel);
    }
    acc.map(|c| c / Complex64::from((2.0 * std::f64::consts::PI).sqrt()))
}

#[test]
fn momentum_spinors_invert_back_to_position_space() {
    let p = OscParams::new(1.0, 1.0).unwrap();
    for n in [-4i64, 0, 3, 9] {
        for &z in &[-1.3, 0.0, 0.8] {
            let rebuilt = inverse_fourier(&p, n, z);
            let direct = osc1d::wavefunction(&p, n, z).unwrap();
            assert!(
                (rebuilt - direct).norm() <= 1e-8,
                "n={n} z={z}: {:e}",
                (rebuilt - direct).norm()
            );
        }
    }
}

#[test]
fn coordinate_propagator_rebuilt_from_momentum_ingredients() {
    let p = OscParams::new(1.0, 1.0).unwrap();
    let rep = GammaRep::standard();
    let cutoff = 12usize;
    for &(z, dt, zp) in &[(0.5, 0.8, -0.4), (0.5, -0.8, -0.4)] {
        let mut rebuilt = Matrix4::<Complex64>::zeros();
        if dt >= 0.0 {
            for n in 0..=cutoff as i64 {
                let (lhs, _) = propagator::contour_identity_check(&p, n as u32, dt).unwrap();
                let e = osc1d::energy(&p, n);
                let u = inverse_fourier(&p, n, z);
                let ubar: RowVector4<Complex64> = inverse_fourier(&p, n, zp).adjoint() * rep.beta;
                rebuilt += (u * ubar).map(|c| c * lhs * Complex64::from(2.0 * e));
            }
        } else {
            for n in 1..=cutoff as i64 {
                let (lhs, _) = propagator::contour_identity_check(&p, n as u32, dt).unwrap();
                let e = osc1d::energy(&p, n);
                let v = inverse_fourier(&p, -n, z);
                let vbar: RowVector4<Complex64> = inverse_fourier(&p, -n, zp).adjoint() * rep.beta;
                rebuilt -= (v * vbar).map(|c| c * lhs * Complex64::from(2.0 * e));
            }
        }
        let direct = propagator::coordinate_propagator(&p, z, dt, zp, 0.0, cutoff).unwrap().matrix;
        let dev = (rebuilt - direct).iter().map(|c| c.norm()).fold(0.0, f64::max);
        let scale = direct.iter().map(|c| c.norm()).fold(0.0, f64::max);
        assert!(dev <= 1e-4 * scale.max(1.0), "dt={dt}: deviation {dev:e} (scale {scale:e})");
    }
}

#[test]
fn printed_momentum_form_offset_is_reported() {
    // The closed-form momentum sum pairs u at n with v at n-1 under a
    // common (-1)^n/(p0²-p_n²); its p0-even numerator cannot reproduce the
    // p0-odd content of the transformed two-point function, so only the
    // pole set and the lowest residue are asserted elsewhere. Here the
    // best-fit scalar between the printed form and the partial-fraction
    // kernel assembled from the same spinors is measured and reported.
    let p = OscParams::new(1.0, 1.0).unwrap();
    let rep = GammaRep::standard();
    let cutoff = 12usize;
    let mut num = Complex64::ZERO;
    let mut den = 0.0f64;
    let mut printed_norm = 0.0f64;
    let mut count = 0usize;
    let mut post_fit = 0.0f64;
    let mut samples = Vec::new();
    for &p0 in &[0.31f64, 0.77, 1.9] {
        for &pz in &[-0.9f64, 0.4] {
            for &pzp in &[0.2f64, 1.1] {
                let printed =
                    propagator::momentum_propagator(&p, p0, pz, pzp, cutoff).unwrap().matrix;
                // partial-fraction kernel carrying the correct ±E residues
                let mut kernel = Matrix4::<Complex64>::zeros();
                for n in 0..=cutoff as i64 {
                    let e = osc1d::energy(&p, n);
                    let denom = Complex64::from(p0 * p0 - e * e);
                    let u = propagator::mode_spinor_momentum(&p, n, pz).unwrap();
                    let ubar: RowVector4<Complex64> =
                        propagator::mode_spinor_momentum(&p, n, pzp).unwrap().adjoint() * rep.beta;
                    let a = u * ubar;
                    let b = if n >= 1 {
                        let v = propagator::mode_spinor_momentum(&p, -n, pz).unwrap();
                        let vbar: RowVector4<Complex64> =
                            propagator::mode_spinor_momentum(&p, -n, pzp).unwrap().adjoint()
                                * rep.beta;
                        -(v * vbar)
                    } else {
                        Matrix4::zeros()
                    };
                    let c_even = (a + b).map(|c| c * Complex64::from(e));
                    let c_odd = (a - b).map(|c| c * Complex64::from(p0));
                    kernel += (c_even + c_odd).map(|c| c / denom);
                }
                for idx in 0..16 {
                    let (r, c) = (idx / 4, idx % 4);
                    num += kernel[(r, c)].conj() * printed[(r, c)];
                    den += kernel[(r, c)].norm_sqr();
                    printed_norm += printed[(r, c)].norm_sqr();
                }
                samples.push((p0, pz, pzp, printed, kernel));
                count += 1;
            }
        }
    }
    let fit = num / Complex64::from(den);
    for (_, _, _, printed, kernel) in &samples {
        for idx in 0..16 {
            let (r, c) = (idx / 4, idx % 4);
            post_fit += (printed[(r, c)] - fit * kernel[(r, c)]).norm_sqr();
        }
    }
    let rel = (post_fit / printed_norm).sqrt();
    println!(
        "printed momentum form vs partial-fraction kernel over {count} argument sets: \
         best-fit scalar = {fit:.6}, post-fit relative residual = {rel:.3e}"
    );
    assert!(fit.re.is_finite() && rel.is_finite());
}
