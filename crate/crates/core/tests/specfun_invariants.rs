//! Special-function invariants at their full working ranges.

use diracosc::specfun::{
    hermite_function_series, laguerre_l, ln_gamma, spherical_harmonic, spinor_spherical_harmonic,
    QuadratureRule,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;

#[test]
fn hermite_function_orthonormality_to_degree_sixty() {
    let rule = QuadratureRule::gauss_hermite(140).unwrap().unfolded();
    let table: Vec<Vec<f64>> = rule.nodes.iter().map(|&x| hermite_function_series(60, x)).collect();
    let mut max_dev: f64 = 0.0;
    for n in 0..=60 {
        for m in n..=60 {
            let mut acc = 0.0;
            for (i, &w) in rule.weights.iter().enumerate() {
                acc += w * table[i][n] * table[i][m];
            }
            let delta = if n == m { 1.0 } else { 0.0 };
            max_dev = max_dev.max((acc - delta).abs());
        }
    }
    assert!(max_dev <= 1e-10, "max deviation {max_dev:e}");
}

#[test]
fn laguerre_orthogonality() {
    // ∫_0^∞ x^α e^{-x} L_n^α L_m^α dx = δ_nm Γ(n+α+1)/n!, checked through
    // the substitution x = r² on the radial rule.
    let rule = QuadratureRule::radial(240, 1.0).unwrap();
    for &alpha in &[0.5, 1.5, 2.5] {
        for n in 0..=20usize {
            for m in n..=20usize {
                let integral = 2.0
                    * rule.integrate(|r| {
                        let x = r * r;
                        x.powf(alpha)
                            * (-x).exp()
                            * laguerre_l(n, alpha, x).unwrap()
                            * laguerre_l(m, alpha, x).unwrap()
                            * r
                    });
                let scale = (ln_gamma(n as f64 + alpha + 1.0) - ln_gamma(n as f64 + 1.0)).exp();
                let expect = if n == m { scale } else { 0.0 };
                assert!(
                    (integral - expect).abs() <= 1e-8 * scale,
                    "alpha={alpha} n={n} m={m}: {integral} vs {expect}"
                );
            }
        }
    }
}

#[test]
fn spherical_harmonic_addition_theorem() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..20 {
        let theta = rng.gen_range(0.05..PI - 0.05);
        let phi = rng.gen_range(0.0..2.0 * PI);
        for l in 0..=8usize {
            let sum: f64 = (-(l as i32)..=l as i32)
                .map(|m| spherical_harmonic(l, m, theta, phi).unwrap().norm_sqr())
                .sum();
            let expect = (2 * l + 1) as f64 / (4.0 * PI);
            assert!((sum - expect).abs() <= 1e-10, "l={l} theta={theta}: {sum} vs {expect}");
        }
    }
}

#[test]
fn spinor_harmonic_orthonormality_over_the_sphere() {
    // Gauss-Legendre in cos θ and a trapezoid in φ integrate the harmonic
    // content of |κ| <= 3 exactly.
    let n_theta = 24usize;
    let n_phi = 48usize;
    let (cos_nodes, cos_weights) = {
        let mut m = nalgebra::DMatrix::<f64>::zeros(n_theta, n_theta);
        for k in 1..n_theta {
            let kf = k as f64;
            let e = kf / (4.0 * kf * kf - 1.0).sqrt();
            m[(k - 1, k)] = e;
            m[(k, k - 1)] = e;
        }
        let mut nodes: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
        nodes.sort_by(f64::total_cmp);
        let weights: Vec<f64> = nodes
            .iter()
            .map(|&x| {
                let mut pm = 1.0;
                let mut p = x;
                for k in 1..n_theta {
                    let kf = k as f64;
                    let pp = ((2.0 * kf + 1.0) * x * p - kf * pm) / (kf + 1.0);
                    pm = p;
                    p = pp;
                }
                let dp = n_theta as f64 * (x * p - pm) / (x * x - 1.0);
                2.0 / ((1.0 - x * x) * dp * dp)
            })
            .collect();
        (nodes, weights)
    };
    let w_phi = 2.0 * PI / n_phi as f64;
    let mut channels = Vec::new();
    for k in 1..=3i32 {
        for kappa in [-k, k] {
            let j2 = 2 * k - 1;
            let mut tg = -j2;
            while tg <= j2 {
                channels.push((kappa, tg));
                tg += 2;
            }
        }
    }
    let mut max_dev: f64 = 0.0;
    for (i, &(ka, ga)) in channels.iter().enumerate() {
        for &(kb, gb) in channels.iter().skip(i) {
            let mut acc = Complex64::ZERO;
            for (&ct, &wt) in cos_nodes.iter().zip(&cos_weights) {
                let theta = ct.acos();
                for ip in 0..n_phi {
                    let phi = w_phi * ip as f64;
                    let ya = spinor_spherical_harmonic(ka, ga, theta, phi).unwrap();
                    let yb = spinor_spherical_harmonic(kb, gb, theta, phi).unwrap();
                    acc +=
                        Complex64::from(wt * w_phi) * (ya[0].conj() * yb[0] + ya[1].conj() * yb[1]);
                }
            }
            let delta = if ka == kb && ga == gb { 1.0 } else { 0.0 };
            max_dev = max_dev.max((acc - Complex64::from(delta)).norm());
        }
    }
    assert!(max_dev <= 1e-8, "max deviation {max_dev:e}");
}
