//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (visible with --nocapture). Property-based at desk scale;
//! every tolerance is pinned here.

use diracosc::dirac::GammaRep;
use diracosc::fock::{
    charge_operator, hamiltonian_normal_ordered, hamiltonian_raw, ladder, sea_vacuum, FockOperator,
    LadderKind, ModeLabel, ModeSet,
};
use diracosc::osc1d::{self, Grid1D};
use diracosc::osc3d::{self, Cutoffs, Qnum3D};
use diracosc::specfun::QuadratureRule;
use diracosc::{propagator, OscParams, Spinor};
use nalgebra::Matrix4;
use num_complex::Complex64;

fn params(m: f64, w: f64) -> OscParams {
    OscParams::new(m, w).unwrap()
}

fn max_abs(m: &Matrix4<Complex64>) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

const MASSES: [f64; 3] = [0.5, 1.0, 2.0];
const OMEGAS: [f64; 3] = [0.1, 1.0, 3.0];

#[test]
fn criterion_01_spectrum_laws() {
    for m in MASSES {
        for w in OMEGAS {
            let p = params(m, w);
            assert_eq!(osc1d::energy(&p, 0), m, "E_0 must equal m exactly");
            for n in 1..=50i64 {
                let e = osc1d::energy(&p, n);
                assert_eq!(osc1d::energy(&p, -n), -e, "E_-n = -E_n must be exact");
                // independent evaluation order of sqrt(2|n| m ω + m²)
                let oracle = (m * m + 2.0 * n as f64 * m * w).sqrt();
                assert!((e - oracle).abs() <= 1e-14, "m={m} w={w} n={n}: {e} vs {oracle}");
            }
        }
    }
    println!("acceptance criterion 1 (spectrum laws): PASS");
}

#[test]
fn criterion_02_gap_law() {
    for m in MASSES {
        assert_eq!(osc1d::delta_e_gap(&params(m, 0.0)), 2.0 * m, "gap at ω = 0 must be exact");
        for ratio in [1e-2, 1e-3] {
            let w = ratio * m;
            let gap = osc1d::delta_e_gap(&params(m, w));
            assert!((gap - (2.0 * m + w)).abs() <= w * w / m, "m={m} w={w}: gap {gap}");
        }
    }
    println!("acceptance criterion 2 (gap law): PASS");
}

#[test]
fn criterion_03_orthonormality_1d() {
    let p = params(1.0, 1.0);
    let rule = QuadratureRule::gauss_hermite(112).unwrap().unfolded();
    let scale = p.inv_length();
    let modes: Vec<i64> = (-40..=40).collect();
    let values: Vec<Vec<Spinor>> = modes
        .iter()
        .map(|&n| {
            rule.nodes
                .iter()
                .map(|&zeta| osc1d::wavefunction(&p, n, zeta / scale).unwrap())
                .collect()
        })
        .collect();
    let mut max_dev: f64 = 0.0;
    for (i, a) in values.iter().enumerate() {
        for (j, b) in values.iter().enumerate().skip(i) {
            let mut acc = Complex64::ZERO;
            for (k, &w) in rule.weights.iter().enumerate() {
                acc += a[k].dotc(&b[k]) * Complex64::from(w / scale);
            }
            let delta = if i == j { 1.0 } else { 0.0 };
            max_dev = max_dev.max((acc - Complex64::from(delta)).norm());
        }
    }
    assert!(max_dev <= 1e-9, "max orthonormality deviation {max_dev:e}");
    println!("acceptance criterion 3 (1D orthonormality, max dev {max_dev:.2e}): PASS");
}

#[test]
fn criterion_04_eigen_residual_1d() {
    let p = params(1.0, 1.0);
    let grid = Grid1D::HermiteCollocation { order: 72 };
    let zs = grid.points(&p).unwrap();
    let mut worst: f64 = 0.0;
    for n in -20i64..=20 {
        let psi: Vec<Spinor> = zs.iter().map(|&z| osc1d::wavefunction(&p, n, z).unwrap()).collect();
        let h_psi = osc1d::hamiltonian_apply(&p, &grid, &psi).unwrap();
        let e = osc1d::energy(&p, n);
        let mut num = 0.0;
        let mut den = 0.0;
        for (hp, ps) in h_psi.iter().zip(&psi) {
            num += (hp - ps.map(|c| c * Complex64::from(e))).norm_squared();
            den += ps.norm_squared();
        }
        worst = worst.max((num / den).sqrt());
    }
    assert!(worst <= 1e-6, "worst relative residual {worst:e}");
    println!("acceptance criterion 4 (1D eigen-residual, worst {worst:.2e}): PASS");
}

fn genuine_states(n_max: u32, kappa_max: u32) -> Vec<Qnum3D> {
    osc3d::enumerate_eigenstates(n_max, kappa_max, false)
        .into_iter()
        .filter(|q| q.twice_g == 1)
        .collect()
}

#[test]
fn criterion_05_radial_normalization_and_residuals() {
    let p = params(1.0, 1.0);
    let len = 1.0 / p.inv_length();
    let mut worst_norm: f64 = 0.0;
    let mut worst_res: f64 = 0.0;
    for qn in genuine_states(10, 4) {
        let pair = osc3d::radial_solution(&p, &qn).unwrap();
        let l = osc3d::angular_numbers(qn.kappa).unwrap().l;
        let rule = QuadratureRule::radial((4 * (qn.n_abs + l) + 48) as usize, len).unwrap();
        let norm = rule.integrate(|r| pair.f(r).powi(2) + pair.g(r).powi(2));
        worst_norm = worst_norm.max((norm - 1.0).abs());
        let rs: Vec<f64> = (1..=40).map(|k| len * 0.2 * k as f64).collect();
        let envelope =
            rs.iter().map(|&r| pair.f(r).abs().max(pair.g(r).abs())).fold(0.0f64, f64::max);
        for &r in &rs {
            let (rf, rg) = osc3d::radial_residual(&p, &qn, r).unwrap();
            worst_res = worst_res.max(rf.abs() / envelope).max(rg.abs() / envelope);
        }
    }
    assert!(worst_norm <= 1e-8, "worst norm deviation {worst_norm:e}");
    assert!(worst_res <= 1e-6, "worst coupled-equation residual {worst_res:e}");
    println!(
        "acceptance criterion 5 (3D radial norm {worst_norm:.2e}, residual {worst_res:.2e}): PASS"
    );
}

#[test]
fn criterion_06_orthonormality_3d_and_completeness() {
    let p = params(1.0, 1.0);
    let len = 1.0 / p.inv_length();
    let rule = QuadratureRule::radial(4 * (10 + 4) + 64, len).unwrap();
    let states = genuine_states(10, 4);
    let mut max_dev: f64 = 0.0;
    for (i, a) in states.iter().enumerate() {
        for b in states.iter().skip(i) {
            let overlap = osc3d::orthonormality3d(&p, a, b, &rule).unwrap();
            let delta = if a == b { 1.0 } else { 0.0 };
            max_dev = max_dev.max((overlap - Complex64::from(delta)).norm());
        }
    }
    assert!(max_dev <= 1e-8, "max pairwise deviation {max_dev:e}");

    // Fixed Gaussian test spinor, steep enough that the three cutoffs sit
    // well above the quadrature floor.
    let a = 3.0 * p.m_omega();
    let bump = |r: f64, theta: f64, phi: f64| {
        let e = (-a * r * r).exp();
        let z = r * theta.cos();
        let x = r * theta.sin() * phi.cos();
        Spinor::new(
            Complex64::from(e * (1.0 + 0.4 * z)),
            Complex64::from(0.5 * x * e),
            Complex64::new(0.0, 0.3 * e),
            Complex64::from(0.2 * z * e),
        )
    };
    let r10 = osc3d::completeness_probe(&p, Cutoffs { n_max: 10, kappa_max: 6 }, bump).unwrap();
    let r20 = osc3d::completeness_probe(&p, Cutoffs { n_max: 20, kappa_max: 6 }, bump).unwrap();
    let r30 = osc3d::completeness_probe(&p, Cutoffs { n_max: 30, kappa_max: 6 }, bump).unwrap();
    assert!(r30 < 1e-3, "completeness residual at n_max = 30: {r30:e}");
    // monotone refinement within 5% jitter
    assert!(r20 <= 1.05 * r10, "{r10:e} -> {r20:e}");
    assert!(r30 <= 1.05 * r20, "{r20:e} -> {r30:e}");
    println!(
        "acceptance criterion 6 (3D orthonormality {max_dev:.2e}; completeness {r10:.2e} -> \
         {r20:.2e} -> {r30:.2e}): PASS"
    );
}

#[test]
fn criterion_07_fock_algebra() {
    let p = params(1.0, 1.0);
    // anticommutators on M = 10
    let ms = ModeSet::one_dim(&p, 5, 4).unwrap();
    let m = ms.len();
    let id = FockOperator::identity(ms.dim());
    let ann: Vec<FockOperator> =
        (0..m).map(|i| ladder(&ms, i, LadderKind::Annihilate).unwrap()).collect();
    let mut max_car: f64 = 0.0;
    for i in 0..m {
        for j in 0..m {
            let mixed = ann[i].anticommutator(&ann[j].adjoint());
            let expect = if i == j { id.clone() } else { FockOperator::zeros(ms.dim()) };
            max_car = max_car.max(mixed.max_abs_diff(&expect));
            max_car = max_car.max(ann[i].anticommutator(&ann[j]).max_abs());
        }
    }
    assert!(max_car <= 1e-12, "anticommutator deviation {max_car:e}");

    // spectrum vs brute-force subset sums on M = 8
    let small = ModeSet::one_dim(&p, 4, 3).unwrap();
    let quanta: Vec<f64> = small.modes().iter().map(|mo| mo.energy.abs()).collect();
    let mut sums: Vec<f64> = (0..1usize << small.len())
        .map(|mask| (0..small.len()).filter(|i| mask & (1 << i) != 0).map(|i| quanta[i]).sum())
        .collect();
    sums.sort_by(f64::total_cmp);
    let eig = hamiltonian_normal_ordered(&small).unwrap().hermitian_eigenvalues().unwrap();
    let mut max_spec: f64 = 0.0;
    for (a, b) in eig.iter().zip(&sums) {
        max_spec = max_spec.max((a - b).abs());
    }
    assert!(max_spec <= 1e-10, "spectrum vs subset sums deviation {max_spec:e}");

    let h_ord = hamiltonian_normal_ordered(&ms).unwrap();
    let vac = sea_vacuum(&ms);
    let vac_energy = vac.apply(&h_ord).norm();
    assert!(vac_energy <= 1e-12, "H'|0> norm {vac_energy:e}");
    for (i, mode) in ms.modes().iter().enumerate() {
        if mode.label.is_negative_energy() {
            let create = ladder(&ms, i, LadderKind::Create).unwrap();
            assert_eq!(vac.apply(&create).norm(), 0.0, "b†|0> must vanish exactly");
        }
    }
    let h_raw = hamiltonian_raw(&ms).unwrap();
    let sea = vac.dot(&vac.apply(&h_raw));
    let shifted = h_raw.add_scaled(&id, -sea);
    let shift_dev = h_ord.max_abs_diff(&shifted);
    assert!(shift_dev <= 1e-10, "raw/ordered shift deviation {shift_dev:e}");
    let q = charge_operator(&ms).unwrap();
    let qh = q.commutator(&h_ord).max_abs();
    assert!(qh <= 1e-10, "[Q, H'] deviation {qh:e}");
    println!(
        "acceptance criterion 7 (Fock algebra: CAR {max_car:.1e}, spectrum {max_spec:.2e}, \
         [Q,H'] {qh:.1e}): PASS"
    );
}

#[test]
fn criterion_08_propagator() {
    let p = params(1.0, 1.0);
    // Hermite-Fourier identity against a dense trapezoid transform
    let trapezoid = |n: i64, k: f64| -> Spinor {
        let (lo, hi, steps) = (-30.0, 30.0, 6001usize);
        let h = (hi - lo) / (steps - 1) as f64;
        let mut acc = Spinor::zeros();
        for i in 0..steps {
            let z = lo + i as f64 * h;
            let w = if i == 0 || i == steps - 1 { 0.5 } else { 1.0 };
            let kernel = Complex64::from_polar(1.0, -k * z) * Complex64::from(w * h);
            acc += osc1d::wavefunction(&p, n, z).unwrap().map(|c| c * kernel);
        }
        acc.map(|c| c / Complex64::from((2.0 * std::f64::consts::PI).sqrt()))
    };
    let mut max_fourier: f64 = 0.0;
    for n in -20i64..=20 {
        for &k in &[0.0, 0.57, 1.9] {
            let direct = propagator::mode_spinor_momentum(&p, n, k).unwrap();
            max_fourier = max_fourier.max((direct - trapezoid(n, k)).norm());
        }
    }
    assert!(max_fourier <= 1e-8, "Hermite-Fourier deviation {max_fourier:e}");

    // contour identity for n <= 10
    let mut max_contour: f64 = 0.0;
    for n in 0..=10u32 {
        for &dt in &[0.4, -1.7, 3.8] {
            let (lhs, rhs) = propagator::contour_identity_check(&p, n, dt).unwrap();
            max_contour = max_contour.max((lhs - rhs).norm());
        }
    }
    assert!(max_contour <= 1e-6, "contour identity deviation {max_contour:e}");

    // coordinate propagator vs the truncated-Fock two-point function, M = 9
    let cutoff = 4u32;
    let ms = ModeSet::one_dim(&p, cutoff, cutoff).unwrap();
    let rep = GammaRep::standard();
    let vac = sea_vacuum(&ms);
    let mut max_fock: f64 = 0.0;
    for &(z, t, zp, tp) in &[(0.4, 0.9, -0.3, 0.1), (0.4, 0.1, -0.3, 0.9)] {
        let mut oracle = Matrix4::<Complex64>::zeros();
        for alpha in 0..4 {
            for beta in 0..4 {
                let mut psi_op = FockOperator::zeros(ms.dim());
                let mut bar_op = FockOperator::zeros(ms.dim());
                for (i, mode) in ms.modes().iter().enumerate() {
                    let n = match mode.label {
                        ModeLabel::OneDim(n) => n,
                        _ => unreachable!(),
                    };
                    let w = osc1d::wavefunction(&p, n, z).unwrap();
                    let cf = w[alpha] * Complex64::from_polar(1.0, -mode.energy * t);
                    if cf != Complex64::ZERO {
                        psi_op =
                            psi_op.add_scaled(&ladder(&ms, i, LadderKind::Annihilate).unwrap(), cf);
                    }
                    let wb = osc1d::wavefunction(&p, n, zp).unwrap();
                    let bar = wb.adjoint() * rep.beta;
                    let cb = bar[beta] * Complex64::from_polar(1.0, mode.energy * tp);
                    if cb != Complex64::ZERO {
                        bar_op =
                            bar_op.add_scaled(&ladder(&ms, i, LadderKind::Create).unwrap(), cb);
                    }
                }
                oracle[(alpha, beta)] = if t >= tp {
                    vac.dot(&vac.apply(&psi_op.matmul(&bar_op)))
                } else {
                    -vac.dot(&vac.apply(&bar_op.matmul(&psi_op)))
                };
            }
        }
        let direct =
            propagator::coordinate_propagator(&p, z, t, zp, tp, cutoff as usize).unwrap().matrix;
        max_fock = max_fock.max(max_abs(&(direct - oracle)));
    }
    assert!(max_fock <= 1e-10, "Fock two-point deviation {max_fock:e}");

    // momentum-space pole locations vs the spectrum
    let e_of = |k: usize| (2.0 * k as f64 * p.m_omega() + p.mass * p.mass).sqrt();
    let mut max_pole: f64 = 0.0;
    for n in 0..=10usize {
        let e_n = e_of(n);
        let gap_up = e_of(n + 1) - e_n;
        let gap_down = if n == 0 { gap_up } else { e_n - e_of(n - 1) };
        let half = 0.4 * gap_up.min(gap_down);
        let objective = |p0: f64| -> f64 {
            match propagator::momentum_propagator(&p, p0, 0.3, -0.2, 12) {
                Ok(sample) => {
                    sample.matrix.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt().recip()
                }
                Err(_) => 0.0,
            }
        };
        let (mut lo, mut hi) = (e_n - half, e_n + half);
        for _ in 0..200 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if objective(m1) < objective(m2) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        max_pole = max_pole.max((0.5 * (lo + hi) - e_n).abs());
    }
    assert!(max_pole <= 1e-10, "pole location deviation {max_pole:e}");
    println!(
        "acceptance criterion 8 (propagator: Fourier {max_fourier:.1e}, contour \
         {max_contour:.1e}, Fock {max_fock:.1e}, poles {max_pole:.1e}): PASS"
    );
}

#[test]
fn criterion_09_free_limit() {
    for m in MASSES {
        for n in [1i64, 2, 5, 10] {
            let omegas = [1e-2 * m, 1e-3 * m, 1e-4 * m];
            let excitations: Vec<f64> =
                omegas.iter().map(|&w| osc1d::energy(&params(m, w), n) - m).collect();
            // E_n - m shrinks toward the free rest energy
            assert!(excitations[0] > excitations[1] && excitations[1] > excitations[2]);
            // slope in ω approaches |n| (two smallest frequencies)
            let slope = (excitations[1] - excitations[2]) / (omegas[1] - omegas[2]);
            assert!((slope / n as f64 - 1.0).abs() <= 0.01, "m={m} n={n}: slope {slope}");
        }
    }
    println!("acceptance criterion 9 (free-field limit): PASS");
}

#[test]
fn criterion_10_cli_check_all_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("report1.json");
    let out2 = dir.path().join("report2.json");
    for out in [&out1, &out2] {
        let status = std::process::Command::new(env!("CARGO_BIN_EXE_diracosc"))
            .args(["check", "--suite", "all", "--out"])
            .arg(out)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0), "check --suite all must exit 0 under defaults");
    }
    let a = std::fs::read(&out1).unwrap();
    let b = std::fs::read(&out2).unwrap();
    assert_eq!(a, b, "consecutive runs must be byte-identical");
    println!("acceptance criterion 10 (CLI check + determinism): PASS");
}
