//! `check`: machine-readable verification suites.
//!
//! Every check reports (name, measured value, tolerance, pass) with the
//! tolerance scaled by --tol-scale; the process exits 0 iff all pass.

use clap::ValueEnum;
use diracosc::dirac::GammaRep;
use diracosc::fock::{
    self, charge_operator, hamiltonian_normal_ordered, hamiltonian_raw, ladder, sea_vacuum,
    FockOperator, LadderKind, ModeLabel, ModeSet,
};
use diracosc::osc1d::{self, Grid1D};
use diracosc::osc3d::{self, Cutoffs, Qnum3D};
use diracosc::specfun::QuadratureRule;
use diracosc::{propagator, OscParams, Spinor};
use nalgebra::Matrix4;
use num_complex::Complex64;

use crate::config::{CliError, RunConfig};
use crate::output::{emit_text, fmt_f64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Ortho,
    Complete,
    Residual,
    Fock,
    Propagator,
    All,
}

impl Suite {
    fn name(&self) -> &'static str {
        match self {
            Suite::Ortho => "ortho",
            Suite::Complete => "complete",
            Suite::Residual => "residual",
            Suite::Fock => "fock",
            Suite::Propagator => "propagator",
            Suite::All => "all",
        }
    }
}

struct CheckResult {
    name: &'static str,
    measured: f64,
    tolerance: f64,
    pass: bool,
}

struct Collector {
    tol_scale: f64,
    results: Vec<CheckResult>,
}

impl Collector {
    fn record(&mut self, name: &'static str, measured: f64, base_tolerance: f64) {
        let tolerance = base_tolerance * self.tol_scale;
        self.results.push(CheckResult { name, measured, tolerance, pass: measured <= tolerance });
    }
}

pub fn run(cfg: &RunConfig, suite: Suite, tol_scale: f64) -> Result<i32, CliError> {
    if !(tol_scale.is_finite() && tol_scale >= 0.0) {
        return Err(CliError::Config(format!("tol-scale must be >= 0, got {tol_scale}")));
    }
    let params = cfg.params()?;
    params.require_oscillator()?;
    let mut col = Collector { tol_scale, results: Vec::new() };
    if matches!(suite, Suite::Ortho | Suite::All) {
        ortho_suite(cfg, &params, &mut col)?;
    }
    if matches!(suite, Suite::Complete | Suite::All) {
        complete_suite(cfg, &params, &mut col)?;
    }
    if matches!(suite, Suite::Residual | Suite::All) {
        residual_suite(cfg, &params, &mut col)?;
    }
    if matches!(suite, Suite::Fock | Suite::All) {
        fock_suite(cfg, &params, &mut col)?;
    }
    if matches!(suite, Suite::Propagator | Suite::All) {
        propagator_suite(cfg, &params, &mut col)?;
    }

    let all_pass = col.results.iter().all(|c| c.pass);
    let mut report = String::new();
    report.push_str("{\n");
    report.push_str(&format!("  \"suite\": \"{}\",\n", suite.name()));
    report.push_str(&format!("  \"mass\": {},\n", fmt_f64(cfg.mass)));
    report.push_str(&format!("  \"omega\": {},\n", fmt_f64(cfg.omega)));
    report.push_str(&format!("  \"tol_scale\": {},\n", fmt_f64(tol_scale)));
    report.push_str("  \"checks\": [\n");
    for (i, c) in col.results.iter().enumerate() {
        let comma = if i + 1 < col.results.len() { "," } else { "" };
        report.push_str(&format!(
            "    {{\"name\": \"{}\", \"measured\": {}, \"tolerance\": {}, \"pass\": {}}}{comma}\n",
            c.name,
            fmt_f64(c.measured),
            fmt_f64(c.tolerance),
            c.pass
        ));
    }
    report.push_str("  ],\n");
    report.push_str(&format!("  \"pass\": {all_pass}\n"));
    report.push_str("}\n");
    emit_text(&report, cfg.out.as_deref())?;
    Ok(if all_pass { 0 } else { 1 })
}

// ---------------------------------------------------------------------------

fn ortho_suite(cfg: &RunConfig, params: &OscParams, col: &mut Collector) -> Result<(), CliError> {
    // 1D pairwise orthonormality under Gauss-Hermite quadrature.
    let n_used = cfg.n_max.min(40) as i64;
    let order = cfg.quad_order().max(112);
    let rule = QuadratureRule::gauss_hermite(order)?.unfolded();
    let scale = params.inv_length();
    let modes: Vec<i64> = (-n_used..=n_used).collect();
    let values: Vec<Vec<Spinor>> = modes
        .iter()
        .map(|&n| {
            rule.nodes
                .iter()
                .map(|&zeta| osc1d::wavefunction(params, n, zeta / scale))
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
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
    col.record("orthonormality_1d_max_dev", max_dev, 1e-9);

    // 3D pairwise orthonormality within each (kappa, g) channel.
    let n3 = cfg.n_max.min(10);
    let k3 = cfg.kappa_max.min(4).max(1);
    let rrule = QuadratureRule::radial((4 * (n3 + k3) + 64) as usize, 1.0 / scale)?;
    let mut max_dev3: f64 = 0.0;
    for kappa in (1..=k3 as i32).flat_map(|k| [-k, k]) {
        let states: Vec<Qnum3D> = osc3d::enumerate_eigenstates(n3, k3, false)
            .into_iter()
            .filter(|q| q.kappa == kappa && q.twice_g == 1)
            .collect();
        let pairs: Vec<_> = states
            .iter()
            .map(|q| osc3d::radial_solution(params, q))
            .collect::<Result<Vec<_>, _>>()?;
        let vals: Vec<(Vec<f64>, Vec<f64>)> = pairs
            .iter()
            .map(|p| {
                (
                    rrule.nodes.iter().map(|&r| p.f(r)).collect(),
                    rrule.nodes.iter().map(|&r| p.g(r)).collect(),
                )
            })
            .collect();
        for i in 0..vals.len() {
            for j in i..vals.len() {
                let mut acc = 0.0;
                for (k, &w) in rrule.weights.iter().enumerate() {
                    acc += w * (vals[i].0[k] * vals[j].0[k] + vals[i].1[k] * vals[j].1[k]);
                }
                let delta = if i == j { 1.0 } else { 0.0 };
                max_dev3 = max_dev3.max((acc - delta).abs());
            }
        }
    }
    col.record("orthonormality_3d_max_dev", max_dev3, 1e-8);
    Ok(())
}

/// Smooth Gaussian test spinor with content in a few low angular channels.
pub fn gaussian_test_spinor(params: &OscParams) -> impl Fn(f64, f64, f64) -> Spinor + '_ {
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

fn complete_suite(
    cfg: &RunConfig,
    params: &OscParams,
    col: &mut Collector,
) -> Result<(), CliError> {
    let n_max = cfg.n_max.min(30).max(4);
    let kappa_max = cfg.kappa_max.min(6).max(1);
    let f = gaussian_test_spinor(params);
    let full = osc3d::completeness_probe(params, Cutoffs { n_max, kappa_max }, &f)?;
    let half = osc3d::completeness_probe(params, Cutoffs { n_max: n_max / 2, kappa_max }, &f)?;
    col.record("completeness_residual", full, 1e-3);
    // refinement must not regress (5% jitter allowance)
    col.record("completeness_monotone_ratio", full / half, 1.05);
    Ok(())
}

fn residual_suite(
    cfg: &RunConfig,
    params: &OscParams,
    col: &mut Collector,
) -> Result<(), CliError> {
    // 1D eigenvalue residual with spectral differentiation.
    let n_used = cfg.n_max.min(20) as i64;
    let order = (2 * n_used as usize + 32).max(48);
    let grid = Grid1D::HermiteCollocation { order };
    let zs = grid.points(params)?;
    let mut max_res: f64 = 0.0;
    for n in -n_used..=n_used {
        let psi: Vec<Spinor> =
            zs.iter().map(|&z| osc1d::wavefunction(params, n, z)).collect::<Result<_, _>>()?;
        let h_psi = osc1d::hamiltonian_apply(params, &grid, &psi)?;
        let e = osc1d::energy(params, n);
        let mut num = 0.0;
        let mut den = 0.0;
        for (hp, ps) in h_psi.iter().zip(&psi) {
            num += (hp - ps.map(|c| c * Complex64::from(e))).norm_squared();
            den += ps.norm_squared();
        }
        max_res = max_res.max((num / den).sqrt());
    }
    col.record("eigen_residual_1d_max", max_res, 1e-6);

    // 3D radial norms and coupled-equation residuals.
    let n3 = cfg.n_max.min(10);
    let k3 = cfg.kappa_max.min(4).max(1);
    let len = 1.0 / params.inv_length();
    let mut max_norm_dev: f64 = 0.0;
    let mut max_ode_res: f64 = 0.0;
    for kappa in (1..=k3 as i32).flat_map(|k| [-k, k]) {
        let l = osc3d::angular_numbers(kappa)?.l;
        for qn in osc3d::enumerate_eigenstates(n3, k3, false)
            .into_iter()
            .filter(|q| q.kappa == kappa && q.twice_g == 1)
        {
            let pair = osc3d::radial_solution(params, &qn)?;
            let rule = QuadratureRule::radial((4 * (qn.n_abs + l) + 48) as usize, len)?;
            let norm = rule.integrate(|r| pair.f(r).powi(2) + pair.g(r).powi(2));
            max_norm_dev = max_norm_dev.max((norm - 1.0).abs());
            let rs: Vec<f64> = (1..=40).map(|k| len * 0.2 * k as f64).collect();
            let envelope =
                rs.iter().map(|&r| pair.f(r).abs().max(pair.g(r).abs())).fold(0.0f64, f64::max);
            for &r in &rs {
                let (rf, rg) = osc3d::radial_residual(params, &qn, r)?;
                max_ode_res = max_ode_res.max(rf.abs() / envelope).max(rg.abs() / envelope);
            }
        }
    }
    col.record("radial_norm_3d_max_dev", max_norm_dev, 1e-8);
    col.record("radial_residual_3d_max", max_ode_res, 1e-6);

    // Covariant-form coupling constant (σF enters twice as strongly).
    let c = osc1d::covariant_coupling_constant(params, 1, 0.8, 0.3)?;
    col.record("covariant_coupling_dev", (c - Complex64::from(2.0)).norm(), 1e-6);
    Ok(())
}

fn fock_modeset(cfg: &RunConfig, params: &OscParams, cap: u32) -> Result<ModeSet, CliError> {
    let m = cfg.fock_modes.min(cap);
    let n_neg = m / 2;
    let n_pos = m - n_neg - 1;
    Ok(ModeSet::one_dim(params, n_neg, n_pos)?)
}

fn fock_suite(cfg: &RunConfig, params: &OscParams, col: &mut Collector) -> Result<(), CliError> {
    let ms = fock_modeset(cfg, params, fock::MAX_MODES as u32)?;
    let m = ms.len();
    let id = FockOperator::identity(ms.dim());
    let mut max_car: f64 = 0.0;
    let ann: Vec<FockOperator> =
        (0..m).map(|i| ladder(&ms, i, LadderKind::Annihilate)).collect::<Result<_, _>>()?;
    for i in 0..m {
        for j in 0..m {
            let mixed = ann[i].anticommutator(&ann[j].adjoint());
            let expect = if i == j { id.clone() } else { FockOperator::zeros(ms.dim()) };
            max_car = max_car.max(mixed.max_abs_diff(&expect));
            max_car = max_car.max(ann[i].anticommutator(&ann[j]).max_abs());
        }
    }
    col.record("anticommutator_max_dev", max_car, 1e-12);

    // spectrum vs the brute-force subset sums, on a diagonalizable size
    let small = fock_modeset(cfg, params, 8)?;
    let quanta: Vec<f64> = small.modes().iter().map(|mo| mo.energy.abs()).collect();
    let mut sums: Vec<f64> = (0..1usize << small.len())
        .map(|mask| (0..small.len()).filter(|i| mask & (1 << i) != 0).map(|i| quanta[i]).sum())
        .collect();
    sums.sort_by(f64::total_cmp);
    let eig = hamiltonian_normal_ordered(&small)?.hermitian_eigenvalues()?;
    let mut max_spec: f64 = 0.0;
    for (a, b) in eig.iter().zip(&sums) {
        max_spec = max_spec.max((a - b).abs());
    }
    col.record("normal_ordered_subset_sum_max_dev", max_spec, 1e-10);

    let h_ord = hamiltonian_normal_ordered(&ms)?;
    let vac = sea_vacuum(&ms);
    col.record("vacuum_zero_energy", vac.apply(&h_ord).norm(), 1e-12);

    let mut max_create: f64 = 0.0;
    for (i, mode) in ms.modes().iter().enumerate() {
        if mode.label.is_negative_energy() {
            let create = ladder(&ms, i, LadderKind::Create)?;
            max_create = max_create.max(vac.apply(&create).norm());
        }
    }
    col.record("sea_creation_annihilates", max_create, 0.0);

    let h_raw = hamiltonian_raw(&ms)?;
    let sea_energy = vac.dot(&vac.apply(&h_raw));
    let shifted = h_raw.add_scaled(&id, -sea_energy);
    col.record("raw_ordered_shift_max_dev", h_ord.max_abs_diff(&shifted), 1e-10);

    let q = charge_operator(&ms)?;
    col.record("charge_hamiltonian_commutator", q.commutator(&h_ord).max_abs(), 1e-10);
    Ok(())
}

/// ⟨0|T ψ̂_α ψ̄̂_β|0⟩ on a truncated Fock space sharing the propagator's
/// modes.
fn fock_two_point(
    params: &OscParams,
    cutoff: u32,
    z: f64,
    t: f64,
    zp: f64,
    tp: f64,
) -> Result<Matrix4<Complex64>, CliError> {
    let ms = ModeSet::one_dim(params, cutoff, cutoff)?;
    let rep = GammaRep::standard();
    let vac = sea_vacuum(&ms);
    let mut out = Matrix4::<Complex64>::zeros();
    for alpha in 0..4 {
        for beta in 0..4 {
            let mut psi_op = FockOperator::zeros(ms.dim());
            let mut bar_op = FockOperator::zeros(ms.dim());
            for (i, mode) in ms.modes().iter().enumerate() {
                let n = match mode.label {
                    ModeLabel::OneDim(n) => n,
                    _ => unreachable!(),
                };
                let w = osc1d::wavefunction(params, n, z)?;
                let cf = w[alpha] * Complex64::from_polar(1.0, -mode.energy * t);
                if cf != Complex64::ZERO {
                    psi_op = psi_op.add_scaled(&ladder(&ms, i, LadderKind::Annihilate)?, cf);
                }
                let wb = osc1d::wavefunction(params, n, zp)?;
                let bar = wb.adjoint() * rep.beta;
                let cb = bar[beta] * Complex64::from_polar(1.0, mode.energy * tp);
                if cb != Complex64::ZERO {
                    bar_op = bar_op.add_scaled(&ladder(&ms, i, LadderKind::Create)?, cb);
                }
            }
            out[(alpha, beta)] = if t >= tp {
                vac.dot(&vac.apply(&psi_op.matmul(&bar_op)))
            } else {
                -vac.dot(&vac.apply(&bar_op.matmul(&psi_op)))
            };
        }
    }
    Ok(out)
}

fn propagator_suite(
    cfg: &RunConfig,
    params: &OscParams,
    col: &mut Collector,
) -> Result<(), CliError> {
    // Hermite-Fourier identity against a dense trapezoid transform.
    let mut max_fourier: f64 = 0.0;
    for n in -20i64..=20 {
        for &k in &[0.0, 0.57, 1.9] {
            let direct = propagator::mode_spinor_momentum(params, n, k)?;
            let oracle = trapezoid_fourier(params, n, k)?;
            max_fourier = max_fourier.max((direct - oracle).norm());
        }
    }
    col.record("hermite_fourier_max_dev", max_fourier, 1e-8);

    // Contour identity on a small (n, dt) battery.
    let mut max_contour: f64 = 0.0;
    for &n in &[0u32, 3, 7, 10] {
        for &dt in &[0.7, -1.3] {
            let (lhs, rhs) = propagator::contour_identity_check(params, n, dt)?;
            max_contour = max_contour.max((lhs - rhs).norm());
        }
    }
    col.record("contour_identity_max_dev", max_contour, 1e-6);

    // Coordinate propagator vs the truncated-Fock two-point function.
    let cutoff = 2u32;
    let mut max_fock: f64 = 0.0;
    for &(z, t, zp, tp) in &[(0.4, 0.9, -0.3, 0.1), (0.4, 0.1, -0.3, 0.9)] {
        let direct =
            propagator::coordinate_propagator(params, z, t, zp, tp, cutoff as usize)?.matrix;
        let oracle = fock_two_point(params, cutoff, z, t, zp, tp)?;
        let dev = (direct - oracle).iter().map(|c| c.norm()).fold(0.0, f64::max);
        max_fock = max_fock.max(dev);
    }
    col.record("fock_two_point_max_dev", max_fock, 1e-10);

    // Detected momentum-space poles vs the spectrum.
    let n_poles = cfg.n_max.min(10) as usize;
    let mut max_pole: f64 = 0.0;
    for n in 0..=n_poles {
        let e_n = (2.0 * n as f64 * params.m_omega() + params.mass * params.mass).sqrt();
        let detected = detect_pole(params, n, n_poles + 2)?;
        max_pole = max_pole.max((detected - e_n).abs());
    }
    col.record("momentum_pole_max_dev", max_pole, 1e-10);
    Ok(())
}

fn trapezoid_fourier(params: &OscParams, n: i64, k: f64) -> Result<Spinor, CliError> {
    let (lo, hi, steps) = (-30.0, 30.0, 6001usize);
    let h = (hi - lo) / (steps - 1) as f64;
    let mut acc = Spinor::zeros();
    for i in 0..steps {
        let z = lo + i as f64 * h;
        let w = if i == 0 || i == steps - 1 { 0.5 } else { 1.0 };
        let psi = osc1d::wavefunction(params, n, z)?;
        let kernel = Complex64::from_polar(1.0, -k * z) * Complex64::from(w * h);
        acc += psi.map(|c| c * kernel);
    }
    Ok(acc.map(|c| c / Complex64::from((2.0 * std::f64::consts::PI).sqrt())))
}

// Ternary search for the minimum of 1/||S(p0)|| inside a bracket around the
// expected pole; the minimum sits exactly where the mode sum diverges.
fn detect_pole(params: &OscParams, n: usize, cutoff: usize) -> Result<f64, CliError> {
    let e = |k: usize| (2.0 * k as f64 * params.m_omega() + params.mass * params.mass).sqrt();
    let e_n = e(n);
    let gap_up = e(n + 1) - e_n;
    let gap_down = if n == 0 { gap_up } else { e_n - e(n - 1) };
    let half = 0.4 * gap_up.min(gap_down);
    let objective = |p0: f64| -> f64 {
        match propagator::momentum_propagator(params, p0, 0.3, -0.2, cutoff) {
            Ok(sample) => {
                let norm: f64 = sample.matrix.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
                norm.recip()
            }
            Err(_) => 0.0, // inside the pole guard: as singular as it gets
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
    Ok(0.5 * (lo + hi))
}
