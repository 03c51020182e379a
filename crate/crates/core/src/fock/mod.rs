//! Truncated second quantization on a fermionic Fock space.
//!
//! A [`ModeSet`] fixes M ≤ 14 single-particle modes with their energies;
//! the Fock space is the 2^M-dimensional span of occupation patterns, with
//! bit i of the basis index holding the occupation of the i-th mode in the
//! set's deterministic ordering (ascending by energy, ties broken by
//! label). Creation/annihilation matrices come from the Jordan-Wigner
//! sign-string construction, so the canonical anticommutation relations
//! hold exactly.

mod export;
mod sparse;

pub use export::{read_operator, write_operator, ImportedOperator};
pub use sparse::FockOperator;

use nalgebra::DVector;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::osc3d::{self, Qnum3D};
use crate::params::OscParams;
use crate::{osc1d, Spinor};

/// Hard bound on the mode count (dimension 2^14 = 16384).
pub const MAX_MODES: usize = 14;

/// A single-particle mode label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModeLabel {
    OneDim(i64),
    ThreeDim(Qnum3D),
}

impl ModeLabel {
    /// Negative-energy (sea) modes: n < 0 in 1D, n_sign = - in 3D.
    pub fn is_negative_energy(&self) -> bool {
        match self {
            ModeLabel::OneDim(n) => *n < 0,
            ModeLabel::ThreeDim(q) => q.n_sign == osc3d::Sign::Minus,
        }
    }

    fn order_key(&self) -> (u8, i64, i32, i32) {
        match self {
            ModeLabel::OneDim(n) => (0, *n, 0, 0),
            ModeLabel::ThreeDim(q) => {
                let (kappa, twice_g, nk) = q.order_key();
                (1, nk, kappa, twice_g)
            }
        }
    }
}

impl std::fmt::Display for ModeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModeLabel::OneDim(n) => write!(f, "n={n}"),
            ModeLabel::ThreeDim(q) => {
                write!(f, "n={} kappa={} 2g={}", q.n_label(), q.kappa, q.twice_g)
            }
        }
    }
}

/// A mode label together with its signed energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mode {
    pub label: ModeLabel,
    pub energy: f64,
}

/// Ordered list of modes; the position in the list is the Jordan-Wigner
/// bit index.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeSet {
    modes: Vec<Mode>,
}

impl ModeSet {
    /// 1D modes n ∈ [-n_neg, n_pos] with their oscillator energies.
    pub fn one_dim(params: &OscParams, n_neg: u32, n_pos: u32) -> Result<Self> {
        let modes = (-(n_neg as i64)..=n_pos as i64)
            .map(|n| Mode { label: ModeLabel::OneDim(n), energy: osc1d::energy(params, n) })
            .collect();
        Self::from_modes(modes)
    }

    /// Every valid 3D label within the cutoffs, exactly once (the printed
    /// sum limits disagree between branches; the state list itself is the
    /// authority). The switch admits the (-0, κ > 0) labels.
    pub fn three_dim(
        params: &OscParams,
        n_max: u32,
        kappa_max: u32,
        include_negative_zero_positive_kappa: bool,
    ) -> Result<Self> {
        let modes =
            osc3d::enumerate_eigenstates(n_max, kappa_max, include_negative_zero_positive_kappa)
                .into_iter()
                .map(|q| {
                    Ok(Mode {
                        label: ModeLabel::ThreeDim(q),
                        energy: osc3d::energy3d(params, q.n_sign, q.n_abs, q.kappa)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
        Self::from_modes(modes)
    }

    /// Sorts ascending by (energy, label) and enforces uniqueness and the
    /// M ≤ 14 truncation guard.
    pub fn from_modes(mut modes: Vec<Mode>) -> Result<Self> {
        if modes.len() > MAX_MODES {
            return Err(Error::ModeLimit { modes: modes.len(), max: MAX_MODES });
        }
        if modes.is_empty() {
            return Err(Error::Domain("mode set must not be empty".into()));
        }
        modes.sort_by(|a, b| {
            a.energy.total_cmp(&b.energy).then(a.label.order_key().cmp(&b.label.order_key()))
        });
        for pair in modes.windows(2) {
            if pair[0].label == pair[1].label {
                return Err(Error::Domain(format!("duplicate mode label {}", pair[0].label)));
            }
        }
        Ok(Self { modes })
    }

    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    /// Fock-space dimension 2^M.
    pub fn dim(&self) -> usize {
        1 << self.modes.len()
    }

    pub fn modes(&self) -> &[Mode] {
        &self.modes
    }

    pub fn index_of(&self, label: &ModeLabel) -> Option<usize> {
        self.modes.iter().position(|m| m.label == *label)
    }

    /// Basis index of the filled Dirac sea (all negative-energy modes
    /// occupied).
    fn sea_index(&self) -> usize {
        self.modes
            .iter()
            .enumerate()
            .filter(|(_, m)| m.label.is_negative_energy())
            .fold(0usize, |acc, (i, _)| acc | (1 << i))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderKind {
    Create,
    Annihilate,
}

/// Jordan-Wigner ladder matrix for the mode at `index` in the set's
/// ordering: the annihilator clears bit i with sign (-1)^(occupied modes
/// below i), the creator is its adjoint. {b_i, b_j†} = δ_ij and
/// {b_i, b_j} = 0 hold exactly.
pub fn ladder(modeset: &ModeSet, index: usize, kind: LadderKind) -> Result<FockOperator> {
    if index >= modeset.len() {
        return Err(Error::Domain(format!(
            "mode index {index} out of range for {} modes",
            modeset.len()
        )));
    }
    let dim = modeset.dim();
    let bit = 1usize << index;
    let mask_below = bit - 1;
    let mut triplets = Vec::with_capacity(dim / 2);
    for s in 0..dim {
        if s & bit != 0 {
            let sign = if ((s & mask_below).count_ones()) % 2 == 0 { 1.0 } else { -1.0 };
            let target = s & !bit;
            match kind {
                LadderKind::Annihilate => {
                    triplets.push((target as u32, s as u32, Complex64::from(sign)))
                }
                LadderKind::Create => {
                    triplets.push((s as u32, target as u32, Complex64::from(sign)))
                }
            }
        }
    }
    Ok(FockOperator::from_triplets(dim, triplets))
}

/// Ĥ = Σ_n E_n b†_n b_n over every mode, negative energies included; not
/// positive definite (occupying sea modes lowers the eigenvalue without
/// bound until the truncation).
pub fn hamiltonian_raw(modeset: &ModeSet) -> Result<FockOperator> {
    let mut h = FockOperator::zeros(modeset.dim());
    for (i, mode) in modeset.modes().iter().enumerate() {
        let create = ladder(modeset, i, LadderKind::Create)?;
        let annihilate = ladder(modeset, i, LadderKind::Annihilate)?;
        h = h.add_scaled(&create.matmul(&annihilate), Complex64::from(mode.energy));
    }
    Ok(h)
}

/// A state vector on the 2^M Fock space.
#[derive(Debug, Clone, PartialEq)]
pub struct FockState {
    pub amplitudes: DVector<Complex64>,
}

impl FockState {
    pub fn basis_state(dim: usize, index: usize) -> Self {
        let mut amplitudes = DVector::from_element(dim, Complex64::ZERO);
        amplitudes[index] = Complex64::ONE;
        Self { amplitudes }
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    pub fn dot(&self, other: &Self) -> Complex64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    pub fn apply(&self, op: &FockOperator) -> Self {
        Self { amplitudes: op.apply(&self.amplitudes) }
    }
}

/// Sea vacuum |0⟩ = Π_{negative modes} b†_n |0_D⟩: the occupation basis
/// vector with every negative-energy mode filled. Creating another
/// negative-energy fermion on it gives exactly zero.
pub fn sea_vacuum(modeset: &ModeSet) -> FockState {
    FockState::basis_state(modeset.dim(), modeset.sea_index())
}

/// Ĥ' = Σ_{E≥0} E_n ĉ†ĉ + Σ_{E<0} |E_n| d̂†d̂ with ĉ_n = b_n on particle
/// modes and d̂†_n = b_{-n} on sea modes: the normal-ordered Hamiltonian
/// after subtracting the (truncated) sea energy. Positive semidefinite;
/// the sea vacuum is its exact zero-energy ground state.
pub fn hamiltonian_normal_ordered(modeset: &ModeSet) -> Result<FockOperator> {
    let mut h = FockOperator::zeros(modeset.dim());
    for (i, mode) in modeset.modes().iter().enumerate() {
        let create = ladder(modeset, i, LadderKind::Create)?;
        let annihilate = ladder(modeset, i, LadderKind::Annihilate)?;
        let term = if mode.label.is_negative_energy() {
            // |E| d†d = |E| b b†
            annihilate.matmul(&create).scale(Complex64::from(mode.energy.abs()))
        } else {
            create.matmul(&annihilate).scale(Complex64::from(mode.energy))
        };
        h = h.add(&term);
    }
    Ok(h)
}

/// Particle/antiparticle families produced by the canonical
/// transformations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// 1D fermions (ĉ_n = b_n, n ≥ 0).
    Particle,
    /// 1D antifermions (d̂_n = b†_{-n}).
    Antiparticle,
    /// 3D particles with κ > 0 (j = l - 1/2).
    ParticleKappaPos,
    /// 3D antiparticles with κ > 0.
    AntiparticleKappaPos,
    /// 3D particles with κ < 0 (j = l + 1/2).
    ParticleKappaNeg,
    /// 3D antiparticles with κ < 0.
    AntiparticleKappaNeg,
}

/// One transformed operator: the annihilator of a particle or antiparticle
/// with the positive quantum energy `energy`.
#[derive(Debug, Clone)]
pub struct LabeledOperator {
    pub mode: Mode,
    pub family: Family,
    /// Energy quantum |E| carried by this excitation.
    pub energy: f64,
    pub annihilator: FockOperator,
}

/// Maps the raw b operators onto the particle/antiparticle families: for
/// antiparticle families the annihilator is the raw creator of the
/// negative-energy mode (annihilating a hole fills the sea). Each family
/// satisfies the canonical anticommutation relations internally and
/// anticommutes with the others.
pub fn particle_labels(modeset: &ModeSet) -> Result<Vec<LabeledOperator>> {
    let mut out = Vec::with_capacity(modeset.len());
    for (i, mode) in modeset.modes().iter().enumerate() {
        let negative = mode.label.is_negative_energy();
        let family = match mode.label {
            ModeLabel::OneDim(_) => {
                if negative {
                    Family::Antiparticle
                } else {
                    Family::Particle
                }
            }
            ModeLabel::ThreeDim(q) => match (q.kappa > 0, negative) {
                (true, false) => Family::ParticleKappaPos,
                (true, true) => Family::AntiparticleKappaPos,
                (false, false) => Family::ParticleKappaNeg,
                (false, true) => Family::AntiparticleKappaNeg,
            },
        };
        let annihilator = if negative {
            ladder(modeset, i, LadderKind::Create)?
        } else {
            ladder(modeset, i, LadderKind::Annihilate)?
        };
        out.push(LabeledOperator { mode: *mode, family, energy: mode.energy.abs(), annihilator });
    }
    Ok(out)
}

/// Q̂ = e (Σ particles n̂^(c) - Σ antiparticles n̂^(d)); the vacuum charge
/// is removed, so ⟨0|Q̂|0⟩ = 0 and one particle (antiparticle) carries +e
/// (-e).
pub fn charge_operator_with_coupling(modeset: &ModeSet, e: f64) -> Result<FockOperator> {
    let mut q = FockOperator::zeros(modeset.dim());
    for labeled in particle_labels(modeset)? {
        let number = labeled.annihilator.adjoint().matmul(&labeled.annihilator);
        let sign = match labeled.family {
            Family::Particle | Family::ParticleKappaPos | Family::ParticleKappaNeg => 1.0,
            _ => -1.0,
        };
        q = q.add_scaled(&number, Complex64::from(e * sign));
    }
    Ok(q)
}

/// [`charge_operator_with_coupling`] with the default coupling e = 1.
pub fn charge_operator(modeset: &ModeSet) -> Result<FockOperator> {
    charge_operator_with_coupling(modeset, 1.0)
}

/// Lifts a one-body kernel K to Σ_ab K_ab b†_a b_b on the Fock space.
pub fn one_body_lift(
    modeset: &ModeSet,
    kernel: &nalgebra::DMatrix<Complex64>,
) -> Result<FockOperator> {
    let m = modeset.len();
    if kernel.nrows() != m || kernel.ncols() != m {
        return Err(Error::Domain(format!(
            "kernel is {}x{} but the mode set has {m} modes",
            kernel.nrows(),
            kernel.ncols()
        )));
    }
    let creates: Vec<FockOperator> =
        (0..m).map(|i| ladder(modeset, i, LadderKind::Create)).collect::<Result<_>>()?;
    let annihilates: Vec<FockOperator> =
        (0..m).map(|i| ladder(modeset, i, LadderKind::Annihilate)).collect::<Result<_>>()?;
    let mut out = FockOperator::zeros(modeset.dim());
    for a in 0..m {
        for b in 0..m {
            let k = kernel[(a, b)];
            if k != Complex64::ZERO {
                out = out.add_scaled(&creates[a].matmul(&annihilates[b]), k);
            }
        }
    }
    Ok(out)
}

/// One-body momentum kernel ⟨ψ_a| -i ∂_z |ψ_b⟩ at t = 0 by Gauss-Hermite
/// quadrature, for building the 1D momentum operator P̂.
pub fn momentum_kernel(
    params: &OscParams,
    modeset: &ModeSet,
    quad_order: usize,
) -> Result<nalgebra::DMatrix<Complex64>> {
    params.require_oscillator()?;
    let m = modeset.len();
    let rule = crate::specfun::QuadratureRule::gauss_hermite(quad_order)?.unfolded();
    let scale = params.inv_length();
    let labels: Vec<i64> = modeset
        .modes()
        .iter()
        .map(|mode| match mode.label {
            ModeLabel::OneDim(n) => Ok(n),
            ModeLabel::ThreeDim(_) => {
                Err(Error::Domain("momentum kernel is defined for 1D mode sets".into()))
            }
        })
        .collect::<Result<_>>()?;
    let mut kernel = nalgebra::DMatrix::from_element(m, m, Complex64::ZERO);
    for (&zeta, &w) in rule.nodes.iter().zip(&rule.weights) {
        let z = zeta / scale;
        let values: Vec<Spinor> =
            labels.iter().map(|&n| osc1d::wavefunction(params, n, z)).collect::<Result<_>>()?;
        let derivs: Vec<Spinor> =
            labels.iter().map(|&n| osc1d::wavefunction_dz(params, n, z)).collect::<Result<_>>()?;
        for a in 0..m {
            for b in 0..m {
                // -i ψ_a† ∂_z ψ_b, weights in dζ
                kernel[(a, b)] += values[a].dotc(&derivs[b])
                    * Complex64::new(0.0, -1.0)
                    * Complex64::from(w / scale);
            }
        }
    }
    Ok(kernel)
}
