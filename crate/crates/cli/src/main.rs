//! Batch front-end for the Dirac oscillator library.
//!
//! Subcommands: spectrum | wavefn | check | propagator | fock. Every flag
//! has a default (m = 1, ω = 1, n_max = 20, csv output); an optional flat
//! JSON config file fills in values that were not given as flags, and
//! explicit flags always win. Identical configurations produce
//! byte-identical output files.
//!
//! Exit codes: 0 on success (and all checks passing), 1 on a runtime or
//! check failure, 2 on a configuration error.

mod commands;
mod config;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use config::{CliError, RunConfig};

// DIRACOSC_SEED is reserved for future stochastic checks; nothing reads it
// yet, and it must not affect any output.

#[derive(Parser)]
#[command(
    name = "diracosc",
    version,
    about = "Dirac oscillator toolkit: spectra, spinor eigenfunctions, verification suites, \
             Fock-space operators and Feynman propagators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct CommonArgs {
    /// Fermion mass m (natural units)
    #[arg(long, global = true)]
    mass: Option<f64>,
    /// Oscillator frequency ω (natural units)
    #[arg(long, global = true)]
    omega: Option<f64>,
    /// Spatial dimension: 1 or 3
    #[arg(long, global = true)]
    dim: Option<u32>,
    /// Radial/mode cutoff |n| <= n_max
    #[arg(long, global = true)]
    n_max: Option<u32>,
    /// Angular cutoff |kappa| <= kappa_max (3D)
    #[arg(long, global = true)]
    kappa_max: Option<u32>,
    /// Number of Fock modes M (dimension 2^M, M <= 14)
    #[arg(long, global = true)]
    fock_modes: Option<u32>,
    /// Quadrature order (default 2 n_max + 32)
    #[arg(long, global = true)]
    quad_order: Option<usize>,
    /// Output format: csv | json
    #[arg(long, global = true)]
    format: Option<String>,
    /// Output path (stdout when omitted)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Flat JSON config file; explicit flags take precedence
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Admit the (-0, kappa > 0) spectrum labels
    #[arg(long, global = true, default_value_t = false)]
    include_negative_zero: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Energy levels of all states within the cutoffs
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Sample an eigenfunction on a grid
    Wavefn {
        #[command(flatten)]
        common: CommonArgs,
        /// Quantum number n (signed; 3D admits "+0" and "-0")
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        n: String,
        /// 3D angular quantum number kappa
        #[arg(long, allow_negative_numbers = true)]
        kappa: Option<i32>,
        /// 3D projection g (half-integer, e.g. "1/2" or "-3/2")
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
        /// Grid "min,max,count" or "hermite:ORDER"
        #[arg(long, default_value = "-8,8,161", allow_hyphen_values = true)]
        grid: String,
        /// Polar angle for 3D sampling
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2, allow_negative_numbers = true)]
        theta: f64,
        /// Azimuthal angle for 3D sampling
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        phi: f64,
    },
    /// Run a verification suite and emit a JSON report
    Check {
        #[command(flatten)]
        common: CommonArgs,
        /// Which suite to run
        #[arg(long, value_enum, default_value_t = commands::check::Suite::All)]
        suite: commands::check::Suite,
        /// Scales every tolerance (0 forces failures)
        #[arg(long, default_value_t = 1.0)]
        tol_scale: f64,
    },
    /// Sweep the Feynman propagator over a grid of arguments
    Propagator {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value_t = PropagatorSpace::Coordinate)]
        space: PropagatorSpace,
        /// Sweep grid "min,max,count" (z in coordinate space, p0 in momentum space)
        #[arg(long, default_value = "-4,4,17", allow_hyphen_values = true)]
        grid: String,
        /// Fixed second position z'
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        z_prime: f64,
        /// Fixed time t
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        t: f64,
        /// Fixed time t'
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        t_prime: f64,
        /// Fixed momentum p_z (momentum space)
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        pz: f64,
        /// Fixed momentum p_z' (momentum space)
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        pz_prime: f64,
    },
    /// Export Fock-space operators as sparse text
    Fock {
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PropagatorSpace {
    Coordinate,
    Momentum,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(CliError::Config(msg)) => {
            eprintln!("configuration error: {msg}");
            2
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Spectrum { common } => {
            let cfg = RunConfig::resolve(&common)?;
            commands::spectrum::run(&cfg)?;
            Ok(0)
        }
        Command::Wavefn { common, n, kappa, g, grid, theta, phi } => {
            let cfg = RunConfig::resolve(&common)?;
            commands::wavefn::run(&cfg, &n, kappa, g.as_deref(), &grid, theta, phi)?;
            Ok(0)
        }
        Command::Check { common, suite, tol_scale } => {
            let cfg = RunConfig::resolve(&common)?;
            commands::check::run(&cfg, suite, tol_scale)
        }
        Command::Propagator { common, space, grid, z_prime, t, t_prime, pz, pz_prime } => {
            let cfg = RunConfig::resolve(&common)?;
            commands::propagator::run(&cfg, space, &grid, z_prime, t, t_prime, pz, pz_prime)?;
            Ok(0)
        }
        Command::Fock { common } => {
            let cfg = RunConfig::resolve(&common)?;
            commands::fock::run(&cfg)?;
            Ok(0)
        }
    }
}
