//! `fock`: sparse text export of Fock-space operators.
//!
//! Writes one file per operator into --out (created if needed): the
//! normal-ordered and raw Hamiltonians, the charge operator, and a
//! creation/annihilation pair per mode, each with a header recording the
//! mode set and its ordering.

use std::fs::File;
use std::io::BufWriter;

use diracosc::fock::{
    charge_operator, hamiltonian_normal_ordered, hamiltonian_raw, ladder, write_operator,
    LadderKind, ModeSet,
};

use crate::config::{CliError, RunConfig};

pub fn run(cfg: &RunConfig) -> Result<(), CliError> {
    let out = cfg
        .out
        .as_ref()
        .ok_or_else(|| CliError::Config("fock export needs --out DIRECTORY".into()))?;
    let params = cfg.params()?;
    params.require_oscillator()?;
    let ms = match cfg.dim {
        1 => {
            let n_neg = cfg.fock_modes / 2;
            let n_pos = cfg.fock_modes - n_neg - 1;
            ModeSet::one_dim(&params, n_neg, n_pos)?
        }
        3 => ModeSet::three_dim(&params, cfg.n_max, cfg.kappa_max, cfg.include_negative_zero)?,
        _ => unreachable!(),
    };
    std::fs::create_dir_all(out)?;
    let write = |name: &str, op: &diracosc::fock::FockOperator| -> Result<(), CliError> {
        let path = out.join(format!("{name}.txt"));
        let mut w = BufWriter::new(File::create(path)?);
        write_operator(&mut w, name, &ms, op)?;
        Ok(())
    };
    write("hamiltonian_normal_ordered", &hamiltonian_normal_ordered(&ms)?)?;
    write("hamiltonian_raw", &hamiltonian_raw(&ms)?)?;
    write("charge", &charge_operator(&ms)?)?;
    for i in 0..ms.len() {
        write(&format!("annihilate_{i:02}"), &ladder(&ms, i, LadderKind::Annihilate)?)?;
        write(&format!("create_{i:02}"), &ladder(&ms, i, LadderKind::Create)?)?;
    }
    Ok(())
}
