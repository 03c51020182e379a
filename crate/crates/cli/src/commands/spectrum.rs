//! `spectrum`: energy levels of every state within the cutoffs.

use diracosc::{osc1d, osc3d};

use crate::config::{CliError, RunConfig};
use crate::output::{emit, Cell, Table};

pub fn run(cfg: &RunConfig) -> Result<(), CliError> {
    let params = cfg.params()?;
    let table = match cfg.dim {
        1 => {
            let mut t = Table { columns: vec!["n".into(), "energy".into()], rows: vec![] };
            for n in -(cfg.n_max as i64)..=cfg.n_max as i64 {
                t.rows.push(vec![Cell::Int(n), Cell::F64(osc1d::energy(&params, n))]);
            }
            t
        }
        3 => {
            let mut rows: Vec<(f64, osc3d::Qnum3D)> = Vec::new();
            for qn in osc3d::enumerate_labels(cfg.n_max, cfg.kappa_max, cfg.include_negative_zero) {
                let e = osc3d::energy3d(&params, qn.n_sign, qn.n_abs, qn.kappa)?;
                rows.push((e, qn));
            }
            rows.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.order_key().cmp(&b.1.order_key())));
            let mut t = Table {
                columns: vec!["n".into(), "kappa".into(), "g".into(), "energy".into()],
                rows: vec![],
            };
            for (e, qn) in rows {
                t.rows.push(vec![
                    Cell::Str(qn.n_label()),
                    Cell::Int(qn.kappa as i64),
                    Cell::Str(format!("{}", qn.g())),
                    Cell::F64(e),
                ]);
            }
            t
        }
        _ => unreachable!("validated in RunConfig"),
    };
    emit(&table, cfg.format, cfg.out.as_deref())?;
    Ok(())
}
