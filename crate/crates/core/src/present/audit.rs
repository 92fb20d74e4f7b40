//! The audit engine: fan relation instances out to workers, evaluate left
//! minus right exactly in the chosen target, and merge the residual records
//! deterministically.

use super::models::TwistedLoopModel;
use super::relations::{instances, relation_ids};
use super::{evaluate, Presentation, RelInstance, TargetAlgebra, Window};
use crate::report::{bindings_map, AuditReport, ResultEntry};
use rayon::prelude::*;

/// Evaluate one instance in the target, producing the corrected-reading
/// entry and, when the literal text differs, the printed-reading entry.
pub fn evaluate_instance<T: TargetAlgebra + Sync>(
    inst: &RelInstance,
    target: &T,
) -> Vec<ResultEntry> {
    let mut out = Vec::new();
    let lhs = evaluate(&inst.lhs, target);
    let readings: Vec<(&str, &super::FormalExpr, bool)> = match &inst.printed_rhs {
        None => vec![("corrected", &inst.rhs, false)],
        Some(p) => vec![("corrected", &inst.rhs, false), ("printed", p, true)],
    };
    for (tag, rhs, is_printed) in readings {
        let rhs_val = evaluate(rhs, target);
        let entry = match (&lhs, &rhs_val) {
            (Ok(l), Ok(r)) => {
                let residual = target.add(l, &target.scale(&crate::coeff::ParamPoly::int(-1), r));
                let zero = target.is_zero(&residual);
                ResultEntry {
                    id: inst.id.clone(),
                    bindings: bindings_map(&inst.bindings),
                    reading: tag.to_string(),
                    residual_zero: zero,
                    residual_repr: if zero {
                        "0".to_string()
                    } else {
                        target.repr(&residual)
                    },
                    ledger_entry: if is_printed { inst.note.clone() } else { None },
                }
            }
            (Err(e), _) | (_, Err(e)) => ResultEntry {
                id: inst.id.clone(),
                bindings: bindings_map(&inst.bindings),
                reading: tag.to_string(),
                residual_zero: false,
                residual_repr: format!("evaluation error: {e}"),
                ledger_entry: if is_printed { inst.note.clone() } else { None },
            },
        };
        out.push(entry);
    }
    out
}

pub fn run_instances<T: TargetAlgebra + Sync>(
    insts: &[RelInstance],
    target: &T,
    config: serde_json::Value,
) -> AuditReport
where
    T::El: Send,
{
    let mut report = AuditReport::new(config);
    let entries: Vec<ResultEntry> = insts
        .par_iter()
        .flat_map_iter(|inst| evaluate_instance(inst, target))
        .collect();
    report.extend(entries);
    report.sort();
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetKind {
    Pi,
    Phi,
}

impl TargetKind {
    pub fn parse(s: &str) -> Option<TargetKind> {
        match s {
            "pi" => Some(TargetKind::Pi),
            "phi" => Some(TargetKind::Phi),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TargetKind::Pi => "pi",
            TargetKind::Phi => "phi",
        }
    }
}

/// Top-level audit: instantiate the presentation's relation families over
/// the window and evaluate them under the chosen assignment. The deformed
/// presentation is audited at its classical limit here (its full deformed
/// right sides live in the mode-sum engine).
pub fn audit(preset: Presentation, target: TargetKind, n: i64, w: &Window) -> AuditReport {
    let config = serde_json::json!({
        "presentation": preset.name(),
        "target": target.name(),
        "n": n,
        "rmax": w.rmax,
        "smax": w.smax,
    });
    let insts = instances(preset, n, w);
    match preset {
        Presentation::A => {
            // the untwisted companion lives on 2n nodes
            let model = super::models::CyclicLoopModel::new(2 * n);
            run_instances(&insts, &model, config)
        }
        Presentation::Ty => {
            let model = match target {
                TargetKind::Pi => TwistedLoopModel::pi(n).classical(),
                TargetKind::Phi => TwistedLoopModel::phi(n).classical(),
            };
            run_instances(&insts, &model, config)
        }
        _ => {
            let model = match target {
                TargetKind::Pi => TwistedLoopModel::pi(n),
                TargetKind::Phi => TwistedLoopModel::phi(n),
            };
            run_instances(&insts, &model, config)
        }
    }
}

/// Every declared relation id must appear in the report.
pub fn coverage_complete(preset: Presentation, report: &AuditReport) -> bool {
    relation_ids(preset)
        .iter()
        .all(|id| report.results.iter().any(|e| &e.id == id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::present::{br, h, xm, xp};

    #[test]
    fn instantiate_direct_substitution() {
        // relation 5111 at (i,r,j,s) = (1,0,2,1) is [H_{1,0}, H_{2,1}]
        let w = Window { rmax: 1, smax: 1 };
        let insts = instances(Presentation::D, 4, &w);
        let found = insts
            .iter()
            .find(|i| {
                i.id == "5111"
                    && i.bindings == vec![('i', 1), ('r', 0), ('j', 2), ('s', 1)]
            })
            .expect("instance exists");
        assert_eq!(found.lhs, br(h(1, 0), h(2, 1)));
    }

    #[test]
    fn instantiate_fork_case() {
        // relation 5114 first clause at (r,s) = (0,1):
        // [X+_{n-1,0}, X-_{n,1}] = -X-_{n+1,1}
        let n = 4;
        let w = Window { rmax: 1, smax: 1 };
        let insts = instances(Presentation::D, n, &w);
        let found = insts
            .iter()
            .find(|i| {
                i.id == "5114" && i.bindings == vec![('r', 0), ('s', 1), ('k', 1)]
            })
            .expect("instance exists");
        assert_eq!(found.lhs, br(xp(n - 1, 0), xm(n, 1)));
        assert_eq!(found.rhs, crate::present::sci(-1, xm(n + 1, 1)));
    }

    #[test]
    fn out_of_range_level_is_an_error() {
        let model = TwistedLoopModel::pi(4);
        let bad = h(0, 1); // odd level at the zero node does not exist
        assert!(evaluate(&bad, &model).is_err());
    }
}
