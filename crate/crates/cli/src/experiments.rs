//! Experiment drivers: theorem sweeps over enumerated corpora. Violations of
//! proved statements are bugs (exit 1); findings on the open question are
//! surfaced with witnesses and exit 0.

use crate::report::Row;
use rayon::prelude::*;
use semitrace::{ideal, NumericalSemigroup, Result, TracePosition};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentKind {
    /// C_H <= tr(H) <= H, and tr(H) <= M when not symmetric.
    Prop11,
    /// res(H) <= n(H), equality iff tr(H) = C_H.
    Cor13,
    /// res(H) <= g(H) - n(H) for 3-generated H.
    Prop22,
    /// res(H) <= g(H) - n(H) in general: open question, findings only.
    Q12,
}

impl ExperimentKind {
    pub fn is_open_question(self) -> bool {
        matches!(self, ExperimentKind::Q12)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub gens: Vec<i128>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentOutcome {
    pub checked: usize,
    pub violations: Vec<Violation>,
    pub finding: bool,
}

fn check_prop11(h: &NumericalSemigroup) -> Result<Option<String>> {
    let tr = ideal::trace_ideal(h)?;
    let fr = h.frobenius();
    let tr_member = |x: i128| (x > fr && h.contains(x)) || tr.sporadic.contains(&x);
    let cond_member = |x: i128| x > fr && h.contains(x);
    for x in 0..=fr + 2 * h.mult() {
        if cond_member(x) && !tr_member(x) {
            return Ok(Some(format!("conductor element {x} missing from trace")));
        }
        if tr_member(x) && !h.contains(x) {
            return Ok(Some(format!("trace element {x} outside H")));
        }
        if !h.is_symmetric() && x == 0 && tr_member(x) {
            return Ok(Some("0 in trace of non-symmetric H".into()));
        }
    }
    Ok(None)
}

fn check_row(kind: ExperimentKind, row: &Row) -> Option<String> {
    match kind {
        ExperimentKind::Prop11 => None, // handled separately on the semigroup
        ExperimentKind::Cor13 => {
            if !row.cor13_ok {
                Some(format!("res {} > n {}", row.residue, row.n))
            } else if (row.residue == row.n) != (row.position == TracePosition::EqualsConductor) {
                Some(format!(
                    "equality mismatch: res {} n {} position {}",
                    row.residue, row.n, row.position
                ))
            } else {
                None
            }
        }
        ExperimentKind::Prop22 | ExperimentKind::Q12 => {
            if row.q12_ok {
                None
            } else {
                Some(format!(
                    "res {} > g - n = {}",
                    row.residue,
                    row.genus as i128 - row.n as i128
                ))
            }
        }
    }
}

pub fn run(
    kind: ExperimentKind,
    corpus: &[NumericalSemigroup],
) -> Result<(Vec<Row>, ExperimentOutcome)> {
    let rows: Vec<(Row, Option<String>)> = corpus
        .par_iter()
        .map(|h| -> Result<(Row, Option<String>)> {
            let row = Row::build(h)?;
            let detail = match kind {
                ExperimentKind::Prop11 => check_prop11(h)?,
                _ => check_row(kind, &row),
            };
            Ok((row, detail))
        })
        .collect::<Result<Vec<_>>>()?;
    let violations: Vec<Violation> = rows
        .iter()
        .filter_map(|(row, detail)| {
            detail.as_ref().map(|d| Violation {
                gens: row.gens.clone(),
                detail: d.clone(),
            })
        })
        .collect();
    let outcome = ExperimentOutcome {
        checked: rows.len(),
        finding: kind.is_open_question() && !violations.is_empty(),
        violations,
    };
    Ok((rows.into_iter().map(|(r, _)| r).collect(), outcome))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate;

    #[test]
    fn theorems_hold_on_small_corpus() {
        let corpus = enumerate::threegen(20);
        for kind in [
            ExperimentKind::Prop11,
            ExperimentKind::Cor13,
            ExperimentKind::Prop22,
        ] {
            let (_, outcome) = run(kind, &corpus).unwrap();
            assert!(
                outcome.violations.is_empty(),
                "{kind:?}: {:?}",
                outcome.violations
            );
        }
    }

    #[test]
    fn q12_no_findings_small() {
        let corpus = enumerate::bounded(12, 4);
        let (_, outcome) = run(ExperimentKind::Q12, &corpus).unwrap();
        assert!(!outcome.finding, "{:?}", outcome.violations);
    }
}
