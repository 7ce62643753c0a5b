//! Machine-readable reports: one JSON document or one CSV table per
//! invocation. JSON is emitted with sorted keys; the CSV column order is
//! fixed and documented in the README.

use semitrace::{ideal, threegen, NumericalSemigroup, Result, TracePosition};
use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize)]
pub struct MatrixRecord {
    pub n: [i128; 3],
    pub a: [i128; 3],
    pub b: [i128; 3],
    pub c: [i128; 3],
    pub d: [i128; 3],
}

/// Full invariant record for one semigroup.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub gens: Vec<i128>,
    pub mult: i128,
    pub edim: usize,
    pub frobenius: i128,
    pub genus: u64,
    pub n: u64,
    #[serde(rename = "type")]
    pub type_: usize,
    pub pf: Vec<i128>,
    pub residue: u64,
    pub trace_gens: Vec<i128>,
    pub trace_sporadic: Vec<i128>,
    pub position: TracePosition,
    pub also_equals_m: bool,
    pub symmetric: bool,
    pub almost_symmetric: bool,
    pub nearly_gorenstein: bool,
    pub cor13_ok: bool,
    pub q12_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixRecord>,
}

impl Row {
    pub fn build(h: &NumericalSemigroup) -> Result<Row> {
        let tr = ideal::trace_ideal(h)?;
        let n = h.nongaps_count() as u64;
        let g = h.genus() as u64;
        Ok(Row {
            gens: h.gens().to_vec(),
            mult: h.mult(),
            edim: h.edim(),
            frobenius: h.frobenius(),
            genus: g,
            n,
            type_: h.semigroup_type(),
            pf: h.pseudo_frobenius().to_vec(),
            residue: tr.residue,
            trace_gens: tr.gens.clone(),
            trace_sporadic: tr.sporadic.clone(),
            position: tr.position,
            also_equals_m: tr.also_equals_m,
            symmetric: h.is_symmetric(),
            almost_symmetric: h.is_almost_symmetric(),
            nearly_gorenstein: ideal::is_nearly_gorenstein(h)?,
            cor13_ok: tr.residue <= n,
            q12_ok: tr.residue as i128 <= g as i128 - n as i128,
            matrix: None,
        })
    }

    pub fn with_matrix(h: &NumericalSemigroup) -> Result<Row> {
        let mut row = Row::build(h)?;
        if !row.symmetric && row.edim == 3 {
            let m = threegen::structure_matrix(h)?;
            row.matrix = Some(MatrixRecord {
                n: m.n,
                a: m.a,
                b: m.b,
                c: m.c,
                d: m.d(),
            });
        }
        Ok(row)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub command: String,
    pub inputs: serde_json::Value,
    pub rows: Vec<Row>,
    pub summary: serde_json::Value,
}

impl Report {
    pub fn new(
        command: &str,
        inputs: serde_json::Value,
        rows: Vec<Row>,
        summary: serde_json::Value,
    ) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            rows,
            summary,
        }
    }
}

/// Serializes with sorted keys (serde_json maps are BTree-backed), so the
/// byte output is stable across runs.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report serialization");
    let mut s = serde_json::to_string_pretty(&v).expect("report serialization");
    s.push('\n');
    s
}

fn join_ints(xs: &[i128]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub const CSV_COLUMNS: [&str; 18] = [
    "gens",
    "mult",
    "edim",
    "frobenius",
    "genus",
    "n",
    "type",
    "pf",
    "residue",
    "trace_gens",
    "trace_sporadic",
    "position",
    "also_equals_m",
    "symmetric",
    "almost_symmetric",
    "nearly_gorenstein",
    "cor13_ok",
    "q12_ok",
];

/// RFC-4180 CSV with a header row; list-valued fields are space-joined.
pub fn rows_to_csv(rows: &[Row]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_COLUMNS).unwrap();
    for r in rows {
        w.write_record([
            join_ints(&r.gens),
            r.mult.to_string(),
            r.edim.to_string(),
            r.frobenius.to_string(),
            r.genus.to_string(),
            r.n.to_string(),
            r.type_.to_string(),
            join_ints(&r.pf),
            r.residue.to_string(),
            join_ints(&r.trace_gens),
            join_ints(&r.trace_sporadic),
            r.position.to_string(),
            r.also_equals_m.to_string(),
            r.symmetric.to_string(),
            r.almost_symmetric.to_string(),
            r.nearly_gorenstein.to_string(),
            r.cor13_ok.to_string(),
            r.q12_ok.to_string(),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

/// Per-shift row of a scan report.
#[derive(Debug, Clone, Serialize)]
pub struct ShiftRow {
    pub j: i128,
    pub gens: Vec<i128>,
    pub gcd: i128,
    pub degenerate: bool,
    pub residue: u64,
    pub symmetric: bool,
    pub almost_symmetric: bool,
    pub nearly_gorenstein: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixRecord>,
}

pub const SHIFT_CSV_COLUMNS: [&str; 8] = [
    "j",
    "gens",
    "gcd",
    "degenerate",
    "residue",
    "symmetric",
    "almost_symmetric",
    "nearly_gorenstein",
];

pub fn shift_rows_to_csv(rows: &[ShiftRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SHIFT_CSV_COLUMNS).unwrap();
    for r in rows {
        w.write_record([
            r.j.to_string(),
            join_ints(&r.gens),
            r.gcd.to_string(),
            r.degenerate.to_string(),
            r.residue.to_string(),
            r.symmetric.to_string(),
            r.almost_symmetric.to_string(),
            r.nearly_gorenstein.to_string(),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

#[derive(Debug, Clone, Serialize)]
pub struct ShiftReport {
    pub schema_version: &'static str,
    pub command: String,
    pub inputs: serde_json::Value,
    pub rows: Vec<ShiftRow>,
    pub summary: serde_json::Value,
}
