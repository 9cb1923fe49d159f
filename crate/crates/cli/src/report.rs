//! Report serialization. Both formats are pure functions of the rows.

use galblock_core::theorems::CHECK_NAMES;

use crate::census::CensusRow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

/// Check columns in registry order, restricted to `checks`.
fn columns(checks: &[&str]) -> Vec<&'static str> {
    CHECK_NAMES.iter().copied().filter(|c| checks.contains(c)).collect()
}

pub fn emit_csv(rows: &[CensusRow], checks: &[&str]) -> Vec<u8> {
    let cols = columns(checks);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["id", "order", "order3", "sylow_cyclic", "k0sigma", "frattini_index"];
    header.extend(cols.iter().copied());
    w.write_record(&header).expect("in-memory write");
    for r in rows {
        let mut rec = vec![
            r.id.clone(),
            r.order.to_string(),
            r.order3.to_string(),
            opt(&r.sylow_cyclic),
            opt(&r.k0sigma),
            opt(&r.frattini_index),
        ];
        rec.extend(cols.iter().map(|c| r.status(c).map(|s| s.label().to_string()).unwrap_or_default()));
        w.write_record(&rec).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

pub fn emit_json(rows: &[CensusRow]) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(rows).expect("rows serialize");
    out.push(b'\n');
    out
}

pub fn emit_report(rows: &[CensusRow], checks: &[&str], format: Format) -> Vec<u8> {
    match format {
        Format::Csv => emit_csv(rows, checks),
        Format::Json => emit_json(rows),
    }
}

pub fn parse_json_report(bytes: &[u8]) -> serde_json::Result<Vec<CensusRow>> {
    serde_json::from_slice(bytes)
}
