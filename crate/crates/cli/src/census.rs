//! The census runner. Rows are computed independently per group and then
//! sorted by `(|G|, id)`, so output never depends on scheduling.

use std::panic::{catch_unwind, AssertUnwindSafe};

use galblock_core::theorems::{run_check, CheckReport, GroupContext, Status, SweepBudget, Witness};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::CorpusRecord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub id: String,
    pub order: u64,
    /// `|G|_p` for the census prime.
    pub order3: u64,
    pub sylow_cyclic: Option<bool>,
    pub k0sigma: Option<u64>,
    pub frattini_index: Option<u64>,
    /// `Some` when the group could not be processed; the row then fails.
    pub error: Option<String>,
    pub reports: Vec<CheckReport>,
}

impl CensusRow {
    pub fn failed(&self) -> bool {
        self.error.is_some() || self.reports.iter().any(|r| r.status.is_fail())
    }

    pub fn status(&self, check: &str) -> Option<&Status> {
        self.reports.iter().find(|r| r.check_name == check).map(|r| &r.status)
    }
}

#[derive(Clone, Debug)]
pub struct CensusConfig {
    pub checks: Vec<&'static str>,
    pub prime: u64,
    pub jobs: Option<usize>,
    pub budget: SweepBudget,
}

fn p_part(n: u64, p: u64) -> u64 {
    let mut m = n;
    let mut out = 1;
    while m % p == 0 {
        m /= p;
        out *= p;
    }
    out
}

fn oracle_mismatch(ctx: &GroupContext, rec: &CorpusRecord) -> Option<String> {
    let expected = rec.oracle.as_ref()?.block_sizes.as_ref()?;
    let norm = |blocks: Vec<Vec<u64>>| {
        let mut b: Vec<Vec<u64>> = blocks
            .into_iter()
            .map(|mut v| {
                v.sort_unstable();
                v
            })
            .collect();
        b.sort();
        b
    };
    let t = ctx.table();
    let ours = norm(ctx.blocks().blocks.iter().map(|b| b.char_indices.iter().map(|&c| t.degree(c)).collect()).collect());
    (ours != norm(expected.clone())).then(|| format!("oracle block_sizes {expected:?} disagree with computed {ours:?}"))
}

fn compute_row(rec: &CorpusRecord, cfg: &CensusConfig) -> Result<CensusRow, String> {
    let ctx = GroupContext::new(rec.id.clone(), rec.group.clone(), cfg.prime, rec.flags).map_err(|e| e.to_string())?;
    let reports = cfg.checks.iter().map(|c| run_check(&ctx, c, &cfg.budget)).collect();
    Ok(CensusRow {
        id: rec.id.clone(),
        order: rec.order(),
        order3: p_part(rec.order(), cfg.prime),
        sylow_cyclic: Some(ctx.sylow_is_cyclic().map_err(|e| e.to_string())?),
        k0sigma: Some(ctx.k0_sigma() as u64),
        frattini_index: Some(ctx.frattini_index().map_err(|e| e.to_string())?),
        error: oracle_mismatch(&ctx, rec),
        reports,
    })
}

/// One row per record. Computation errors and panics become failed rows
/// whose every check reports `fail` with the error text.
pub fn census_row(rec: &CorpusRecord, cfg: &CensusConfig) -> CensusRow {
    let outcome = catch_unwind(AssertUnwindSafe(|| compute_row(rec, cfg))).unwrap_or_else(|payload| {
        let msg = payload
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("internal panic: {msg}"))
    });
    outcome.unwrap_or_else(|err| CensusRow {
        id: rec.id.clone(),
        order: rec.order(),
        order3: p_part(rec.order(), cfg.prime),
        sylow_cyclic: None,
        k0sigma: None,
        frattini_index: None,
        reports: cfg
            .checks
            .iter()
            .map(|c| CheckReport {
                group_id: rec.id.clone(),
                check_name: c.to_string(),
                status: Status::Fail,
                witness: Witness::new().with("error", err.clone()),
            })
            .collect(),
        error: Some(err),
    })
}

pub fn sort_rows(rows: &mut [CensusRow]) {
    rows.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.id.cmp(&b.id)));
}

pub fn run_census(records: &[CorpusRecord], cfg: &CensusConfig) -> Vec<CensusRow> {
    let work = || records.par_iter().map(|r| census_row(r, cfg)).collect::<Vec<_>>();
    let mut rows = match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().expect("thread pool").install(work),
        None => work(),
    };
    sort_rows(&mut rows);
    rows
}
