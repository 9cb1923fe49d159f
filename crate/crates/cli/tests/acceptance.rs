//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs over the builtin corpus.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use galblock::census::{run_census, CensusConfig, CensusRow};
use galblock::corpus::{load, CorpusRecord};
use galblock_core::blocks::block_partition_with;
use galblock_core::theorems::{o_p_prime_order, GroupContext, Status, SweepBudget, CHECK_NAMES};
use rayon::prelude::*;

const JOBS: usize = 4;
const TIME_LIMIT: Duration = Duration::from_secs(600);
/// Lower bound on the Theorem A cohort ("several hundred" groups).
const MIN_COHORT: usize = 300;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(problems: &[String], summary: String) -> Outcome {
    let mut detail = summary;
    if !problems.is_empty() {
        detail.push_str(&format!("; {} problem(s): {}", problems.len(), problems.iter().take(8).cloned().collect::<Vec<_>>().join("; ")));
    }
    Outcome { pass: problems.is_empty(), detail }
}

fn config(checks: Vec<&'static str>) -> CensusConfig {
    CensusConfig { checks, prime: 3, jobs: Some(JOBS), budget: SweepBudget::default() }
}

/// `check` must not fail on any row in `rows`, and must pass on at least one.
fn never_fails<'a>(rows: impl Iterator<Item = &'a CensusRow>, check: &str) -> (Vec<String>, usize, usize) {
    let (mut problems, mut passed, mut total) = (Vec::new(), 0, 0);
    for r in rows {
        total += 1;
        match r.status(check) {
            Some(Status::Pass) => passed += 1,
            Some(Status::Skipped(_)) => {}
            Some(Status::Fail) | None => problems.push(format!("{} {check} fails{}", r.id, err_suffix(r))),
        }
    }
    if passed == 0 {
        problems.push(format!("{check} never passes"));
    }
    (problems, passed, total)
}

fn err_suffix(r: &CensusRow) -> String {
    r.error.as_ref().map(|e| format!(" ({e})")).unwrap_or_default()
}

fn criterion_1(records: &[CorpusRecord]) -> Outcome {
    let cohort: Vec<CorpusRecord> = records.iter().filter(|r| r.order() <= 400 && r.order() % 3 == 0).cloned().collect();
    let start = Instant::now();
    let rows = run_census(&cohort, &config(vec!["theorem_a"]));
    let elapsed = start.elapsed();
    let mut problems = Vec::new();
    for r in &rows {
        if r.status("theorem_a") != Some(&Status::Pass) {
            problems.push(format!("{} theorem_a {:?}{}", r.id, r.status("theorem_a"), err_suffix(r)));
        }
    }
    if cohort.len() < MIN_COHORT {
        problems.push(format!("cohort has only {} groups", cohort.len()));
    }
    if elapsed > TIME_LIMIT {
        problems.push(format!("took {:.1} s", elapsed.as_secs_f64()));
    }
    outcome(&problems, format!("{} groups, {:.1} s at {JOBS} jobs", cohort.len(), elapsed.as_secs_f64()))
}

fn criterion_2(rows: &[CensusRow]) -> Outcome {
    let mut problems = Vec::new();
    let mut n = 0;
    for r in rows.iter().filter(|r| r.order % 3 == 0) {
        n += 1;
        match (r.k0sigma, r.sylow_cyclic) {
            (Some(k), Some(c)) if (k == 3) == c => {}
            (k, c) => problems.push(format!("{}: k0sigma {k:?}, cyclic {c:?}{}", r.id, err_suffix(r))),
        }
        if r.status("cyclic_sylow_count") != Some(&Status::Pass) {
            problems.push(format!("{} cyclic_sylow_count {:?}", r.id, r.status("cyclic_sylow_count")));
        }
    }
    outcome(&problems, format!("{n} groups with 3 | |G|"))
}

fn criterion_3(rows: &[CensusRow]) -> Outcome {
    let (problems, passed, total) = never_fails(rows.iter().filter(|r| r.order <= 400), "theorem_b");
    outcome(&problems, format!("{passed} of {total} groups with |G| <= 400 have admissible (N, tau), all pass"))
}

fn criterion_4(rows: &[CensusRow]) -> Outcome {
    let mut problems = Vec::new();
    for r in rows.iter().filter(|r| r.order % 3 == 0) {
        if r.k0sigma.is_none_or(|k| k % 3 != 0) {
            problems.push(format!("{}: k0sigma {:?}", r.id, r.k0sigma));
        }
        if r.status("k0_divisibility") != Some(&Status::Pass) {
            problems.push(format!("{} k0_divisibility {:?}", r.id, r.status("k0_divisibility")));
        }
    }
    let (p2, passed, total) = never_fails(rows.iter().filter(|r| r.order <= 200), "relative_divisibility");
    problems.extend(p2);
    outcome(&problems, format!("k0sigma divisible by 3 throughout; relative_divisibility passes on {passed} of {total} groups with |G| <= 200"))
}

/// Per-group exactness data, computed from fresh contexts.
struct Exact {
    id: String,
    o3prime_trivial: bool,
    problems: Vec<String>,
}

fn exactness(rec: &CorpusRecord) -> Exact {
    let mut problems = Vec::new();
    let ctx = match GroupContext::new(rec.id.clone(), rec.group.clone(), 3, rec.flags) {
        Ok(c) => c,
        Err(e) => {
            return Exact { id: rec.id.clone(), o3prime_trivial: false, problems: vec![format!("{}: {e}", rec.id)] };
        }
    };
    let t = ctx.table();
    if let Err(e) = t.verify_orthogonality() {
        problems.push(format!("{}: {e}", rec.id));
    }
    if let Some(alt) = ctx.residue_field().alternative() {
        let sorted = |mut v: Vec<Vec<usize>>| {
            v.sort();
            v
        };
        match block_partition_with(t, &alt) {
            Ok(b) if sorted(b.character_sets()) == sorted(ctx.blocks().character_sets()) => {}
            Ok(_) => problems.push(format!("{}: blocks differ under the alternative ideal", rec.id)),
            Err(e) => problems.push(format!("{}: {e}", rec.id)),
        }
    }
    let mut galois = ctx.taus();
    galois.push(ctx.sigma());
    for g in &galois {
        for chi in 0..t.len() {
            match (t.sigma_fixed(chi, g), t.sigma_fixed_by_values(chi, g)) {
                (Ok(a), Ok(b)) if a == b => {}
                (a, b) => problems.push(format!("{}: chi {chi} under {g}: power map {a:?}, values {b:?}", rec.id)),
            }
        }
    }
    Exact { id: rec.id.clone(), o3prime_trivial: o_p_prime_order(&ctx) == 1, problems }
}

fn criterion_5(rows: &[CensusRow], exact: &BTreeMap<String, Exact>) -> Outcome {
    let mut problems = Vec::new();
    let mut n = 0;
    for r in rows {
        let trivial = exact.get(&r.id).is_some_and(|e| e.o3prime_trivial);
        match (trivial, r.status("kernel_lemma")) {
            (true, Some(Status::Pass)) => n += 1,
            (false, Some(Status::Skipped(_))) => {}
            (t, s) => problems.push(format!("{}: O_3' trivial {t}, kernel_lemma {s:?}", r.id)),
        }
    }
    outcome(&problems, format!("passes on all {n} groups with O_3'(G) = 1"))
}

fn criterion_6(exact: &BTreeMap<String, Exact>) -> Outcome {
    let problems: Vec<String> = exact.values().flat_map(|e| e.problems.clone()).collect();
    outcome(&problems, format!("orthogonality, alternative-ideal blocks and sigma-fixedness on {} groups", exact.len()))
}

fn criterion_7(rows: &[CensusRow]) -> Outcome {
    let by_id: BTreeMap<&str, &CensusRow> = rows.iter().map(|r| (r.id.as_str(), r)).collect();
    let mut problems = Vec::new();
    let mut expect = |id: &str, what: &str, got: Option<u64>, want: u64| {
        if got != Some(want) {
            problems.push(format!("{id}: {what} {got:?}, expected {want}"));
        }
    };
    for id in ["C3", "C9", "S3", "A4", "S4", "A5", "C3xC3", "S3xS3"] {
        let want = if id.contains('x') { 9 } else { 3 };
        expect(id, "k0sigma", by_id.get(id).and_then(|r| r.k0sigma), want);
    }
    for id in ["C3xC3", "3^1+2:exp3"] {
        expect(id, "frattini_index", by_id.get(id).and_then(|r| r.frattini_index), 9);
    }
    outcome(&problems, "k0sigma and frattini_index spot values".into())
}

fn criterion_8(rows: &[CensusRow]) -> Outcome {
    let by_id: BTreeMap<&str, &CensusRow> = rows.iter().map(|r| (r.id.as_str(), r)).collect();
    let mut problems = Vec::new();
    let cases = [
        ("almost_simple_iff", &["A5", "S5", "A6", "S6", "PSL(2,7)"][..]),
        ("simple_degree_spread", &["A5", "A6", "PSL(2,7)"][..]),
    ];
    for (check, ids) in cases {
        for id in ids {
            let s = by_id.get(id).and_then(|r| r.status(check));
            if s != Some(&Status::Pass) {
                problems.push(format!("{id} {check} {s:?}"));
            }
        }
    }
    outcome(&problems, "almost_simple_iff on 5 groups, simple_degree_spread on 3".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let records = match load("builtin") {
        Ok(r) => r,
        Err(e) => {
            println!("FAIL corpus: {e}");
            return ExitCode::FAILURE;
        }
    };
    let c1 = criterion_1(&records);
    let census_start = Instant::now();
    let rows = run_census(&records, &config(CHECK_NAMES.to_vec()));
    let census_time = census_start.elapsed();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(JOBS).build().expect("thread pool");
    let exact: BTreeMap<String, Exact> =
        pool.install(|| records.par_iter().map(exactness).collect::<Vec<_>>()).into_iter().map(|e| (e.id.clone(), e)).collect();

    let results = [
        ("1 theorem_a census", c1),
        ("2 k0sigma = 3 iff cyclic Sylow", criterion_2(&rows)),
        ("3 theorem_b for |G| <= 400", criterion_3(&rows)),
        ("4 divisibility", criterion_4(&rows)),
        ("5 kernel_lemma when O_3'(G) = 1", criterion_5(&rows, &exact)),
        ("6 exactness", criterion_6(&exact)),
        ("7 spot values", criterion_7(&rows)),
        ("8 simple and almost simple", criterion_8(&rows)),
    ];
    let mut all = true;
    for (name, o) in &results {
        println!("{} criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        all &= o.pass;
    }
    println!(
        "corpus: {} groups; full census {:.1} s, total {:.1} s at {JOBS} jobs",
        records.len(),
        census_time.as_secs_f64(),
        start.elapsed().as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
