use galblock::census::{run_census, CensusConfig, CensusRow};
use galblock::corpus::{load, parse_corpus_str, CorpusRecord};
use galblock::report::{emit_csv, emit_json, emit_report, parse_json_report, Format};
use galblock_core::theorems::{Status, SweepBudget, CHECK_NAMES};

fn pick(ids: &[&str]) -> Vec<CorpusRecord> {
    let all = load("fallback").unwrap();
    ids.iter().map(|id| all.iter().find(|r| r.id == *id).unwrap_or_else(|| panic!("{id}")).clone()).collect()
}

fn cfg(checks: &[&'static str], jobs: Option<usize>) -> CensusConfig {
    CensusConfig { checks: checks.to_vec(), prime: 3, jobs, budget: SweepBudget::default() }
}

#[test]
fn theorem_a_over_small_cyclic_and_elementary() {
    let rows = run_census(&pick(&["C3xC3", "C9", "C3"]), &cfg(&["theorem_a"], None));
    let ids: Vec<&str> = rows.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids, ["C3", "C3xC3", "C9"]);
    let ks: Vec<u64> = rows.iter().map(|r| r.k0sigma.unwrap()).collect();
    assert_eq!(ks, [3, 9, 3]);
    assert!(rows.iter().all(|r| r.status("theorem_a") == Some(&Status::Pass)));
    assert!(rows.iter().all(|r| r.reports.len() == 1 && !r.failed()));
}

#[test]
fn empty_check_list_gives_structural_columns() {
    let rows = run_census(&pick(&["S3"]), &cfg(&[], None));
    assert!(rows[0].reports.is_empty());
    let csv = String::from_utf8(emit_csv(&rows, &[])).unwrap();
    assert_eq!(csv, "id,order,order3,sylow_cyclic,k0sigma,frattini_index\nS3,6,3,true,3,3\n");
}

#[test]
fn a4_kernel_lemma_is_skipped() {
    let rows = run_census(&pick(&["A4"]), &cfg(&["kernel_lemma"], None));
    match &rows[0].reports[0].status {
        Status::Skipped(reason) => assert!(reason.contains("O_{p'}"), "{reason}"),
        s => panic!("{s:?}"),
    }
    assert!(!rows[0].failed());
}

#[test]
fn empty_rows_csv_is_header_only() {
    let csv = String::from_utf8(emit_csv(&[], &CHECK_NAMES)).unwrap();
    assert_eq!(csv, format!("id,order,order3,sylow_cyclic,k0sigma,frattini_index,{}\n", CHECK_NAMES.join(",")));
    assert_eq!(String::from_utf8(emit_json(&[])).unwrap(), "[]\n");
}

#[test]
fn c3_json_row_has_k0sigma_3() {
    let rows = run_census(&pick(&["C3"]), &cfg(&["theorem_a"], None));
    let v: serde_json::Value = serde_json::from_slice(&emit_report(&rows, &["theorem_a"], Format::Json)).unwrap();
    assert_eq!(v[0]["k0sigma"], 3);
    assert_eq!(v[0]["id"], "C3");
    assert_eq!(v[0]["reports"][0]["status"], "pass");
}

#[test]
fn json_round_trips() {
    let rows = run_census(&pick(&["C3", "S3", "A4", "3^1+2:exp3"]), &cfg(&CHECK_NAMES, None));
    let bytes = emit_json(&rows);
    let back: Vec<CensusRow> = parse_json_report(&bytes).unwrap();
    assert_eq!(back, rows);
    assert_eq!(emit_json(&back), bytes);
}

#[test]
fn output_is_independent_of_parallelism() {
    let recs = pick(&["S4", "C3", "A5", "S3xS3", "C3^2:Q8", "A4", "C9", "D18", "C7:C3"]);
    let one = run_census(&recs, &cfg(&CHECK_NAMES, Some(1)));
    let four = run_census(&recs, &cfg(&CHECK_NAMES, Some(4)));
    for f in [Format::Csv, Format::Json] {
        assert_eq!(emit_report(&one, &CHECK_NAMES, f), emit_report(&four, &CHECK_NAMES, f));
    }
    let orders: Vec<u64> = one.iter().map(|r| r.order).collect();
    let mut sorted = orders.clone();
    sorted.sort();
    assert_eq!(orders, sorted);
}

#[test]
fn computation_errors_become_failed_rows() {
    // S9 is too large to enumerate; the row fails instead of aborting.
    let s9 = r#"{"id":"S9","degree":9,"generators":[[1,0,2,3,4,5,6,7,8],[1,2,3,4,5,6,7,8,0]]}"#;
    let mut recs = parse_corpus_str(s9).unwrap();
    recs.extend(pick(&["C3"]));
    let rows = run_census(&recs, &cfg(&["theorem_a", "k0_divisibility"], None));
    assert_eq!(rows.len(), 2);
    let bad = rows.iter().find(|r| r.id == "S9").unwrap();
    assert!(bad.failed() && bad.error.is_some() && bad.k0sigma.is_none());
    assert!(bad.reports.iter().all(|r| r.status == Status::Fail && r.witness.get("error").is_some()));
    assert!(!rows.iter().find(|r| r.id == "C3").unwrap().failed());
    let csv = String::from_utf8(emit_csv(&rows, &["theorem_a", "k0_divisibility"])).unwrap();
    assert!(csv.contains("S9,362880,81,,,,fail,fail\n"), "{csv}");
}

#[test]
fn oracle_mismatch_fails_the_row() {
    let line = r#"{"id":"S3","degree":3,"generators":[[1,0,2],[1,2,0]],"oracle":{"block_sizes":[[1,1],[2]]}}"#;
    let rows = run_census(&parse_corpus_str(line).unwrap(), &cfg(&["theorem_a"], None));
    assert!(rows[0].failed());
    assert!(rows[0].error.as_ref().unwrap().contains("oracle"));
    let ok = r#"{"id":"S3","degree":3,"generators":[[1,0,2],[1,2,0]],"oracle":{"block_sizes":[[2,1,1]]}}"#;
    assert!(!run_census(&parse_corpus_str(ok).unwrap(), &cfg(&["theorem_a"], None))[0].failed());
}

#[test]
fn every_record_appears_once() {
    let recs = load("fallback").unwrap();
    let small: Vec<CorpusRecord> = recs.into_iter().filter(|r| r.order() <= 60).collect();
    let rows = run_census(&small, &cfg(&["theorem_a", "k0_divisibility"], Some(2)));
    assert_eq!(rows.len(), small.len());
    let mut a: Vec<&str> = rows.iter().map(|r| r.id.as_str()).collect();
    let mut b: Vec<&str> = small.iter().map(|r| r.id.as_str()).collect();
    a.sort();
    b.sort();
    assert_eq!(a, b);
    assert!(rows.iter().all(|r| r.reports.len() == 2 && !r.failed()));
}
