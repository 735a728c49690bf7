//! End-to-end runs of the `gtc` binary.

use std::path::Path;
use std::process::{Command, Output};

use gtc_cli::suite::{ClaimCheck, EntryStatus, SuiteReport};

fn gtc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtc")).args(args).env_remove("GTC_BUDGET_NODES").env_remove("GTC_BUDGET_SECONDS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn read_report(dir: &Path) -> SuiteReport {
    serde_json::from_str(&std::fs::read_to_string(dir.join("report.json")).unwrap()).unwrap()
}

#[test]
fn choosable_total_cycle_holds() {
    let o = gtc(&["check", "choosable", "--graph", "cycle:4", "--derived", "total", "--group", "Z4", "--k", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds"));
}

#[test]
fn col_of_total_wheel_prints_the_number() {
    let o = gtc(&["check", "col", "--graph", "wheel:6", "--derived", "total"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "7");
}

#[test]
fn hard_labeling_witness_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    let w = w.to_str().unwrap();
    let o = gtc(&["check", "total", "--graph", "cycle:3", "--group", "Z3", "--hard-labeling", "--witness-out", w]);
    assert_eq!(o.status.code(), Some(1));
    let o = gtc(&["check", "total", "--graph", "cycle:3", "--group", "Z3", "--witness", w]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("no coloring"));
    // Over Z4 the same lists are not the whole group.
    let o = gtc(&["check", "total", "--graph", "cycle:3", "--group", "Z4", "--witness", w]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn errors_exit_with_two() {
    assert_eq!(gtc(&["check", "col", "--graph", "nosuch:3"]).status.code(), Some(2));
    assert_eq!(gtc(&["check", "choosable", "--graph", "cycle:4", "--group", "Q8", "--k", "2"]).status.code(), Some(2));
    assert_eq!(gtc(&["check", "col", "--graph", "file:/no/such.json"]).status.code(), Some(2));
    assert_eq!(gtc(&["check", "frobnicate"]).status.code(), Some(2));
    let o = gtc(&["check", "choosable", "--graph", "cycle:4", "--derived", "total", "--group", "Z4", "--k", "4", "--budget-nodes", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("budget exceeded"));
}

#[test]
fn graph_files_with_rotation_drive_structure_and_discharge() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cube.json");
    let cube = gtc_core::catalog::cube().to_json();
    std::fs::write(&path, serde_json::to_string(&cube).unwrap()).unwrap();
    let address = format!("file:{}", path.display());
    let o = gtc(&["check", "structure", "--graph", &address]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = gtc(&["check", "discharge", "--graph", &address, "--audit", "no45", "--json"]);
    // The cube has 4-cycles, so the audit's precondition fails.
    assert_eq!(o.status.code(), Some(2));
    let o = gtc(&["check", "discharge", "--graph", "dodecahedron", "--audit", "no4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["detail"]["verdict"]["outcome"], "properties_fail");
}

#[test]
fn z3_cycle3_config_reports_the_expected_failure() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    std::fs::write(&config, r#"{"groups": ["Z3"], "graphs": ["cycle:3"]}"#).unwrap();
    let o = gtc(&["suite", "--config", config.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let md = std::fs::read_to_string(dir.path().join("report.md")).unwrap();
    assert!(md.contains("`c02.hard.cycle:3`"));
    assert!(md.contains("fails (expected)"));
    let report = read_report(dir.path());
    let failing: Vec<_> = report.entries().filter(|e| e.status == EntryStatus::Fails).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0].claim.check, ClaimCheck::HardLabeling);
    assert_eq!(failing[0].witness_confirmed, Some(true));
}

#[test]
fn zero_budget_turns_every_search_into_budget_exceeded() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    std::fs::write(&config, r#"{"budget": {"max_nodes": 0, "max_seconds": 0.0}, "criteria": [1, 2, 3, 5, 6, 7, 8]}"#).unwrap();
    let o = gtc(&["suite", "--config", config.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
    let report = read_report(dir.path());
    let searches: Vec<_> = report.entries().filter(|e| e.claim.check.searches()).collect();
    assert!(searches.len() > 100);
    for e in searches {
        assert_eq!(e.status, EntryStatus::BudgetExceeded, "{}", e.claim.id);
    }
}

#[test]
fn reports_are_reproducible() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let o = gtc(&["suite", "--criteria", "1,2,5,7,11", "--seed", "5", "--out", dir.path().to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    for file in ["report.json", "report.md"] {
        let x = std::fs::read(a.path().join(file)).unwrap();
        let y = std::fs::read(b.path().join(file)).unwrap();
        assert!(x == y, "{file} differs between runs");
    }
    let report = read_report(a.path());
    assert_eq!(report.schema_version, 1);
    assert_eq!(report.seed, 5);
    let ids: Vec<&str> = report.entries().map(|e| e.claim.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
}

#[test]
fn every_failure_is_confirmed_by_an_independent_check() {
    let dir = tempfile::tempdir().unwrap();
    let o = gtc(&["suite", "--criteria", "1,2,3,5,6", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report = read_report(dir.path());
    let mut confirmed = 0;
    for e in report.entries().filter(|e| e.status == EntryStatus::Fails) {
        let w = e.witness.as_ref().unwrap_or_else(|| panic!("{} has no witness", e.claim.id));
        let file = dir.path().join(format!("{confirmed}.json"));
        std::fs::write(&file, serde_json::to_string(&w.instance).unwrap()).unwrap();
        let file = file.to_str().unwrap().to_string();
        let derived = serde_json::to_value(e.claim.derived).unwrap().as_str().unwrap().to_string();
        let mut args: Vec<String> = match &e.claim.check {
            ClaimCheck::Choosable { k } => {
                vec!["choosable".into(), "--k".into(), k.to_string(), "--derived".into(), derived]
            }
            ClaimCheck::DChoosable { .. } => vec!["dchoosable".into(), "--derived".into(), derived],
            ClaimCheck::Colorable | ClaimCheck::HardLabeling | ClaimCheck::FullListSolve | ClaimCheck::Randomized { .. } => {
                assert_eq!(derived, "total", "{}", e.claim.id);
                vec!["total".into()]
            }
            other => panic!("unexpected failing check {other:?}"),
        };
        args.splice(0..0, ["check".to_string()]);
        args.extend(["--graph".into(), e.claim.graph.clone(), "--group".into(), w.group.clone(), "--witness".into(), file]);
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = gtc(&refs);
        assert_eq!(o.status.code(), Some(1), "{}: {}", e.claim.id, stdout(&o));
        confirmed += 1;
    }
    assert!(confirmed >= 40, "{confirmed}");
}
