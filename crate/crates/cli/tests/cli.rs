use std::process::{Command, Output};

use eqcoh::gkm::GKMGraph;
use eqcoh::zeroscheme::Report;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqcoh")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn kostant_presentation_of_the_plane() {
    let out = ok(&["present", "--variety", "pn:2", "--group", "kostant:sl3", "--format", "text"]);
    assert!(out.contains("x1^3 - 2*c2*x1 - c3"), "{out}");
}

#[test]
fn fiber_length() {
    let out = ok(&["fiber", "--variety", "pn:2", "--group", "borel:sl3", "--at", "0,0"]);
    assert_eq!(out.trim(), "dim = 3");
    let out = ok(&["fiber", "--variety", "pn:2", "--group", "borel:sl3", "--at", "1,-2", "--points"]);
    assert!(out.starts_with("dim = 3"));
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn bott_samelson_json() {
    let out = ok(&["present", "--variety", "bs:1,2@sl3", "--group", "borel:sl3", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rank"], 4);
    assert_eq!(v["variety"], "bs:1,2@sl3");
    let report: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), v);
}

#[test]
fn json_with_components_round_trips() {
    let out = ok(&["present", "--variety", "flag:3", "--group", "borel:sl3", "--format", "json", "--components"]);
    let report: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(report.components.as_ref().map(Vec::len), Some(6));
    let again = serde_json::to_string_pretty(&report).unwrap();
    assert_eq!(serde_json::from_str::<Report>(&again).unwrap(), report);
}

#[test]
fn sign_flag() {
    let engine = ok(&["present", "--variety", "pn:1", "--group", "psl2-borel:2"]);
    let flipped = ok(&["present", "--variety", "pn:1", "--group", "psl2-borel:2", "--paper-sign"]);
    assert!(engine.contains("x1^2 + 2*v*x1"));
    assert!(flipped.contains("x1^2 - 2*v*x1"));
}

#[test]
fn hilbert() {
    let out = ok(&["hilbert", "--variety", "pn:2", "--group", "borel:sl3"]);
    assert_eq!(
        out.lines().collect::<Vec<_>>(),
        ["series: (1 + t^2 + t^4)/((1 - t^2)(1 - t^2))", "numerator: 1 + t^2 + t^4", "rank: 3",]
    );
}

#[test]
fn conjugators() {
    let out = ok(&["unif-conj", "--n", "3", "--at", "1,2"]);
    assert_eq!(out.trim(), "M = [[1, 1, 1/2], [0, 1, 1], [0, 0, 1]]");
    let out = ok(&["unif-conj", "--n", "3", "--at", "1,2", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["m"][0][2], "1/2");
    let out = ok(&["kostant-conj", "--n", "2", "--at", "3"]);
    assert!(out.contains("c2 = "), "{out}");
    let o = run(&["unif-conj", "--n", "3", "--at", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("v2 - v1"));
}

#[test]
fn components() {
    let out = ok(&["components", "--variety", "pn:2", "--group", "borel:sl3"]);
    assert_eq!(out.lines().count(), 3, "{out}");
    let o = run(&["components", "--variety", "pn:2", "--group", "kostant:sl3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gkm_graph_json() {
    let out = ok(&["gkm", "--variety", "pn:2", "--group", "borel:sl3", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let g: GKMGraph = serde_json::from_value(v["graph"].clone()).unwrap();
    assert_eq!(g.edges.len(), 3);
    assert_eq!(serde_json::to_value(&g).unwrap(), v["graph"]);
    assert_eq!(v["classes"]["x1"]["pass"], true);
}

#[test]
fn usage_errors_exit_with_one() {
    let cases: [&[&str]; 7] = [
        &["present", "--variety", "pn", "--group", "borel:sl3"],
        &["present", "--variety", "pn:2", "--group", "borel:sl4"],
        &["present", "--variety", "pn:2", "--group", "sl3"],
        &["fiber", "--variety", "pn:2", "--group", "borel:sl3", "--at", "1"],
        &["fiber", "--variety", "pn:2", "--group", "borel:sl3", "--at", "1,x"],
        &["present", "--variety", "bs:1@sl2", "--group", "kostant:sl2"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn output_is_reproducible() {
    let args = ["present", "--variety", "gr:2,4", "--group", "psl2-borel:4", "--format", "json", "--components"];
    let first = run(&args);
    let handles: Vec<_> = (0..4).map(|_| std::thread::spawn(move || run(&args))).collect();
    for h in handles {
        assert_eq!(h.join().unwrap().stdout, first.stdout);
    }
}

#[test]
fn golden_suite_reports_every_criterion() {
    let o = run(&["golden", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 15);
    let all = items.iter().all(|r| r["pass"] == true);
    assert_eq!(o.status.code(), Some(if all { 0 } else { 2 }));
}
