use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satgraph")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("satgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn weight_of_clique_and_pendant() {
    let v = json(&["weight", &fixture("k4.g")]);
    assert_eq!(v["graph_weight"], 5);
    let v = json(&["weight", &fixture("k4_pendant.g")]);
    assert_eq!(v["graph_weight"], 4);
    assert_eq!(v["min_edge"], "3-4");
    let v = json(&["weight", "--cliques", "2,3"]);
    assert_eq!(v["graph_weight"], 1);
    assert_eq!(v["edge_weights"]["0-1"], 1);
}

#[test]
fn lower_bound_values() {
    let v = json(&["lower-bound", "--clique", "4", "--n", "10"]);
    assert_eq!(v["slope"], "2/1");
    assert_eq!(v["constant"], "5/1");
    assert_eq!(v["values"][0]["integer_value"], 15);
    let v = json(&["lower-bound", "--star", "2", "--n-range", "2:4"]);
    assert_eq!(v["values"].as_array().unwrap().len(), 3);
    assert_eq!(v["slope"], "1/2");
}

#[test]
fn threshold_commands() {
    let v = json(&["threshold-weight", "--seq", "DDID"]);
    assert_eq!(v["wt"], 4);
    assert_eq!(v["satlim"], "3/2");
    let rules: Vec<_> = v["trace"].as_array().unwrap().iter().map(|s| s["rule"].as_str().unwrap().to_owned()).collect();
    assert_eq!(rules, ["clique-reset", "weight-shift", "add-isolated", "clique-reset"]);
    let v = json(&["threshold-recognize", &fixture("k4_pendant.g")]);
    assert_eq!(v["threshold"], true);
    assert_eq!(v["sequence"], "DDID");
    let v = json(&["threshold-recognize", &fixture("p4.g")]);
    assert_eq!(v["threshold"], false);
}

#[test]
fn verify_and_sat_exact() {
    let v = json(&["verify", &fixture("p4.g"), "--clique", "3"]);
    assert_eq!(v["h_free"], true);
    assert_eq!(v["saturated"], false);
    assert_eq!(v["missing"], "0-3");
    let v = json(&["sat-exact", &fixture("k4.g"), "--n", "6", "--workers", "2"]);
    assert_eq!(v["value"], 9);
    assert_eq!(v["witness_edges"].as_array().unwrap().len(), 9);
    assert!(v["runtime_ms"].is_u64());
    let v = json(&["sat-exact", "--seq", "II", "--n", "4"]);
    assert_eq!(v["value"], "inf");
    let v = json(&["probe", "--clique", "3", "--n-range", "3:6"]);
    assert_eq!(v["successive_slopes"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["weight_slope"], "1/1");
}

#[test]
fn exit_codes() {
    let bad = scratch("dup.g");
    std::fs::write(&bad, "3\n0 1\n0 1\n").unwrap();
    let out = run(&["weight", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(run(&["sat-exact", "--clique", "3", "--n", "9"]).status.code(), Some(3));
    assert_eq!(run(&["sat-exact", "--clique", "4", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["weight", "--clique", "3", "--star", "2"]).status.code(), Some(2));
    assert_eq!(run(&["threshold-weight", "--seq", "DXD"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn json_only_silences_stderr() {
    let out = run(&["--json-only", "weight", "--clique", "3"]);
    assert!(out.status.success());
    assert!(out.stderr.is_empty());
    assert!(!run(&["weight", "--clique", "3"]).stderr.is_empty());
}

/// Every graph `construct` writes is read back unchanged by every command
/// that takes a graph file.
#[test]
fn constructed_graphs_round_trip() {
    let cases: [(&str, &[&str]); 4] = [
        ("threshold", &["--seq", "DDID", "--n", "9"]),
        ("disjoint-cliques", &["--cliques", "2,3", "--n", "8"]),
        ("clique-partition", &["--k", "3", "--n", "7"]),
        ("join-lift", &["--cliques", "2,2", "--ell", "1", "--n", "7"]),
    ];
    for (kind, params) in cases {
        let path = scratch(&format!("{kind}.g"));
        let p = path.to_str().unwrap();
        let mut args = vec!["construct", kind];
        args.extend_from_slice(params);
        args.extend_from_slice(&["--out", p]);
        let sidecar = json(&args);
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(sidecar["graph"], text.as_str());
        let stored: Value = serde_json::from_str(&std::fs::read_to_string(format!("{p}.json")).unwrap()).unwrap();
        assert_eq!(stored, sidecar);
        assert_eq!(sidecar["edges"], sidecar["predicted_edges"]);

        let target = scratch(&format!("{kind}.target.g"));
        let mut target_text = format!("{}\n", sidecar["target"]["n"]);
        for e in sidecar["target"]["edges"].as_array().unwrap() {
            target_text.push_str(&format!("{} {}\n", e[0], e[1]));
        }
        std::fs::write(&target, target_text).unwrap();
        let t = target.to_str().unwrap();

        assert_eq!(json(&["weight", p])["m"], sidecar["edges"]);
        json(&["lower-bound", p, "--n", "10"]);
        json(&["threshold-recognize", p]);
        assert_eq!(json(&["verify", p, t])["saturated"], true, "{kind}");

        let lifted = scratch(&format!("{kind}.lift.g"));
        let l = lifted.to_str().unwrap();
        let v = json(&["construct", "dominating-lift", "--base", p, "--target", t, "--out", l]);
        assert_eq!(v["edges"], sidecar["edges"].as_u64().unwrap() + sidecar["n"].as_u64().unwrap());
        let lifted_target = scratch(&format!("{kind}.lift.target.g"));
        let mut lt = format!("{}\n", v["target"]["n"]);
        for e in v["target"]["edges"].as_array().unwrap() {
            lt.push_str(&format!("{} {}\n", e[0], e[1]));
        }
        std::fs::write(&lifted_target, lt).unwrap();
        assert_eq!(json(&["verify", l, lifted_target.to_str().unwrap()])["saturated"], true, "{kind} lifted");
    }
}
