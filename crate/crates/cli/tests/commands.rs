use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

use eulertrail_cli::{analyze, avoid, classify, conjecture_search, trail, SearchConfig, Status};
use eulertrail_core::{gen_d3, gen_exceptional, serialize_json, Arc, Digraph, EXCEPTIONAL_ARC};

fn arc_json(u: usize, v: usize) -> Value {
    serde_json::json!({ "tail": u, "head": v })
}

fn all_arcs(d: &Digraph) -> Vec<Arc> {
    d.arcs().collect()
}

#[test]
fn analyze_reports_connectivity_and_cut_arcs() {
    let r = analyze(&gen_d3());
    assert_eq!(r.json["lambda"], 1);
    assert_eq!(
        r.json["cut_arcs"],
        serde_json::json!([arc_json(0, 1), arc_json(1, 2), arc_json(2, 0)])
    );
    assert_eq!(analyze(&Digraph::cycle(3)).json["lambda"], 1);
    let k4 = analyze(&Digraph::complete(4));
    assert_eq!(k4.json["lambda"], 3);
    assert_eq!(k4.json["decomposition"], serde_json::json!([[0, 1, 2, 3]]));
    assert_eq!(k4.status, Status::Certified);
}

#[test]
fn analyze_leaves_decomposition_empty_when_not_strong() {
    let r = analyze(&Digraph::transitive_tournament(4));
    assert_eq!(r.json["strong"], false);
    assert_eq!(r.json["lambda"], 0);
    assert!(r.json["decomposition"].is_null());
    assert!(r.json["cut_arcs"].is_null());
}

#[test]
fn classify_exceptional_arc() {
    for with_cb in [false, true] {
        let d = gen_exceptional(with_cb);
        let r = classify(&d, &[EXCEPTIONAL_ARC], true).unwrap();
        assert_eq!(r.json["unavoidable"], "exceptional");
        assert_eq!(r.json["partition"]["y"], serde_json::json!([0, 3]));
        assert_eq!(r.json["verified"], true);
        assert_eq!(r.status, Status::Certified);
    }
}

#[test]
fn classify_all_flags_the_bad_arc_of_d3() {
    let d = gen_d3();
    let r = classify(&d, &all_arcs(&d), false).unwrap();
    assert_eq!(r.json["bad"], serde_json::json!([arc_json(2, 1)]));
    assert_eq!(r.json["arcs"].as_array().unwrap().len(), 4);
}

#[test]
fn classify_all_on_complete_four() {
    let d = Digraph::complete(4);
    let r = classify(&d, &all_arcs(&d), false).unwrap();
    assert_eq!(r.json["bad"], serde_json::json!([]));
    assert_eq!(r.json["unavoidable"], serde_json::json!([]));
    assert!(r.json["arcs"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["verified"] == true));
}

#[test]
fn trail_examples() {
    let r = trail(&Digraph::complete(3), 0, 1).unwrap();
    assert_eq!(r.status, Status::Certified);
    assert_eq!(r.json["kind"], "trail");
    let vs: Vec<usize> = serde_json::from_value(r.json["vertices"].clone()).unwrap();
    assert_eq!((vs[0], *vs.last().unwrap()), (0, 1));

    let r = trail(&Digraph::cycle(3), 0, 1).unwrap();
    assert_eq!(r.status, Status::Impossible);
    assert_eq!(
        r.json["cut"]["crossing_arcs"],
        serde_json::json!([arc_json(0, 1)])
    );

    let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
    assert!(trail(&path, 0, 1).is_err());
}

#[test]
fn avoid_examples() {
    let d = Digraph::complete(5);
    let f = [Arc::new(0, 1), Arc::new(1, 2), Arc::new(3, 4)];
    let r = avoid(&d, &f).unwrap();
    assert_eq!(r.status, Status::Certified);
    assert_eq!(r.json["verified"], true);

    let star = [
        Arc::new(0, 1),
        Arc::new(0, 2),
        Arc::new(3, 0),
        Arc::new(0, 4),
    ];
    assert_eq!(avoid(&d, &star).unwrap().status, Status::Certified);

    let r = avoid(&Digraph::cycle(3), &[Arc::new(0, 1)]).unwrap();
    assert_eq!(r.status, Status::Impossible);
    assert_eq!(r.json["outcome"]["kind"], "not_strong");
}

#[test]
fn small_k_searches_find_nothing() {
    for k in 1..=3 {
        let config = SearchConfig {
            k,
            n: 7,
            trials: 200,
            seed: 11,
            jobs: 2,
        };
        let report = conjecture_search(&config).unwrap();
        assert!(report.candidates.is_empty(), "k = {k}");
        assert_eq!(report.unknown, 0);
        assert_eq!(report.methods.values().sum::<usize>(), 200);
    }
}

#[test]
fn search_does_not_depend_on_the_worker_count() {
    let run = |jobs| {
        let config = SearchConfig {
            k: 2,
            n: 12,
            trials: 60,
            seed: 5,
            jobs,
        };
        serde_json::to_value(conjecture_search(&config).unwrap()).unwrap()
    };
    assert_eq!(run(1), run(3));
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_eulertrail"))
}

fn write_temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("eulertrail-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn exit_codes_and_streams() {
    let cycle = write_temp("cycle.json", &serialize_json(&Digraph::cycle(3)));
    let out = bin()
        .args(["trail", "--from", "0", "--to", "1"])
        .arg(&cycle)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["kind"], "impossible");
    assert!(!out.stderr.is_empty());

    let out = bin()
        .args(["--quiet", "analyze"])
        .arg(&cycle)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty());

    let out = bin()
        .args(["analyze", "--format", "dot"])
        .arg(&cycle)
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("digraph"));

    let bad = write_temp("bad.json", r#"{"n": 2, "arcs": [[0, 1], [0, 1]]}"#);
    let out = bin().arg("analyze").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin()
        .args(["conjecture-search", "--k", "two"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin().args(["classify"]).arg(&cycle).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_reads_arc_flags() {
    let d3 = write_temp("d3.json", &serialize_json(&gen_d3()));
    let out = bin()
        .args(["classify", "--quiet", "--arc", "2", "1"])
        .arg(&d3)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["good"], false);
    assert_eq!(json["unavoidable"], "avoidable");
}
