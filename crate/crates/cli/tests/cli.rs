use std::process::{Command, Output};

use bettisize::{pd_reg, Field, Graph, PdRegPair};
use serde_json::Value;

fn bettisize(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bettisize"))
        .args(args)
        .env_remove("BETTISIZE_JOBS")
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = bettisize(args);
    let doc = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (out.status.code().unwrap(), doc)
}

#[test]
fn compute_from_edges() {
    let (code, doc) = report(&["compute", "--edges", "1-2,2-3,3-4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["command"], "compute");
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["results"]["kind"], "compute");
    assert_eq!(doc["results"]["pd"], 2);
    assert_eq!(doc["results"]["reg"], 4);
    assert!(doc["timing"]["elapsed_ms"].is_number());
}

#[test]
fn compute_from_graph6_with_betti_table() {
    let (code, doc) = report(&["--field", "f2", "compute", "--graph6", "Bw", "--betti"]);
    assert_eq!(code, 0);
    assert_eq!(doc["field"], "f2");
    assert_eq!(
        (doc["results"]["pd"].clone(), doc["results"]["reg"].clone()),
        (1.into(), 2.into())
    );
    // K_3: S/in(J) has β_0 = 1, β_{1,2} = 3, β_{2,3} = 2
    let betti: Vec<(u64, u64, u64)> =
        serde_json::from_value(doc["results"]["betti"].clone()).unwrap();
    assert_eq!(betti, vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
}

#[test]
fn bad_graph_is_an_input_error() {
    let (code, doc) = report(&["compute", "--graph6", "B`"]);
    assert_eq!(code, 2);
    assert_eq!(doc["passed"], false);
    assert_eq!(doc["results"]["kind"], "error");
    let (code, _) = report(&["compute", "--edges", "1-1"]);
    assert_eq!(code, 2);
}

#[test]
fn construct_returns_a_verified_witness() {
    let (code, doc) = report(&[
        "construct",
        "--n",
        "6",
        "--pd",
        "5",
        "--reg",
        "4",
        "--connected",
    ]);
    assert_eq!(code, 0);
    let g = Graph::from_graph6(doc["results"]["graph6"].as_str().unwrap()).unwrap();
    assert!(g.is_connected());
    assert_eq!(pd_reg(&g, Field::Rationals).unwrap(), PdRegPair::new(5, 4));
    assert!(doc["results"]["certificate"]["construction_trace"].is_array());
}

#[test]
fn impossible_pair_is_an_input_error() {
    let (code, doc) = report(&["construct", "--n", "5", "--pd", "1", "--reg", "3"]);
    assert_eq!(code, 2);
    assert_eq!(doc["passed"], false);
    assert_eq!(doc["results"]["kind"], "error");
}

#[test]
fn verify_selected_suites() {
    let (code, doc) = report(&[
        "--jobs", "1", "verify", "--n", "4", "--suite", "bounds", "--suite", "main",
    ]);
    assert_eq!(code, 0);
    let names: Vec<&str> = doc["results"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["check_name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["bounds", "main_theorem"]);
}

#[test]
fn atlas_written_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("atlas.json");
    let out = bettisize(&[
        "atlas",
        "--n",
        "4",
        "--dedup",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let atlas = &doc["results"]["atlas"];
    assert_eq!(atlas["n"], 4);
    assert_eq!(atlas["graphs"], 7);
}

#[test]
fn seven_vertices_need_slow_ok() {
    let (code, doc) = report(&["atlas", "--n", "7"]);
    assert_eq!(code, 2);
    assert_eq!(doc["results"]["kind"], "error");
}

#[test]
fn conjecture_probe_passes_at_six() {
    let (code, doc) = report(&["conjecture", "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["checks"][0]["values"]["max_pd"], 5);
}

#[test]
fn unknown_field_is_rejected_by_the_parser() {
    let out = bettisize(&["--field", "f4", "compute", "--edges", "1-2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}
