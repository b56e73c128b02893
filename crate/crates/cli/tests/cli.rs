use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn wpolar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wpolar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn wpolar_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wpolar"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is JSON"))
        .collect()
}

fn error_kind(out: &Output) -> String {
    json_lines(out)[0]["error"]
        .as_str()
        .unwrap_or_default()
        .to_string()
}

#[test]
fn generate_zigzag_prints_graph_then_stats() {
    let out = wpolar(&["generate", "zigzag", "3", "4"]);
    assert!(out.status.success());
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["vertices"].as_array().unwrap().len(), 32);
    assert!(lines[0]["edges"][0][2].is_string());
    assert_eq!(lines[1]["n"], 32);
    assert_eq!(lines[1]["kind"], "zigzag");
}

#[test]
fn wp_all_methods_agree_on_zigzag() {
    let out = wpolar(&["--json", "wp", "zigzag", "3", "4"]);
    assert!(out.status.success());
    let report = &json_lines(&out)[0];
    assert_eq!(report["agreement"], true);
    let values: Vec<u64> = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["value"].as_u64().unwrap())
        .collect();
    assert_eq!(values, [108, 108, 108]);
}

#[test]
fn wp_from_benzenoid_params() {
    let out = wpolar(&["--json", "wp", "--benzenoid-params", "8", "1", "1", "1"]);
    assert!(out.status.success());
    assert_eq!(json_lines(&out)[0]["results"][0]["value"], 72);
}

#[test]
fn wp_params_reject_graph_methods() {
    let out = wpolar(&[
        "wp",
        "--method",
        "brute",
        "--benzenoid-params",
        "8",
        "1",
        "1",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "FormulaUnavailable");
}

#[test]
fn generated_graph_feeds_back_through_stdin() {
    let gen = wpolar(&["generate", "random", "12", "--seed", "5"]);
    let graph_line = String::from_utf8(gen.stdout)
        .unwrap()
        .lines()
        .next()
        .unwrap()
        .to_string();

    let all = wpolar_stdin(&["--json", "wp", "graph", "-"], graph_line.as_bytes());
    assert!(all.status.success());
    let report = &json_lines(&all)[0];
    let methods: Vec<&str> = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["method"].as_str().unwrap())
        .collect();
    assert_eq!(methods, ["brute", "cut"]);
    assert_eq!(report["agreement"], true);

    let formula = wpolar_stdin(
        &["wp", "--method", "formula", "graph", "-"],
        graph_line.as_bytes(),
    );
    assert_eq!(formula.status.code(), Some(2));
    assert_eq!(error_kind(&formula), "FormulaUnavailable");
}

#[test]
fn invalid_parameters_exit_two() {
    for (args, kind) in [
        (
            ["generate", "armchair", "5", "2"].as_slice(),
            "ParamOutOfRange",
        ),
        (
            ["generate", "zigzag", "3", "2"].as_slice(),
            "ParamOutOfRange",
        ),
        (
            ["generate", "zigzag", "-1", "4"].as_slice(),
            "ParamOutOfRange",
        ),
        (["generate", "random", "0"].as_slice(), "ParamOutOfRange"),
        (
            ["stats", "graph", "/nonexistent/graph.json"].as_slice(),
            "Io",
        ),
    ] {
        let out = wpolar(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(error_kind(&out), kind, "{args:?}");
    }
}

#[test]
fn malformed_hex_file_is_reported() {
    let dir = std::env::temp_dir().join(format!("wpolar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let ring = dir.join("ring.txt");
    // Six hexagons around an empty centre.
    std::fs::write(&ring, "1 -1\n1 0\n0 1\n-1 1\n-1 0\n0 -1\n").unwrap();
    let out = wpolar(&["stats", "benzenoid", "--hexes", ring.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "HasHoles");

    let garbage = dir.join("garbage.txt");
    std::fs::write(&garbage, "0 0\nzero one\n").unwrap();
    let out = wpolar(&["stats", "benzenoid", "--hexes", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "Parse");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn verify_graph_flags_broken_structure() {
    // A centre vertex with four neighbours breaks the degree bound.
    let star = r#"{"vertices":[{"id":0,"x":1,"y":1},{"id":1,"x":0,"y":1},{"id":2,"x":2,"y":1},{"id":3,"x":1,"y":2},{"id":4,"x":1,"y":0}],
        "edges":[[0,1,"D2"],[0,2,"D3"],[0,3,"D1"],[0,4,"D1"]]}"#;
    let out = wpolar_stdin(&["--json", "verify", "--graph", "-"], star.as_bytes());
    assert_eq!(out.status.code(), Some(1));
    let report = &json_lines(&out)[0];
    let failed: Vec<&str> = report["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["check"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"max-degree-3"), "{failed:?}");
}

#[test]
fn verify_small_corpus_passes() {
    let out = wpolar(&[
        "--json", "verify", "--count", "10", "--max-h", "8", "--seed", "3",
    ]);
    assert!(out.status.success());
    let report = &json_lines(&out)[0];
    assert_eq!(report["seed"], 3);
    assert_eq!(report["instances"], 10 + 36 + 18);
    assert!(report["violations"].as_array().unwrap().is_empty());
}

#[test]
fn bench_json_schema() {
    let out = wpolar(&["--json", "bench", "--sizes", "3,10", "--instances", "2"]);
    assert!(out.status.success());
    let table = &json_lines(&out)[0];
    let rows = table["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for (row, h) in rows.iter().zip([3, 10]) {
        let keys: Vec<&str> = row
            .as_object()
            .unwrap()
            .keys()
            .map(String::as_str)
            .collect();
        assert_eq!(keys, ["h", "instances", "brute_us", "cut_us", "formula_us"]);
        assert_eq!(row["h"], h);
        assert_eq!(row["instances"], 2);
        for k in ["brute_us", "cut_us", "formula_us"] {
            assert!(row[k].as_f64().unwrap() >= 0.0);
        }
    }
}

#[test]
fn bench_rejects_zero_sizes() {
    let out = wpolar(&["bench", "--sizes", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "ParamOutOfRange");
}
