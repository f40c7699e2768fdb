//! End-to-end tests of the command-line interface: formats, determinism and
//! exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hypertensor"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn write_k3(dir: &Path) -> String {
    let path = dir.join("k3.txt");
    std::fs::write(&path, "3 3\n0 1\n0 2\n1 2\n").unwrap();
    path.display().to_string()
}

fn write_single_4edge(dir: &Path) -> String {
    let path = dir.join("one4.json");
    std::fs::write(&path, r#"{"k":4,"n":4,"edges":[[0,1,2,3]]}"#).unwrap();
    path.display().to_string()
}

#[test]
fn gen_power_builds_k3_power() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_k3(dir.path());
    let out_path = dir.path().join("h.json");
    let out = run(&[
        "gen-power",
        "--graph",
        &graph,
        "-k",
        "4",
        "-s",
        "1",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let report = stdout_json(&out);
    assert_eq!(report["command"], "gen-power");
    assert_eq!(report["outputs"]["n"], 9);
    assert_eq!(report["outputs"]["m"], 3);

    let h: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(h["k"], 4);
    assert_eq!(h["n"], 9);
    assert!(dir.path().join("h.json.labeling.json").exists());
}

#[test]
fn gen_power_k2_s1_reproduces_graph() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_k3(dir.path());
    let out_path = dir.path().join("h.json");
    let out = run(&[
        "gen-power",
        "--graph",
        &graph,
        "-k",
        "2",
        "-s",
        "1",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let h: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(h["n"], 3);
    assert_eq!(h["edges"], serde_json::json!([[0, 1], [0, 2], [1, 2]]));
}

#[test]
fn gen_power_output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_k3(dir.path());
    let first = dir.path().join("a.json");
    let second = dir.path().join("b.json");
    for out_path in [&first, &second] {
        let out = run(&[
            "gen-power",
            "--graph",
            &graph,
            "-k",
            "6",
            "-s",
            "1",
            "--out",
            out_path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(
        std::fs::read(&first).unwrap(),
        std::fs::read(&second).unwrap()
    );
}

#[test]
fn gen_power_invalid_s_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_k3(dir.path());
    let out = run(&[
        "gen-power",
        "--graph",
        &graph,
        "-k",
        "4",
        "-s",
        "3",
        "--out",
        dir.path().join("h.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn gen_power_bad_graph_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "not a graph\n").unwrap();
    let out = run(&[
        "gen-power",
        "--graph",
        bad.to_str().unwrap(),
        "-k",
        "4",
        "-s",
        "1",
        "--out",
        dir.path().join("h.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn radius_quotient_on_k3_is_three_with_lift() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_k3(dir.path());
    let out = run(&[
        "radius", "--graph", &graph, "-k", "4", "-s", "1", "--quotient",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    let lambda = report["outputs"]["eigenpair"]["lambda"].as_f64().unwrap();
    assert!((lambda - 3.0).abs() < 1e-6);
    assert_eq!(report["outputs"]["lifted_vector"].as_array().unwrap().len(), 9);
    assert!(report["outputs"]["lifted_residual"].as_f64().unwrap() < 1e-8);
}

#[test]
fn radius_quotient_requires_tensor_q() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_k3(dir.path());
    let out = run(&[
        "radius", "--graph", &graph, "-k", "4", "-s", "1", "--quotient", "--tensor", "a",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn radius_laplacian_single_edge_is_two() {
    let dir = tempfile::tempdir().unwrap();
    let hfile = write_single_4edge(dir.path());
    let out = run(&["radius", "--hypergraph", &hfile, "--tensor", "l"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let lambda = report["outputs"]["eigenpair"]["lambda"].as_f64().unwrap();
    assert!((lambda - 2.0).abs() < 1e-8);
    let signed = report["outputs"]["signed_vector"].as_array().unwrap();
    assert_eq!(signed.iter().filter(|v| v.as_f64().unwrap() < 0.0).count() % 2, 1);
}

#[test]
fn radius_laplacian_on_half_power_of_k3_exits_5() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_k3(dir.path());
    let out = run(&[
        "radius", "--graph", &graph, "-k", "4", "-s", "2", "--tensor", "l",
    ]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn radius_nonconvergence_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_k3(dir.path());
    let out = run(&[
        "radius", "--graph", &graph, "-k", "4", "-s", "1", "--max-iter", "2",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn radius_runs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_k3(dir.path());
    let args = ["radius", "--graph", &graph, "-k", "4", "-s", "1", "--quotient"];
    let a = stdout_json(&run(&args));
    let b = stdout_json(&run(&args));
    assert_eq!(a["outputs"], b["outputs"]);
}

#[test]
fn verify_k3_passes() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_k3(dir.path());
    let out = run(&[
        "verify", "--graph", &graph, "--k-range", "4:8:2", "--s-range", "1:2:1",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("k,s,lambda,residual,iterations,delta_gap"));
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_k2_is_constant_and_passes() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k2.txt");
    std::fs::write(&graph, "2 1\n0 1\n").unwrap();
    let out = run(&[
        "verify",
        "--graph",
        graph.to_str().unwrap(),
        "--k-range",
        "4:8:2",
        "--s-range",
        "1",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("constant_lambda"));
    for line in text.lines().skip(1).filter(|l| l.contains(',')) {
        let lambda: f64 = line.split(',').nth(2).unwrap().parse().unwrap();
        assert!((lambda - 2.0).abs() < 1e-8);
    }
}

#[test]
fn regular_root_values_and_exit_codes() {
    let out = run(&["regular-root", "-d", "2", "-k", "4", "-s", "1"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert!((report["outputs"]["root"].as_f64().unwrap() - 3.0).abs() < 1e-9);

    let out = run(&["regular-root", "-d", "1", "-k", "6", "-s", "1"]);
    let report = stdout_json(&out);
    assert!((report["outputs"]["root"].as_f64().unwrap() - 2.0).abs() < 1e-9);

    // root of (x-3)(x-1)^2 = 3 lies in (3, 6]
    let out = run(&["regular-root", "-d", "3", "-k", "6", "-s", "1"]);
    let report = stdout_json(&out);
    let root = report["outputs"]["root"].as_f64().unwrap();
    assert!(root > 3.0 && root <= 6.0);
    let f = (root - 3.0) * (root - 1.0) * (root - 1.0) - 3.0;
    assert!(f.abs() < 1e-7);

    let out = run(&["regular-root", "-d", "2", "-k", "4", "-s", "2"]);
    assert_eq!(out.status.code(), Some(3));
}
