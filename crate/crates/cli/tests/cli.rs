use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nutforge")).args(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_nutforge"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn assert_usage_error(out: &Output) {
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert_eq!(err.trim_end().lines().count(), 1, "stderr: {err}");
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "named:frucht_f3"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "named:k2"]).status.code(), Some(1));
    assert_usage_error(&run(&["verify", "bad!"]));
    assert_usage_error(&run(&["verify", "named:no_such_graph"]));
    assert_usage_error(&run(&["frobnicate"]));
    assert_usage_error(&run(&["verify", "--file", "/nonexistent/graph.g6"]));
}

#[test]
fn json_certificate_shape() {
    let out = run(&["--json", "verify", "named:frucht_f3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        ["degree", "failure_reason", "is_nut", "kernel_vector", "nullity", "order", "route"]
    );
    assert_eq!(v["is_nut"], true);
    assert_eq!(v["degree"], 3);
    assert_eq!(v["route"], "direct-kernel");
    assert!(v["failure_reason"].is_null());
    let kernel = v["kernel_vector"].as_array().unwrap();
    assert_eq!(kernel.len(), 12);
    assert!(kernel.iter().all(|e| e.as_str().unwrap().parse::<i64>().unwrap() != 0));
}

#[test]
fn json_failure_reason_is_tagged() {
    let out = run(&["--json", "verify", "named:k2"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["is_nut"], false);
    assert!(v["kernel_vector"].is_null());
    assert!(v["failure_reason"].as_str().unwrap().starts_with("nullity_not_one"));
}

#[test]
fn human_and_json_modes_share_exit_codes() {
    for graph in ["named:f5", "named:k2"] {
        let plain = run(&["verify", graph]);
        let machine = run(&["--json", "verify", graph]);
        assert_eq!(plain.status.code(), machine.status.code());
        assert!(serde_json::from_slice::<Value>(&plain.stdout).is_err());
    }
}

#[test]
fn generated_family_graphs_verify() {
    for args in [
        &["gen", "dfam", "--n", "22", "--t", "3"][..],
        &["gen", "cayfam", "--m", "14", "--t", "2"],
        &["gen", "circulant", "--n", "38", "--jumps", "1,2,3,6,7,10"],
        &["gen", "product", "named:frucht_f3", "named:f5"],
    ] {
        let gen = run(args);
        assert_eq!(gen.status.code(), Some(0), "{args:?}");
        let g6 = stdout(&gen);
        let out = run_with_stdin(&["verify", "--file", "-"], &g6);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn gen_certify_reports_the_certificate() {
    let out = run(&["--json", "gen", "dfam", "--n", "18", "--t", "3", "--certify"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["graph6"].is_string());
    assert_eq!(v["certificate"]["is_nut"], true);
    assert_eq!(v["certificate"]["degree"], 12);
    assert_eq!(v["certificate"]["route"], "circulant-cyclotomic");
}

#[test]
fn gen_rejects_invalid_family_parameters() {
    assert_usage_error(&run(&["gen", "dfam", "--n", "20", "--t", "3"]));
    assert_usage_error(&run(&["gen", "cayfam", "--m", "9", "--t", "1"]));
}

#[test]
fn jumps_must_ascend() {
    let out = run(&["ell", "--graph", "named:g10_example", "--jumps", "1,3,2,6,7,10"]);
    assert_usage_error(&out);
    assert!(String::from_utf8_lossy(&out.stderr).contains("jump 2 breaks ascending order"));
}

#[test]
fn verify_reads_graph6_from_file() {
    let dir = std::env::temp_dir().join(format!("nutforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f3.g6");
    let g6 = stdout(&run(&["gen", "named", "frucht_f3"]));
    std::fs::write(&path, format!("\n{g6}")).unwrap();
    let out = run(&["--json", "verify", "--file", path.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["order"], 12);
}

#[test]
fn named_prefix_matches_graph6() {
    let g6 = stdout(&run(&["gen", "named", "g10_example"]));
    let by_name = stdout(&run(&["--json", "verify", "named:g10_example"]));
    let by_g6 = stdout(&run(&["--json", "verify", g6.trim()]));
    assert_eq!(by_name, by_g6);
}

#[test]
fn order_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_nutforge"))
        .args(["verify", "named:frucht_f3"])
        .env("NUTFORGE_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_usage_error(&out);
    let out = Command::new(env!("CARGO_BIN_EXE_nutforge"))
        .args(["verify", "named:f5"])
        .env("NUTFORGE_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn ell_reports_and_builds() {
    let out = run(&[
        "--json",
        "ell",
        "--graph",
        "named:g10_example",
        "--jumps",
        "1,2,3,6,7,10",
        "--build-first-prime",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["alpha"].as_u64(), v["beta"].as_u64(), v["ell"].as_u64()), (Some(10), Some(18), Some(19)));
    assert_eq!(v["R_degree"], 200);
    assert_eq!(v["prime"], 19);
    assert_eq!(v["certificate"]["order"], 380);
    assert_eq!(v["certificate"]["degree"], 17);
    assert_eq!(v["certificate"]["is_nut"], true);
}

#[test]
fn caux_and_conjecture_succeed() {
    let out = run(&["--json", "caux", "--t-max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out).as_array().map(Vec::len), Some(8));

    let out = run(&["conjecture", "--variant", "ii", "--t-min", "1", "--t-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_usage_error(&run(&["conjecture", "--variant", "iv", "--t-min", "1", "--t-max", "2"]));
}

#[test]
fn feasible_verdicts() {
    for (family, d, n, code, verdict) in [
        ("circ", "8", "14", 0, "member"),
        ("circ", "8", "16", 1, "non-member"),
        ("reg3", "3", "12", 0, "member"),
        ("vt", "6", "16", 1, "unknown-beyond-theorems"),
    ] {
        let out = run(&["--json", "feasible", "--family", family, "--d", d, "--n", n]);
        assert_eq!(out.status.code(), Some(code), "({family}, {d}, {n})");
        assert_eq!(json(&out)["verdict"], verdict);
    }
    assert_usage_error(&run(&["feasible", "--family", "reg4", "--d", "3", "--n", "12"]));
    assert_usage_error(&run(&["feasible", "--family", "petersen", "--d", "3", "--n", "12"]));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
