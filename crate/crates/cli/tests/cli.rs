use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2cubics")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn temp_file(name: &str, body: &str) -> String {
    let path = std::env::temp_dir().join(format!("g2cubics-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn klein_invariants() {
    let v = json(&["invariants", "--fano-point", "7"]);
    assert_eq!(v["mode"], "exact");
    assert_eq!(v["p"], serde_json::json!(["1", "1", "1", "-2"]));
    assert_eq!(v["xyzb"], serde_json::json!(["0", "0", "0", "-1"]));
    assert_eq!(v["c"], "0");
    assert_eq!(v["alpha_beta"], serde_json::json!(["-1", "-1"]));
    assert_eq!(v["route_discrepancy"], 0.0);
}

#[test]
fn invariants_from_p() {
    let v = json(&["invariants", "--p", "3,3,3,0"]);
    assert_eq!(v["alpha_beta"], serde_json::json!(["6", "6"]));
}

#[test]
fn triple_file() {
    let f = temp_file(
        "klein.json",
        r#"{"v1": [1,1,0,1,0,0,0], "v2": [0,1,1,0,1,0,0], "v3": [0,0,1,1,0,1,0]}"#,
    );
    let v = json(&["invariants", "--triple", &f]);
    assert_eq!(v["mode"], "exact");
    assert_eq!(v["route_discrepancy"], 0.0);
}

#[test]
fn orbits() {
    let p = json(&["braid-orbit", "--level", "p", "--start", "1,1,1,-2"]);
    assert_eq!(p["size"], 7);
    assert_eq!(p["conserved"]["p4+s1"]["constant"], true);
    let x = json(&["braid-orbit", "--level", "xyz", "--start", "0,0,0", "--b", "-1"]);
    assert_eq!(x["size"], 7);
    let m = json(&["braid-orbit", "--level", "matrix-class", "--fano-point", "7"]);
    assert_eq!(m["size"], 7);
}

#[test]
fn fibre_over_six_six() {
    let v = json(&["loci", "--alpha", "6", "--beta", "6"]);
    assert_eq!(v["d1"], "0");
    assert_eq!(v["distinct_points"], 2);
    let fiber = v["fiber"].as_array().unwrap();
    assert!(fiber.contains(&serde_json::json!({"b": "-8", "c": "28", "multiplicity": 1})));
    assert!(fiber.contains(&serde_json::json!({"b": "1", "c": "1", "multiplicity": 2})));
}

#[test]
fn sweep_csv() {
    let out = run(&["loci", "--sweep", "b=0:1:2,c=0:1:2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("b,c,sing1,sing2,dbl,alpha,beta,d1,d2"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn group_and_weyl() {
    let g = json(&["fano-group", "--point", "3"]);
    assert_eq!(g["order"], 6048);
    assert_eq!(g["all_automorphisms"], true);
    let w = json(&["weyl"]);
    assert_eq!(w["group_order"], 12);
}

#[test]
fn realize_and_size18() {
    let r = json(&["realize", "--p", "1,1,1,-2"]);
    assert!(r["residual"].as_f64().unwrap() < 1e-8);
    assert_eq!(code(&["realize", "--size18"]), 0);
}

#[test]
fn verify_suites() {
    let v = json(&["verify", "octonion"]);
    assert_eq!(v["passed"], true);
    assert_eq!(code(&["verify", "fano"]), 0);
}

#[test]
fn exit_codes() {
    let bad = temp_file("bad.json", "{bad");
    assert_eq!(code(&["invariants", "--triple", &bad]), 2);
    let short = temp_file(
        "short.json",
        r#"{"v1": [1,0,0,0,0,0,0], "v2": [1,0,0,0,0,0,0], "v3": [1,0,0,0,0,0,0]}"#,
    );
    assert_eq!(code(&["invariants", "--triple", &short]), 3);
    assert_eq!(code(&["invariants"]), 2);
    assert_eq!(code(&["verify", "nope"]), 2);
    assert_eq!(code(&["--tolerance", "0", "verify", "octonion"]), 2);
    assert_eq!(code(&["fano-group", "--point", "9"]), 3);
    assert_eq!(code(&["braid-orbit", "--level", "xyz", "--start", "0.3,0.1,0.2", "--b", "0.5", "--max-orbit", "50"]), 4);
    assert_eq!(code(&["no-such-command"]), 2);
}
