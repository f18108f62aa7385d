use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use zariski_cli::certificate::digest;
use zariski_cli::{run_args, Certificate};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_zariski"))
}

fn schema() -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/certificate.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&schema).expect("schema compiles")
}

fn assert_valid(cert: &Certificate) {
    let v = serde_json::to_value(cert).unwrap();
    let schema = schema();
    if let Err(errors) = schema.validate(&v) {
        let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
        panic!("certificate violates schema: {msgs:?}");
    }
    assert!(cert.is_consistent());
}

/// Runs the binary with `--json`, returning the exit code and certificate.
fn run_bin(args: &[&str]) -> (i32, Option<Value>) {
    let out = bin().arg("--json").args(args).output().expect("binary runs");
    let json = serde_json::from_slice(&out.stdout).ok();
    (out.status.code().unwrap(), json)
}

fn scratch() -> tempfile::TempDir {
    tempfile::tempdir().unwrap()
}

fn construct_curve(dir: &Path, args: &[&str]) -> PathBuf {
    let path = dir.join("curve.json");
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--curve-out", path.to_str().unwrap()]);
    let cert = run_args(full).unwrap();
    assert!(cert.ok, "{}", cert.summary());
    path
}

#[test]
fn strata_certificates() {
    let four = run_args(["strata", "4"]).unwrap();
    assert_eq!(four.results["count"], 3);
    assert_valid(&four);

    let five = run_args(["strata", "5"]).unwrap();
    assert_eq!(five.results["count"], 3);
    assert_eq!(five.results["arithmetic"], serde_json::json!([{ "m": 5, "size": 2 }]));

    let two = run_args(["strata", "2"]).unwrap();
    let flags: Vec<bool> =
        two.results["strata"].as_array().unwrap().iter().map(|s| s["realizable"].as_bool().unwrap()).collect();
    assert_eq!(flags, [false, true]);
    assert!(two.ok);
}

#[test]
fn digest_covers_inputs() {
    let c = run_args(["strata", "7"]).unwrap();
    assert_eq!(c.inputs_digest, digest(&c.inputs));
    assert_ne!(c.inputs_digest, run_args(["strata", "8"]).unwrap().inputs_digest);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let dir = scratch();
    let curve = construct_curve(dir.path(), &["3", "--variant", "2", "--taus", "2:1,6:1,6:5"]);
    let c = curve.to_str().unwrap();
    for args in [
        vec!["group", "B3S2", "--order", "--derived-series"],
        vec!["link", c, "--numeric", "64", "--perturbations", "2", "--seed", "5"],
        vec!["verify", c],
        vec!["construct", "4", "--variant", "1"],
    ] {
        let a = bin().args(&args).arg("--json").output().unwrap();
        let b = bin().args(&args).arg("--json").output().unwrap();
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(a.status.success(), "{args:?}");
    }
}

#[test]
fn group_b3s2_order_and_series() {
    let (code, json) = run_bin(&["group", "B3S2", "--order", "--derived-series"]);
    assert_eq!(code, 0);
    let json = json.unwrap();
    assert_eq!(json["results"]["cosets"]["index"], 12);
    assert_eq!(json["results"]["derived_series"], serde_json::json!([12, 3, 1]));
    let cert: Certificate = serde_json::from_value(json).unwrap();
    assert_valid(&cert);
}

#[test]
fn link_numeric_matches_exact() {
    let dir = scratch();
    // (t1 t2 t3)^2 = zeta3 for t = zeta6, zeta6, -1
    let curve = construct_curve(dir.path(), &["3", "--variant", "1", "--taus", "6:1,6:1,2:1"]);
    let cert = run_args(["link", curve.to_str().unwrap(), "--numeric", "4096"]).unwrap();
    assert!(cert.ok, "{}", cert.summary());
    assert_eq!(cert.results["class"]["root"], "3:1");
    let est = &cert.results["numeric"]["estimate"];
    let (re, im) = (est[0].as_f64().unwrap(), est[1].as_f64().unwrap());
    let z = (2.0 * std::f64::consts::PI / 3.0).sin_cos();
    assert!((re - z.1).hypot(im - z.0) < 1e-8);
    assert!(!cert.results["numeric"]["track"]["samples"].as_array().unwrap().is_empty());
    assert_valid(&cert);
}

#[test]
fn perturbed_non_member_fails_structurally() {
    let dir = scratch();
    let curve = construct_curve(dir.path(), &["3"]);
    let mut spec: Value = serde_json::from_str(&std::fs::read_to_string(&curve).unwrap()).unwrap();
    spec["main"]["terms"]
        .as_array_mut()
        .unwrap()
        .push(serde_json::json!({ "exp": [1, 1, 1], "coeff": { "conductor": 1, "coeffs": [[1, 7]] } }));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, spec.to_string()).unwrap();

    let (code, json) = run_bin(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    let cert: Certificate = serde_json::from_value(json.unwrap()).unwrap();
    assert!(!cert.ok);
    assert!(cert.checks.iter().any(|c| !c.passed && c.name == "hat membership"));
    assert_valid(&cert);
}

#[test]
fn invocation_errors_exit_two() {
    assert_eq!(bin().args(["verify", "/nonexistent/curve.json"]).status().unwrap().code(), Some(2));
    assert_eq!(bin().args(["strata", "1"]).status().unwrap().code(), Some(2));
    assert_eq!(bin().args(["frobnicate"]).status().unwrap().code(), Some(2));
    assert_eq!(bin().args(["group", "Nope"]).status().unwrap().code(), Some(2));
}

#[test]
fn variant_three_is_rejected_as_degenerate() {
    let cert = run_args(["construct", "3", "--variant", "3"]).unwrap();
    assert!(cert.ok);
    assert_eq!(cert.results["degenerate"], true);
    assert!(cert.checks.iter().any(|c| c.name == "concurrent lines rejected"));
}

#[test]
fn custom_presentations_and_consequences() {
    let cert = run_args([
        "group",
        "custom",
        "--presentation",
        "gens: a, b ; rels: [a,b]",
        "--consequence",
        "[a^2,b]",
        "--depth",
        "3",
    ])
    .unwrap();
    assert!(cert.ok, "{}", cert.summary());
    assert_eq!(cert.results["abelianization"]["text"], "Z^2");

    // unknown outcomes are reported as unproved, with a nonzero exit code
    let (code, json) = run_bin(&["group", "custom", "--presentation", "gens: a, b", "--consequence", "[a,b]"]);
    assert_eq!(code, 1);
    let detail = json.unwrap()["checks"][0]["detail"].as_str().unwrap().to_string();
    assert!(detail.contains("not a refutation"), "{detail}");
}

#[test]
fn witness_and_centrality() {
    let kh = run_args(["group", "Kh", "--d", "4", "--h", "2", "--witness", "--depth", "8"]).unwrap();
    assert!(kh.ok, "{}", kh.summary());
    let triple = run_args(["group", "TriplePoint", "--d", "5", "--central", "gl"]).unwrap();
    assert!(triple.ok, "{}", triple.summary());
}

#[test]
fn batch_writes_one_certificate_per_job() {
    let dir = scratch();
    let jobs = dir.path().join("jobs.json");
    std::fs::write(
        &jobs,
        r#"[{"name": "s6", "args": ["strata", "6"]},
            {"name": "b3", "args": ["group", "B3S2", "--order"]},
            {"name": "bad", "args": ["strata", "0"]}]"#,
    )
    .unwrap();
    let out = dir.path().join("out");
    let cert =
        run_args(["batch", jobs.to_str().unwrap(), "--out-dir", out.to_str().unwrap(), "--threads", "2"]).unwrap();
    assert!(!cert.ok, "the bad job fails");
    assert_eq!(cert.checks.iter().filter(|c| c.passed).count(), 2);
    for name in ["s6", "b3", "bad"] {
        let text = std::fs::read_to_string(out.join(format!("{name}.json"))).unwrap();
        let c: Certificate = serde_json::from_str(&text).unwrap();
        assert_valid(&c);
    }
    // no temporary files left behind
    assert_eq!(std::fs::read_dir(&out).unwrap().count(), 3);
    assert_valid(&cert);
}

#[test]
fn rejects_unsafe_job_names() {
    let dir = scratch();
    let jobs = dir.path().join("jobs.json");
    std::fs::write(&jobs, r#"[{"name": "../x", "args": ["strata", "3"]}]"#).unwrap();
    let r = run_args(["batch", jobs.to_str().unwrap(), "--out-dir", dir.path().to_str().unwrap()]);
    assert!(r.is_err());
}
