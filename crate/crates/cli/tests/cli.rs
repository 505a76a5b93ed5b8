use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn rigbar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rigbar")).args(args).output().expect("binary runs")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

const SMALL: [&str; 10] = ["--n", "1", "--ell", "0", "--p", "1", "--q", "2", "--obj-bound", "3"];

fn verify(dir: &Path, name: &str, extra: &[&str]) -> (Option<i32>, Value, Vec<u8>) {
    let out = dir.join(name);
    let mut args = vec!["contract-verify", "--category", "sets", "--out", out.to_str().unwrap()];
    args.extend(SMALL);
    args.extend(extra);
    let o = rigbar(&args);
    (o.status.code(), read_json(&out), std::fs::read(&out).unwrap())
}

fn stage<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["stages"].as_array().unwrap().iter().find(|s| s["stage"] == name).unwrap()
}

#[test]
fn pi0_of_finite_sets() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pi0.json");
    let o = rigbar(&["pi0", "--category", "sets", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = read_json(&out);
    assert_eq!(v["gr"], "Z");
    assert!(String::from_utf8_lossy(&o.stdout).contains("π₀"));
}

#[test]
fn pi0_of_a_finite_ring_has_itself_as_completion() {
    let o = rigbar(&["pi0", "--category", "zmod:4"]);
    assert_eq!(o.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&o.stdout);
    let json = &stdout[stdout.find('{').unwrap()..];
    let v: Value = serde_json::from_str(json).unwrap();
    assert!(v["gr_error"].is_null());
}

#[test]
fn weak_invertibility() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("gl.json");
    let o = rigbar(&["gl", "--category", "naturals", "--matrix", "[[2,1],[1,1]]", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(read_json(&out)["weakly_invertible"], true);
    rigbar(&["gl", "--category", "naturals", "--matrix", "[[1,1],[1,1]]", "--out", out.to_str().unwrap()]);
    assert_eq!(read_json(&out)["weakly_invertible"], false);
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(rigbar(&["gl", "--matrix", "[[1,2]]"]).status.code(), Some(2));
    assert_eq!(rigbar(&["pi0", "--category", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(rigbar(&["dump", "--source", "torus:3"]).status.code(), Some(2));
}

#[test]
fn dump_then_homology() {
    let dir = tempfile::tempdir().unwrap();
    for (source, h1) in [("bar:2", "0"), ("nerve:2", "Z/2")] {
        let dump = dir.path().join("x.json");
        let out = dir.path().join("h.json");
        let o = rigbar(&["dump", "--source", source, "--max-dim", "3", "--out", dump.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let o = rigbar(&["homology", "--dump", dump.to_str().unwrap(), "--max-dim", "2", "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let stdout = String::from_utf8_lossy(&o.stdout);
        assert!(stdout.contains("H0 = Z"), "{stdout}");
        assert!(stdout.contains(&format!("H1 = {h1},")), "{source}: {stdout}");
    }
}

#[test]
fn contract_verify_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v, a) = verify(dir.path(), "a.json", &["--seed", "5"]);
    let (_, _, b) = verify(dir.path(), "b.json", &["--seed", "5"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["passed"], true);
    assert_eq!(a, b);
}

#[test]
fn seed_changes_chains_not_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let (_, x, a) = verify(dir.path(), "a.json", &["--seed", "1", "--identities-only"]);
    let (_, y, b) = verify(dir.path(), "b.json", &["--seed", "2", "--identities-only"]);
    assert_ne!(a, b);
    let verdicts = |v: &Value| v["stages"].as_array().unwrap().iter().map(|s| (s["stage"].clone(), s["passed"].clone())).collect::<Vec<_>>();
    assert_eq!(verdicts(&x), verdicts(&y));
}

#[test]
fn corrupted_witness_fails_the_first_identity() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v, _) = verify(dir.path(), "c.json", &["--corrupt-witness", "--identities-only"]);
    assert_eq!(code, Some(1));
    assert_eq!(v["passed"], false);
    let s = stage(&v, "1identity");
    assert_eq!(s["passed"], false);
    assert!(s["first_counterexample"]["detail"].as_str().unwrap().contains("(i,j,k)=(0,1,2)"));
    assert_eq!(stage(&v, "symmetry_audit")["passed"], true);
}
