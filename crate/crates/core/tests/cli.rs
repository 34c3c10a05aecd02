use std::process::Command;

use serde_json::Value;

fn dhg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dhg"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = dhg(args);
    assert!(code == 0 || code == 1, "{stderr}");
    serde_json::from_str(&stdout).unwrap()
}

#[test]
fn build_example_round_trips_through_a_file() {
    let (code, spec, _) = dhg(&["build-example", "subspace:n=3,k=1"]);
    assert_eq!(code, 0);
    assert!(spec.starts_with("prime 2147483647\nhypergraph n=3 t=2\n"));
    let dir = std::env::temp_dir().join(format!("dhg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("subspace.spec");
    std::fs::write(&path, &spec).unwrap();
    let report = json(&["density", path.to_str().unwrap()]);
    assert_eq!(report["command"], "density");
    assert_eq!(report["dim"], 5);
    assert_eq!(report["minimal_r"], 1);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_main_passes_at_k_two() {
    let report = json(&[
        "verify-main",
        "@subspace:n=3,k=1",
        "--k",
        "2",
        "--seed",
        "3",
    ]);
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["verdict"], "pass");
    assert_eq!(report["parameters"]["k"], 2);
}

#[test]
fn through_origin_expansion_is_flagged() {
    let report = json(&["verify-expansion", "@lines", "--through-origin"]);
    assert_eq!(report["verdict"], "flagged");
    for trial in report["trials"].as_array().unwrap() {
        assert_eq!(trial["proj2_dim"], 0);
    }
}

#[test]
fn json_out_matches_stdout() {
    let path = std::env::temp_dir().join(format!("dhg-interp-{}.json", std::process::id()));
    let args = [
        "interp-rank",
        "--n",
        "1",
        "--t",
        "3",
        "--d",
        "2",
        "--k",
        "1",
        "--seed",
        "9",
    ];
    let (_, stdout, _) = dhg(&args);
    let mut with_file = args.to_vec();
    with_file.extend(["--json-out", path.to_str().unwrap()]);
    let (code, quiet, _) = dhg(&with_file);
    assert_eq!(code, 0);
    assert!(quiet.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn oracle_dim_and_induce() {
    let report = json(&["oracle-dim", "@ap", "--primes", "5,7,11"]);
    assert_eq!(report["estimated_dim"], 2);
    let induced = json(&["induce", "@ap", "--k", "2", "--d", "2", "--seed", "1"]);
    assert_eq!(induced["dim"], 5);
    assert!(induced["spec"]
        .as_str()
        .unwrap()
        .contains("hypergraph n=2 t=3"));
}

#[test]
fn verify_prints_reports_partial_dimension() {
    let report = json(&["verify-prints", "@subspace:n=3,k=1", "--k", "2"]);
    assert_eq!(report["verdict"], "pass");
}

#[test]
fn errors_exit_nonzero() {
    let (code, _, stderr) = dhg(&["density", "/nonexistent/file.spec"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error"));
    let (code, _, stderr) = dhg(&["build-example", "nope"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown example"));
    let (code, _, _) = dhg(&["verify-main", "@ap", "--q-poly", "y1 +"]);
    assert_eq!(code, 2);
}
