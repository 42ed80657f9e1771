use std::process::{Command, Output};

use serde_json::Value;

fn gradcon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradcon")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn census_writes_779_sets_in_24_orbits() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("census.json");
    let out = gradcon(&["census", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("779 nice sets, 24 orbits"));
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let sets = file.as_array().expect("entry array");
    assert_eq!(sets.len(), 779);
    let mut orbits: Vec<&str> = sets.iter().map(|e| e["orbit"].as_str().unwrap()).collect();
    orbits.sort();
    orbits.dedup();
    assert_eq!(orbits.len(), 24);
    let sizes: usize = json(&out)["orbit_sizes"].as_array().unwrap().iter().map(|o| o["size"].as_u64().unwrap() as usize).sum();
    assert_eq!(sizes, 779);
}

#[test]
fn single_edge_support_is_row_two() {
    // b3 has rank 3: derived algebra of dim r, center of dim 5r, two-step nilpotent.
    let out = gradcon(&["contract", "--support", "1-2", "--algebra", "b3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["classification"]["class"], "T2");
    let s = &v["structure"];
    assert_eq!(s["dim"], 21);
    assert_eq!(s["derived_dim"], 3);
    assert_eq!(s["center_dim"], 15);
    assert_eq!(s["series"]["nilpotent_step"], 2);
    assert_eq!(s["nilpotent"], true);
}

#[test]
fn beta_family_lands_in_row_twenty() {
    let out = gradcon(&["contract", "--family", "beta:2,3", "--algebra", "d4"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["classification"]["class"], "T20");
    assert_eq!(v["normal_form"]["tag"], "beta");
    assert_eq!(v["structure"]["derived_dim"], 24);
    assert_eq!(v["structure"]["center_dim"], 0);
    assert_eq!(v["normalization"].as_array().unwrap().len(), 7);
}

#[test]
fn output_is_deterministic() {
    let a = gradcon(&["contract", "--family", "mu:5", "--algebra", "b3"]);
    let b = gradcon(&["contract", "--family", "mu:5", "--algebra", "b3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(gradcon(&["contract", "--support", "9-2"]).status.code(), Some(2));
    assert_eq!(gradcon(&["contract", "--family", "zeta:1"]).status.code(), Some(2));
    assert_eq!(gradcon(&["contract", "--family", "beta:2"]).status.code(), Some(2));
    assert_eq!(gradcon(&["verify-paper", "--scope", "nothing"]).status.code(), Some(2));
}

#[test]
fn invalid_epsilon_exits_one_with_triple() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eps.json");
    std::fs::write(&path, r#"{"mode":"admissible","values":{"1-2":"1","3-5":"1"}}"#).unwrap();
    let out = gradcon(&["contract", "--epsilon", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("(b2) fails on the triple"));
}

#[test]
fn general_epsilon_file_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eps.json");
    std::fs::write(&path, r#"{"mode":"admissible","values":{"1-2":"2","2-5":"1/2"}}"#).unwrap();
    let out = gradcon(&["contract", "--epsilon", path.to_str().unwrap(), "--algebra", "g2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out)["structure"]["dim"], 14);
}

#[test]
fn gradings_verify_and_fault_injection_fails() {
    let ok = gradcon(&["verify-gradings", "--jobs", "2"]);
    assert!(ok.status.success());
    let v = json(&ok);
    assert_eq!(v["passes"], true);
    for a in v["algebras"].as_array().unwrap() {
        assert_eq!(a["collineations_realized"], 168);
    }
    let bad = gradcon(&["verify-gradings", "--drop-edge", "3-5"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("3-5"));
}

#[test]
fn verify_paper_small_scopes_pass() {
    for scope in ["merge", "real", "spectra", "normalforms"] {
        let out = gradcon(&["verify-paper", "--scope", scope, "--samples", "6", "--seed", "7"]);
        assert!(out.status.success(), "{scope}: {}", String::from_utf8_lossy(&out.stdout));
        assert_eq!(json(&out)["suites"][0]["passes"], true);
    }
}

#[test]
fn real_scope_reports_split_signatures() {
    let out = gradcon(&["verify-paper", "--scope", "real"]);
    let v = json(&out);
    let split: Vec<(u64, u64)> = v["suites"][0]["data"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| (a["split"]["positive"].as_u64().unwrap(), a["split"]["negative"].as_u64().unwrap()))
        .collect();
    assert_eq!(split, [(8, 6), (12, 9), (16, 12)]);
}
