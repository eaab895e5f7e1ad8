use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use hecke_grading::coxeter::CoxeterSystem;
use hecke_grading::hecke::{hecke_from_json, HeckeAlgebra, ParameterMap};
use hecke_grading::temperley_lieb::{element_from_json, jw_at_zero};

fn hgrade(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgrade")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn config(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "configs", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn binom_rows_and_reduction() {
    let o = hgrade(&["binom", "--max-n", "8", "--char", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "8\t4\t6"));
    let o = hgrade(&["binom", "--max-n", "4", "--char", "2", "--format", "csv"]);
    let out = stdout(&o);
    assert!(out.starts_with("n,k,value\n"));
    // [3 choose 1] at 0 is −1, which is 1 mod 2
    assert!(out.lines().any(|l| l == "3,1,1"));
    assert!(out.lines().skip(1).all(|l| l.ends_with(",0") || l.ends_with(",1")));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hgrade(&["binom", "--max-n", "x"]).status.code(), Some(2));
    assert_eq!(hgrade(&["binom", "--char", "4"]).status.code(), Some(2));
    assert_eq!(hgrade(&["jw", "--n", "3", "--degrees", "1,2"]).status.code(), Some(2));
    assert_eq!(hgrade(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn jw_terms_and_absence() {
    let o = hgrade(&["jw", "--n", "3", "--char", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let mut coeffs: Vec<String> = stdout(&o).lines().map(|l| l.split('\t').next().unwrap().to_string()).collect();
    coeffs.sort();
    assert_eq!(coeffs, ["-1", "-1", "1"]);
    let o = hgrade(&["jw", "--n", "4", "--char", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("pole"));
    assert_eq!(hgrade(&["jw", "--n", "7", "--char", "3"]).status.code(), Some(3));
}

#[test]
fn jw_homogeneity_verdict() {
    let o = hgrade(&["jw", "--n", "5", "--char", "3", "--check-homogeneity"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: homogeneous"));
}

#[test]
fn jw_two_step_agrees() {
    let a = hgrade(&["jw", "--n", "7", "--method", "two-step"]);
    let b = hgrade(&["jw", "--n", "7", "--method", "generic-specialize"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn jw_json_round_trips() {
    let o = hgrade(&["jw", "--n", "5", "--char", "0", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let back = element_from_json(&v["projector"]).unwrap();
    assert_eq!(back, jw_at_zero(5, 0).unwrap());
}

#[test]
fn grading_configs() {
    let run = |name: &str| hgrade(&["grading-check", "--config", &config(name)]);
    assert_eq!(run("bigrading_i2_4.json").status.code(), Some(0));
    assert_eq!(run("p_adapted_i2_4_char2.json").status.code(), Some(0));
    let o = run("unequal_linked_sums.json");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  linked sums (0,1)"));
    let o = run("invalid_realization.json");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  realization"));
}

#[test]
fn schema_errors_exit_two() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, r#"{{"coxeter_matrix": [[1, "many"], ["many", 1]], "characteristic": 0, "grading": {{"preset": "p-adapted"}}}}"#).unwrap();
    let o = hgrade(&["grading-check", "--config", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = hgrade(&["grading-check", "--config", "/nonexistent/config.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hecke_expansions() {
    let o = hgrade(&["hecke", "--expression", "s1,s2", "--method", "deodhar"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "e\tv1*v2\ns1\tv2\ns2\tv1\ns1.s2\t1\n");
    let o = hgrade(&["hecke", "--expression", ""]);
    assert_eq!(stdout(&o), "e\t1\n");
    let long = vec!["s1,s2"; 11].join(",") + ",s1";
    assert_eq!(hgrade(&["hecke", "--expression", &long]).status.code(), Some(3));
    assert_eq!(hgrade(&["hecke", "--expression", "s3"]).status.code(), Some(2));
    let o = hgrade(&["hecke", "--config", &config("bigrading_i2_4.json"), "--expression", "s1,s2,s1,s2,s1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn hecke_json_round_trips() {
    let o = hgrade(&["hecke", "--coxeter", "A3", "--expression", "s1,s2,s3,s2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let sys = CoxeterSystem::Symmetric(4);
    let h = HeckeAlgebra::new(sys, ParameterMap::generic(&sys));
    assert_eq!(hecke_from_json(&sys, h.group(), &v).unwrap(), h.bott_samelson(&[0, 1, 2, 1]).unwrap());
}

#[test]
fn double0_outputs() {
    let o = hgrade(&["double0", "--max-length", "20", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "s1.s2,s1.s2,1"));
    assert!(out.contains(r#""passed":true"#));
    let o = hgrade(&["double0", "--max-length", "14", "--cells", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cells"]["right"].as_array().unwrap().len(), 5);
    assert_eq!(v["cells"]["two_sided"].as_array().unwrap().len(), 4);
    assert_eq!(hgrade(&["double0", "--max-length", "0"]).status.code(), Some(2));
    assert_eq!(hgrade(&["double0", "--max-length", "6", "--cells"]).status.code(), Some(2));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["double0", "--max-length", "9", "--format", "json", "--cells"][..],
        &["jw", "--n", "7", "--char", "2", "--check-homogeneity"][..],
        &["hecke", "--coxeter", "5", "--expression", "s1,s2,s1,s1,s2"][..],
    ] {
        assert_eq!(hgrade(args).stdout, hgrade(args).stdout);
    }
}
