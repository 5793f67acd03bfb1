use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use flagstrat::cli::{run, JobConfig, Task};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_flagstrat"))
}

fn job(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

fn exec(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

const G2: &str = r#"
type = "G2"
elliptic_coeffs = [1, -2]
involution_coweight = [0, 1]
tasks = ["grade", "stratify", "criterion"]
"#;

#[test]
fn g2_job_report() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = job(dir.path(), "g2.toml", G2);
    let out = exec(&["--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    assert_eq!(r["grading"]["levi_roots"].as_array().unwrap().len(), 2);
    assert_eq!(r["stratification"]["cells"].as_array().unwrap().len(), 6);
    assert_eq!(r["criterion"]["verdict"]["holds"], Value::Bool(true));
    assert_eq!(r["grading"]["elliptic_coeffs"], serde_json::json!(["1", "-2"]));
    assert_eq!(r["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn a2_hermitian_fast_fail() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = job(
        dir.path(),
        "a2.toml",
        "type = \"A2\"\nelliptic_coeffs = [0, 1]\ninvolution_coweight = [0, 1]\ntasks = [\"criterion\"]\n",
    );
    let r = json(&exec(&["--config", cfg.to_str().unwrap()]));
    assert_eq!(r["criterion"]["verdict"]["holds"], Value::Bool(false));
    assert_eq!(r["criterion"]["verdict"]["failure_reason"], "hermitian_fast_fail");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let empty = job(dir.path(), "empty.toml", "type = \"A2\"\nelliptic_coeffs = [1, 0]\ntasks = []\n");
    let out = exec(&["--config", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["exit_code"], 2);

    let no_inv = job(dir.path(), "noinv.toml", "type = \"A2\"\nelliptic_coeffs = [1, 0]\ntasks = [\"criterion\"]\n");
    assert_eq!(exec(&["--config", no_inv.to_str().unwrap()]).status.code(), Some(2));

    let bad_type = job(dir.path(), "bad.toml", "type = \"Q7\"\nelliptic_coeffs = [1]\ntasks = [\"grade\"]\n");
    assert_eq!(exec(&["--config", bad_type.to_str().unwrap()]).status.code(), Some(2));

    assert_eq!(exec(&["--config", dir.path().join("missing.toml").to_str().unwrap()]).status.code(), Some(2));

    let g2 = job(dir.path(), "g2.toml", G2);
    assert_eq!(exec(&["--config", g2.to_str().unwrap(), "--weyl-cap", "5"]).status.code(), Some(3));
    assert_eq!(exec(&["--config", g2.to_str().unwrap(), "--task", "plot"]).status.code(), Some(2));
}

#[test]
fn deterministic_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = job(
        dir.path(),
        "b3.toml",
        "type = \"B3\"\nelliptic_coeffs = [1, 0, \"1/2\"]\ntasks = [\"grade\", \"stratify\", \"identities\", \"lowrank_suite\"]\nseed = 3\n",
    );
    let a = exec(&["--config", cfg.to_str().unwrap()]);
    let b = exec(&["--config", cfg.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn overrides_and_atomic_output() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = job(dir.path(), "g2.toml", G2);
    let out_path = dir.path().join("report.json");
    let out = exec(&[
        "--config",
        cfg.to_str().unwrap(),
        "--task",
        "grade",
        "--task",
        "lowrank_suite",
        "--seed",
        "9",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(r["config"]["tasks"], serde_json::json!(["grade", "lowrank_suite"]));
    assert_eq!(r["config"]["seed"], 9);
    assert_eq!(r["lowrank"]["sl2_classifier"]["seed"], 9);
    assert!(r.get("stratification").is_none());
    let names: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(names.len(), 2, "leftover temporary files: {names:?}");
}

#[test]
fn text_rendering() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = job(dir.path(), "g2.toml", G2);
    let out = exec(&["--config", cfg.to_str().unwrap(), "--text"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("criterion, -iT = 1, -2, Z = [0, 1]: holds"));
    assert!(s.contains("dense set: e, s2"));
}

#[test]
fn version_flag() {
    let out = exec(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn echoed_config_reruns_identically() {
    for body in [
        G2,
        "cartan = [[2, -1, 0], [-1, 2, -2], [0, -1, 2]]\nelliptic_coeffs = [\"1/2\", 0, 1]\ntasks = [\"stratify\", \"identities\"]\n",
        "tasks = [\"lowrank_suite\"]\nseed = 4\n",
    ] {
        let config = JobConfig::from_toml_str(body).unwrap();
        let first = run(&config).unwrap().to_json();
        let echoed: Value = serde_json::from_str(&first).unwrap();
        let again: JobConfig = serde_json::from_value(echoed["config"].clone()).unwrap();
        assert_eq!(run(&again).unwrap().to_json(), first);
        let via_toml = JobConfig::from_toml_str(&again.to_toml_string().unwrap()).unwrap();
        assert_eq!(run(&via_toml).unwrap().to_json(), first);
    }
}

#[test]
fn identity_sections_are_clean() {
    for label in ["A3", "B3", "C3", "G2"] {
        let rank = label[1..].parse::<usize>().unwrap();
        let config = JobConfig {
            type_label: Some(label.into()),
            cartan: None,
            elliptic_coeffs: (0..rank).map(|i| flagstrat::rational::q(i as i64 % 2)).collect(),
            involution_coweight: None,
            tasks: vec![Task::Identities, Task::Stratify],
            weyl_cap: 1000,
            seed: 0,
            output: None,
        };
        let report = run(&config).unwrap();
        assert!(report.failures().is_empty(), "{label}: {:?}", report.failures());
        assert_eq!(report.identities.unwrap().failures, 0);
    }
}
