//! End-to-end tests of the `disclab` binary: subcommands, config handling,
//! report files, exit codes, and byte-level determinism of reruns.

use std::path::Path;
use std::process::Command;

fn disclab() -> Command {
    Command::new(env!("CARGO_BIN_EXE_disclab"))
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("read {path:?}: {e}"))
}

#[test]
fn verify_list_names_experiments() {
    let out = disclab().args(["verify", "list"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["monomial-projection", "calderon-sweep", "ledger-build"] {
        assert!(text.contains(name), "missing {name}");
    }
}

#[test]
fn verify_writes_reports_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = disclab()
        .args(["verify", "cone-geometry", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = read(&dir.path().join("cone-geometry.csv"));
    assert!(csv.starts_with("experiment,p,q,kernel_id,lhs,rhs,ratio,tolerance,pass,grid_M,grid_R,seed\n"));
    assert!(csv.contains("constant-field"));
    let json = read(&dir.path().join("cone-geometry.json"));
    assert!(json.contains("\"all_pass\": true"));
}

#[test]
fn rerun_is_byte_identical() {
    // same config (including --out, which the JSON report echoes) twice
    let dir = tempfile::tempdir().unwrap();
    let run_once = || {
        let status = disclab()
            .args([
                "verify",
                "szego-norm",
                "--seed",
                "41",
                "--grid-m",
                "64",
                "--out",
            ])
            .arg(dir.path())
            .status()
            .unwrap();
        assert!(status.success());
        (
            read(&dir.path().join("szego-norm.csv")),
            read(&dir.path().join("szego-norm.json")),
        )
    };
    let (csv_a, json_a) = run_once();
    let (csv_b, json_b) = run_once();
    assert_eq!(csv_a, csv_b);
    assert_eq!(json_a, json_b);
}

#[test]
fn config_file_drives_experiment_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let config_path = dir.path().join("config.json");
    std::fs::write(
        &config_path,
        r#"{"schema_version":1,"experiment":"szego-norm","seed":5,"corpus_size":7,"grid_m":64}"#,
    )
    .unwrap();
    let out = disclab()
        .args(["verify", "szego-norm", "--config"])
        .arg(&config_path)
        .args(["--seed", "9", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let csv = read(&dir.path().join("szego-norm.csv"));
    // the --seed flag overrides the config value
    for line in csv.lines().skip(1) {
        assert!(line.ends_with(",9"), "seed column should be 9: {line}");
    }
}

#[test]
fn unknown_config_fields_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let config_path = dir.path().join("bad.json");
    std::fs::write(
        &config_path,
        r#"{"schema_version":1,"experiment":"szego-norm","bogus":1}"#,
    )
    .unwrap();
    let out = disclab()
        .args(["verify", "szego-norm", "--config"])
        .arg(&config_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn unknown_experiment_fails_cleanly() {
    let out = disclab().args(["verify", "no-such-thing"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown experiment"));
}

#[test]
fn one_shot_subcommands_run() {
    let dir = tempfile::tempdir().unwrap();
    let kernel = r#"{"schema_version":1,"experiment":"project",
        "kernel":{"type":"coeffs","values":[[1.0,0.0],[0.5,0.25]]}}"#;
    let config_path = dir.path().join("kernel.json");
    std::fs::write(&config_path, kernel).unwrap();

    for sub in ["project", "extremal", "squarefn"] {
        let out = disclab()
            .arg(sub)
            .args(["--config"])
            .arg(&config_path)
            .args(["--out"])
            .arg(dir.path())
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "{sub}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(dir.path().join(format!("{sub}.csv")).exists());
    }

    // boundary kernels for dual and approx
    let boundary = r#"{"schema_version":1,"experiment":"dual",
        "kernel":{"type":"boundary","pos":[[1.0,0.0]],"neg":[[0.5,0.0]]}}"#;
    let boundary_path = dir.path().join("boundary.json");
    std::fs::write(&boundary_path, boundary).unwrap();
    for sub in ["dual", "approx"] {
        let out = disclab()
            .arg(sub)
            .args(["--p", "4", "--config"])
            .arg(&boundary_path)
            .args(["--out"])
            .arg(dir.path())
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "{sub}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(dir.path().join(format!("{sub}.csv")).exists());
    }
}

#[test]
fn ledger_build_emits_snapshot() {
    let dir = tempfile::tempdir().unwrap();
    let config_path = dir.path().join("ledger.json");
    std::fs::write(
        &config_path,
        r#"{"schema_version":1,"experiment":"ledger-build","corpus_size":4,
            "degree_cap":6,"grid_r":48,"grid_m":128}"#,
    )
    .unwrap();
    let out = disclab()
        .args(["ledger", "build", "--config"])
        .arg(&config_path)
        .args(["--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let json = read(&dir.path().join("ledger-build.json"));
    assert!(json.contains("calderon_upper"));
    assert!(json.contains("point_eval"));
}
