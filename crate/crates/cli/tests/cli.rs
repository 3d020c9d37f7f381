//! End-to-end checks of the binary: output shapes, exit codes, determinism,
//! and the config file hook.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_onsager-ace"))
}

fn suites_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../suites")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn elem_prints_the_matrix() {
    let out = bin().args(["elem", "cB[2]"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "diag(t^2 - 1, t^-2 - 1)");

    let out = bin()
        .args(["elem", "cB[2]", "--format", "json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["a"], "t^2 - 1");
    assert_eq!(v["b"], "0");
}

#[test]
fn bracket_and_decompose() {
    let out = bin().args(["bracket", "A[1]", "A[0]"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "diag(t - t^-1, -t + t^-1)");

    let out = bin().args(["decompose", "cB[2]"]).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("o_part: diag(1/2*t^2 - 1/2*t^-2, -1/2*t^2 + 1/2*t^-2)"));
    assert!(text.contains("z_part: diag(1/2*t^2 + 1/2*t^-2 - 1, 1/2*t^2 + 1/2*t^-2 - 1)"));
}

#[test]
fn usage_errors_exit_two() {
    let out = bin().args(["elem", "Q[2]"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["elem", "Gt[0]"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["verify", "no_such_file.lrel"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_and_is_deterministic() {
    let suite = suites_dir().join("onsager_wg_table.lrel");
    let run = || {
        bin()
            .args(["verify", suite.to_str().unwrap(), "--kmax", "4", "--format", "json"])
            .output()
            .unwrap()
    };
    let first = run();
    let second = run();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "report must be bit-identical");
    let v: serde_json::Value = serde_json::from_str(stdout(&first).trim()).unwrap();
    let instances = v.as_array().unwrap();
    assert_eq!(instances.len(), 6 * 25);
    assert!(instances.iter().all(|i| i["status"] == "pass"));
}

#[test]
fn perturbed_suite_exits_one_with_json_detail() {
    let suite = std::fs::read_to_string(suites_dir().join("onsager_wg_table.lrel")).unwrap();
    let perturbed = suite.replace("= 4*W(-k-l-1)", "= 5*W(-k-l-1)");
    assert_ne!(suite, perturbed);
    let dir = std::env::temp_dir().join("onsager-ace-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("perturbed.lrel");
    std::fs::write(&path, perturbed).unwrap();

    let out = bin()
        .args(["verify", path.to_str().unwrap(), "--kmax", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // The failure detail is machine-readable JSON on stdout.
    let text = stdout(&out);
    let json_line = text
        .lines()
        .find(|l| l.trim_start().starts_with('['))
        .expect("json detail line");
    let v: serde_json::Value = serde_json::from_str(json_line).unwrap();
    assert!(v.as_array().unwrap().iter().all(|i| i["status"] == "fail"));
    assert!(v[0]["witness"].is_string());
}

#[test]
fn verify_honors_explicit_bindings() {
    // The commuting W relations hold in the extension too.
    let dir = std::env::temp_dir().join("onsager-ace-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bound.lrel");
    std::fs::write(&path, "family V : Z;\nrel r(k,l): [V(-k), V(-l)] = 0;\n").unwrap();
    let out = bin()
        .args(["verify", path.to_str().unwrap(), "--kmax", "2", "--bind", "V=cW"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    // Without a binding the suite cannot run.
    let out = bin()
        .args(["verify", path.to_str().unwrap(), "--kmax", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn limit_commands_pass() {
    let out = bin().args(["limit", "dg"]).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("q_dolan_grady_1_limit"));
    assert!(text.contains("q_dolan_grady_2_limit"));

    let out = bin()
        .args(["limit", "pbw", "--bound", "3", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3 * 4 - 1);
}

#[test]
fn span_commands_pass() {
    let out = bin()
        .args(["span", "o", "--window", "2", "--depth", "6", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v[0]["parameters"]["rank"], 7);

    let out = bin()
        .args(["span", "ace", "--window", "2", "--depth", "6"])
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn env_config_overrides_defaults() {
    let dir = std::env::temp_dir().join("onsager-ace-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("defaults.conf");
    std::fs::write(&cfg, "# test config\nkmax = 1\nwindow = 2\n").unwrap();

    let suite = suites_dir().join("onsager_wg_table.lrel");
    let out = bin()
        .env("ONSAGER_ACE_DEFAULTS", &cfg)
        .args(["verify", suite.to_str().unwrap(), "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    // kmax = 1 gives 2 x 2 tuples for each of the 6 relations.
    assert_eq!(v.as_array().unwrap().len(), 6 * 4);

    // A broken config file is a usage error.
    std::fs::write(&cfg, "window = 0\n").unwrap();
    let out = bin()
        .env("ONSAGER_ACE_DEFAULTS", &cfg)
        .args(["center"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
