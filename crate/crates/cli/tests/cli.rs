//! End-to-end tests of the shipped binary: artifact layout, exit codes,
//! config precedence, and output schemas. Each test runs the real
//! executable against a throwaway directory with a deliberately small
//! network so the whole file stays fast.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use dchfc::{LifetimeReport, SimConfig};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dchfc"))
}

/// Overrides that shrink a run to a few milliseconds.
const SMALL: &[&str] = &["--node_count=40", "--malicious_count=4", "--max_rounds=40"];

fn run_small(extra: &[&str], out: &Path) -> Output {
    bin()
        .arg("run")
        .args(SMALL)
        .args(extra)
        .arg("--out-dir")
        .arg(out)
        .output()
        .unwrap()
}

fn read(path: PathBuf) -> String {
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn run_writes_all_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("artifacts");
    let res = run_small(&[], &out);
    assert!(res.status.success(), "stderr: {}", String::from_utf8_lossy(&res.stderr));

    let rounds = read(out.join("rounds.csv"));
    let lines: Vec<&str> = rounds.lines().collect();
    assert_eq!(lines[0], "round,packets_offered,packets_delivered,packets_lost,throughput,total_residual_energy,energy_spent,alive_count");
    assert_eq!(lines.len(), 41, "header + one row per round");

    let lt: LifetimeReport = serde_json::from_str(&read(out.join("lifetime.json"))).unwrap();
    assert!(lt.fnd.is_none() || lt.fnd.unwrap() >= 1);

    let election = read(out.join("election.csv"));
    assert!(election.starts_with("round,node_id,potential,role,assigned_head\n"));
    assert_eq!(election.lines().count(), 41, "one row per node plus header");

    let cfg: serde_json::Value =
        serde_json::from_str(&read(out.join("resolved_config.json"))).unwrap();
    assert_eq!(cfg["node_count"], 40);

    let svg = read(out.join("topology.svg"));
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
}

#[test]
fn no_svg_skips_the_map() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o");
    assert!(run_small(&["--no-svg"], &out).status.success());
    assert!(out.join("rounds.csv").exists());
    assert!(!out.join("topology.svg").exists());
}

#[test]
fn baseline_mode_runs_too() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o");
    let res = run_small(&["--mode=chufl"], &out);
    assert!(res.status.success());
    let stdout = String::from_utf8_lossy(&res.stdout);
    assert!(stdout.starts_with("chufl:"), "stdout: {stdout}");
}

#[test]
fn default_config_file_matches_builtin_defaults() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs/default.toml");
    let from_file = SimConfig::load(Some(&path), &[]).unwrap();
    assert_eq!(from_file, SimConfig::default(), "configs/default.toml drifted from the code");
}

#[test]
fn election_roles_partition_the_network() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o");
    let res = bin()
        .args(["run", "--no-svg", "--max_rounds=10"])
        .arg("--out-dir")
        .arg(&out)
        .output()
        .unwrap();
    assert!(res.status.success());

    let election = read(out.join("election.csv"));
    let mut heads = 0usize;
    let mut assigned = 0usize;
    let mut rows = 0usize;
    for line in election.lines().skip(1) {
        rows += 1;
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 5, "bad row: {line}");
        let role = cols[3];
        match role {
            "initial-head" | "spatial-head" => {
                heads += 1;
                assert!(cols[4].is_empty(), "head with an assigned head: {line}");
            }
            "member" | "rejected" => {
                assigned += 1;
                assert!(!cols[4].is_empty(), "member without a head: {line}");
                assert!(!cols[2].is_empty(), "member without a potential: {line}");
            }
            "malicious" | "dead" => {}
            other => panic!("unknown role `{other}` in: {line}"),
        }
    }
    assert_eq!(rows, 122, "one row per node");
    assert!(heads >= 1 && assigned >= 1);
}

#[test]
fn invalid_config_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(&path, "node_count = \"lots\"\n").unwrap();
    let res = bin().args(["run"]).arg("--config").arg(&path).output().unwrap();
    assert_eq!(res.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&res.stderr);
    assert!(stderr.contains("line 1"), "stderr should point at the line: {stderr}");
}

#[test]
fn impossible_config_exits_2() {
    let res = bin().args(["run", "--malicious_count=200"]).output().unwrap();
    assert_eq!(res.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&res.stderr);
    assert!(stderr.contains("malicious_count"), "stderr: {stderr}");
}

#[test]
fn unknown_override_key_exits_2() {
    let res = bin().args(["run", "--set", "no_such_key=1"]).output().unwrap();
    assert_eq!(res.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&res.stderr);
    assert!(stderr.contains("no_such_key"), "stderr: {stderr}");
}

#[test]
fn usage_error_exits_2() {
    let res = bin().args(["run", "--frobnicate"]).output().unwrap();
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn unwritable_out_dir_exits_3() {
    let res = bin()
        .args(["run", "--no-svg"])
        .args(SMALL)
        .args(["--out-dir", "/dev/null/nested"])
        .output()
        .unwrap();
    assert_eq!(res.status.code(), Some(3), "io failures are runtime errors");
}

#[test]
fn flag_overrides_beat_the_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cfg.toml");
    std::fs::write(&path, "seed = 3\nnode_count = 40\nmalicious_count = 4\nmax_rounds = 20\n")
        .unwrap();
    let out = dir.path().join("o");
    let res = bin()
        .args(["run", "--no-svg", "--seed=9"])
        .arg("--config")
        .arg(&path)
        .arg("--out-dir")
        .arg(&out)
        .output()
        .unwrap();
    assert!(res.status.success());
    let cfg: serde_json::Value =
        serde_json::from_str(&read(out.join("resolved_config.json"))).unwrap();
    assert_eq!(cfg["seed"], 9, "the flag must win over the file");
    assert_eq!(cfg["node_count"], 40, "untouched file values must survive");
}

#[test]
fn env_var_supplies_the_config_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cfg.toml");
    std::fs::write(&path, "node_count = 33\nmalicious_count = 3\nmax_rounds = 15\n").unwrap();
    let out = dir.path().join("o");
    let res = bin()
        .args(["run", "--no-svg"])
        .env("DCHFC_CONFIG", &path)
        .arg("--out-dir")
        .arg(&out)
        .output()
        .unwrap();
    assert!(res.status.success(), "stderr: {}", String::from_utf8_lossy(&res.stderr));
    let cfg: serde_json::Value =
        serde_json::from_str(&read(out.join("resolved_config.json"))).unwrap();
    assert_eq!(cfg["node_count"], 33);
}

#[test]
fn compare_writes_reports_and_charts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o");
    let res = bin()
        .args(["compare", "--seeds", "2"])
        .args(SMALL)
        .arg("--out-dir")
        .arg(&out)
        .output()
        .unwrap();
    assert!(res.status.success(), "stderr: {}", String::from_utf8_lossy(&res.stderr));

    for file in [
        "compare.csv",
        "curves.csv",
        "summary.json",
        "resolved_config.json",
        "packet_loss.svg",
        "throughput.svg",
        "residual_energy.svg",
        "lifetime.svg",
    ] {
        assert!(out.join(file).exists(), "missing {file}");
    }
    let summary: serde_json::Value = serde_json::from_str(&read(out.join("summary.json"))).unwrap();
    assert_eq!(summary["per_seed"].as_array().unwrap().len(), 2);
    assert_eq!(summary["mode_a"], "dchfc");
    assert_eq!(summary["mode_b"], "chufl");
    let compare = read(out.join("compare.csv"));
    assert_eq!(compare.lines().count(), 3, "header + one row per seed");
}

#[test]
fn sweep_writes_one_row_per_value() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o");
    let res = bin()
        .args(["sweep", "--key", "election.d_threshold", "--values", "150,250", "--seeds", "2"])
        .args(SMALL)
        .arg("--out-dir")
        .arg(&out)
        .output()
        .unwrap();
    assert!(res.status.success(), "stderr: {}", String::from_utf8_lossy(&res.stderr));
    let sweep = read(out.join("sweep.csv"));
    let lines: Vec<&str> = sweep.lines().collect();
    assert_eq!(lines.len(), 3, "header + one row per swept value");
    assert!(lines[0].starts_with("election.d_threshold,seeds,"));
    assert!(lines[1].starts_with("150,2,"));
    assert!(lines[2].starts_with("250,2,"));
}

#[test]
fn sweep_rejects_an_empty_value_list() {
    let res = bin()
        .args(["sweep", "--key", "seed", "--values", " , "])
        .args(SMALL)
        .output()
        .unwrap();
    assert_eq!(res.status.code(), Some(2));
}
