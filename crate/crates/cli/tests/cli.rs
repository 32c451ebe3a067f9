use gaugealg_cli::{run, Outcome};
use std::path::PathBuf;
use std::process::Command;

fn go(args: &[&str]) -> Outcome {
    let mut argv = vec!["gaugealg"];
    argv.extend_from_slice(args);
    run(argv)
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gaugealg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn passing_checks_exit_zero() {
    for cmd in ["chambers", "unsteady", "verify-higgs", "verify-coulomb"] {
        let out = go(&["--preset", "gl2-running", cmd]);
        assert_eq!(out.code, 0, "{cmd}: {}", out.stderr);
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = go(&["--preset", "gl2-running", "bogus"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("Usage"));
    let out = go(&["--preset", "gl2-running"]);
    assert_eq!(out.code, 2);
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(go(&["chambers"]).code, 2);
    assert!(go(&["chambers"]).stderr.contains("--preset"));
    assert_eq!(go(&["--preset", "no-such", "chambers"]).code, 2);
    assert_eq!(go(&["--preset", "gl2-running", "chambers", "variant=Q"]).code, 2);
    assert_eq!(go(&["--preset", "gl2-running", "chambers", "nokey"]).code, 2);
    assert_eq!(go(&["--preset", "gl2-running", "chambers", "colour=red"]).code, 2);
    assert_eq!(go(&["--preset", "gl2-running", "multiply", "word=wall(-+++,++++)"]).code, 2);
    assert_eq!(go(&["--preset", "rank1-dmodule", "render"]).code, 2);
    assert_eq!(go(&["--preset", "gl2-running", "--format", "svg", "chambers"]).code, 2);
    assert_eq!(go(&["--config", "/nonexistent/cfg.json", "chambers"]).code, 2);
}

#[test]
fn identity_word_prints_identity() {
    for side in ["higgs", "coulomb"] {
        let out = go(&["--preset", "gl2-running", "multiply", &format!("side={side}"), "word=1"]);
        assert_eq!(out.code, 0, "{side}: {}", out.stderr);
        assert!(out.stdout.contains("identity"), "{side}: {}", out.stdout);
    }
}

#[test]
fn multiply_matches_the_anchor() {
    let out = go(&[
        "--preset",
        "gl2-running",
        "--format",
        "json",
        "multiply",
        "side=coulomb",
        "word=y(t(1,0);-19/20,-1/20) r(-19/20,-1/20;1/20,-1/20) y(t(-1,0);21/20,-1/20) r(21/20,-1/20;1/20,-1/20)",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let j: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(out.stdout.contains("g1^2"), "{j}");
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--preset", "gl2-running", "--format", "json", "--seed", "7", "gamma-check", "pairs=5"];
    let a = go(&args);
    let b = go(&args);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    let j: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(j["command"], "gamma-check");
    assert_eq!(j["passed"], true);
}

#[test]
fn render_is_byte_stable_and_writes_out() {
    let a = go(&["--preset", "gl2-running", "render"]);
    let b = go(&["--preset", "gl2-running", "render"]);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert!(a.stdout.starts_with("<?xml") || a.stdout.starts_with("<svg"));
    assert_eq!(a.stdout, b.stdout);
    let path = scratch("plain.svg");
    let c = go(&["--preset", "gl2-running", "--out", path.to_str().unwrap(), "render"]);
    assert_eq!(c.code, 0);
    assert!(c.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), a.stdout);
    let text = go(&["--preset", "gl2-running", "--format", "text", "render", "view=unrolled"]);
    assert_eq!(text.code, 0);
    assert!(text.stdout.contains('#') && text.stdout.contains(':'));
}

const EMPTY_JSON: &str = r#"{
  "gauge": { "rank": 2, "xi": ["1", "2"] },
  "command": { "operation": "render", "args": { "view": "plain" } },
  "output": { "format": "json" }
}"#;

const HYPERTORIC_TOML: &str = r#"
[gauge]
rank = 2
xi = ["1", "2"]

[[gauge.weights]]
linear = ["1", "0"]
flavor_weight = "1/3"
epsilon = "-1/7"
orbit = 0

[[gauge.weights]]
linear = ["0", "1"]
flavor_weight = "1/5"
epsilon = "-1/11"
orbit = 1

[[gauge.weights]]
linear = ["1", "1"]
flavor_weight = "1/2"
epsilon = "-1/13"
orbit = 2

[command]
operation = "verify-higgs"
args = { probes = "10" }
"#;

#[test]
fn config_files_in_both_formats() {
    let json = scratch("empty.json");
    std::fs::write(&json, EMPTY_JSON).unwrap();
    let out = go(&["--config", json.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let j: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!((j["matter"].as_u64(), j["coxeter"].as_u64()), (Some(0), Some(0)));
    let kinds: Vec<&str> = j["lines"].as_array().unwrap().iter().map(|s| s["kind"].as_str().unwrap()).collect();
    assert!(!kinds.is_empty() && kinds.iter().all(|k| *k == "axis"), "{kinds:?}");

    let toml = scratch("hypertoric.toml");
    std::fs::write(&toml, HYPERTORIC_TOML).unwrap();
    let out = go(&["--config", toml.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("wall"));
    let over = go(&["--config", toml.to_str().unwrap(), "chambers", "variant=I"]);
    assert_eq!(over.code, 0, "{}", over.stderr);

    let bad = scratch("bad.json");
    std::fs::write(&bad, r#"{ "gauge": { "rank": 2, "xi": ["1"], "typo": 1 } }"#).unwrap();
    assert_eq!(go(&["--config", bad.to_str().unwrap(), "chambers"]).code, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gaugealg");
    let ok = Command::new(bin).args(["--preset", "gl2-running", "chambers"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("(+,-,+,-)"));
    let bad = Command::new(bin).args(["frobnicate"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}
