use std::path::PathBuf;
use std::process::{Command, Output};

fn staride(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_staride")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn core_file(rel: &str) -> String {
    format!("{}/../core/{rel}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn example_3_1_json_is_reproducible() {
    let a = staride(&["run-example", "3.1", "--report", "json"]);
    let b = staride(&["run-example", "3.1", "--report", "json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["outcome"], "pass");
    assert_eq!(v["bounds"]["degree"], 8);
    assert!(v.get("wall_ms").is_none());
}

#[test]
fn example_3_2_passes() {
    let o = staride(&["run-example", "3.2"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    assert!(String::from_utf8_lossy(&o.stdout).contains("outcome: pass"));
}

#[test]
fn bounds_flags_reach_the_report() {
    let o = staride(&["run-example", "3.1", "--degree-bound", "5", "--family-window", "2", "--report", "json", "--timings"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["bounds"]["degree"], 5);
    assert_eq!(v["bounds"]["window"], 2);
    assert!(v["wall_ms"].is_u64());
}

#[test]
fn zero_degree_bound_is_an_input_error() {
    let o = staride(&["run-example", "3.1", "--degree-bound", "0"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn negative_controls_exit_with_failure() {
    for f in ["scenarios/negative/ex3_1_weakened.stide", "scenarios/negative/ex3_2_without_rule_a.stide"] {
        assert_eq!(code(&staride(&["check", &core_file(f)])), 1, "{f}");
    }
}

#[test]
fn parse_errors_carry_positions() {
    let p = scratch("unknown.stide", "scenario \"x\"\nvars y\nrule nonneg\nideal I = gens(w)\n");
    let o = staride(&["check", p.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("unknown.stide:4:16: unknown identifier `w`"), "{err}");
}

#[test]
fn missing_file_is_an_input_error() {
    assert_eq!(code(&staride(&["check", "/nonexistent/file.stide"])), 3);
}

#[test]
fn inconclusive_only_exits_with_two() {
    let src = "scenario \"cone\"\nvars y, z\nfamily t\nrule nonneg\nrule linear: deg(y, z) >= deg(t[*])\n\
               ideal Q = ring & constraint{ deg(y, z) >= 1 } certify t\n\
               assert t_ideal(Q) = proved @ \"a\"\nassert v_finite(Q) = proved @ \"b\"\n";
    let p = scratch("inconclusive.stide", src);
    let o = staride(&["check", p.to_str().unwrap(), "--degree-bound", "5", "--family-window", "2"]);
    assert_eq!(code(&o), 2, "{}", String::from_utf8_lossy(&o.stdout));
}

#[test]
fn check_json_lists_every_scenario() {
    let o = staride(&["check", &core_file("scenarios/props.stide"), "--report", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn empty_fixture_catalog_is_rejected() {
    let p = scratch("empty.stide", "scenario \"x\"\nvars y\nrule nonneg\n");
    let o = staride(&["suite", "props", "--fixtures", p.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("no fixtures declared"));
}

#[test]
fn props_suite_passes() {
    let o = staride(&["suite", "props"]);
    let out = String::from_utf8_lossy(&o.stdout);
    assert_eq!(code(&o), 0, "{out}");
    assert!(out.contains("sentinel hits: 0"));
    assert!(out.contains("outcome: pass"));
}
