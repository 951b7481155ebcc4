use std::f64::consts::PI;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epstein-kit")).args(args).output().unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

fn obj_counts(text: &str) -> (usize, usize, usize) {
    let count = |p: &str| text.lines().filter(|l| l.starts_with(p)).count();
    (count("v "), count("f "), count("l "))
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(run(&["mesh", "teapot", "--out", "/tmp/x.obj"]).status.code(), Some(2));
    assert_eq!(run(&["report", "bound-table"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "bounds", "--seed", "minus-one"]).status.code(), Some(2));
}

#[test]
fn config_file_is_applied_and_echoed() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = path(dir.path(), "tol.toml");
    fs::write(&cfg, "slope_rel_tol = 0.005\n").unwrap();
    let out = run(&["verify", "bounds", "--config", &cfg, "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("slope_rel_tol = 0.005"));
    assert!(text.contains("ref: "));

    fs::write(&cfg, "slope_tol = 0.005\n").unwrap();
    assert_eq!(run(&["verify", "bounds", "--config", &cfg]).status.code(), Some(2));
}

#[test]
fn failing_tolerance_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = path(dir.path(), "tight.toml");
    // Demand the G_K ratio settle to 1e-6; it drifts by about 1.5%.
    fs::write(&cfg, "gk_rate_rel_tol = 1e-6\n").unwrap();
    let out = run(&["verify", "bounds", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("FAIL gk-rate"));
}

#[test]
fn report_files_and_json_summary() {
    let dir = tempfile::tempdir().unwrap();
    let (txt, json) = (path(dir.path(), "r.txt"), path(dir.path(), "r.json"));
    let out = run(&["verify", "wvolume", "--seed", "5", "--out", &txt, "--json", &json]);
    assert_eq!(out.status.code(), Some(0));
    assert!(fs::read_to_string(&txt).unwrap().contains("suite wvolume: PASS"));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v[0]["suite"], "wvolume");
    assert_eq!(v[0]["pass"], true);
    assert!(v[0]["checks"].as_array().unwrap().iter().all(|c| c["reference"].as_str().is_some_and(|r| !r.is_empty())));
}

#[test]
fn seeds_change_samples_not_structure() {
    let a = String::from_utf8(run(&["verify", "epstein", "--seed", "1"]).stdout).unwrap();
    let b = String::from_utf8(run(&["verify", "epstein", "--seed", "2"]).stdout).unwrap();
    assert_ne!(a, b);
    assert_eq!(a.lines().count(), b.lines().count());
}

#[test]
fn wvolume_table_matches_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "w.csv");
    let r = run(&["report", "wvolume-table", "--out", &out, "--from", "0.5", "--to", "2", "--step", "0.5"]);
    assert_eq!(r.status.code(), Some(0));
    let csv = fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("r,W_direct,W_alternate,scaling_residual,lemma33_residual"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert!((row[1] + 2.0 * PI * row[0]).abs() < 1e-6);
        assert!((row[2] + 2.0 * PI * row[0]).abs() < 1e-6);
    }

    let r = run(&["report", "wvolume-table", "--out", &out, "--from", "2", "--to", "1"]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out).unwrap(), "r,W_direct,W_alternate,scaling_residual,lemma33_residual\n");
}

#[test]
fn bound_table_is_monotone() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "b.csv");
    let r = run(&["report", "bound-table", "--out", &out, "--lo", "1e-3", "--hi", "1", "--n", "30"]);
    assert_eq!(r.status.code(), Some(0));
    let csv = fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t,F,G_K,G"));
    let gk: Vec<f64> = lines.map(|l| l.split(',').nth(2).unwrap().parse().unwrap()).collect();
    assert_eq!(gk.len(), 30);
    assert!(gk.windows(2).all(|w| w[1] > w[0]));

    run(&["report", "bound-table", "--out", &out, "--n", "0"]);
    assert_eq!(fs::read_to_string(&out).unwrap(), "t,F,G_K,G\n");
}

#[test]
fn epstein_mesh_center_is_koebe_point() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "e.obj");
    let r = run(&[
        "mesh",
        "epstein",
        "--map",
        "koebe",
        "--metric",
        "hyperbolic",
        "--out",
        &out,
        "--rings",
        "4",
        "--spokes",
        "8",
    ]);
    assert_eq!(r.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(obj_counts(&text), (1 + 4 * 8, 8 + 3 * 8, 0));
    // Ep(0) lies on the horosphere at f(0) = 0 where the visual density
    // 2t/(t² + |ξ|²) times |f′(0)| = 1 equals ρ_Δ(0) = 2.
    let first = text.lines().find(|l| l.starts_with("v ")).unwrap();
    let v: Vec<f64> = first[2..].split_whitespace().map(|x| x.parse().unwrap()).collect();
    let visual = 2.0 * v[2] / (v[2] * v[2] + v[0] * v[0] + v[1] * v[1]);
    assert!((visual - 2.0).abs() < 1e-9, "{first}");

    assert_eq!(run(&["mesh", "epstein", "--map", "no-such-map", "--out", &out]).status.code(), Some(2));
}

#[test]
fn dome_mesh_has_ridge() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "d.obj");
    let r = run(&["mesh", "dome", "--domain", "two-disks", "--a", "0.5", "--out", &out]);
    assert_eq!(r.status.code(), Some(0));
    let (v, f, l) = obj_counts(&fs::read_to_string(&out).unwrap());
    assert!(v > 0 && f > 0 && l >= 1);
    assert_eq!(run(&["mesh", "dome", "--domain", "two-disks", "--a", "1.5", "--out", &out]).status.code(), Some(2));
}

#[test]
fn flow_writes_one_file_per_step() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "flow.obj");
    let r = run(&[
        "mesh", "flow", "--map", "identity", "--steps", "5", "--ds", "0.5", "--out", &out, "--rings", "3", "--spokes",
        "6",
    ]);
    assert_eq!(r.status.code(), Some(0));
    // Identity with ρ_Δ flows the plane over the unit circle to equidistant
    // surfaces; the centre sits at height e^{-s} over 0 (visual density 2/t = 2e^s).
    for k in 1..=5 {
        let text = fs::read_to_string(dir.path().join(format!("flow_{k}.obj"))).unwrap();
        let first = text.lines().find(|l| l.starts_with("v ")).unwrap();
        let h: f64 = first.split_whitespace().nth(3).unwrap().parse().unwrap();
        assert!((h - (-0.5 * k as f64).exp()).abs() < 1e-9, "step {k}: {h}");
    }
    assert!(!dir.path().join("flow_6.obj").exists());
}
