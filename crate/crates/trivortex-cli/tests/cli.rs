//! End-to-end tests of the trivortex binary: exit codes, file outputs,
//! determinism, and the numbers the tool reports for known configurations.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_trivortex"))
}

fn write_config(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process not killed by signal")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

/// Parse a CSV produced by the tool: header names plus one Vec per row.
fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<String>>) {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(str::to_string).collect();
    let rows = lines.map(|l| l.split(',').map(str::to_string).collect()).collect();
    (header, rows)
}

fn column(header: &[String], rows: &[Vec<String>], name: &str) -> Vec<f64> {
    let idx = header.iter().position(|h| h == name).unwrap_or_else(|| {
        panic!("column {name} missing from {header:?}");
    });
    rows.iter().map(|r| r[idx].parse().unwrap()).collect()
}

const COLLAPSE_CONFIG: &str = r#"{
  "vorticities": ["1", "1", "−1/2"],
  "initial_condition": { "shape": { "b": [1, 3, 2], "eps": 1 } },
  "formulation": "all",
  "integrator": { "horizon": 2.0, "rel_tol": 1e-10, "abs_tol": 1e-10 },
  "samples": 40
}"#;

#[test]
fn simulate_runs_all_formulations_on_the_collapse_example() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "sim.json", COLLAPSE_CONFIG);
    let out = run(&[
        "simulate",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));

    let summary = read_json(&dir.path().join("summary.json"));
    assert_eq!(summary["classification"]["kind"], "self_similar_family");
    assert_eq!(summary["classification"]["collapse_direction"], "collapse");
    assert_eq!(summary["classification"]["non_collision"], false);
    for name in ["cartesian", "shape", "regularized"] {
        let f = &summary["formulations"][name];
        assert_eq!(f["status"], "ok", "{name}");
        assert_eq!(f["halt_reason"], "horizon_reached", "{name}");
        assert_eq!(f["end_time"], 2.0, "{name}");
        assert!(f["drift"]["energy"].as_f64().unwrap() < 1e-9);
        assert!(f["drift"]["second_moment"].as_f64().unwrap() < 1e-9);
    }
    assert!(summary["formulations"]["cartesian"]["drift"]["impulse"].as_f64().unwrap() < 1e-9);
    let cross = summary["cross_formulation_max_deviation"].as_f64().unwrap();
    assert!(cross < 1e-6, "formulations disagree by {cross}");

    // Each trajectory lands exactly on the requested sample grid.
    for name in ["cartesian", "shape", "regularized"] {
        let (header, rows) = read_csv(&dir.path().join(format!("trajectory_{name}.csv")));
        let t = column(&header, &rows, "t");
        assert_eq!(t[0], 0.0);
        assert_eq!(*t.last().unwrap(), 2.0);
        assert!(t.windows(2).all(|w| w[0] < w[1]), "{name}: times not increasing");
        for k in 1..=40u32 {
            let want = 2.0 * f64::from(k) / 40.0;
            assert!(t.contains(&want), "{name}: no sample at t = {want}");
        }
    }

    // The size decreases toward collapse while the shape ratios hold.
    let (header, rows) = read_csv(&dir.path().join("trajectory_shape.csv"));
    let b1 = column(&header, &rows, "b1");
    let b2 = column(&header, &rows, "b2");
    let lam = column(&header, &rows, "lambda");
    assert!(lam.last().unwrap() < &lam[0]);
    for (x, y) in b1.iter().zip(&b2) {
        assert!((y / x - 3.0).abs() < 1e-9, "ratio drifted: {}", y / x);
    }
}

#[test]
fn simulate_reports_each_formulation_against_the_same_clock() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "sim.json", COLLAPSE_CONFIG);
    assert_eq!(
        exit_code(&run(&[
            "simulate",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            dir.path().to_str().unwrap()
        ])),
        0
    );

    // Chart and shape trajectories agree on the conserved columns row by
    // row at the shared sample times.
    let (sh_h, sh_rows) = read_csv(&dir.path().join("trajectory_shape.csv"));
    let (ch_h, ch_rows) = read_csv(&dir.path().join("trajectory_regularized.csv"));
    let pick = |header: &[String], rows: &[Vec<String>], name: &str| {
        let t = column(header, rows, "t");
        let v = column(header, rows, name);
        t.into_iter().zip(v).collect::<Vec<_>>()
    };
    let sh_m = pick(&sh_h, &sh_rows, "m");
    let ch_m = pick(&ch_h, &ch_rows, "m");
    let mut matched = 0;
    for (t, m) in &sh_m {
        if let Some((_, other)) = ch_m.iter().find(|(tc, _)| tc == t) {
            assert!((m - other).abs() < 1e-9);
            matched += 1;
        }
    }
    assert!(matched >= 41, "only {matched} shared sample times");
}

#[test]
fn simulate_is_deterministic_across_reruns() {
    let dir_a = TempDir::new().unwrap();
    let dir_b = TempDir::new().unwrap();
    let cfg = write_config(dir_a.path(), "sim.json", COLLAPSE_CONFIG);
    for dir in [&dir_a, &dir_b] {
        assert_eq!(
            exit_code(&run(&[
                "simulate",
                "--config",
                cfg.to_str().unwrap(),
                "--out",
                dir.path().to_str().unwrap()
            ])),
            0
        );
    }
    for name in [
        "summary.json",
        "trajectory_cartesian.csv",
        "trajectory_shape.csv",
        "trajectory_regularized.csv",
    ] {
        let a = fs::read(dir_a.path().join(name)).unwrap();
        let b = fs::read(dir_b.path().join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between reruns");
    }
}

#[test]
fn simulate_keeps_the_equilateral_shape_fixed() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(
        dir.path(),
        "eq.json",
        r#"{
          "vorticities": [1, 1, 1],
          "initial_condition": { "shape": { "b": [1, 1, 1], "eps": 1 } },
          "formulation": "shape",
          "integrator": { "horizon": 3.0 },
          "samples": 30
        }"#,
    );
    let out = run(&[
        "simulate",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let (header, rows) = read_csv(&dir.path().join("trajectory_shape.csv"));
    for name in ["b1", "b2", "b3"] {
        for v in column(&header, &rows, name) {
            assert!((v - 1.0).abs() < 1e-9, "{name} drifted to {v}");
        }
    }
    let summary = read_json(&dir.path().join("summary.json"));
    assert_eq!(summary["classification"]["kind"], "bounded_curve");
    assert_eq!(summary["classification"]["non_collision"], true);
}

#[test]
fn simulate_rotates_equal_strengths_rigidly_in_cartesian() {
    let dir = TempDir::new().unwrap();
    // Circumradius 3^(-1/2) puts the three unit strengths on a unit-side
    // equilateral triangle.
    let r = 1.0 / 3f64.sqrt();
    let cfg_text = format!(
        r#"{{
          "vorticities": [1, 1, 1],
          "initial_condition": {{ "cartesian": [[{r}, 0], [{x}, {y}], [{x}, {yn}]] }},
          "formulation": "cartesian",
          "integrator": {{ "horizon": 4.0 }},
          "samples": 16
        }}"#,
        r = r,
        x = -0.5 * r,
        y = 3f64.sqrt() / 2.0 * r,
        yn = -(3f64.sqrt() / 2.0 * r),
    );
    let cfg = write_config(dir.path(), "rot.json", &cfg_text);
    let out = run(&[
        "simulate",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let (header, rows) = read_csv(&dir.path().join("trajectory_cartesian.csv"));
    let x1 = column(&header, &rows, "x1");
    let y1 = column(&header, &rows, "y1");
    for (x, y) in x1.iter().zip(&y1) {
        assert!((x.hypot(*y) - r).abs() < 1e-9, "vortex left its circle");
    }
    // The angle advances, so this is a rotation and not a frozen state.
    let last = y1.last().unwrap().atan2(*x1.last().unwrap());
    assert!(last.abs() > 1e-3);
    for v in column(&header, &rows, "alpha") {
        assert!((v - 1.0).abs() < 1e-9, "shape left the equilateral point");
    }
}

#[test]
fn simulate_with_seed_draws_reproducible_interior_starts() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(
        dir.path(),
        "seeded.json",
        r#"{
          "vorticities": [1.2, 0.8, -0.5],
          "formulation": "all",
          "integrator": { "horizon": 1.0 },
          "samples": 10
        }"#,
    );
    let run_seed = |sub: &str, seed: &str| {
        let out_dir = dir.path().join(sub);
        let out = run(&[
            "simulate",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            out_dir.to_str().unwrap(),
            "--seed",
            seed,
        ]);
        assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
        fs::read(out_dir.join("trajectory_regularized.csv")).unwrap()
    };
    let a = run_seed("a", "7");
    let b = run_seed("b", "7");
    let c = run_seed("c", "8");
    assert_eq!(a, b, "same seed must reproduce the same trajectory");
    assert_ne!(a, c, "different seeds must draw different starts");

    // Without --seed the tool still runs, on the default draw.
    let out_dir = dir.path().join("d");
    let out =
        run(&["simulate", "--config", cfg.to_str().unwrap(), "--out", out_dir.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn simulate_writes_partial_outputs_when_one_formulation_cannot_start() {
    let dir = TempDir::new().unwrap();
    // A collinear start is an ordinary point for the chart and the
    // positions, but the side-length field is two-valued there.
    let cfg = write_config(
        dir.path(),
        "collinear.json",
        r#"{
          "vorticities": [1, 1, -0.5],
          "initial_condition": { "shape": { "b": [1, 9, 4], "eps": 0 } },
          "formulation": "all",
          "integrator": { "horizon": 1.0 },
          "samples": 10
        }"#,
    );
    let out = run(&[
        "simulate",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2, "stderr: {}", String::from_utf8_lossy(&out.stderr));

    let summary = read_json(&dir.path().join("summary.json"));
    assert_eq!(summary["formulations"]["shape"]["status"], "error");
    assert_eq!(summary["formulations"]["cartesian"]["status"], "ok");
    assert_eq!(summary["formulations"]["regularized"]["status"], "ok");
    assert!(dir.path().join("trajectory_cartesian.csv").exists());
    assert!(dir.path().join("trajectory_regularized.csv").exists());
    assert!(!dir.path().join("trajectory_shape.csv").exists());
    // The two live formulations still agree with each other.
    assert!(summary["cross_formulation_max_deviation"].as_f64().unwrap() < 1e-6);
}

#[test]
fn simulate_rejects_equilateral_starts_for_the_chart_only() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(
        dir.path(),
        "eq-all.json",
        r#"{
          "vorticities": [1, 1, 1],
          "initial_condition": { "shape": { "b": [1, 1, 1], "eps": 1 } },
          "formulation": "all",
          "integrator": { "horizon": 1.0 },
          "samples": 10
        }"#,
    );
    let out = run(&[
        "simulate",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
    let summary = read_json(&dir.path().join("summary.json"));
    assert_eq!(summary["formulations"]["regularized"]["status"], "error");
    assert_eq!(summary["formulations"]["cartesian"]["status"], "ok");
    assert_eq!(summary["formulations"]["shape"]["status"], "ok");
}

#[test]
fn classify_reports_the_vanishing_virial_family() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "c.json", r#"{ "vorticities": [1, 1, "-1/2"] }"#);
    let out = run(&[
        "classify",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);

    let report = read_json(&dir.path().join("report.json"));
    assert_eq!(report["kind"], "self_similar_family");
    assert_eq!(report["total"], 1.5);
    assert_eq!(report["virial"], 0.0);
    assert_eq!(report["beta"], 0.75);
    assert_eq!(report["gamma"], 0.0);
    let p = report["p"].as_array().unwrap();
    assert!((p[0].as_f64().unwrap() - 0.071_796_769_724_490_88).abs() < 1e-12);
    assert!((p[1].as_f64().unwrap() - 13.928_203_230_275_509).abs() < 1e-9);
    assert_eq!(report["equilibria"]["collinear"]["type"], "boundary_rays");
    // The window endpoints are reciprocal for equal leading strengths.
    let prod = p[0].as_f64().unwrap() * p[1].as_f64().unwrap();
    assert!((prod - 1.0).abs() < 1e-12);

    // stdout carries the same document.
    let echoed: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(echoed, report);
}

#[test]
fn classify_handles_single_sign_and_degenerate_strengths() {
    let dir = TempDir::new().unwrap();

    let cfg = write_config(dir.path(), "same.json", r#"{ "vorticities": [1, 1, 1] }"#);
    let out = run(&[
        "classify",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let report = read_json(&dir.path().join("report.json"));
    assert_eq!(report["kind"], "no_mixed_signs");
    assert!(report.get("m").is_none());
    assert!(report.get("p").is_none());
    assert_eq!(report["equilibria"]["equilateral"], true);
    assert_eq!(report["equilibria"]["collinear"]["type"], "none");

    let cfg = write_config(dir.path(), "deg.json", r#"{ "vorticities": [1, 1, -2] }"#);
    let out = run(&[
        "classify",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let report = read_json(&dir.path().join("report.json"));
    assert_eq!(report["kind"], "equilibrium_line");
    assert_eq!(report["degenerate"], true);
    assert_eq!(report["p"][0], report["p"][1]);
    assert_eq!(report["equilibria"]["collinear"]["type"], "degenerate_line");
    assert_eq!(report["equilibria"]["collinear"]["p"], 1.0);
}

#[test]
fn sweep_covers_the_scalar_grid_with_the_window_trichotomy() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(
        dir.path(),
        "sweep.json",
        r#"{
          "sweep": {
            "m": { "start": 0.1, "stop": 3.0, "step": 0.1 },
            "n": { "start": 0.1, "stop": 3.0, "step": 0.1 }
          }
        }"#,
    );
    let out =
        run(&["sweep", "--config", cfg.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));

    let (header, rows) = read_csv(&dir.path().join("sweep.csv"));
    assert_eq!(header.join(","), "m,n,beta,gamma,class,p_lo,p_hi");
    assert_eq!(rows.len(), 900);

    let class_idx = header.iter().position(|h| h == "class").unwrap();
    let count = |label: &str| rows.iter().filter(|r| r[class_idx] == label).count();
    // The positive-beta window, its empty complement, and the double-root
    // line between them partition the grid.
    assert_eq!(count("window"), 723);
    assert_eq!(count("empty"), 174);
    assert_eq!(count("degenerate"), 3);

    let m = column(&header, &rows, "m");
    let n = column(&header, &rows, "n");
    let beta = column(&header, &rows, "beta");
    for (i, row) in rows.iter().enumerate() {
        // The scalar relation beta = m + n - mn holds on every record.
        assert!((beta[i] - (m[i] + n[i] - m[i] * n[i])).abs() < 1e-12);
        match row[class_idx].as_str() {
            "empty" => {
                assert!(beta[i] < 0.0);
                assert_eq!(row[5], "NaN");
                assert_eq!(row[6], "NaN");
            }
            "degenerate" => assert_eq!(row[5], row[6]),
            _ => {
                let lo: f64 = row[5].parse().unwrap();
                assert!(lo >= 0.0);
                assert!(row[6] == "inf" || row[6].parse::<f64>().unwrap() > lo);
            }
        }
    }
    // Degenerate double roots appear exactly where beta crosses zero on
    // the grid.
    let degenerate: Vec<(f64, f64)> = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| r[class_idx] == "degenerate")
        .map(|(i, _)| (m[i], n[i]))
        .collect();
    for (mm, nn) in &degenerate {
        assert!((mm + nn - mm * nn).abs() < 1e-9);
    }
    assert!(degenerate.iter().any(|(mm, nn)| (mm - 2.0).abs() < 1e-9 && (nn - 2.0).abs() < 1e-9));

    // An equal-strength pair (n = 1) pushes one window endpoint to
    // infinity; the tool records that honestly instead of clipping.
    assert!(rows.iter().any(|r| r[6] == "inf"));
}

#[test]
fn sweep_is_deterministic_and_thread_count_independent() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(
        dir.path(),
        "sweep.json",
        r#"{
          "sweep": {
            "m": { "start": 0.2, "stop": 2.0, "step": 0.2 },
            "n": { "start": 0.2, "stop": 2.0, "step": 0.2 }
          }
        }"#,
    );
    let run_jobs = |sub: &str, jobs: Option<&str>| {
        let out_dir = dir.path().join(sub);
        let mut args =
            vec!["sweep", "--config", cfg.to_str().unwrap(), "--out", out_dir.to_str().unwrap()];
        if let Some(j) = jobs {
            args.extend(["--jobs", j]);
        }
        assert_eq!(exit_code(&run(&args)), 0);
        fs::read(out_dir.join("sweep.csv")).unwrap()
    };
    let serial = run_jobs("serial", Some("1"));
    let parallel = run_jobs("parallel", Some("4"));
    let default = run_jobs("default", None);
    assert_eq!(serial, parallel);
    assert_eq!(serial, default);
}

#[test]
fn sweep_with_an_empty_grid_writes_only_the_header() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(
        dir.path(),
        "empty.json",
        r#"{
          "sweep": {
            "m": { "start": 2.0, "stop": 1.0, "step": 0.5 },
            "n": { "start": 0.5, "stop": 1.0, "step": 0.5 }
          }
        }"#,
    );
    let out =
        run(&["sweep", "--config", cfg.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
    assert_eq!(text, "m,n,beta,gamma,class,p_lo,p_hi\n");
}

#[test]
fn config_mistakes_exit_with_code_one() {
    let dir = TempDir::new().unwrap();
    let expect_config_error = |name: &str, body: &str, subcommand: &str| {
        let cfg = write_config(dir.path(), name, body);
        let out = run(&[
            subcommand,
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert_eq!(
            exit_code(&out),
            1,
            "{name} should be a config error; stderr: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    };

    expect_config_error("not-json.json", "{ nope", "simulate");
    expect_config_error("missing-g.json", r#"{ "samples": 10 }"#, "classify");
    expect_config_error("zero-g.json", r#"{ "vorticities": [1, 0, 1] }"#, "classify");
    expect_config_error(
        "unknown-field.json",
        r#"{ "vorticities": [1, 1, 1], "horizon": 2.0 }"#,
        "classify",
    );
    expect_config_error(
        "two-ics.json",
        r#"{
          "vorticities": [1, 1, 1],
          "initial_condition": {
            "shape": { "b": [1, 1, 1], "eps": 1 },
            "regularized": { "alpha": 0.5, "lambda": 6, "theta": 0 }
          }
        }"#,
        "simulate",
    );
    expect_config_error(
        "bad-eps.json",
        r#"{
          "vorticities": [1, 1, 1],
          "initial_condition": { "shape": { "b": [1, 1, 1], "eps": 2 } }
        }"#,
        "simulate",
    );
    expect_config_error(
        "inadmissible-shape.json",
        r#"{
          "vorticities": [1, 1, 1],
          "initial_condition": { "shape": { "b": [1, 10, 1], "eps": 1 } }
        }"#,
        "simulate",
    );
    expect_config_error(
        "two-points.json",
        r#"{
          "vorticities": [1, 1, 1],
          "initial_condition": { "cartesian": [[0, 0], [1, 0]] }
        }"#,
        "simulate",
    );
    expect_config_error(
        "alpha-out-of-range.json",
        r#"{
          "vorticities": [1, 1, 1],
          "initial_condition": { "regularized": { "alpha": 1.5, "lambda": 6, "theta": 0 } }
        }"#,
        "simulate",
    );
    expect_config_error(
        "bad-rational.json",
        r#"{ "vorticities": [1, 1, "one half"] }"#,
        "classify",
    );
    expect_config_error(
        "zero-samples.json",
        r#"{ "vorticities": [1, 1, 1], "samples": 0 }"#,
        "simulate",
    );
    expect_config_error(
        "negative-horizon.json",
        r#"{ "vorticities": [1, 1, 1], "integrator": { "horizon": -1 } }"#,
        "simulate",
    );
    expect_config_error("no-sweep-section.json", r#"{ "vorticities": [1, 1, 1] }"#, "sweep");
    expect_config_error(
        "bad-grid.json",
        r#"{ "sweep": { "m": { "start": -1, "stop": 1, "step": 0.5 },
                        "n": { "start": 0.5, "stop": 1, "step": 0.5 } } }"#,
        "sweep",
    );

    let out = run(&["classify", "--config", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1, "a missing config file is a config error");
}

#[test]
fn rational_strings_accept_unicode_minus_and_fractions() {
    let dir = TempDir::new().unwrap();
    // "3/4" and 0.75 must produce identical reports.
    let cfg_frac =
        write_config(dir.path(), "frac.json", r#"{ "vorticities": ["3/4", 1, "−1/2"] }"#);
    let cfg_dec = write_config(dir.path(), "dec.json", r#"{ "vorticities": [0.75, 1, -0.5] }"#);
    let out_a = dir.path().join("a");
    let out_b = dir.path().join("b");
    assert_eq!(
        exit_code(&run(&[
            "classify",
            "--config",
            cfg_frac.to_str().unwrap(),
            "--out",
            out_a.to_str().unwrap()
        ])),
        0
    );
    assert_eq!(
        exit_code(&run(&[
            "classify",
            "--config",
            cfg_dec.to_str().unwrap(),
            "--out",
            out_b.to_str().unwrap()
        ])),
        0
    );
    assert_eq!(
        fs::read(out_a.join("report.json")).unwrap(),
        fs::read(out_b.join("report.json")).unwrap()
    );
}
