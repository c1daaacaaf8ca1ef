//! End-to-end tests of the command-line surface: config handling, file
//! emission formats, determinism, and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_coatsim")
}

fn demo_config() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/murray_fig1.cfg")
}

fn run(args: &[&str]) -> Output {
    Command::new(binary()).args(args).output().expect("binary runs")
}

fn write_config(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

/// A fast variant of the demo configuration: same physics, short horizon.
fn short_demo(t_end: f64, extra: &str) -> String {
    format!(
        "\
a = 103
b = 77
alpha = 7
beta = 1.5
gamma = 15
rho = 13
k = 0.125
nx = 26
ny = 26
lx = 25
ly = 25
dt = 0.01
t_end = {t_end}
ic_mode = uniform_box
u_lo = 23
u_hi = 24
v_lo = 24
v_hi = 25
{extra}"
    )
}

#[test]
fn shipped_demo_config_carries_the_documented_values() {
    let text = std::fs::read_to_string(demo_config()).unwrap();
    let cfg = coatsim_cli::parse_config(&text).unwrap();
    assert_eq!(cfg.params.a(), 103.0);
    assert_eq!(cfg.params.b(), 77.0);
    assert_eq!(cfg.params.alpha(), 7.0);
    assert_eq!(cfg.params.beta(), 1.5);
    assert_eq!(cfg.params.gamma(), 15.0);
    assert_eq!(cfg.params.rho(), 13.0);
    assert_eq!(cfg.params.k(), 0.125);
    assert_eq!((cfg.nx, cfg.ny), (26, 26));
    assert_eq!((cfg.lx, cfg.ly), (25.0, 25.0));
    assert_eq!(cfg.snapshot_times, vec![90.0, 150.0]);
    assert_eq!(cfg.t_end, 150.0);
    assert_eq!(cfg.dt, 0.01);
    assert_eq!(
        cfg.ic,
        coatsim_cli::IcMode::UniformBox { u_lo: 23.0, u_hi: 24.0, v_lo: 24.0, v_hi: 25.0 }
    );
}

#[test]
fn simulate_emits_the_documented_files() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "run.cfg", &short_demo(1.0, "snapshot_times = 0.5, 1\n"));
    let out = dir.path().join("out");
    let result =
        run(&["simulate", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(result.status.success(), "{}", String::from_utf8_lossy(&result.stderr));

    for name in [
        "diagnostics.csv",
        "u_0.csv",
        "u_0.pgm",
        "u_0.meta.txt",
        "u_0.5.csv",
        "u_0.5.pgm",
        "u_0.5.meta.txt",
        "u_1.csv",
        "u_1.pgm",
        "u_1.meta.txt",
    ] {
        assert!(out.join(name).exists(), "missing {name}");
    }

    let csv = std::fs::read_to_string(out.join("diagnostics.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "t,norm_x,min_u,min_v,max_u,max_v,std_u,neg_energy_u,neg_energy_v,a_norm"
    );
    assert_eq!(lines.count(), 3);

    // every float cell round-trips through parse
    for line in csv.lines().skip(1) {
        for cell in line.split(',') {
            let value: f64 = cell.parse().expect("cell parses");
            assert_eq!(crate_format(value), cell);
        }
    }

    let pgm = std::fs::read(out.join("u_1.pgm")).unwrap();
    assert!(pgm.starts_with(b"P5\n26 26\n255\n"));
    assert_eq!(pgm.len(), b"P5\n26 26\n255\n".len() + 26 * 26);

    let meta = std::fs::read_to_string(out.join("u_1.meta.txt")).unwrap();
    for key in ["t = ", "min = ", "max = ", "nx = 26", "ny = 26", "lx = 25", "ly = 25"] {
        assert!(meta.contains(key), "meta missing `{key}`:\n{meta}");
    }
}

fn crate_format(x: f64) -> String {
    format!("{x:.16e}")
}

#[test]
fn simulate_is_byte_deterministic_for_a_fixed_seed() {
    let dir = tempfile::tempdir().unwrap();
    let cfg =
        write_config(dir.path(), "run.cfg", &short_demo(2.0, "seed = 7\nsnapshot_times = 1, 2\n"));
    let out_a = dir.path().join("a");
    let out_b = dir.path().join("b");
    for out in [&out_a, &out_b] {
        let result =
            run(&["simulate", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
        assert!(result.status.success());
    }
    let a = std::fs::read(out_a.join("diagnostics.csv")).unwrap();
    let b = std::fs::read(out_b.join("diagnostics.csv")).unwrap();
    assert_eq!(a, b);
    let pa = std::fs::read(out_a.join("u_2.pgm")).unwrap();
    let pb = std::fs::read(out_b.join("u_2.pgm")).unwrap();
    assert_eq!(pa, pb);
}

#[test]
fn steady_initial_condition_stays_flat() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "steady.cfg",
        &short_demo(5.0, "snapshot_times = 2.5, 5\n").replace(
            "ic_mode = uniform_box\nu_lo = 23\nu_hi = 24\nv_lo = 24\nv_hi = 25\n",
            "ic_mode = steady\n",
        ),
    );
    let out = dir.path().join("out");
    let result =
        run(&["simulate", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(result.status.success(), "{}", String::from_utf8_lossy(&result.stderr));
    let csv = std::fs::read_to_string(out.join("diagnostics.csv")).unwrap();
    for line in csv.lines().skip(1) {
        let std_u: f64 = line.split(',').nth(6).unwrap().parse().unwrap();
        assert!(std_u < 1e-6, "std_u = {std_u}");
    }
}

#[test]
fn ppm_emission_is_opt_in() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "run.cfg", &short_demo(0.5, "ppm = true\n"));
    let out = dir.path().join("out");
    let result =
        run(&["simulate", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(result.status.success());
    let ppm = std::fs::read(out.join("u_0.5.ppm")).unwrap();
    assert!(ppm.starts_with(b"P6\n26 26\n255\n"));
    assert_eq!(ppm.len(), b"P6\n26 26\n255\n".len() + 3 * 26 * 26);
}

#[test]
fn steady_command_prints_the_equilibrium() {
    let result = run(&["steady", "--config", demo_config().to_str().unwrap()]);
    assert!(result.status.success());
    let text = String::from_utf8(result.stdout).unwrap();
    assert!(text.contains("u* = 2.49593960540e1"), "{text}");
    assert!(text.contains("v* = 2.49729307027e1"), "{text}");
    for line in text.lines().filter(|l| l.starts_with("residual")) {
        let value: f64 = line.split("= ").nth(1).unwrap().parse().unwrap();
        assert!(value.abs() < 1e-10, "{line}");
    }
}

#[test]
fn steady_command_decoupled_limit() {
    let dir = tempfile::tempdir().unwrap();
    let cfg =
        write_config(dir.path(), "rho0.cfg", &short_demo(1.0, "").replace("rho = 13", "rho = 0"));
    let result = run(&["steady", "--config", cfg.to_str().unwrap()]);
    assert!(result.status.success());
    let text = String::from_utf8(result.stdout).unwrap();
    assert!(text.contains("u* = 1.03000000000e2"), "{text}");
    assert!(text.contains("v* = 7.70000000000e1"), "{text}");
}

#[test]
fn verify_passes_on_a_short_demo_run() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "run.cfg", &short_demo(2.0, "snapshot_times = 1, 2\n"));
    let result = run(&["verify", "--config", cfg.to_str().unwrap()]);
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert!(result.status.success(), "{stdout}");
    assert!(stdout.contains("[PASS] positivity"), "{stdout}");
    assert!(stdout.contains("[PASS] energy-inequality"), "{stdout}");
    assert!(stdout.contains("[PASS] cross-scheme-gap"), "{stdout}");
    assert!(stdout.contains("[PASS] dependence-ratios"), "{stdout}");
    assert!(stdout.contains("[PASS] squeeze-sweep"), "{stdout}");
}

#[test]
fn verify_flags_a_reckless_time_step() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "huge.cfg",
        &short_demo(150.0, "snapshot_times = 75, 150\n").replace("dt = 0.01", "dt = 1.0"),
    );
    let result = run(&["verify", "--config", cfg.to_str().unwrap()]);
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert!(!result.status.success(), "expected failure:\n{stdout}");
    assert!(stdout.contains("FAIL"), "{stdout}");
}

#[test]
fn verify_skips_trajectory_checks_at_zero_horizon() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "zero.cfg", &short_demo(0.0, ""));
    let result = run(&["verify", "--config", cfg.to_str().unwrap()]);
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert!(result.status.success(), "{stdout}");
    assert!(stdout.contains("[SKIP] cross-scheme-gap"), "{stdout}");
    assert!(stdout.contains("[SKIP] dependence-ratios"), "{stdout}");
    assert!(stdout.contains("[SKIP] squeeze-sweep"), "{stdout}");
    assert!(stdout.contains("[PASS] positivity"), "{stdout}");
}

#[test]
fn bad_usage_and_bad_configs_fail_cleanly() {
    let result = run(&["frobnicate", "--config", "nope.cfg"]);
    assert_eq!(result.status.code(), Some(1));

    let result = run(&[]);
    assert_eq!(result.status.code(), Some(2));

    let result = run(&["simulate", "--config", "/definitely/not/here.cfg", "--out", "/tmp/x"]);
    assert_eq!(result.status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "bad.cfg", "a = 1\nnot a line\n");
    let result = run(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("line 2"), "{stderr}");
}
