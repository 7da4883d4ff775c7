use std::path::Path;
use std::process::{Command, Output};

use lascat::config::RunConfig;

fn lascat(args: &[&str]) -> Output {
    lascat_env(args, &[])
}

fn lascat_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lascat"));
    cmd.args(args).env_remove(lascat::THREADS_ENV);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_lines(text: &str) -> Vec<&str> {
    text.lines().filter(|l| !l.starts_with('#')).collect()
}

fn parse(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let lines = data_lines(text);
    let header = lines[0].split(',').map(String::from).collect();
    let rows = lines[1..]
        .iter()
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn born_default_columns() {
    let (header, rows) = parse(&stdout(&lascat(&["born"])));
    assert_eq!(header, ["theta_deg", "q_fm_inv", "dcs_mb_sr"]);
    assert_eq!(rows.len(), 713);
    assert_eq!(rows[0][0], 1.0);
    assert_eq!(rows.last().unwrap()[0], 179.0);
    assert!(rows.windows(2).all(|w| w[0][1] < w[1][1]));
    assert!(rows.iter().all(|r| r[2].is_finite() && r[2] >= 0.0));
}

#[test]
fn total_near_reference() {
    let (header, rows) = parse(&stdout(&lascat(&["total"])));
    assert_eq!(header[1], "sigma_mb");
    let sigma = rows[0][1];
    assert!((sigma / 201.0 - 1.0).abs() < 0.25, "{sigma}");
}

#[test]
fn phase_scan_single_photon_dominates() {
    let (header, rows) = parse(&stdout(&lascat(&[
        "phase-scan",
        "--theta",
        "7",
        "--n",
        "1,2,3",
    ])));
    assert_eq!(
        header,
        ["phase_rad", "abs_c[n=1]", "abs_c[n=2]", "abs_c[n=3]"]
    );
    assert_eq!(rows[0][0], 0.0);
    assert_eq!(rows.last().unwrap()[0], std::f64::consts::TAU);
    for r in &rows {
        assert!(r[1] > r[2] && r[1] > r[3]);
    }
}

#[test]
fn phase_units_pi() {
    let text = stdout(&lascat(&[
        "phase-scan",
        "--phase-units",
        "pi",
        "--phase",
        "0.5",
        "--phase-points",
        "5",
        "--n",
        "-1,1",
    ]));
    let (header, rows) = parse(&text);
    assert_eq!(header[0], "phase_pi");
    assert_eq!(rows.last().unwrap()[0], 2.0);
    let config = RunConfig::from_metadata(&text).unwrap();
    assert_eq!(config.laser.phase, std::f64::consts::FRAC_PI_2);
    assert_eq!(config.scan.orders, [-1, 1]);
}

#[test]
fn ratio_scan_depth_decreases() {
    let text = stdout(&lascat(&["ratio-scan", "--phase-points", "73"]));
    let depth = |r: &str| -> f64 {
        let key = format!("# modulation_depth[ratio={r}] = ");
        text.lines()
            .find_map(|l| l.strip_prefix(&key))
            .unwrap()
            .parse()
            .unwrap()
    };
    assert!(depth("1") > depth("2") && depth("2") > depth("10"));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = [
        "dressed",
        "--theta-min",
        "2",
        "--theta-max",
        "60",
        "--theta-step",
        "0.5",
        "--n=-2,-1,0,1,2",
    ];
    let one = stdout(&lascat_env(&args, &[("LASCAT_THREADS", "1")]));
    let four = stdout(&lascat_env(&args, &[("LASCAT_THREADS", "4")]));
    let again = stdout(&lascat_env(&args, &[]));
    assert_eq!(data_lines(&one), data_lines(&four));
    assert_eq!(data_lines(&one), data_lines(&again));
}

#[test]
fn config_echo_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(
        &cfg,
        "[laser]\nintensity = 2e12\nharmonic = 3\n[scan]\ntheta_step_deg = 10.0\norders = [0, 2]\n",
    )
    .unwrap();
    let out = dir.path().join("out.csv");
    let o = lascat(&[
        "dressed",
        "--config",
        cfg.to_str().unwrap(),
        "--set",
        "potential.w_s=4.5",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    let echoed = RunConfig::from_metadata(&text).unwrap();
    assert_eq!(echoed.laser.intensity, 2e12);
    assert_eq!(echoed.laser.harmonic, 3);
    assert_eq!(echoed.potential.w_s, 4.5);
    assert_eq!(echoed.scan.output.as_deref(), out.to_str());

    // Re-running from the echo reproduces the data.
    let replay_cfg = dir.path().join("replay.toml");
    let replay_out = dir.path().join("replay.csv");
    let mut replay = echoed.clone();
    replay.scan.output = Some(replay_out.to_str().unwrap().to_string());
    std::fs::write(&replay_cfg, replay.to_toml()).unwrap();
    assert!(lascat(&["dressed", "-c", replay_cfg.to_str().unwrap()])
        .status
        .success());
    let again = std::fs::read_to_string(&replay_out).unwrap();
    assert_eq!(data_lines(&text), data_lines(&again));
}

#[test]
fn shipped_config_matches_defaults() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/p-c12-49mev.toml");
    let text = std::fs::read_to_string(path).unwrap();
    assert_eq!(RunConfig::from_toml(&text).unwrap(), RunConfig::default());
}

#[test]
fn json_output() {
    let text = stdout(&lascat(&["born", "--format", "json", "--theta-step", "45"]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], lascat::output::JSON_SCHEMA);
    assert_eq!(v["columns"][2], "dcs_mb_sr");
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
    assert!(v["metadata"]["kappa"].as_f64().unwrap() > 0.0);
}

#[test]
fn validate_passes() {
    let text = stdout(&lascat(&["validate"]));
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 8);
    assert!(!text.contains("FAIL"));
}

#[test]
fn exit_codes() {
    let code = |o: Output| o.status.code().unwrap();
    assert_eq!(code(lascat(&["born", "--harmonic", "1"])), 1);
    assert_eq!(code(lascat(&["born", "--set", "laser.intensty=1"])), 1);
    assert_eq!(
        code(lascat(&["born", "--config", "/nonexistent/run.toml"])),
        1
    );
    assert_eq!(code(lascat(&["born", "--theta-min", "0"])), 1);
    assert_eq!(code(lascat(&["born", "--no-such-flag"])), 1);
    assert_eq!(code(lascat(&["born", "--help"])), 0);
    let o = lascat(&["born", "--energy", "-3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr)
        .unwrap()
        .contains("beam.kinetic_energy"));
    assert_eq!(
        code(lascat_env(&["total"], &[("LASCAT_THREADS", "zero")])),
        1
    );
    assert_eq!(
        code(lascat(&[
            "dressed",
            "--theta-step",
            "90",
            "--n",
            "1000000000"
        ])),
        2
    );

    let o = lascat(&["born", "--set", "laser.harmonic=1"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("laser.harmonic"), "{err}");
}

#[test]
fn strong_field_warns() {
    let o = lascat(&["total", "--intensity", "1e24"]);
    assert!(o.status.success());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("warning"), "{err}");
}
