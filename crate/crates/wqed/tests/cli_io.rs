//! End-to-end tests of the `wqed` binary: exit codes, CSV/JSON formats,
//! manifests, and the preset round trip.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn wqed(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wqed"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

/// Parses the data rows of an emitted CSV (skips `#` lines and the header).
fn csv_rows(path: &Path) -> Vec<Vec<f64>> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .skip(1)
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect()
}

#[test]
fn preset_then_ddi_reports_the_reference_coupling() {
    let dir = tempfile::tempdir().unwrap();
    let run = wqed(&["preset", "fig2-close", "--out", "chain.toml"], dir.path());
    assert!(run.status.success(), "{}", stderr(&run));

    let text = wqed(&["ddi", "--config", "chain.toml"], dir.path());
    assert!(text.status.success());
    let body = stdout(&text);
    assert!(body.contains("23.08"), "text output: {body}");
    assert!(body.contains("config_digest"), "text output: {body}");

    let json = wqed(&["ddi", "--config", "chain.toml", "--json"], dir.path());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(parsed["n"], 2);
    let omega = parsed["omega"][0][1].as_f64().unwrap();
    assert!((omega / 23.0825 - 1.0).abs() < 1e-3, "omega = {omega}");
    assert_eq!(parsed["omega"][0][1], parsed["omega"][1][0]);
}

#[test]
fn disabled_ddi_config_reports_zero_matrix() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("off.toml"),
        "[waveguide]\nlambda_guided_nm = 211.8\nlambda_transition_nm = 655.0\n\n\
         [[emitters]]\nposition_nm = [0.0, 17.0, 0.0]\ngamma_wg = 11.03\ngamma_loss = 6.86\n\n\
         [[emitters]]\nposition_nm = [32.75, 17.0, 0.0]\ngamma_wg = 11.03\ngamma_loss = 6.86\n\n\
         [ddi]\nenabled = false\n",
    )
    .unwrap();
    let run = wqed(&["ddi", "--config", "off.toml", "--json"], dir.path());
    assert!(run.status.success(), "{}", stderr(&run));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&run)).unwrap();
    assert_eq!(parsed["omega"][0][1], 0.0);
    assert_eq!(parsed["omega"][1][0], 0.0);
}

#[test]
fn no_ddi_spectrum_keeps_the_fano_dip_but_loses_the_splitting() {
    let dir = tempfile::tempdir().unwrap();
    wqed(&["preset", "fig2-close", "--out", "chain.toml"], dir.path());
    wqed(
        &[
            "spectrum",
            "--config",
            "chain.toml",
            "--delta-min",
            "-80",
            "--delta-max",
            "80",
            "--points",
            "4001",
            "--out",
            "noddi.csv",
            "--no-ddi",
        ],
        dir.path(),
    );
    let run = wqed(
        &["features", "--input", "noddi.csv", "--threshold", "0.3"],
        dir.path(),
    );
    assert!(run.status.success(), "{}", stderr(&run));
    let report: serde_json::Value = serde_json::from_str(&stdout(&run)).unwrap();
    // One dominant peak near resonance plus an interior Fano minimum; the
    // DDI-split double peak needs the coupling.
    let peaks = report["peaks"].as_array().unwrap();
    let dominant: Vec<&serde_json::Value> = peaks
        .iter()
        .filter(|p| p["reflection"].as_f64().unwrap() > 0.3)
        .collect();
    assert_eq!(dominant.len(), 1, "peaks: {peaks:?}");
    assert!(dominant[0]["delta"].as_f64().unwrap().abs() < 10.0);
    assert!(!report["minima"].as_array().unwrap().is_empty());
}

#[test]
fn unknown_preset_exits_2_and_lists_names() {
    let dir = tempfile::tempdir().unwrap();
    let run = wqed(&["preset", "fig9-n77"], dir.path());
    assert_eq!(run.status.code(), Some(2));
    let err = stderr(&run);
    assert!(err.contains("fig2-close"), "stderr: {err}");
    assert!(err.contains("single-37nm"), "stderr: {err}");
}

#[test]
fn malformed_config_exits_2_and_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("broken.toml"),
        "[waveguide]\nlambda_transition_nm = 655.0\n\n\
         [[emitters]]\nposition_nm = [0.0, 17.0, 0.0]\ngamma_wg = 11.03\ngamma_loss = 6.86\n",
    )
    .unwrap();
    let run = wqed(&["ddi", "--config", "broken.toml"], dir.path());
    assert_eq!(run.status.code(), Some(2));
    assert!(
        stderr(&run).contains("lambda_guided_nm"),
        "stderr: {}",
        stderr(&run)
    );
}

#[test]
fn coincident_emitters_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("coincident.toml"),
        "[waveguide]\nlambda_guided_nm = 211.8\nlambda_transition_nm = 655.0\n\n\
         [[emitters]]\nposition_nm = [0.0, 17.0, 0.0]\ngamma_wg = 11.03\ngamma_loss = 6.86\n\n\
         [[emitters]]\nposition_nm = [0.0, 17.0, 0.0]\ngamma_wg = 1.0\ngamma_loss = 1.0\n",
    )
    .unwrap();
    let run = wqed(&["ddi", "--config", "coincident.toml"], dir.path());
    assert_eq!(run.status.code(), Some(3), "stderr: {}", stderr(&run));
}

#[test]
fn singular_system_exits_4_with_the_offending_detuning() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("dark.toml"),
        "[waveguide]\nlambda_guided_nm = 211.8\nlambda_transition_nm = 655.0\n\n\
         [[emitters]]\nposition_nm = [0.0, 17.0, 0.0]\ngamma_wg = 0.0\ngamma_loss = 0.0\n",
    )
    .unwrap();
    let run = wqed(
        &[
            "spectrum",
            "--config",
            "dark.toml",
            "--delta-min",
            "-1",
            "--delta-max",
            "1",
            "--points",
            "3",
            "--out",
            "dark.csv",
        ],
        dir.path(),
    );
    assert_eq!(run.status.code(), Some(4), "stderr: {}", stderr(&run));
    assert!(
        stderr(&run).contains("delta = 0"),
        "stderr: {}",
        stderr(&run)
    );
}

#[test]
fn spectrum_csv_format_manifest_and_closed_form_agreement() {
    let dir = tempfile::tempdir().unwrap();
    wqed(&["preset", "fig2-close", "--out", "chain.toml"], dir.path());

    let run = wqed(
        &[
            "spectrum",
            "--config",
            "chain.toml",
            "--delta-min",
            "-80",
            "--delta-max",
            "80",
            "--points",
            "501",
            "--out",
            "solver.csv",
        ],
        dir.path(),
    );
    assert!(run.status.success(), "{}", stderr(&run));

    let text = fs::read_to_string(dir.path().join("solver.csv")).unwrap();
    assert!(text.starts_with("# wqed spectrum\n"));
    assert!(text.contains("# config_digest: "));
    assert!(text.contains("\ndelta,reflection,transmission,loss\n"));
    let rows = csv_rows(&dir.path().join("solver.csv"));
    assert_eq!(rows.len(), 501);
    assert_eq!(rows[0][0], -80.0);
    assert_eq!(rows[500][0], 80.0);

    // Manifest carries the same digest as the CSV header.
    let manifest: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("solver.csv.manifest.json")).unwrap(),
    )
    .unwrap();
    let digest = manifest["config_digest"].as_str().unwrap();
    assert!(text.contains(&format!("# config_digest: {digest}")));
    assert_eq!(manifest["command"]["points"], 501);
    assert_eq!(manifest["outputs"][0], "solver.csv");

    // The analytic route agrees with the solver to well below output precision.
    let run = wqed(
        &[
            "spectrum",
            "--config",
            "chain.toml",
            "--delta-min",
            "-80",
            "--delta-max",
            "80",
            "--points",
            "501",
            "--out",
            "closed.csv",
            "--closed-form",
        ],
        dir.path(),
    );
    assert!(run.status.success(), "{}", stderr(&run));
    let closed = csv_rows(&dir.path().join("closed.csv"));
    for (a, b) in rows.iter().zip(&closed) {
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() < 1e-12, "{x} vs {y}");
        }
    }
}

#[test]
fn closed_form_rejects_longer_chains() {
    let dir = tempfile::tempdir().unwrap();
    wqed(&["preset", "fig6-n5", "--out", "five.toml"], dir.path());
    let run = wqed(
        &[
            "spectrum",
            "--config",
            "five.toml",
            "--delta-min",
            "-10",
            "--delta-max",
            "10",
            "--points",
            "11",
            "--out",
            "five.csv",
            "--closed-form",
        ],
        dir.path(),
    );
    assert_eq!(run.status.code(), Some(2));
}

#[test]
fn features_reports_split_peaks_and_coupling_estimate() {
    let dir = tempfile::tempdir().unwrap();
    wqed(&["preset", "fig2-close", "--out", "chain.toml"], dir.path());
    wqed(
        &[
            "spectrum",
            "--config",
            "chain.toml",
            "--delta-min",
            "-80",
            "--delta-max",
            "80",
            "--points",
            "4001",
            "--out",
            "sweep.csv",
        ],
        dir.path(),
    );
    let run = wqed(
        &[
            "features",
            "--input",
            "sweep.csv",
            "--threshold",
            "0.3",
            "--out",
            "report.json",
        ],
        dir.path(),
    );
    assert!(run.status.success(), "{}", stderr(&run));
    let report: serde_json::Value = serde_json::from_str(&stdout(&run)).unwrap();
    assert_eq!(report["peaks"].as_array().unwrap().len(), 2);
    assert!(report["bandwidth"].as_f64().unwrap() > 0.0);
    assert!(report.get("flag").is_none());
    // Lossy spectrum still recovers the coupling within a few percent.
    let omega = report["ddi_estimate"]["omega"].as_f64().unwrap();
    assert!((omega / 23.0825 - 1.0).abs() < 0.05, "estimate {omega}");
    // The --out copy matches stdout.
    let written: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("report.json")).unwrap()).unwrap();
    assert_eq!(report, written);
}

#[test]
fn features_on_lossless_spectrum_recovers_coupling_within_one_percent() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("lossless.toml"),
        "[waveguide]\nlambda_guided_nm = 211.8\nlambda_transition_nm = 655.0\n\n\
         [[emitters]]\nposition_nm = [0.0, 17.0, 0.0]\ngamma_wg = 11.03\ngamma_loss = 0.0\n\n\
         [[emitters]]\nposition_nm = [32.75, 17.0, 0.0]\ngamma_wg = 11.03\ngamma_loss = 0.0\n",
    )
    .unwrap();
    wqed(
        &[
            "spectrum",
            "--config",
            "lossless.toml",
            "--delta-min",
            "-80",
            "--delta-max",
            "0",
            "--points",
            "8001",
            "--out",
            "sweep.csv",
        ],
        dir.path(),
    );
    let run = wqed(&["features", "--input", "sweep.csv"], dir.path());
    assert!(run.status.success(), "{}", stderr(&run));
    let report: serde_json::Value = serde_json::from_str(&stdout(&run)).unwrap();
    let omega = report["ddi_estimate"]["omega"].as_f64().unwrap();
    assert!((omega / 23.0825 - 1.0).abs() < 0.01, "estimate {omega}");
}

#[test]
fn features_on_single_emitter_spectrum_has_no_estimate() {
    let dir = tempfile::tempdir().unwrap();
    wqed(&["preset", "single-17nm", "--out", "one.toml"], dir.path());
    wqed(
        &[
            "spectrum",
            "--config",
            "one.toml",
            "--delta-min",
            "-40",
            "--delta-max",
            "40",
            "--points",
            "2001",
            "--out",
            "one.csv",
        ],
        dir.path(),
    );
    let run = wqed(
        &["features", "--input", "one.csv", "--threshold", "0.3"],
        dir.path(),
    );
    assert!(run.status.success(), "{}", stderr(&run));
    let report: serde_json::Value = serde_json::from_str(&stdout(&run)).unwrap();
    assert_eq!(report["peaks"].as_array().unwrap().len(), 1);
    assert!(report.get("ddi_estimate").is_none());
}

#[test]
fn features_on_flat_spectrum_sets_no_peak_flag() {
    let dir = tempfile::tempdir().unwrap();
    let mut csv = String::from("delta,reflection,transmission,loss\n");
    for i in 0..50 {
        csv.push_str(&format!("{},0.2,0.7,0.1\n", i as f64));
    }
    fs::write(dir.path().join("flat.csv"), csv).unwrap();
    let run = wqed(&["features", "--input", "flat.csv"], dir.path());
    assert!(run.status.success(), "{}", stderr(&run));
    let report: serde_json::Value = serde_json::from_str(&stdout(&run)).unwrap();
    assert_eq!(report["flag"], "no_peak");
    assert_eq!(report["bandwidth"], 0.0);
}

#[test]
fn features_rejects_foreign_csv() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("foreign.csv"), "a,b\n1,2\n").unwrap();
    let run = wqed(&["features", "--input", "foreign.csv"], dir.path());
    assert_eq!(run.status.code(), Some(2));
}

#[test]
fn map_emits_long_form_rows() {
    let dir = tempfile::tempdir().unwrap();
    wqed(&["preset", "fig8-n5", "--out", "five.toml"], dir.path());
    let run = wqed(
        &[
            "map",
            "--config",
            "five.toml",
            "--delta-min",
            "-20",
            "--delta-max",
            "20",
            "--delta-points",
            "21",
            "--kl-min",
            "0.6",
            "--kl-max",
            "3.2",
            "--kl-points",
            "5",
            "--out",
            "map.csv",
        ],
        dir.path(),
    );
    assert!(run.status.success(), "{}", stderr(&run));
    let text = fs::read_to_string(dir.path().join("map.csv")).unwrap();
    assert!(text.contains("\nkl,delta,reflection\n"));
    let rows = csv_rows(&dir.path().join("map.csv"));
    assert_eq!(rows.len(), 5 * 21);
    for row in &rows {
        assert_eq!(row.len(), 3);
        assert!(row[2] >= 0.0 && row[2] <= 1.0 + 1e-9);
    }
    assert!(dir.path().join("map.csv.manifest.json").exists());
}

#[test]
fn map_single_cell_grid() {
    let dir = tempfile::tempdir().unwrap();
    wqed(&["preset", "fig2-close", "--out", "chain.toml"], dir.path());
    let run = wqed(
        &[
            "map",
            "--config",
            "chain.toml",
            "--delta-min",
            "0",
            "--delta-max",
            "0",
            "--delta-points",
            "1",
            "--kl-min",
            "0.9",
            "--kl-max",
            "0.9",
            "--kl-points",
            "1",
            "--out",
            "cell.csv",
        ],
        dir.path(),
    );
    assert!(run.status.success(), "{}", stderr(&run));
    let rows = csv_rows(&dir.path().join("cell.csv"));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][0], 0.9);
    assert_eq!(rows[0][1], 0.0);
}
