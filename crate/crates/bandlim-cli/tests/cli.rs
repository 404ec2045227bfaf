//! End-to-end tests of the compiled binary: reference values, exit codes,
//! determinism, config-file precedence, and the angle syntax.

// Reference values are recorded at full precision.
#![allow(clippy::excessive_precision)]

use std::io::Write;
use std::process::{Command, Output};

fn bandlim(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bandlim"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

/// Parses CSV text into (header, rows of fields).
fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header: Vec<String> = lines
        .next()
        .expect("header row")
        .split(',')
        .map(str::to_string)
        .collect();
    let rows = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    (header, rows)
}

fn column(header: &[String], name: &str) -> usize {
    header
        .iter()
        .position(|h| h == name)
        .unwrap_or_else(|| panic!("column {name} in {header:?}"))
}

#[test]
fn sweep_matches_reference_errors() {
    let out = bandlim(
        &[
            "sweep",
            "--t",
            "-1.71",
            "--L",
            "50,100,500",
            "--method",
            "classical,d1",
            "--signal",
            "sinc-combo",
        ],
        &[],
    );
    assert!(out.status.success());
    let text = stdout_str(&out);
    let (header, rows) = parse_csv(&text);
    let (m_col, l_col, e_col) = (
        column(&header, "method"),
        column(&header, "L"),
        column(&header, "abs_error"),
    );
    let references = [
        ("classical", "50", 7.3444679278278357515e-6),
        ("classical", "100", 5.25190050757462501e-5),
        ("classical", "500", 2.2207117567063505703e-7),
        ("d1", "50", 3.0762119742622218155e-6),
        ("d1", "100", 2.4873476931475124729e-6),
        ("d1", "500", 4.3494727819393119717e-9),
    ];
    assert_eq!(rows.len(), references.len());
    for (method, l, reference) in references {
        let row = rows
            .iter()
            .find(|r| r[m_col] == method && r[l_col] == l)
            .unwrap_or_else(|| panic!("row {method}/{l}"));
        let err: f64 = row[e_col].parse().unwrap();
        assert!(
            ((err - reference) / reference).abs() < 1e-6,
            "{method} L={l}: {err} vs {reference}"
        );
    }
}

#[test]
fn interp_reference_on_growing_signal() {
    let out = bandlim(
        &[
            "interp",
            "--signal",
            "linear-growth",
            "--method",
            "d1",
            "--L",
            "500",
            "--t",
            "-1.71",
        ],
        &[],
    );
    assert!(out.status.success());
    let (header, rows) = parse_csv(&stdout_str(&out));
    assert_eq!(rows.len(), 1);
    let err: f64 = rows[0][column(&header, "abs_error")].parse().unwrap();
    let reference = 1.3639041254578376794e-3;
    assert!(((err - reference) / reference).abs() < 1e-6, "err = {err}");
}

#[test]
fn output_is_byte_identical_across_runs_and_threads() {
    let args = [
        "coeffs", "--d", "2", "--alpha", "1", "--L", "25", "--t", "-1.7",
    ];
    let a = bandlim(&args, &[]);
    let b = bandlim(&args, &[]);
    let single = bandlim(&args, &[("BANDLIM_THREADS", "1")]);
    let quad = bandlim(&args, &[("BANDLIM_THREADS", "4")]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, single.stdout);
    assert_eq!(a.stdout, quad.stdout);
}

#[test]
fn integer_time_gives_exact_rows() {
    let out = bandlim(
        &["sweep", "--t", "4", "--L", "10,20", "--signal", "linear-growth"],
        &[],
    );
    assert!(out.status.success());
    let (header, rows) = parse_csv(&stdout_str(&out));
    let e_col = column(&header, "abs_error");
    assert_eq!(rows.len(), 6);
    for row in &rows {
        assert_eq!(row[e_col], "0.0000000000000000e0");
    }

    let out = bandlim(&["coeffs", "--t", "5", "--L", "3"], &[]);
    let (header, rows) = parse_csv(&stdout_str(&out));
    let (k_col, cols) = (
        column(&header, "k"),
        ["a_classical", "a_d1", "a_general"].map(|c| column(&header, c)),
    );
    for row in &rows {
        let expect = if row[k_col] == "5" {
            "1.0000000000000000e0"
        } else {
            "0.0000000000000000e0"
        };
        for c in cols {
            assert_eq!(row[c], expect, "k = {}", row[k_col]);
        }
    }
}

#[test]
fn d1_and_general_columns_agree_at_order_one() {
    let out = bandlim(&["coeffs", "--d", "1", "--L", "30", "--t", "-1.71"], &[]);
    assert!(out.status.success());
    let (header, rows) = parse_csv(&stdout_str(&out));
    let (d1_col, gen_col) = (column(&header, "a_d1"), column(&header, "a_general"));
    for row in &rows {
        let a1: f64 = row[d1_col].parse().unwrap();
        let a2: f64 = row[gen_col].parse().unwrap();
        assert!((a1 - a2).abs() < 1e-8);
    }
}

#[test]
fn seams_exit_codes_follow_residuals() {
    let ok = bandlim(&["seams", "--d", "2"], &[]);
    assert_eq!(ok.status.code(), Some(0));
    let (header, rows) = parse_csv(&stdout_str(&ok));
    assert_eq!(rows.len(), 200); // 100 offsets x 2 orders
    let g_col = column(&header, "res_g");
    for row in &rows {
        let res: f64 = row[g_col].parse().unwrap();
        assert!(res.abs() < 1e-10);
    }

    let broken = bandlim(&["seams", "--d", "6"], &[]);
    assert_eq!(broken.status.code(), Some(3));
    // the table is still written before the run is failed
    assert!(!broken.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["sweep", "--method", "bogus"],
        vec!["sweep", "--omega", "five"],
        vec!["sweep", "--signal", "mystery"],
        vec!["sweep", "--d", "7"],
        vec!["sweep", "--omega", "pi"],
        vec!["interp", "--L", ""],
    ] {
        let out = bandlim(&args, &[]);
        assert_eq!(out.status.code(), Some(2), "args = {args:?}");
    }
    let bad_env = bandlim(&["sweep"], &[("BANDLIM_THREADS", "many")]);
    assert_eq!(bad_env.status.code(), Some(2));
}

#[test]
fn config_file_is_read_and_flags_override() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# reference run").unwrap();
    writeln!(file, "t = -1.71").unwrap();
    writeln!(file, "l = 50").unwrap();
    writeln!(file, "method = classical").unwrap();
    writeln!(file, "signal = sinc-combo").unwrap();
    let path = file.path().to_str().unwrap();

    let from_file = bandlim(&["sweep", "--config", path], &[]);
    assert!(from_file.status.success());
    let (header, rows) = parse_csv(&stdout_str(&from_file));
    assert_eq!(rows.len(), 1);
    let err: f64 = rows[0][column(&header, "abs_error")].parse().unwrap();
    let reference = 7.3444679278278357515e-6;
    assert!(((err - reference) / reference).abs() < 1e-6);

    // --t beats the file entry; at integer time the error is exactly zero
    let overridden = bandlim(&["sweep", "--config", path, "--t", "4"], &[]);
    let (header, rows) = parse_csv(&stdout_str(&overridden));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][column(&header, "t")], "4.0000000000000000e0");
    assert_eq!(rows[0][column(&header, "abs_error")], "0.0000000000000000e0");
}

#[test]
fn angle_spellings_are_equivalent() {
    // pi/2 and 0.5pi are the same f64, so the outputs must be identical
    let frac = bandlim(
        &["sweep", "--omega", "pi/2", "--L", "40", "--method", "d1"],
        &[],
    );
    let mult = bandlim(
        &["sweep", "--omega", "0.5pi", "--L", "40", "--method", "d1"],
        &[],
    );
    assert!(frac.status.success());
    assert_eq!(frac.stdout, mult.stdout);
}

#[test]
fn tone_signal_sweeps() {
    let out = bandlim(
        &[
            "sweep",
            "--signal",
            "tone:pi/3:1",
            "--method",
            "d1",
            "--L",
            "100",
            "--t",
            "0.5",
        ],
        &[],
    );
    assert!(out.status.success());
    let (header, rows) = parse_csv(&stdout_str(&out));
    assert_eq!(rows.len(), 1);
    let err: f64 = rows[0][column(&header, "abs_error")].parse().unwrap();
    assert!(err < 0.5, "tone reconstruction error {err}");
}
