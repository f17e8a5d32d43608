//! End-to-end tests of the `kappa` binary: formats, exit codes, b-files.

use std::path::PathBuf;
use std::process::{Command, Output};

use kappa_core::BuiltinFn;

fn kappa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kappa"))
        .args(args)
        .env("KAPPA_THREADS", "2")
        .output()
        .expect("spawn kappa")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn gen_csv_kappa0() {
    let o = kappa(&[
        "gen", "--fn", "kappa", "--x", "0", "--n", "12", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,value"));
    let values: Vec<&str> = lines.map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(values.join(","), "1,2,2,4,2,6,2,8,4,6,2,16");
}

#[test]
fn gen_bfile_epsilon() {
    let o = kappa(&["gen", "--fn", "epsilon", "--n", "3", "--format", "bfile"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim_end(), "1 1\n2 0\n3 0");
}

#[test]
fn gen_json_k() {
    let o = kappa(&["gen", "--fn", "K", "--n", "12", "--format", "json"]);
    assert_eq!(stdout(&o).trim(), "[1,1,1,2,1,3,1,4,2,3,1,8]");
}

#[test]
fn gen_json_big_values_are_strings() {
    let o = kappa(&[
        "gen", "--fn", "id", "--x", "5", "--n", "1700", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arr = v.as_array().unwrap();
    assert!(arr[1000].is_number()); // 1001^5 < 2^53
    assert_eq!(arr[1699], serde_json::json!("14198570000000000"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["gen", "--fn", "nope", "--n", "5"],
        vec!["gen", "--fn", "kappa"],
        vec!["gen", "--fn", "kappa", "--n", "0"],
        vec!["gen", "--fn", "kappa", "--n", "5", "--format", "xml"],
        vec!["check", "--n", "10", "--x", "a"],
        vec!["frobnicate"],
        vec![],
    ] {
        assert_eq!(kappa(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn check_small_ranges() {
    for args in [
        ["check", "--n", "12", "--x", "0,1"],
        ["check", "--n", "1", "--x", "0"],
    ] {
        let o = kappa(&args);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains(" 0 failed"));
    }
}

#[test]
fn check_writes_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = kappa(&[
        "check",
        "--n",
        "50",
        "--x",
        "0,2",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 5 + 5 * 2 + 2 * 4);
    for r in reports {
        for key in ["identity", "x", "y", "n_max", "passed"] {
            assert!(r.get(key).is_some(), "missing {key} in {r}");
        }
        assert_eq!(r["passed"], true);
        assert_eq!(r["n_max"], 50);
        assert!(r.get("first_failure_n").is_none());
    }
    let eq3 = reports
        .iter()
        .find(|r| r["identity"] == "EQ3" && r["x"] == 2 && r["y"] == 0);
    assert!(eq3.is_some());
}

#[test]
fn check_report_to_unwritable_path() {
    let o = kappa(&[
        "check",
        "--n",
        "5",
        "--x",
        "0",
        "--report",
        "/nonexistent/dir/r.json",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oeis_golden_files_agree() {
    for (f, x, file) in [
        ("kappa", "0", "A067824.txt"),
        ("kappa", "1", "A330575.txt"),
        ("K", "0", "A074206.txt"),
    ] {
        let o = kappa(&["oeis-compare", "--fn", f, "--x", x, "--bfile", &data(file)]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{file}: {}{}",
            stdout(&o),
            stderr(&o)
        );
        assert!(stdout(&o).contains("12 terms agree"));
    }
}

#[test]
fn oeis_wrong_function_mismatches() {
    let o = kappa(&[
        "oeis-compare",
        "--fn",
        "kappa",
        "--x",
        "1",
        "--bfile",
        &data("A067824.txt"),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("n = 2"));
}

#[test]
fn oeis_corrupted_entry_names_index() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    let text = std::fs::read_to_string(data("A074206.txt"))
        .unwrap()
        .replace("\n10 3\n", "\n10 4\n");
    std::fs::write(&path, text).unwrap();
    let o = kappa(&[
        "oeis-compare",
        "--fn",
        "K",
        "--bfile",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("n = 10"), "{}", stdout(&o));
}

#[test]
fn oeis_parse_and_io_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.txt");
    std::fs::write(&path, "# header\n1 1\n2 two\n").unwrap();
    let o = kappa(&[
        "oeis-compare",
        "--fn",
        "K",
        "--bfile",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(":3:"), "{}", stderr(&o));

    let missing = dir.path().join("missing.txt");
    let o = kappa(&[
        "oeis-compare",
        "--fn",
        "K",
        "--bfile",
        missing.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bfile_round_trip_for_every_builtin() {
    let dir = tempfile::tempdir().unwrap();
    for f in BuiltinFn::ALL {
        let x = if f.takes_exponent() { "2" } else { "0" };
        let o = kappa(&[
            "gen",
            "--fn",
            f.name(),
            "--x",
            x,
            "--n",
            "1000",
            "--format",
            "bfile",
        ]);
        assert_eq!(o.status.code(), Some(0));
        let path = dir.path().join(format!("{f}.txt"));
        std::fs::write(&path, &o.stdout).unwrap();
        let o = kappa(&[
            "oeis-compare",
            "--fn",
            f.name(),
            "--x",
            x,
            "--bfile",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{f}: {}", stdout(&o));
        assert!(stdout(&o).contains("1000 terms agree"));
    }
}

#[test]
fn series_passes() {
    for args in [
        ["series", "--x", "0", "--s", "3", "--n", "100000"],
        ["series", "--x", "1", "--s", "4", "--n", "100000"],
    ] {
        let o = kappa(&args);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("verdict: PASS"));
    }
}

#[test]
fn series_domain_error_names_rho() {
    let o = kappa(&["series", "--x", "0", "--s", "1.6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("rho = 1.7286"), "{}", stderr(&o));
}

#[test]
fn bench_output_shape() {
    let o = kappa(&["bench", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 1);
    for key in ["kappa_0", "kappa_1", "K"] {
        assert!(v["sieve_ms"][key].as_f64().unwrap() >= 0.0);
    }
    assert_eq!(v["naive_kappa_0"]["prefix"], 1);
}

#[test]
fn bench_sieve_beats_naive_extrapolation() {
    let o = kappa(&["bench", "--n", "100000"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sieve_faster"], true, "{v}");
}
