use std::process::{Command, Output};

use peadyn::cli::report::{
    BoundReport, CyclesReport, FixedPointsReport, OrbitReport, StepReport, VerifyReport,
};

fn peadyn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peadyn"))
        .args(args)
        .env_remove("PEADYN_BUDGET")
        .output()
        .expect("binary runs")
}

fn json<T: serde::de::DeserializeOwned>(args: &[&str]) -> (i32, T) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = peadyn(&full);
    let code = out.status.code().unwrap();
    let value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (code, value)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn step_123_twice() {
    let out = peadyn(&[
        "step", "--base", "10", "--word", "123", "-n", "2", "--format", "table",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "131211\n131241\n");

    let (_, r): (_, StepReport) = json(&["step", "-k", "10", "-w", "123", "-n", "2"]);
    assert_eq!(r.iterates, ["131211", "131241"]);
}

#[test]
fn step_fixed_point_repeats() {
    let (code, r): (_, StepReport) = json(&["step", "-k", "2", "-w", "1001110", "-n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r.iterates, ["1001110"; 3]);
}

#[test]
fn step_single_nine() {
    let (_, r): (_, StepReport) = json(&["step", "-k", "10", "-w", "9"]);
    assert_eq!(r.iterates, ["19"]);
}

#[test]
fn step_csv() {
    let out = peadyn(&[
        "step", "-k", "10", "-w", "123", "-n", "2", "--format", "csv",
    ]);
    assert_eq!(stdout(&out), "step,word\n1,131211\n2,131241\n");
}

#[test]
fn invalid_letter_names_position() {
    let out = peadyn(&["step", "-k", "3", "-w", "1203"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("position 3"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn invalid_base_and_empty_word_exit_2() {
    assert_eq!(
        peadyn(&["step", "-k", "1", "-w", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        peadyn(&["step", "-k", "99", "-w", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        peadyn(&["orbit", "-k", "2", "-w", ""]).status.code(),
        Some(2)
    );
}

#[test]
fn orbit_examples() {
    let (code, r): (_, OrbitReport) = json(&["orbit", "-k", "10", "-w", "123"]);
    assert_eq!(code, 0);
    assert_eq!(
        (r.period, r.cycle.as_slice()),
        (1, &["14233221".to_string()][..])
    );

    let (_, r): (_, OrbitReport) = json(&["orbit", "-k", "2", "-w", "111"]);
    assert_eq!((r.transient, r.period), (0, 1));

    let (_, r): (_, OrbitReport) = json(&["orbit", "-k", "2", "-w", "10"]);
    assert_eq!((r.transient, r.period), (8, 1));
    assert_eq!(r.cycle, ["1001110"]);
    assert_eq!(r.start, "10");
}

#[test]
fn orbit_limit_exit_3() {
    let out = peadyn(&["orbit", "-k", "2", "-w", "10", "--max-steps", "3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn fixed_points_base4() {
    let (code, r): (_, FixedPointsReport) = json(&["fixed-points", "--base", "4"]);
    assert_eq!(code, 0);
    assert_eq!(
        r.fixed_points,
        [
            "22",
            "1211110",
            "1311110",
            "1312111",
            "23322110",
            "33123110",
            "132211110"
        ]
    );
    assert_eq!((r.base, r.bound, r.length_limit), (4, 11, 11));
}

#[test]
fn fixed_points_base2_table() {
    let out = peadyn(&["fixed-points", "-k", "2", "--format", "table"]);
    assert_eq!(
        stdout(&out),
        "base  word     length\n2     111      3\n2     1001110  7\n"
    );
}

#[test]
fn fixed_points_base6_csv() {
    let out = peadyn(&["fixed-points", "-k", "6", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("base,word,length"));
    let rows: Vec<&str> = lines.collect();
    // the reference column lists 18; 15141211110 is the nineteenth
    assert_eq!(rows.len(), 19);
    assert!(rows.contains(&"6,15141211110,11"));
    assert!(rows.contains(&"6,1514132211110,13"));
    assert!(!text.contains('\r'));
}

#[test]
fn budget_env_and_flag_exit_4() {
    let out = Command::new(env!("CARGO_BIN_EXE_peadyn"))
        .args(["fixed-points", "-k", "6"])
        .env("PEADYN_BUDGET", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(
        peadyn(&["cycles", "-k", "3", "--budget", "5"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn cycles_examples() {
    let out = peadyn(&["cycles", "-k", "2", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "(no cycles)\n");

    let (code, r): (_, CyclesReport) = json(&["cycles", "-k", "2", "--length-limit", "4"]);
    assert_eq!(code, 0);
    assert!(r.cycles.is_empty());
    assert_eq!(r.length_limit, 4);

    let (code, r): (_, CyclesReport) = json(&["cycles", "-k", "3"]);
    assert_eq!(code, 0);
    assert!(!r.cycles.is_empty());
    assert!(r
        .cycles
        .iter()
        .all(|c| c.period >= 2 && c.words.len() == c.period));
}

#[test]
fn bound_examples() {
    for (k, len, count) in [
        ("2", 8, "510"),
        ("6", 15, "564221981490"),
        ("3", 9, "29523"),
    ] {
        let (code, r): (_, BoundReport) = json(&["bound", "-k", k]);
        assert_eq!(code, 0);
        assert_eq!(r.length_bound, len);
        assert_eq!(r.words_up_to_bound.to_string(), count);
    }
    let out = peadyn(&["bound", "-k", "6", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "base,length_bound,words_up_to_bound\n6,15,564221981490\n"
    );
}

#[test]
fn verify_table_default_reports_base6() {
    let (code, r): (_, VerifyReport) = json(&["verify-table"]);
    assert_eq!(code, 1);
    let statuses: Vec<(u32, bool)> = r
        .results
        .iter()
        .map(|v| {
            (
                v.base,
                v.only_in_golden.is_empty() && v.only_in_search.is_empty(),
            )
        })
        .collect();
    assert_eq!(
        statuses,
        [(2, true), (3, true), (4, true), (5, true), (6, false)]
    );
    assert_eq!(r.results[4].only_in_search, ["15141211110"]);
}

#[test]
fn verify_table_margin_up_to_base4() {
    let out = peadyn(&[
        "verify-table",
        "--margin",
        "4",
        "--max-base",
        "4",
        "--format",
        "table",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 4, "{text}");
}

#[test]
fn verify_table_corrupted_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.txt");
    let mut text = peadyn::cli::golden::FIXTURE.to_string();
    text.push_str("3: 123\n");
    std::fs::write(&path, text).unwrap();
    let out = peadyn(&[
        "verify-table",
        "--golden",
        path.to_str().unwrap(),
        "--max-base",
        "5",
        "--format",
        "table",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("base 3: FAIL"), "{text}");
    assert!(text.contains("only in golden: 123"), "{text}");
    assert!(text.contains("base 2: PASS"), "{text}");
}

#[test]
fn verify_table_unreadable_golden_file() {
    let out = peadyn(&["verify-table", "--golden", "/nonexistent/golden.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = peadyn(&["cycles", "-k", "6", "--output", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let first = std::fs::read(&a).unwrap();
    assert_eq!(first, std::fs::read(&b).unwrap());
    // file output defaults to json
    let r: CyclesReport = serde_json::from_slice(&first).unwrap();
    assert_eq!(r.base, 6);

    for format in ["json", "csv", "table"] {
        let args = ["fixed-points", "-k", "5", "--format", format];
        assert_eq!(peadyn(&args).stdout, peadyn(&args).stdout);
    }
}

#[test]
fn redirected_output_defaults_to_json() {
    let out = peadyn(&["step", "-k", "10", "-w", "123"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v, serde_json::json!(["131211"]));
}
