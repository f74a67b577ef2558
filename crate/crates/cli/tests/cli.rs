//! End-to-end tests of the `prym-topo` binary: output formats, exit codes,
//! determinism of the parallel sweep, and the verification workflow.

use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_prym-topo"));
    cmd.env_remove("PRYM_TOPO_JOBS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn assert_exit(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout: {}\nstderr: {}",
        stdout(out),
        stderr(out)
    );
}

#[test]
fn invariants_text_matches_the_d5_row() {
    let out = run(&["invariants", "5"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("chi(W_D)    = -7/15"), "{text}");
    assert!(text.contains("genus       = 0"), "{text}");
    assert!(text.contains("e2 = 0, e3 = 1, e5 = 1, e6 = 0"), "{text}");
}

#[test]
fn invariants_json_and_csv_formats() {
    let out = run(&["invariants", "200", "--format", "json"]);
    assert_exit(&out, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["D"], 200);
    assert_eq!(value["f"], 5);
    assert_eq!(value["D0"], 8);
    assert_eq!(value["chi_num"], -455);
    assert_eq!(value["chi_den"], 3);
    assert_eq!(value["g"], 56);
    assert_eq!(value["C"], 36);

    let out = run(&["invariants", "200", "--format", "csv"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("D,g,chi_num,chi_den,C,e2,e3,e5,e6"));
    assert_eq!(lines.next(), Some("200,56,-455,3,36,6,4,0,0"));
}

#[test]
fn invariants_rejects_bad_input_with_exit_2() {
    let out = run(&["invariants", "7"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("not a discriminant"));

    let out = run(&["invariants", "49"]);
    assert_exit(&out, 2);
    assert!(stderr(&out).contains("square discriminant 49 is out of scope"));

    let out = run(&["invariants", "4"]);
    assert_exit(&out, 2);
}

#[test]
fn sweep_produces_86_rows_up_to_200() {
    let out = run(&["sweep", "--from", "5", "--to", "200"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "D,g,chi_num,chi_den,C,e2,e3,e5,e6");
    assert_eq!(lines.len(), 87, "header + 86 rows");
    assert_eq!(lines[1], "5,0,-7,15,1,0,1,1,0");
    assert_eq!(lines[86], "200,56,-455,3,36,6,4,0,0");
}

#[test]
fn sweep_single_discriminant_and_bad_ranges() {
    let out = run(&["sweep", "--from", "5", "--to", "5"]);
    assert_exit(&out, 0);
    assert_eq!(stdout(&out).lines().count(), 2);

    let out = run(&["sweep", "--from", "4", "--to", "10"]);
    assert_exit(&out, 2);
    let out = run(&["sweep", "--from", "20", "--to", "10"]);
    assert_exit(&out, 2);
}

#[test]
fn sweep_bytes_are_identical_across_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    let path1 = dir.path().join("j1.csv");
    let path7 = dir.path().join("j7.csv");
    let out = run(&[
        "sweep", "--from", "5", "--to", "1200", "--jobs", "1", "--out",
        path1.to_str().unwrap(),
    ]);
    assert_exit(&out, 0);
    let out = run(&[
        "sweep", "--from", "5", "--to", "1200", "--jobs", "7", "--out",
        path7.to_str().unwrap(),
    ]);
    assert_exit(&out, 0);
    let b1 = std::fs::read(&path1).unwrap();
    let b7 = std::fs::read(&path7).unwrap();
    assert_eq!(b1, b7, "sweep output depends on worker count");

    // PRYM_TOPO_JOBS is the default for --jobs
    let path_env = dir.path().join("env.csv");
    let out = bin()
        .env("PRYM_TOPO_JOBS", "3")
        .args(["sweep", "--from", "5", "--to", "1200", "--out", path_env.to_str().unwrap()])
        .output()
        .unwrap();
    assert_exit(&out, 0);
    assert_eq!(b1, std::fs::read(&path_env).unwrap());

    let out = bin()
        .env("PRYM_TOPO_JOBS", "zero")
        .args(["sweep", "--from", "5", "--to", "10"])
        .output()
        .unwrap();
    assert_exit(&out, 2);
}

#[test]
fn sweep_json_and_markdown_formats() {
    let out = run(&["sweep", "--from", "5", "--to", "200", "--format", "json"]);
    assert_exit(&out, 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 86);
    assert_eq!(rows[0]["D"], 5);
    assert_eq!(rows[0]["chi_den"], 15);

    let out = run(&["sweep", "--from", "5", "--to", "20", "--format", "md"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.starts_with("| D | g | chi | C | e2 | e3 | e5 | e6 |"));
    assert!(text.contains("| 12 | 0 | -7/3 | 3 | 1 | 0 | 0 | 1 |"), "{text}");
    assert_eq!(text.lines().count(), 2 + 6);
}

#[test]
fn verify_embedded_corpus_passes() {
    let out = run(&["verify"]);
    assert_exit(&out, 0);
    assert!(stdout(&out).contains("verified 86 rows: all invariants match"));
}

#[test]
fn sweep_output_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = run(&["sweep", "--from", "5", "--to", "200", "--out", path.to_str().unwrap()]);
    assert_exit(&out, 0);
    // the recomputed table is byte-identical to the embedded corpus
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        prym_topo::corpus::EMBEDDED
    );
    let out = run(&["verify", "--corpus", path.to_str().unwrap()]);
    assert_exit(&out, 0);
}

#[test]
fn verify_reports_a_tampered_column_and_exits_1() {
    let tampered: String = prym_topo::corpus::EMBEDDED
        .lines()
        .map(|line| {
            if line.starts_with("105,") {
                line.replacen("105,27,", "105,28,", 1)
            } else {
                line.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tampered.csv");
    std::fs::write(&path, tampered).unwrap();

    let out = run(&["verify", "--corpus", path.to_str().unwrap()]);
    assert_exit(&out, 1);
    let text = stdout(&out);
    assert!(text.contains("mismatch at D=105"), "{text}");
    assert!(text.contains("column g: corpus=28, computed=27"), "{text}");
}

#[test]
fn verify_rejects_empty_or_missing_corpora_with_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.csv");
    std::fs::write(&path, "").unwrap();
    let out = run(&["verify", "--corpus", path.to_str().unwrap()]);
    assert_exit(&out, 3);

    let header_only = dir.path().join("header.csv");
    std::fs::write(&header_only, "D,g,chi_num,chi_den,C,e2,e3,e5,e6\n").unwrap();
    let out = run(&["verify", "--corpus", header_only.to_str().unwrap()]);
    assert_exit(&out, 3);

    let out = run(&["verify", "--corpus", dir.path().join("nope.csv").to_str().unwrap()]);
    assert_exit(&out, 3);
}

#[test]
fn bounds_audit_reports_exactly_the_known_e3_deficiency() {
    // e3(5) = 1 fails the strict e3 < D/6 inequality; every other bound
    // holds on the whole range, so the audit exits 1 with that single line.
    let out = run(&["bounds", "--to", "2000"]);
    assert_exit(&out, 1);
    let text = stdout(&out);
    let violations: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("bound violated"))
        .collect();
    assert_eq!(
        violations,
        vec!["bound violated at D=5: e3 bound: e3 = 1 >= D/6"],
        "{text}"
    );
}

#[test]
fn cusps_and_forms_listings() {
    let out = run(&["cusps", "17", "--list"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.starts_with("D=17: C = 6"));
    // header + 6 prototype rows after the count line
    assert_eq!(text.lines().count(), 2 + 6);

    let out = run(&["cusps", "9"]);
    assert_exit(&out, 2);

    let out = run(&["forms", "20", "--list"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.starts_with("h(-20) = 2"));
    assert!(text.contains("1\t0\t5"));
    assert!(text.contains("2\t2\t3"));

    let out = run(&["forms", "6"]);
    assert_exit(&out, 2);
}

#[test]
fn polygon_writes_svg_and_json_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("turtle.svg");
    let out = run(&["polygon", "turtle", "--param", "1,0.3", "--svg", svg.to_str().unwrap()]);
    assert_exit(&out, 0);
    let content = std::fs::read_to_string(&svg).unwrap();
    assert!(content.starts_with("<svg"));
    assert_eq!(content.matches("<polygon").count(), 1);

    let svg6 = dir.path().join("hurricane6.svg");
    let json6 = dir.path().join("hurricane6.json");
    let out = run(&[
        "polygon", "hurricane", "--param", "-0.8,0.1", "--unfolded",
        "--svg", svg6.to_str().unwrap(), "--json", json6.to_str().unwrap(),
    ]);
    assert_exit(&out, 0);
    let content = std::fs::read_to_string(&svg6).unwrap();
    assert_eq!(content.matches("<polygon").count(), 6, "six rotated copies");
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json6).unwrap()).unwrap();
    assert_eq!(value["genus"], 4);

    let out = run(&["polygon", "c10", "--unfolded"]);
    assert_exit(&out, 0);
    assert!(stdout(&out).contains("genus 4"));
}

#[test]
fn polygon_rejects_bad_parameters_with_exit_2() {
    let out = run(&["polygon", "turtle"]);
    assert_exit(&out, 2);
    let out = run(&["polygon", "turtle", "--param", "0,0"]);
    assert_exit(&out, 2);
    let out = run(&["polygon", "turtle", "--param", "nope"]);
    assert_exit(&out, 2);
    let out = run(&["polygon", "c12", "--param", "1,0"]);
    assert_exit(&out, 2);
}

#[test]
fn svg_output_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for path in [&a, &b] {
        let out = run(&[
            "polygon", "c12", "--unfolded", "--svg", path.to_str().unwrap(),
        ]);
        assert_exit(&out, 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}
