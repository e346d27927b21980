//! End-to-end tests of the `satkit` binary: exit codes, output lines, and
//! the generate → encode → solve → verify/decode pipeline.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn satkit(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satkit"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("the satkit binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn write(dir: &TempDir, name: &str, content: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, content).expect("test file writes");
    path
}

#[test]
fn solve_reports_unsatisfiable_with_exit_20() {
    let dir = TempDir::new().unwrap();
    write(&dir, "unsat.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    let out = satkit(&["solve", "unsat.cnf", "--solver", "resolution"], dir.path());
    assert_eq!(out.status.code(), Some(20));
    assert!(stdout(&out).contains("s UNSATISFIABLE"));
}

#[test]
fn solve_reports_satisfiable_with_model_and_exit_10() {
    let dir = TempDir::new().unwrap();
    write(&dir, "unit.cnf", "p cnf 1 1\n1 0\n");
    let out = satkit(&["solve", "unit.cnf", "--solver", "walksat", "--seed", "1"], dir.path());
    assert_eq!(out.status.code(), Some(10));
    let text = stdout(&out);
    assert!(text.contains("s SATISFIABLE"));
    assert!(text.contains("v 1 0"));
}

#[test]
fn solve_reports_unknown_with_exit_30_when_walksat_gives_up() {
    let dir = TempDir::new().unwrap();
    write(&dir, "unsat.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    let out = satkit(&["solve", "unsat.cnf", "--solver", "walksat", "--seed", "1"], dir.path());
    assert_eq!(out.status.code(), Some(30));
    assert!(stdout(&out).contains("s UNKNOWN"));
}

#[test]
fn solve_echoes_a_derived_seed_when_none_is_given() {
    let dir = TempDir::new().unwrap();
    write(&dir, "unit.cnf", "p cnf 1 1\n1 0\n");
    let out = satkit(&["solve", "unit.cnf", "--solver", "walksat"], dir.path());
    assert_eq!(out.status.code(), Some(10));
    let text = stdout(&out);
    let seed_line = text.lines().find(|line| line.starts_with("c seed "));
    let seed_line = seed_line.expect("a `c seed N` line is printed");
    seed_line["c seed ".len()..].parse::<u64>().expect("the echoed seed is a number");
}

#[test]
fn solve_fails_with_exit_1_on_missing_or_malformed_input() {
    let dir = TempDir::new().unwrap();
    let out = satkit(&["solve", "absent.cnf", "--solver", "oracle"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error:"));

    write(&dir, "broken.cnf", "p cnf one 1\n1 0\n");
    let out = satkit(&["solve", "broken.cnf", "--solver", "oracle"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn solved_models_verify_as_valid() {
    let dir = TempDir::new().unwrap();
    write(&dir, "f.cnf", "p cnf 2 2\n1 2 0\n-1 0\n");
    let out = satkit(&["solve", "f.cnf", "--solver", "oracle"], dir.path());
    assert_eq!(out.status.code(), Some(10));
    let text = stdout(&out);
    let model_line = text.lines().find(|line| line.starts_with('v')).expect("a v line");
    write(&dir, "model.txt", &format!("{model_line}\n"));

    let out = satkit(&["verify", "f.cnf", "model.txt"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("VALID"));
}

#[test]
fn verify_reports_invalid_with_exit_1() {
    let dir = TempDir::new().unwrap();
    write(&dir, "f.cnf", "p cnf 1 1\n1 0\n");
    write(&dir, "model.txt", "-1 0\n");
    let out = satkit(&["verify", "f.cnf", "model.txt"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("INVALID"));
}

#[test]
fn verify_rejects_malformed_models_with_exit_2() {
    let dir = TempDir::new().unwrap();
    write(&dir, "f.cnf", "p cnf 2 1\n1 2 0\n");
    write(&dir, "conflict.txt", "1 -1 0\n");
    let out = satkit(&["verify", "f.cnf", "conflict.txt"], dir.path());
    assert_eq!(out.status.code(), Some(2));

    write(&dir, "partial.txt", "1 0\n");
    let out = satkit(&["verify", "f.cnf", "partial.txt"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_is_deterministic_given_a_seed() {
    let dir = TempDir::new().unwrap();
    let args = [
        "generate", "--guests", "16", "--tables", "2", "--f", "0", "--e", "0.1", "--seed", "7",
        "--out",
    ];
    let out = satkit(&[&args[..], &["a.txt"]].concat(), dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("seed: 7"));
    let out = satkit(&[&args[..], &["b.txt"]].concat(), dir.path());
    assert_eq!(out.status.code(), Some(0));
    let a = fs::read(dir.path().join("a.txt")).unwrap();
    let b = fs::read(dir.path().join("b.txt")).unwrap();
    assert_eq!(a, b, "equal seeds must write identical instance files");
    assert!(!a.is_empty());
}

#[test]
fn generate_echoes_a_derived_seed_when_none_is_given() {
    let dir = TempDir::new().unwrap();
    let out = satkit(
        &["generate", "--guests", "3", "--tables", "2", "--e", "0.5"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let err = stderr(&out);
    let seed_line = err.lines().find(|line| line.starts_with("seed: "));
    let seed_line = seed_line.expect("a `seed: N` line on the error stream");
    seed_line["seed: ".len()..].parse::<u64>().expect("the echoed seed is a number");
    assert!(stdout(&out).starts_with("seating 3 2"));
}

#[test]
fn encode_seating_emits_the_expected_clauses() {
    let dir = TempDir::new().unwrap();
    write(&dir, "pair.txt", "seating 2 1\n1 2 E\n");
    let out = satkit(&["encode-seating", "--instance", "pair.txt"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("p cnf 2 3"), "two variables, three clauses: {text}");
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('c') && !l.starts_with('p')).collect();
    assert_eq!(body, vec!["1 0", "2 0", "-1 -2 0"]);
}

#[test]
fn encode_seating_rejects_contradictory_dimension_flags() {
    let dir = TempDir::new().unwrap();
    write(&dir, "pair.txt", "seating 2 1\n1 2 E\n");
    let out = satkit(
        &["encode-seating", "--instance", "pair.txt", "--guests", "3"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("contradicts"));
}

#[test]
fn the_generate_encode_solve_decode_pipeline_holds_together() {
    let dir = TempDir::new().unwrap();
    let out = satkit(
        &[
            "generate", "--guests", "5", "--tables", "2", "--f", "0.1", "--e", "0.2", "--seed",
            "11", "--out", "inst.txt",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let out = satkit(
        &["encode-seating", "--instance", "inst.txt", "--out", "inst.cnf"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let out = satkit(&["solve", "inst.cnf", "--solver", "oracle"], dir.path());
    assert_eq!(out.status.code(), Some(10), "seed 11 draws a satisfiable instance");
    let solver_text = stdout(&out);
    let model_line = solver_text.lines().find(|l| l.starts_with('v')).expect("a v line");
    write(&dir, "model.txt", &format!("{model_line}\n"));

    // The model verifies against the encoding…
    let out = satkit(&["verify", "inst.cnf", "model.txt"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("VALID"));

    // …and decodes into one table per guest.
    let out = satkit(
        &["decode", "--instance", "inst.txt", "--model", "model.txt"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let chart = stdout(&out);
    let rows: Vec<&str> = chart.lines().collect();
    assert_eq!(rows.len(), 5, "one line per guest: {chart}");
    for (index, row) in rows.iter().enumerate() {
        let mut fields = row.split_whitespace();
        assert_eq!(fields.next().unwrap().parse::<u32>().unwrap(), index as u32 + 1);
        let table: u32 = fields.next().unwrap().parse().unwrap();
        assert!((1..=2).contains(&table));
        assert_eq!(fields.next(), None);
    }
}

#[test]
fn decode_rejects_models_that_are_not_seating_charts() {
    let dir = TempDir::new().unwrap();
    write(&dir, "solo.txt", "seating 1 2\n");
    // Variables 1 and 2 are guest 1 at tables 1 and 2; both true is a
    // well-formed model of the variable space but no chart.
    write(&dir, "double.txt", "v 1 2 0\n");
    let out = satkit(
        &["decode", "--instance", "solo.txt", "--model", "double.txt"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cannot decode"));

    write(&dir, "broken.txt", "v 1 junk\n");
    let out = satkit(
        &["decode", "--instance", "solo.txt", "--model", "broken.txt"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2), "malformed model files are usage failures");
}

#[test]
fn experiment_writes_deterministic_csv_and_a_two_series_plot() {
    let dir = TempDir::new().unwrap();
    write(
        &dir,
        "sweep.conf",
        "guests = 4\ntables = 2\ne_values = 0.1, 0.4\ninstances_per_point = 6\n\
         complete_solver = oracle\nmaster_seed = 5\n",
    );
    let out = satkit(
        &["experiment", "--config", "sweep.conf", "--csv", "run1.csv", "--plot", "run.svg"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let out = satkit(
        &["experiment", "--config", "sweep.conf", "--csv", "run2.csv"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));

    let csv1 = fs::read_to_string(dir.path().join("run1.csv")).unwrap();
    let csv2 = fs::read_to_string(dir.path().join("run2.csv")).unwrap();
    assert_eq!(csv1, csv2, "equal configs must produce identical CSV bytes");
    let mut lines = csv1.lines();
    assert_eq!(
        lines.next(),
        Some("e,P_complete,P_walksat,unknown_complete,mean_rt_complete_ms,mean_rt_walksat_ms")
    );
    assert_eq!(lines.count(), 2, "one row per sweep point");

    let svg = fs::read_to_string(dir.path().join("run.svg")).unwrap();
    assert_eq!(svg.matches("<polyline").count(), 2);
    assert!(svg.contains(">complete</text>") && svg.contains(">walksat</text>"));
}

#[test]
fn experiment_without_csv_flag_prints_the_table_to_stdout() {
    let dir = TempDir::new().unwrap();
    write(
        &dir,
        "sweep.conf",
        "guests = 3\ntables = 2\ne_values = 0.2\ninstances_per_point = 4\n\
         complete_solver = oracle\nmaster_seed = 8\n",
    );
    let out = satkit(&["experiment", "--config", "sweep.conf"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("e,P_complete,P_walksat,"));
}

#[test]
fn experiment_rejects_bad_configs_with_exit_1() {
    let dir = TempDir::new().unwrap();
    write(&dir, "bad.conf", "guests = 4\nbogus_key = 1\n");
    let out = satkit(&["experiment", "--config", "bad.conf"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("config line 2"));
}
