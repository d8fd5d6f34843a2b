//! End-to-end checks of the command-line interface: output contracts, exit
//! codes, the report files, and the timeout environment variable.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stanley-lab"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn classify_reports_all_three_properties() {
    let output = bin()
        .args(["classify"])
        .arg(data("triangle.ideal"))
        .output()
        .unwrap();
    assert!(output.status.success(), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("ideal: (x1*x2, x1*x3, x2*x3) in K[x1,x2,x3]"));
    assert!(text.contains("minimal generators: 3"));
    assert!(text.contains("polymatroidal: yes"));
    assert!(text.contains("weakly polymatroidal: yes"));
    assert!(text.contains("weakly polymatroidal under some variable order: yes (as given)"));
    assert!(text.contains("linear quotients in the stored order: yes"));
}

#[test]
fn classify_searches_variable_orders_on_failure() {
    let output = bin()
        .args(["classify"])
        .arg(data("not-weakly-polymatroidal.ideal"))
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("weakly polymatroidal: no"));
    // (x1^2, x2^2) stays out of class under both labelings.
    assert!(text.contains("weakly polymatroidal under some variable order: no"));
}

#[test]
fn depth_formula_and_oracle_agree_on_output() {
    let output = bin()
        .args(["depth"])
        .arg(data("triangle.ideal"))
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("pd(S/I) = 2"));
    assert!(text.contains("depth(S/I) = 1"));
    assert!(text.contains("method: linear-quotients formula"));

    let output = bin()
        .args(["depth", "--char", "2"])
        .arg(data("triangle.ideal"))
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("betti numbers over characteristic 2:"));
    assert!(text.contains("b_0 = 1:"));
    assert!(text.contains("pd(S/I) = 2"));
    assert!(text.contains("depth(S/I) = 1"));
}

#[test]
fn sdepth_exact_and_constructed_modes() {
    let output = bin()
        .args(["sdepth"])
        .arg(data("triangle.ideal"))
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("sdepth(S/I) = 1 (exact)"));
    assert!(text.contains("decomposition (3 spaces):"));
    // One line per space: exponent row, a pipe, then the free variables.
    let lines: Vec<&str> = text
        .lines()
        .filter(|line| line.contains(" | ") || line.ends_with(" |"))
        .collect();
    assert_eq!(lines.len(), 3, "{text}");
    assert!(lines.iter().all(|line| {
        let (exps, vars) = line.split_once(" |").unwrap();
        exps.split(' ').count() == 3
            && vars
                .split_whitespace()
                .all(|v| v.starts_with('x'))
    }));

    let output = bin()
        .args(["sdepth", "--construct"])
        .arg(data("triangle.ideal"))
        .output()
        .unwrap();
    assert!(output.status.success());
    assert!(stdout(&output).contains("sdepth(S/I) >= 1 (constructed)"));
}

#[test]
fn decompose_prints_trace_and_exact_comparison() {
    let output = bin()
        .args(["decompose", "--trace", "--verify-exact"])
        .arg(data("triangle.ideal"))
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("constructed decomposition (3 spaces), depth 1:"));
    assert!(text.contains("depth(S/I) = 1; the construction meets it: yes"));
    assert!(text.contains("trace:"));
    assert!(text.contains("split on x1"));
    assert!(text.contains("exact sdepth(S/I) = 1"));
}

#[test]
fn nonminimal_input_notes_dropped_generators() {
    let output = bin()
        .args(["classify"])
        .arg(data("nonminimal.ideal"))
        .output()
        .unwrap();
    assert!(output.status.success());
    assert!(stderr(&output).contains("dropped 2 redundant generators"));
    assert!(stdout(&output).contains("minimal generators: 3"));
}

#[test]
fn decompose_refuses_out_of_class_input() {
    let output = bin()
        .args(["decompose"])
        .arg(data("not-weakly-polymatroidal.ideal"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    let text = stderr(&output);
    assert!(text.contains("error:"), "{text}");
    assert!(text.contains("not weakly polymatroidal"), "{text}");
}

#[test]
fn unreadable_file_is_an_operational_error() {
    let output = bin()
        .args(["classify", "/nonexistent/missing.ideal"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("error:"));
}

#[test]
fn suite_writes_reports_and_succeeds() {
    let out_dir = tempfile::tempdir().unwrap();
    let output = bin()
        .args(["suite", "--spec"])
        .arg(data("desk.spec"))
        .args(["--out"])
        .arg(out_dir.path())
        .args(["--seed", "9", "--jobs", "2"])
        .output()
        .unwrap();
    assert!(output.status.success(), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("corpus:"));
    assert!(text.contains("(seed 9)"));
    assert!(text.contains("summary:"));
    assert!(text.contains("0 conjecture violations"));

    let csv = std::fs::read_to_string(out_dir.path().join("report.csv")).unwrap();
    assert!(csv.starts_with("id,family,n,t,weakly_polymatroidal"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.path().join("report.json")).unwrap())
            .unwrap();
    assert_eq!(json["summary"]["all_passed"], serde_json::json!(true));
    assert_eq!(
        json["rows"].as_array().unwrap().len() + 1,
        csv.lines().count()
    );
}

#[test]
fn suite_rows_do_not_depend_on_thread_count() {
    let run = |jobs: &str| {
        let out_dir = tempfile::tempdir().unwrap();
        let output = bin()
            .args(["suite", "--spec"])
            .arg(data("desk.spec"))
            .args(["--out"])
            .arg(out_dir.path())
            .args(["--seed", "3", "--jobs", jobs])
            .output()
            .unwrap();
        assert!(output.status.success());
        // Strip the wall-clock column before comparing.
        std::fs::read_to_string(out_dir.path().join("report.csv"))
            .unwrap()
            .lines()
            .map(|line| line.rsplit_once(',').unwrap().0.to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn suite_reports_errors_with_exit_code_two() {
    // Degrees this large overflow the decomposer's recursion budget, so the
    // sweep must finish with error rows and a failing exit code.
    let spec_dir = tempfile::tempdir().unwrap();
    let spec_path = spec_dir.path().join("huge.spec");
    std::fs::write(
        &spec_path,
        "seed = 1\nmax-vars = 2\nmax-gens = 4\nfamily = principal n=2 max-degree=12000 count=3\n",
    )
    .unwrap();
    let out_dir = tempfile::tempdir().unwrap();
    let output = bin()
        .args(["suite", "--spec"])
        .arg(&spec_path)
        .args(["--out"])
        .arg(out_dir.path())
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2), "{}", stdout(&output));
    let text = stdout(&output);
    assert!(text.contains("error"), "{text}");
}

#[test]
fn timeout_variable_is_validated_and_applied() {
    let output = bin()
        .args(["sdepth"])
        .arg(data("triangle.ideal"))
        .env("STANLEY_LAB_TIMEOUT", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("STANLEY_LAB_TIMEOUT"));

    let output = bin()
        .args(["sdepth"])
        .arg(data("triangle.ideal"))
        .env("STANLEY_LAB_TIMEOUT", "0.000000001")
        .output()
        .unwrap();
    assert!(output.status.success());
    assert!(stdout(&output).contains("lower bound; search timed out"));
}
