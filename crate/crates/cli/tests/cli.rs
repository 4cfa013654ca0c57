use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use qbundle::report::{Report, Status};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qbundle"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(text: &str, suffix: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn normal_form_of_disc_word() {
    let disc = data("disc.pres");
    let o = run(&["nf", disc.to_str().unwrap(), "--expr", "xs*xs*x"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "p^2*x*xs*xs + (1 - p^2)*xs");
}

#[test]
fn normal_form_with_specialized_parameter() {
    let disc = data("disc.pres");
    let o = run(&["nf", disc.to_str().unwrap(), "--expr", "xs*x", "--params", "p=1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(1/2)*x*xs + (1/2)");
}

#[test]
fn monopole_json_report_passes_and_round_trips() {
    let o = run(&["verify", "monopole", "--report", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert!(v["timing"]["elapsed_ms"].is_u64());
    let rep: Report = serde_json::from_value(v["report"].clone()).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.find("F_1(alpha)").unwrap().status, Status::Pass);
    let again: Report = serde_json::from_str(&serde_json::to_string(&rep).unwrap()).unwrap();
    assert_eq!(again, rep);
}

#[test]
fn identical_invocations_agree() {
    let a = run(&["verify", "monopole", "--degree-bound", "2"]);
    let b = run(&["verify", "monopole", "--degree-bound", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn degree_bound_zero_skips() {
    let o = run(&["verify", "monopole", "--degree-bound", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[skipped]"));
}

#[test]
fn winding_two_and_rational_parameters() {
    let o = run(&["verify", "monopole", "--n", "2", "--degree-bound", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "monopole", "--params", "p=1/2,q=1/3,nu=2/3", "--degree-bound", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("params = p=1/2,q=1/3,nu=2/3"));
}

#[test]
fn usage_and_config_errors_exit_two() {
    assert_eq!(run(&["verify", "monopole", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "monopole", "--params", "p=3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "monopole", "--params", "p"]).status.code(), Some(2));
    assert_eq!(run(&["nf", "/nonexistent.pres", "--expr", "x"]).status.code(), Some(2));
    let bad = temp_file("[generators]\nx 0\n[relations]\nx*y\n", ".pres");
    let o = run(&["verify", "presentation", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}

#[test]
fn presentation_and_hopf_files_verify() {
    let calc = data("disc_calculus.pres");
    let o = run(&["verify", "presentation", calc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let hopf = data("u1.hopf");
    let o = run(&["verify", "hopf", hopf.to_str().unwrap(), "--report", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn failing_checks_exit_one() {
    let text = std::fs::read_to_string(data("u1.hopf")).unwrap();
    let bad = text.replace("[antipode]\nalpha = alphas\nalphas = alpha", "[antipode]\nalpha = alpha\nalphas = alphas");
    let f = temp_file(&bad, ".hopf");
    let o = run(&["verify", "hopf", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    let nonconfluent = temp_file("[generators]\nx 0\ny 0\n[relations]\nx*y - x\ny*x - y\n", ".pres");
    let o = run(&["verify", "presentation", nonconfluent.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("x*y*x"));
}

#[test]
fn basis_lists_words() {
    let disc = data("disc.pres");
    let o = run(&["basis", disc.to_str().unwrap(), "--degree", "0", "--degree-bound", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let words: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(words.len(), 6, "{words:?}");
    assert!(words.contains(&"1".to_string()) && words.contains(&"x*xs".to_string()));
}
