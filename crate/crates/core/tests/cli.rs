use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bidisk::elliptic::KODAIRA_TABLE;

fn bidisk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bidisk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn example_jobs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/jobs.toml")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn example_file_is_deterministic() {
    let jobs = example_jobs();
    let a = bidisk(&["run", jobs.to_str().unwrap()]);
    let b = bidisk(&["run", jobs.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let c = bidisk(&["run", jobs.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(std::fs::read(&out).unwrap(), a.stdout);
}

#[test]
fn example_file_covers_every_kind() {
    let src = std::fs::read_to_string(example_jobs()).unwrap();
    let jobs = bidisk::cli::parse_jobs(&src).unwrap();
    for kind in [
        "classify",
        "tensor",
        "blowup",
        "h0",
        "elliptic",
        "product",
        "weierstrass",
    ] {
        assert!(jobs.iter().any(|j| j.spec.kind() == kind), "{kind}");
    }
    let report = bidisk::cli::run_all(&jobs);
    let verdicts: Vec<_> = report
        .jobs
        .iter()
        .take(4)
        .map(|j| j.verdict.clone().unwrap())
        .collect();
    assert_eq!(verdicts, ["Bidisk", "Quadric", "Ball", "NotCovered"]);
    let h0 = report.jobs.iter().find(|j| j.id == "rational-n3").unwrap();
    assert_eq!(h0.result["value"], 0);
}

#[test]
fn empty_job_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.toml");
    std::fs::write(&path, "# nothing to do\n").unwrap();
    let o = bidisk(&["run", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\n  \"jobs\": []\n}\n");
}

#[test]
fn parse_errors_exit_2_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(&path, "[[job]]\nid = \"a\"\nkind = \"h0\"\nn = 1\na = 1\nb = 1\n\n[[job]]\nid = \"b\"\nkind = \"teleport\"\n").unwrap();
    let o = bidisk(&["run", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 8"), "{}", stderr(&o));
    assert_eq!(
        bidisk(&["run", "/no/such/jobs.toml"]).status.code(),
        Some(2)
    );
    assert_eq!(bidisk(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn job_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("jobs.toml");
    std::fs::write(
        &path,
        "[[job]]\nid = \"w\"\nkind = \"weierstrass\"\nh = 0\n",
    )
    .unwrap();
    let o = bidisk(&["run", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("\"status\": \"error\""));
}

#[test]
fn version_flag() {
    let o = bidisk(&["--version"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn selftest_clean_build() {
    let o = bidisk(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn selftest_injected_fault() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kodaira.tbl");
    let corrupted = KODAIRA_TABLE.replace("II* 1 2 2 3 3 4 4 5 6", "II* 2 2 2 3 3 4 4 5 6");
    assert_ne!(corrupted, KODAIRA_TABLE);
    std::fs::write(&path, corrupted).unwrap();
    let o = bidisk(&["selftest", "--fixture", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("FAIL multiple_fibre_claim_check"),
        "{}",
        stdout(&o)
    );
    assert!(stderr(&o).contains("multiple_fibre_claim_check"));
}

#[test]
fn selftest_missing_fixture() {
    let o = bidisk(&["selftest", "--fixture", "/no/such/kodaira.tbl"]);
    assert_ne!(o.status.code(), Some(0));
    assert!(
        stderr(&o).contains("/no/such/kodaira.tbl"),
        "{}",
        stderr(&o)
    );
}
