use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use coringlab_core::workbench::gallery::gallery;

fn coringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coringlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_gallery(dir: &Path) {
    let o = coringlab(&["gallery", dir.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn gallery_files_match_the_library() {
    let dir = tempfile::tempdir().unwrap();
    write_gallery(dir.path());
    for g in gallery().unwrap() {
        let on_disk = fs::read_to_string(dir.path().join(g.file_name())).unwrap();
        assert_eq!(on_disk, g.text(), "{}", g.name);
    }
}

#[test]
fn validate_passes_on_the_gallery() {
    let dir = tempfile::tempdir().unwrap();
    write_gallery(dir.path());
    for g in gallery().unwrap() {
        let o = coringlab(&["validate", &path(dir.path(), &g.file_name())]);
        let out = stdout(&o);
        assert_eq!(o.status.code(), Some(0), "{}\n{out}", g.name);
        assert!(out.starts_with("# coringlab "));
        assert!(out.contains("# input sha256:"));
        assert!(!out.contains("\nFAIL "));
    }
}

#[test]
fn broken_coassociativity_names_the_basis_element() {
    let dir = tempfile::tempdir().unwrap();
    write_gallery(dir.path());
    let text = fs::read_to_string(dir.path().join("grouplike.model")).unwrap();
    let broken = text.replace("delta 1 = 1,1:1", "delta 1 = 0,1:1 + 1,1:1");
    assert_ne!(broken, text);
    let file = path(dir.path(), "broken.model");
    fs::write(&file, broken).unwrap();
    let o = coringlab(&["validate", &file]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(1));
    let line = out.lines().find(|l| l.starts_with("FAIL coring G")).expect(&out);
    assert!(line.contains("coassociativity fails at c_1"), "{line}");
}

#[test]
fn parse_errors_are_fail_lines() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "bad.model");
    fs::write(&file, "field p=4\n").unwrap();
    let o = coringlab(&["validate", &file]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL parse line 1:"));
}

#[test]
fn usage_and_io_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    write_gallery(dir.path());
    let g = path(dir.path(), "grouplike.model");
    assert_eq!(coringlab(&["verify", &g, "no-such-suite"]).status.code(), Some(2));
    assert_eq!(coringlab(&["validate", &path(dir.path(), "missing.model")]).status.code(), Some(2));
    assert_eq!(coringlab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(coringlab(&["verify", &g, "axioms", "--trials", "many"]).status.code(), Some(2));
}

#[test]
fn out_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    write_gallery(dir.path());
    let g = path(dir.path(), "counit.model");
    let report = path(dir.path(), "report.txt");
    let o = coringlab(&["verify", &g, "axioms", "--trials", "3", "--out", &report]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = fs::read_to_string(&report).unwrap();
    assert!(text.contains("# command: verify axioms --trials 3 --seed 0 --max-dim 3"));
    assert!(text.trim_end().lines().last().unwrap().starts_with("# summary: "));
}

#[test]
fn compute_reports_results_and_refusals() {
    let dir = tempfile::tempdir().unwrap();
    write_gallery(dir.path());
    let o = coringlab(&["compute", &path(dir.path(), "grouplike.model"), "cotensor", "M1", "L"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS compute cotensor M1 L dim 3 in M (x) N of dim 6"));
    let o = coringlab(&["compute", &path(dir.path(), "base_change.model"), "coind", "base-change-F4", "N0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL compute coind base-change-F4 N0 not compatible"));
}
