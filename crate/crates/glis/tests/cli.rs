//! End-to-end runs of the `glis` binary: output shapes, exit codes, and
//! piping artifacts between subcommands through files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const CYCLE4_3COLORS: &str = "p cvs 4 4 3\nv 0 1\nv 1 2\nv 2 3\nv 3 2\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n";
const CYCLE4_2COLORS: &str = "p cvs 4 4 2\nv 0 1\nv 1 2\nv 2 1\nv 3 2\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n";
const MONO_TRIANGLE: &str = "p cvs 3 3 2\nv 0 1\nv 1 1\nv 2 2\ne 0 1\ne 0 2\ne 1 2\n";

fn glis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glis"))
        .args(args)
        .output()
        .expect("run glis binary")
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(str::to_owned)
        .collect()
}

#[test]
fn vs_reports_value_witness_and_metrics() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.cg", CYCLE4_3COLORS);
    let out = glis(&["vs", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "vs 2");
    assert!(lines[1].starts_with("layout "));
    assert_eq!(lines[2], "pathwidth 2");
    assert_eq!(lines[3], "node-search-number 3");
    assert_eq!(lines[4], "gate-matrix-cost 3");
}

#[test]
fn cvs_yes_and_no_with_reasons() {
    let dir = tempfile::tempdir().unwrap();

    let yes = write(dir.path(), "yes.cg", CYCLE4_3COLORS);
    let out = glis(&["cvs", yes.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "YES");
    assert!(lines[1].starts_with("layout "));

    let no = write(dir.path(), "no.cg", CYCLE4_2COLORS);
    let out = glis(&["cvs", no.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_lines(&out), vec!["NO", "reason no-colored-layout"]);

    let mono = write(dir.path(), "mono.cg", MONO_TRIANGLE);
    let out = glis(&["cvs", mono.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_lines(&out), vec!["NO", "reason monochromatic-edge"]);
}

#[test]
fn icg_yes_writes_model_and_verify_accepts_it() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.cg", CYCLE4_3COLORS);
    let model_path = dir.path().join("cert.ivm");

    let out = glis(&["icg", g.to_str().unwrap(), "-o", model_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "YES");
    assert_eq!(lines[1], "added-edges 1");
    assert_eq!(lines[2], "a 0 2");
    assert_eq!(lines[3], "p ivm 4");

    let out = glis(&["verify", g.to_str().unwrap(), model_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines.last().unwrap(), "VALID");
    assert!(lines.iter().all(|l| !l.contains("FAIL")));
}

#[test]
fn icg_no_instance() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.cg", CYCLE4_2COLORS);
    let out = glis(&["icg", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_lines(&out), vec!["NO"]);
}

#[test]
fn verify_rejects_bad_model() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.cg", CYCLE4_3COLORS);
    // Pairwise disjoint intervals: covers no input edge.
    let m = write(dir.path(), "bad.ivm", "p ivm 4\ni 0 2 3\ni 1 4 5\ni 2 6 7\ni 3 8 9\n");
    let out = glis(&["verify", g.to_str().unwrap(), m.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let lines = stdout_lines(&out);
    assert!(lines.contains(&"check edge-coverage FAIL".to_string()));
    assert_eq!(lines.last().unwrap(), "INVALID");
}

#[test]
fn layout_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.cg", CYCLE4_3COLORS);

    let out = glis(&["cvs", g.to_str().unwrap()]);
    let witness = stdout_lines(&out)[1].strip_prefix("layout ").unwrap().to_owned();
    let layout = write(dir.path(), "w.layout", &format!("{witness}\n"));

    let out = glis(&["to-intervals", g.to_str().unwrap(), layout.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let model = write(dir.path(), "m.ivm", &String::from_utf8(out.stdout).unwrap());

    let out = glis(&["to-layout", model.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), format!("{witness}\n"));
}

#[test]
fn to_intervals_rejects_uncolored_layout() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.cg", CYCLE4_2COLORS);
    let layout = write(dir.path(), "l.layout", "0 1 2 3\n");
    let out = glis(&["to-intervals", g.to_str().unwrap(), layout.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("not a colored layout"));
}

#[test]
fn pathdecomp_prints_bags_and_width() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p3.cg", "p cvs 3 2 2\nv 0 1\nv 1 2\nv 2 1\ne 0 1\ne 1 2\n");
    let layout = write(dir.path(), "l.layout", "0 1 2\n");
    let out = glis(&["pathdecomp", g.to_str().unwrap(), layout.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_lines(&out), vec!["bags 3", "b 0", "b 0 1", "b 1 2", "width 1"]);
}

#[test]
fn generators_emit_parseable_graphs_and_are_deterministic() {
    let a = glis(&["gen-yes", "--n", "9", "--k", "3", "--keep-prob", "0.6", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    let b = glis(&["gen-yes", "--n", "9", "--k", "3", "--keep-prob", "0.6", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);

    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "gen.cg", &String::from_utf8(a.stdout).unwrap());
    let out = glis(&["icg", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "planted instance must be yes");

    let r = glis(&["gen-rand", "--n", "5", "--k", "2", "--p", "0", "--seed", "3"]);
    assert_eq!(r.status.code(), Some(0));
    assert!(String::from_utf8(r.stdout).unwrap().starts_with("p cvs 5 0 2\n"));
}

#[test]
fn oracle_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.cg", CYCLE4_3COLORS);
    let out = glis(&["oracle", "vs", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_lines(&out), vec!["vs 2"]);

    let out = glis(&["oracle", "cvs", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_lines(&out)[0], "YES");

    let no = write(dir.path(), "no.cg", CYCLE4_2COLORS);
    let out = glis(&["oracle", "icg", no.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_lines(&out), vec!["NO"]);
}

#[test]
fn exit_codes_for_errors() {
    let dir = tempfile::tempdir().unwrap();

    // Parse error -> 2, with a line number on stderr.
    let bad = write(dir.path(), "bad.cg", "p cvs 2 1 2\nv 0 1\nv 1 2\ne 0 0\n");
    let out = glis(&["vs", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 4"));

    // Missing file -> 2.
    let out = glis(&["vs", dir.path().join("nope.cg").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // Unknown subcommand -> 2 (clap's own usage error).
    let out = glis(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    // Exact-mode cap -> 3.
    let mut big = String::from("p cvs 27 0 1\n");
    for v in 0..27 {
        big.push_str(&format!("v {v} 1\n"));
    }
    let big = write(dir.path(), "big.cg", &big);
    let out = glis(&["vs", big.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    // Oracle caps are also size errors -> 3.
    let mut mid = String::from("p cvs 10 0 1\n");
    for v in 0..10 {
        mid.push_str(&format!("v {v} 1\n"));
    }
    let mid = write(dir.path(), "mid.cg", &mid);
    let out = glis(&["oracle", "vs", mid.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn empty_graph_is_trivially_yes() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "empty.cg", "p cvs 0 0 1\n");
    let out = glis(&["cvs", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_lines(&out)[0], "YES");

    let out = glis(&["icg", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}
