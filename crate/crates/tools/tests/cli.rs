use std::path::Path;
use std::process::{Command, Output};

fn sps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sps"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sps_with_workers(args: &[&str], workers: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sps"))
        .env("SPS_WORKERS", workers)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn seq_prints_the_two_step_witness() {
    let o = sps(&["seq", "--fixture", "S7", "--from", "a_l,t", "--to", "z_r,a_r"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[a_l,t] Swing [m,t] DownPersp [z_r,a_r]\n");
}

#[test]
fn seq_reports_none() {
    let o = sps(&["seq", "--fixture", "S7", "--from", "m,t", "--to", "a_l,t"]);
    assert_eq!(stdout(&o), "none\n");
    let o = sps(&[
        "seq",
        "--fixture",
        "N5",
        "--from",
        "u,i",
        "--to",
        "v,w",
        "--projectivity",
    ]);
    assert_eq!(stdout(&o), "[u,i] PrimeDown [v,w]\n");
}

#[test]
fn seq_from_a_saved_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("s7.json");
    let o = sps(&["export", "--fixture", "S7", "--out", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = sps(&[
        "seq",
        "--lattice",
        file.to_str().unwrap(),
        "--from",
        "a_l,t",
        "--to",
        "z_r,a_r",
    ]);
    assert_eq!(stdout(&o), "[a_l,t] Swing [m,t] DownPersp [z_r,a_r]\n");
}

#[test]
fn check_swing_passes_at_depth_two() {
    let o = sps(&["check", "--suite", "swing", "--forks", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let last = stdout(&o).lines().last().unwrap().to_string();
    assert!(last.contains(r#""passed":true"#), "{last}");
}

#[test]
fn check_lemmas_exits_one_on_violations() {
    // Depth 2 contains the lattice where three adjacent lower covers of the
    // top generate an S7 that skips a cover.
    let o = sps(&["check", "--suite", "lemmas", "--forks", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(r#""check":"adjacent_lower_covers_cover_preserving""#));
    let o = sps(&["check", "--suite", "lemmas", "--fixture", "S7"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn gen_writes_two_lattices_for_one_fork() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d");
    let o = sps(&["gen", "--forks", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let mut files: Vec<String> = std::fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    files.sort();
    assert_eq!(files, ["L000.json", "L001.json", "catalog.json"]);
    let s7 = sps_tools::load(out.join("L001.json")).unwrap();
    assert_eq!(s7, sps_core::fixture("S7").unwrap());
}

#[test]
fn usage_and_io_errors_exit_two() {
    assert_eq!(sps(&[]).status.code(), Some(2));
    assert_eq!(sps(&["check", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(
        sps(&["seq", "--fixture", "S7", "--from", "a_l,o", "--to", "m,t"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sps(&["stats", "--lattice", "/nonexistent/x.json"]).status.code(),
        Some(2)
    );
    assert_eq!(sps(&["stats", "--fixture", "Q9"]).status.code(), Some(2));
    let o = sps(&["export", "--fixture", "S7", "--lattice", "x.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn schema_errors_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    std::fs::write(
        &file,
        r#"{"n": 2, "labels": ["o", "t"], "upper_covers": [[1], []], "lower_covers": [[], []]}"#,
    )
    .unwrap();
    let o = sps(&["stats", "--lattice", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("schema error"));
}

#[test]
fn dot_export_has_one_edge_per_cover() {
    let o = sps(&["export", "--fixture", "C2xC3", "--format", "dot"]);
    let text = stdout(&o);
    let edges = text
        .lines()
        .filter(|l| l.contains("->") && !l.contains("invis"))
        .count();
    assert_eq!(edges, sps_core::fixture("C2xC3").unwrap().cover_count());
}

#[test]
fn output_is_independent_of_worker_count() {
    for args in [
        &["check", "--suite", "swing", "--forks", "3"][..],
        &["check", "--suite", "lemmas", "--forks", "3"][..],
        &["stats", "--forks", "2"][..],
    ] {
        let one = sps_with_workers(args, "1");
        let many = sps_with_workers(args, "4");
        assert_eq!(one.stdout, many.stdout, "{args:?}");
        assert_eq!(one.status.code(), many.status.code());
    }
}

#[test]
fn con_lists_ji_congruences() {
    let o = sps(&["con", "--fixture", "S7"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ji_congruences"].as_array().unwrap().len(), 3);
    assert!(Path::new(env!("CARGO_BIN_EXE_sps")).exists());
}
