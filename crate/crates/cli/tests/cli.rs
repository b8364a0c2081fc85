//! End-to-end tests of the symcfg binary: output formats, exit codes, and
//! the verdict -> check round trip.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symcfg"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin()
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn tmpdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("symcfg-cli-{name}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

/// Strips `#` comment lines (the manifest carries timing fields).
fn without_comments(text: &str) -> String {
    text.lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn generate_heawood_graph6() {
    let dir = tmpdir("generate");
    let out = run(&["generate", "7", "--out", "g7.g6"], &dir);
    assert!(out.status.success());
    let lines = fs::read_to_string(dir.join("g7.g6")).unwrap();
    let graphs: Vec<&str> = lines.lines().collect();
    assert_eq!(graphs.len(), 1);
    // Round-trips through the decoder as a cubic graph on 14 vertices.
    let g = symcfg::graph6::decode(graphs[0]).unwrap();
    assert_eq!(g.n(), 14);
    assert!((0..14).all(|u| g.degree(u) == 3));
    // Sidecar manifest exists.
    assert!(dir.join("g7.g6.manifest.json").exists());
    let summary = String::from_utf8_lossy(&out.stderr);
    assert!(summary.contains("1 graph classes"));
}

#[test]
fn generate_rejects_small_v() {
    let dir = tmpdir("generate-bad");
    let out = run(&["generate", "6"], &dir);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn usage_error_is_exit_2() {
    let dir = tmpdir("usage");
    let out = run(&["generate"], &dir);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["not-a-command"], &dir);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_10_matches_census_and_csv_roundtrips() {
    let dir = tmpdir("table");
    let out = run(&["table", "10", "--csv", "t.csv"], &dir);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("10         10       10       10      2      1      1      1      0      0"));
    let csv = fs::read_to_string(dir.join("t.csv")).unwrap();
    let rows = symcfg::enumerate::table::parse_csv(&csv).unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[3].counts(), [10, 10, 10, 2, 1, 1, 1, 0, 0]);
    // No ANSI escapes anywhere in the output.
    assert!(!text.contains('\u{1b}'));
}

#[test]
fn verdict_check_roundtrip_positive_and_negative() {
    let dir = tmpdir("verdict");
    assert!(run(&["construct", "fano", "--out", "fano.txt"], &dir)
        .status
        .success());
    let out = run(&["verdict", "fano.txt", "--out", "v.json"], &dir);
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("v.json")).unwrap()).unwrap();
    assert_eq!(doc["status"], "every_orientation");
    assert_eq!(doc["witness"]["kind"], "dominating_tree");
    assert!(doc["manifest"]["input_sha256"].as_array().is_some());
    let out = run(&["check", "v.json", "--config", "fano.txt"], &dir);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("verified"));
    // Tampered certificate fails with exit 4.
    let tampered = fs::read_to_string(dir.join("v.json"))
        .unwrap()
        .replacen("\"point_set\": [\n      0,", "\"point_set\": [\n      2,", 1);
    assert_ne!(tampered, fs::read_to_string(dir.join("v.json")).unwrap());
    fs::write(dir.join("bad.json"), tampered).unwrap();
    let out = run(&["check", "bad.json", "--config", "fano.txt"], &dir);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn stitched_verdict_is_no_orientation() {
    let dir = tmpdir("stitch");
    run(&["construct", "fano", "--out", "f.txt"], &dir);
    let out = run(
        &["construct", "stitch", "f.txt", "f.txt", "f.txt", "--out", "s.txt"],
        &dir,
    );
    assert!(out.status.success());
    let out = run(&["verdict", "s.txt", "--out", "v.json"], &dir);
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("v.json")).unwrap()).unwrap();
    assert_eq!(doc["status"], "no_orientation");
    assert_eq!(doc["witness"]["kind"], "ring_cut");
    let out = run(&["check", "v.json", "--config", "s.txt"], &dir);
    assert!(out.status.success());
}

#[test]
fn verdict_rejects_even_order() {
    let dir = tmpdir("even");
    // The unique 8_3 (cyclic {0,1,3} over Z_8).
    let mut text = String::from("8\n");
    for m in 0..8 {
        let mut b = [m, (m + 1) % 8, (m + 3) % 8];
        b.sort_unstable();
        text.push_str(&format!("{} {} {}\n", b[0], b[1], b[2]));
    }
    fs::write(dir.join("oct.txt"), text).unwrap();
    let out = run(&["verdict", "oct.txt"], &dir);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn construct_outputs_reparse() {
    let dir = tmpdir("construct");
    for args in [
        vec!["construct", "fano", "--out", "a.txt"],
        vec!["construct", "pappus", "--out", "b.txt"],
        vec!["construct", "cyclic", "13", "--out", "c.txt"],
    ] {
        assert!(run(&args, &dir).status.success());
    }
    run(
        &[
            "construct", "martinetti", "c.txt", "--x", "0,1,3", "--y", "4,5,7", "--out", "m.txt",
        ],
        &dir,
    );
    for f in ["a.txt", "b.txt", "c.txt"] {
        let text = fs::read_to_string(dir.join(f)).unwrap();
        assert!(symcfg::config::Configuration::parse_text(&text).is_ok());
    }
    // cyclic 13 with blocks {0,1,3} and {4,5,7} has pair {0,4} uncovered.
    let m = fs::read_to_string(dir.join("m.txt")).unwrap();
    let child = symcfg::config::Configuration::parse_text(&m).unwrap();
    assert_eq!(child.v(), 14);
}

#[test]
fn construct_outputs_deterministic_modulo_manifest() {
    let dir = tmpdir("determinism");
    run(&["construct", "cyclic", "9", "--out", "one.txt"], &dir);
    run(&["construct", "cyclic", "9", "--out", "two.txt"], &dir);
    assert_eq!(
        without_comments(&fs::read_to_string(dir.join("one.txt")).unwrap()),
        without_comments(&fs::read_to_string(dir.join("two.txt")).unwrap())
    );
}

#[test]
fn draw_produces_deterministic_svg() {
    let dir = tmpdir("draw");
    run(&["construct", "fano", "--out", "f.txt"], &dir);
    assert!(run(&["draw", "f.txt", "one.svg"], &dir).status.success());
    assert!(run(&["draw", "f.txt", "two.svg"], &dir).status.success());
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.starts_with("<!-- manifest:"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let one = fs::read_to_string(dir.join("one.svg")).unwrap();
    assert_eq!(strip(&one), strip(&fs::read_to_string(dir.join("two.svg")).unwrap()));
    assert_eq!(one.matches("<circle").count(), 14);
    // Stitched input under auto layout goes radial and still renders all 42
    // vertices.
    run(
        &["construct", "stitch", "f.txt", "f.txt", "f.txt", "--out", "s.txt"],
        &dir,
    );
    assert!(run(&["draw", "s.txt", "s.svg"], &dir).status.success());
    let svg = fs::read_to_string(dir.join("s.svg")).unwrap();
    assert_eq!(svg.matches("<circle").count(), 42);
}

#[test]
fn draw_face_trace_annotation_lists_single_face() {
    let dir = tmpdir("draw-rot");
    run(&["construct", "cyclic", "9", "--out", "c.txt"], &dir);
    // Build a single-face witness through the library and feed it back in.
    let text = fs::read_to_string(dir.join("c.txt")).unwrap();
    let cfg = symcfg::config::Configuration::parse_text(&text).unwrap();
    let levi = cfg.levi_graph();
    let rot = symcfg::embed::find_single_face_rotation(&levi, &vec![false; 9], 19)
        .unwrap()
        .unwrap();
    let doc = symcfg::embed::single_face_doc(&cfg, &rot);
    fs::write(
        dir.join("rot.json"),
        serde_json::to_string(&doc).unwrap(),
    )
    .unwrap();
    let out = run(
        &["draw", "c.txt", "c.svg", "--rotation", "rot.json"],
        &dir,
    );
    assert!(out.status.success());
    let svg = fs::read_to_string(dir.join("c.svg")).unwrap();
    assert!(svg.contains("face trace: 1 face(s), genus 5"));
}

#[test]
fn frontier_emit_and_resume() {
    let dir = tmpdir("frontier");
    let out = run(
        &["generate", "9", "--emit-frontier", "front.json", "--frontier-depth", "3"],
        &dir,
    );
    assert!(out.status.success());
    let out = run(&["generate", "9", "--resume", "front.json", "--out", "g.g6"], &dir);
    assert!(out.status.success());
    let direct = run(&["generate", "9", "--out", "h.g6"], &dir);
    assert!(direct.status.success());
    assert_eq!(
        fs::read_to_string(dir.join("g.g6")).unwrap(),
        fs::read_to_string(dir.join("h.g6")).unwrap()
    );
    let lines = fs::read_to_string(dir.join("g.g6")).unwrap();
    assert_eq!(lines.lines().count(), 3);
}

#[test]
fn generate_output_independent_of_jobs() {
    let dir = tmpdir("jobs");
    assert!(run(&["generate", "9", "--jobs", "1", "--out", "one.g6"], &dir)
        .status
        .success());
    assert!(run(&["generate", "9", "--jobs", "4", "--out", "four.g6"], &dir)
        .status
        .success());
    assert_eq!(
        fs::read_to_string(dir.join("one.g6")).unwrap(),
        fs::read_to_string(dir.join("four.g6")).unwrap()
    );
}

#[test]
fn classify_reports_fano_group() {
    let dir = tmpdir("classify");
    run(&["construct", "fano", "--out", "f.txt"], &dir);
    let out = run(&["classify", "f.txt"], &dir);
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(doc["aut"]["order"], "168");
    assert_eq!(doc["aut"]["full_order"], "336");
    assert_eq!(doc["predicates"]["self_polar"], true);
    assert_eq!(doc["predicates"]["blocking_set_free"], true);
}
