use std::fs;
use std::path::PathBuf;
use std::process::Command;

use deltamap::reconstruct::maps_isomorphic;
use deltamap::text::{emit_graph, emit_map, parse_map};
use deltamap::fixtures;
use deltamap_cli::{run, Output, EXIT_INPUT, EXIT_OK, EXIT_TOO_LARGE, EXIT_VIOLATION};
use tempfile::TempDir;

fn cli(args: &[&str]) -> Output {
    run(std::iter::once("deltamap").chain(args.iter().copied()))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path: PathBuf = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn verify_all_on_torus() {
    let out = cli(&["verify-all", "torus1v"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.contains("F_gamma (2): {{}, {1,2}}"), "{}", out.stdout);
    assert!(out.stdout.contains("F_K (4): {{}, {1}, {2}, {1,2}}"), "{}", out.stdout);
    assert!(!out.stdout.contains("[FAIL]"));
}

#[test]
fn verify_all_passes_on_every_fixture() {
    for name in fixtures::NAMES {
        let out = cli(&["verify-all", name]);
        assert_eq!(out.code, EXIT_OK, "{name}\n{}", out.stdout);
    }
}

#[test]
fn check_delta_prints_counterexample() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "two.fam", "{1,2}\n{3,4}\n");
    let out = cli(&["check-delta", &path]);
    assert_eq!(out.code, EXIT_VIOLATION);
    assert!(out.stdout.contains("counterexample: F1={1,2}, F2={3,4}, x=1"), "{}", out.stdout);
}

#[test]
fn check_delta_on_family_and_map() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "fig.fam", "# comment\n{1,2}\n{}\n{1,2}\n");
    let out = cli(&["check-delta", &path]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.contains("2 feasible sets"), "{}", out.stdout);
    assert!(out.stderr.contains("line 4: duplicate set {1,2}"), "{}", out.stderr);

    let map = write(&dir, "t.map", &emit_map("t", &fixtures::get("torus1v").unwrap()));
    let out = cli(&["check-delta", &map]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("D_gamma: delta-matroid, 2 feasible sets"), "{}", out.stdout);

    let empty = write(&dir, "empty.fam", "\n");
    assert_eq!(cli(&["check-delta", &empty]).code, EXIT_VIOLATION);
}

#[test]
fn examples_list_and_show() {
    let out = cli(&["examples", "list"]);
    assert_eq!(out.code, EXIT_OK);
    for name in ["loop", "bridge", "crosscap", "theta", "torus1v", "k4sphere", "k5torus"] {
        assert!(out.stdout.lines().any(|l| l.starts_with(name)), "{name} missing");
    }
    let shown = cli(&["examples", "show", "k5torus"]);
    assert_eq!(shown.code, EXIT_OK);
    assert_eq!(parse_map(&shown.stdout).unwrap().map, fixtures::get("k5torus").unwrap());
    assert_eq!(cli(&["examples", "show", "nope"]).code, EXIT_INPUT);
}

#[test]
fn size_guard() {
    let out = cli(&["--max-edges", "9", "verify-all", "k5torus"]);
    assert_eq!(out.code, EXIT_TOO_LARGE);
    assert!(out.stderr.contains("10 edges"), "{}", out.stderr);
    assert_eq!(cli(&["feasible", "--variant", "k", "--max-edges", "9", "k5torus"]).code, EXIT_TOO_LARGE);
}

#[test]
fn parse_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let odd = write(&dir, "odd.map", "map odd\nflags 3\nR: 0-1\nG: 0-1\nB: 0-1\n");
    let out = cli(&["validate", &odd]);
    assert_eq!(out.code, EXIT_INPUT);

    let bad = write(&dir, "bad.map", "map bad\nflags 4\nR: 0-1 2-3\nG: 0-2 1~3\nB: 0-1 2-3\n");
    let out = cli(&["validate", &bad]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("line 4"), "{}", out.stderr);

    let fam = write(&dir, "bad.fam", "{1,2\n");
    assert_eq!(cli(&["check-delta", &fam]).code, EXIT_INPUT);
    assert_eq!(cli(&["euler", "/no/such/file"]).code, EXIT_INPUT);
    assert_eq!(cli(&["feasible", "torus1v"]).code, EXIT_INPUT);
}

#[test]
fn map_files_roundtrip() {
    let dir = TempDir::new().unwrap();
    for (name, map) in fixtures::all() {
        let text = emit_map(name, &map);
        let path = write(&dir, &format!("{name}.map"), &text);
        let out = cli(&["validate", &path]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        let euler = cli(&["euler", &path]);
        assert!(euler.stdout.contains(&format!("euler {}", map.euler_characteristic())));
        assert_eq!(emit_map(name, &parse_map(&text).unwrap().map), text);
    }
}

#[test]
fn feasible_and_matroids() {
    assert_eq!(cli(&["feasible", "--variant", "gamma", "theta"]).stdout, "{1}\n{2}\n{3}\n");
    assert_eq!(cli(&["feasible", "--variant", "gamma", "--color", "red", "theta"]).stdout, "{1,2}\n{1,3}\n{2,3}\n");
    let out = cli(&["matroids", "torus1v"]);
    assert_eq!(out.stdout, "lower rank 0: {{}}\nupper rank 2: {{1,2}}\n");
    assert_eq!(cli(&["orientable", "crosscap"]).stdout, "non-orientable\n");
}

#[test]
fn reconstruct_from_graph_files() {
    let dir = TempDir::new().unwrap();
    for name in ["k4sphere", "k5torus"] {
        let map = fixtures::get(name).unwrap();
        let g = write(&dir, "g.graph", &emit_graph("g", &map.underlying_graph()));
        let d = write(&dir, "d.graph", &emit_graph("d", &map.dual_graph()));
        let out = cli(&["reconstruct", "--graph", &g, "--dual", &d]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        assert!(maps_isomorphic(&parse_map(&out.stdout).unwrap().map, &map));
    }
    let bridge = fixtures::get("bridge").unwrap();
    let g = write(&dir, "g.graph", &emit_graph("g", &bridge.underlying_graph()));
    let d = write(&dir, "d.graph", &emit_graph("d", &bridge.dual_graph()));
    let out = cli(&["reconstruct", "--graph", &g, "--dual", &d]);
    assert_eq!(out.code, EXIT_VIOLATION);
    assert!(out.stderr.contains("ambiguous") || out.stderr.contains("same face"), "{}", out.stderr);
}

#[test]
fn random_is_seeded() {
    let a = cli(&["random", "--seed", "11", "--count", "3", "--max-edges", "5"]);
    let b = cli(&["--seed", "11", "random", "--count", "3", "--max-edges", "5"]);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout.matches("map random-").count(), 3);
    assert_ne!(a.stdout, cli(&["random", "--seed", "12", "--count", "3"]).stdout);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_deltamap");
    let status = Command::new(bin).args(["verify-all", "torus1v"]).output().unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&status.stdout).contains("[pass] rank-gap"));
    let status = Command::new(bin).args(["--max-edges", "3", "verify-all", "k4sphere"]).output().unwrap();
    assert_eq!(status.status.code(), Some(3));
}
