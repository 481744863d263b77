use kfree::families;
use kfree::graph::format::{parse_edge_list, parse_graph6, write_edge_list, write_graph6, write_vertex_list};
use kfree::harness::VerificationReport;
use kfree::invariants::longest_cycle;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use tempfile::TempDir;

fn kfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kfree")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_outputs_round_trip() {
    let out = kfree(&["gen", "petersen"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let g = parse_graph6(text.trim_end().as_bytes()).unwrap();
    assert_eq!(g.order(), 10);
    assert_eq!(write_graph6(&g) + "\n", text);

    let out = kfree(&["gen", "gfamily", "4", "1", "--format", "edge-list"]);
    let text = stdout(&out);
    let g = parse_edge_list(&text).unwrap();
    assert_eq!((g.order(), g.size()), (9, 20));
    assert_eq!(write_edge_list(&g), text);

    let out = kfree(&["gen", "kbipartite", "3", "4", "--format", "el"]);
    let g = parse_edge_list(&stdout(&out)).unwrap();
    assert_eq!(g, families::complete_bipartite(3, 4).unwrap());
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(code(&kfree(&["gen", "gfamily", "3", "1"])), 2);
    assert_eq!(code(&kfree(&["gen", "nosuch"])), 2);
    assert_eq!(code(&kfree(&["gen", "cycle", "2"])), 2);
}

#[test]
fn check_reports_invariants() {
    let dir = TempDir::new().unwrap();
    let petersen = write(&dir, "petersen.g6", &write_graph6(&families::petersen()));
    let out = kfree(&["check", s(&petersen), "--k", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("hamiltonian: no"));
    assert!(text.contains("1.4 hypotheses (k=3): order=yes min-degree=yes connectivity=yes freeness=yes independence=yes"));
    assert!(text.contains("exceptional: Petersen"));

    let k23 = write(&dir, "k23.el", &write_edge_list(&families::complete_bipartite(2, 3).unwrap()));
    let text = stdout(&kfree(&["check", s(&k23), "--k", "2"]));
    assert!(text.contains("toughness: 2/3"));
    assert!(text.contains("hamiltonian: no"));
    assert!(text.contains("1-tough: no"));

    let empty = write(&dir, "empty", "");
    assert_eq!(code(&kfree(&["check", s(&empty), "--k", "2"])), 2);
    let garbage = write(&dir, "bad.el", "3 1\n0 9\n");
    assert_eq!(code(&kfree(&["check", s(&garbage), "--k", "2"])), 2);
}

#[test]
fn format_override() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4", &write_edge_list(&families::cycle(4).unwrap()));
    assert_eq!(code(&kfree(&["check", s(&c4), "--k", "2", "--format", "edge-list"])), 0);
    assert_eq!(code(&kfree(&["check", s(&c4), "--k", "2", "--format", "graph6"])), 2);
}

#[test]
fn witness_exit_codes() {
    let dir = TempDir::new().unwrap();
    let k23 = write(&dir, "k23.el", &write_edge_list(&families::complete_bipartite(2, 3).unwrap()));
    let out = kfree(&["witness", s(&k23), "--k", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("independent set: 2 3 4"));
    assert!(text.contains("3 > 2.5"));

    let petersen = write(&dir, "petersen.g6", &write_graph6(&families::petersen()));
    assert_eq!(code(&kfree(&["witness", s(&petersen), "--k", "3"])), 4);
    let c6 = write(&dir, "c6.el", &write_edge_list(&families::cycle(6).unwrap()));
    assert_eq!(code(&kfree(&["witness", s(&c6), "--k", "2"])), 3);
    let p4 = write(&dir, "p4.el", &write_edge_list(&families::path(4).unwrap()));
    assert_eq!(code(&kfree(&["witness", s(&p4), "--k", "2"])), 5);
    assert_eq!(code(&kfree(&["witness", s(&k23), "--k", "2", "--mode", "path"])), 2);
}

#[test]
fn witness_path_mode() {
    let dir = TempDir::new().unwrap();
    let k35 = write(&dir, "k35.el", &write_edge_list(&families::complete_bipartite(3, 5).unwrap()));
    let out = kfree(&["witness", s(&k35), "--k", "2", "--mode", "path", "--a", "3", "--b", "4"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("independent set:"));
}

#[test]
fn extend_outcomes() {
    let dir = TempDir::new().unwrap();
    let k7 = write(&dir, "k7.el", &write_edge_list(&families::complete(7).unwrap()));
    let hexagon = write(&dir, "hexagon.cycle", "0 1 2 3 4 5\n");
    let out = kfree(&["extend", s(&k7), s(&hexagon), "--k", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("6 -> 7 vertices"));
    let longer: Vec<usize> = text.lines().nth(1).unwrap().split(' ').map(|t| t.parse().unwrap()).collect();
    assert_eq!(longer.len(), 7);

    let p = families::petersen();
    let petersen = write(&dir, "petersen.g6", &write_graph6(&p));
    let nine = longest_cycle(&p).unwrap().unwrap();
    assert_eq!(nine.len(), 9);
    let ninecycle = write(&dir, "ninecycle.cycle", &write_vertex_list(nine.vertices()));
    let out = kfree(&["extend", s(&petersen), s(&ninecycle), "--k", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("no extension"));

    let c5 = write(&dir, "c5.el", &write_edge_list(&families::cycle(5).unwrap()));
    let cycle = write(&dir, "c5.cycle", "0 1 2 3 4");
    let out = kfree(&["extend", s(&c5), s(&cycle), "--k", "2"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("no vertex lies outside"));

    let bogus = write(&dir, "bogus.cycle", "0 2 4");
    assert_eq!(code(&kfree(&["extend", s(&c5), s(&bogus), "--k", "2"])), 2);
}

#[test]
fn verify_exhaustive_and_sampled() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("r.json");
    let out = kfree(&["verify", "1.1", "--k", "2", "--n-max", "7", "--jobs", "2", "-o", s(&report)]);
    assert_eq!(code(&out), 0);
    let r = VerificationReport::load(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert!(r.counterexamples.is_empty());
    assert!(r.hypotheses_ok > 0);

    let run = || {
        let out = kfree(&["verify", "1.4", "--k", "3", "--sample", "100", "--seed", "7", "--with-petersen"]);
        assert_eq!(code(&out), 0);
        VerificationReport::load(&stdout(&out)).unwrap()
    };
    let (a, b) = (run(), run());
    assert_eq!(a.comparable(), b.comparable());
    assert_eq!(a.exceptions.len(), 1);
    assert_eq!(a.seed, Some(7));
}

#[test]
fn verify_validates_before_reading() {
    assert_eq!(code(&kfree(&["verify", "9.9", "--k", "2", "--n-max", "4"])), 2);
    assert_eq!(code(&kfree(&["verify", "1.1", "--k", "3", "--n-max", "4"])), 2);
    assert_eq!(code(&kfree(&["verify", "1.5", "--k", "3", "--n-max", "4"])), 2);
    assert_eq!(code(&kfree(&["verify", "1.4", "--k", "3", "--sample", "10"])), 2);
    assert_eq!(code(&kfree(&["verify", "1.4", "--k", "3", "--n-max", "11"])), 2);
    assert_eq!(code(&kfree(&["search", "1.4", "--k", "3", "--n-max", "4"])), 2);
    let out = kfree(&["verify", "9.9", "--k", "2", "--n-max", "4", "--include", "/nonexistent/graph"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown statement"));
}

#[test]
fn search_problem_excludes_petersen() {
    let out = kfree(&["search", "1.5", "--k", "3", "--n-max", "6", "--with-petersen"]);
    assert_eq!(code(&out), 0);
    let r = VerificationReport::load(&stdout(&out)).unwrap();
    assert_eq!(r.exceptions.len(), 1);
    assert!(r.counterexamples.is_empty());
}
