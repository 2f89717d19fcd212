use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;
use ufa_core::automata::{equivalent, is_unambiguous, Nfa};
use ufa_core::format::{parse_automaton, parse_graph};
use ufa_core::graph::Graph;

const A_PLUS: &str = "nfa 2\nalphabet a\ninitial 0\nfinal 1\ntrans 0 a 1\ntrans 1 a 1\n";
const A_STAR: &str = "nfa 1\nalphabet a\ninitial 0\nfinal 0\ntrans 0 a 0\n";
const TWO_LOOPS: &str = "nfa 2\nalphabet a\ninitial 0 1\nfinal 0 1\ntrans 0 a 0\ntrans 1 a 1\n";
const PATH3: &str = "graph 3\nedge 0 1\nedge 1 2\n";

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn ufa(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ufa").chain(args.iter().copied());
    let code = ufa_cli::run(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn fixture(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn complement_a_plus_accepts_only_the_empty_word() {
    let dir = TempDir::new().unwrap();
    let input = fixture(&dir, "a_plus.nfa", A_PLUS);
    let output = dir.path().join("out.nfa");
    let r = ufa(&["complement", s(&input), "--output", s(&output)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, "n=2 k=2 l=2 chosen=fwd states=2 bound_sq=12\n");
    let c = parse_automaton(&fs::read_to_string(&output).unwrap()).unwrap();
    let eps = Nfa::from_labels::<&str>(1, &["a"], &[], &[0], &[0]).unwrap();
    assert_eq!(equivalent(&c, &eps, 100).unwrap(), None);
}

#[test]
fn complement_without_output_prints_the_automaton() {
    let dir = TempDir::new().unwrap();
    let input = fixture(&dir, "a_star.nfa", A_STAR);
    let r = ufa(&["complement", s(&input)]);
    assert_eq!(r.code, 0);
    let (summary, body) = r.stdout.split_once('\n').unwrap();
    assert_eq!(summary, "n=1 k=1 l=1 chosen=fwd states=1 bound_sq=4");
    let c = parse_automaton(body).unwrap();
    assert!((0..6).all(|len| !c.accepts_by_index(&vec![0; len])));
}

#[test]
fn complement_rejects_ambiguous_input() {
    let dir = TempDir::new().unwrap();
    let input = fixture(&dir, "loops.nfa", TWO_LOOPS);
    let r = ufa(&["complement", s(&input)]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.is_empty());
    assert!(r.stderr.contains("witness []"), "{}", r.stderr);
}

#[test]
fn cap_exceeded_on_both_sides_exits_3() {
    let dir = TempDir::new().unwrap();
    let input = fixture(&dir, "a_plus.nfa", A_PLUS);
    let r = ufa(&["--cap", "1", "complement", s(&input)]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("state limit exceeded"));
}

#[test]
fn determinize_both_directions() {
    let dir = TempDir::new().unwrap();
    let input = fixture(&dir, "a_plus.nfa", A_PLUS);
    let fwd = ufa(&["determinize", s(&input), "--direction", "fwd"]);
    assert_eq!(fwd.code, 0);
    assert!(fwd.stdout.starts_with("direction=fwd states=2 marked=1\n"));
    let bwd = ufa(&["determinize", s(&input), "--direction", "bwd"]);
    assert!(bwd.stdout.starts_with("direction=bwd states=2 marked=1\n"));
    let body = bwd.stdout.split_once('\n').unwrap().1;
    let b = parse_automaton(body).unwrap();
    let a = parse_automaton(A_PLUS).unwrap();
    assert_eq!(equivalent(&a, &b, 100).unwrap(), None);
    assert_eq!(
        ufa(&["determinize", s(&input), "--direction", "up"]).code,
        2
    );
}

#[test]
fn check_unambiguous_reports_witness() {
    let dir = TempDir::new().unwrap();
    let ok = fixture(&dir, "a_plus.nfa", A_PLUS);
    let bad = fixture(&dir, "loops.nfa", TWO_LOOPS);
    let r = ufa(&["check-unambiguous", s(&ok)]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "unambiguous\n"));
    let r = ufa(&["check-unambiguous", s(&bad)]);
    assert_eq!((r.code, r.stdout.as_str()), (2, "ambiguous witness=[]\n"));
}

#[test]
fn graph_round_trip_through_automaton() {
    let dir = TempDir::new().unwrap();
    let graph = fixture(&dir, "path.g", PATH3);
    let ufa_path = dir.path().join("path.nfa");
    let r = ufa(&["graph-to-ufa", s(&graph), "--output", s(&ufa_path)]);
    assert_eq!(r.code, 0);
    let a = parse_automaton(&fs::read_to_string(&ufa_path).unwrap()).unwrap();
    assert!(is_unambiguous(&a).is_unambiguous());
    assert_eq!(a.alphabet().len(), 6 + 5);

    let r = ufa(&["extract-graph", s(&ufa_path)]);
    assert_eq!(r.code, 0);
    // Every clique of the path is reached from vertex 0, so the edges come back.
    let g = parse_graph(&r.stdout).unwrap();
    assert_eq!(g, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
}

#[test]
fn extract_graph_rejects_ambiguous_input() {
    let dir = TempDir::new().unwrap();
    let bad = fixture(&dir, "loops.nfa", TWO_LOOPS);
    assert_eq!(ufa(&["extract-graph", s(&bad)]).code, 2);
}

#[test]
fn count_cliques_line() {
    let dir = TempDir::new().unwrap();
    let graph = fixture(&dir, "path.g", PATH3);
    let r = ufa(&["count-cliques", s(&graph)]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "n=3 cliques=6 cocliques=5 product=30 bound=32 holds=yes\n"
    );
}

#[test]
fn witness_commands() {
    let r = ufa(&["witness", "--n", "0"]);
    assert_eq!(r.code, 0);
    assert!(r
        .stdout
        .starts_with("n=0 k=1 l=1 lower_sq=1/4 upper_sq=1 holds=yes\n"));

    let dir = TempDir::new().unwrap();
    let out = dir.path().join("w4.nfa");
    let r = ufa(&["witness", "--n", "4", "--output", s(&out)]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.ends_with("holds=yes\n"), "{}", r.stdout);
    let w = parse_automaton(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((w.state_count(), w.alphabet().len()), (4, 17));

    let r = ufa(&["witness", "--n", "12", "--output", s(&out)]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "n=12 k=133 l=256 lower_sq=13312 upper_sq=53248 holds=yes\n"
    );

    assert_eq!(ufa(&["--cap", "2", "witness", "--n", "4"]).code, 3);
}

#[test]
fn verify_graphs_lines() {
    let r = ufa(&["verify-graphs", "--max-n", "0"]);
    assert_eq!(
        (r.code, r.stdout.as_str()),
        (0, "n=0 graphs=1 violations=0\n")
    );
    let r = ufa(&["verify-graphs", "--max-n", "3"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.ends_with("n=3 graphs=8 violations=0\n"));
    let r = ufa(&["verify-graphs", "--max-n", "5"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.ends_with("n=5 graphs=1024 violations=0\n"));
    assert_eq!(ufa(&["verify-graphs", "--max-n", "7"]).code, 2);
}

#[test]
fn verify_tightness_lines() {
    let r = ufa(&["verify-tightness", "--max-n", "12"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.lines().count(), 13);
    assert!(r.stdout.lines().all(|l| l.ends_with("holds=yes")));
}

#[test]
fn malformed_and_missing_inputs_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = fixture(
        &dir,
        "bad.nfa",
        "nfa 1\nalphabet a\ninitial 0\nfinal 0\ntrans 0 b 0\n",
    );
    let r = ufa(&["complement", s(&bad)]);
    assert_eq!(r.code, 2);
    assert!(
        r.stderr.contains("line 5: unknown symbol b"),
        "{}",
        r.stderr
    );
    assert_eq!(ufa(&["complement", "/nonexistent/file.nfa"]).code, 2);
    assert_eq!(ufa(&["no-such-command"]).code, 2);
}

#[test]
fn binary_honors_cap_env_var() {
    let dir = TempDir::new().unwrap();
    let input = fixture(&dir, "a_plus.nfa", A_PLUS);
    let bin = env!("CARGO_BIN_EXE_ufa");
    let out = Command::new(bin)
        .args(["complement", s(&input)])
        .env("UFA_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(bin)
        .args(["complement", s(&input)])
        .env("UFA_CAP", "1")
        .args(["--cap", "10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
