use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use closure_kernels::io::parse_instance;
use closure_kernels::trace::Trace;
use closure_kernels::{Outcome, ProblemKind};

fn ckernel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ckernel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn params_on_named_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let k25 = ckernel(&["gen", "kab", "2", "5"]);
    let p = write(dir.path(), "k25.txt", &stdout(&k25));
    let out = stdout(&ckernel(&["params", s(&p)]));
    assert!(out.contains("c 6\n") && out.contains("gamma 3\n") && out.contains("degeneracy 2\n"), "{out}");

    let k5 = (0..5)
        .flat_map(|u| (u + 1..5).map(move |v| format!("e {u} {v}\n")))
        .collect::<String>();
    let p = write(dir.path(), "k5.txt", &format!("p graph 5 10 0\n{k5}"));
    let out = stdout(&ckernel(&["params", s(&p)]));
    assert!(out.contains("c 1\n") && out.contains("gamma 1\n") && out.contains("degeneracy 4\n"), "{out}");

    let p = write(dir.path(), "c4.txt", "p graph 4 4 0\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");
    let out = stdout(&ckernel(&["params", s(&p)]));
    assert!(out.contains("c 3\n") && out.contains("gamma 3\n") && out.contains("degeneracy 2\n"), "{out}");
}

#[test]
fn solve_examples() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", "p convc 4 4 3\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");
    let o = ckernel(&["solve", "convc", s(&c4)]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("yes\n"));
    assert!(stdout(&ckernel(&["solve", "convc", s(&c4), "--k", "2"])).starts_with("no\n"));

    let k4 = write(dir.path(), "k4.txt", "p ds 4 6 1\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n");
    assert!(stdout(&ckernel(&["solve", "ds", s(&k4)])).starts_with("yes\n"));

    let edge = write(dir.path(), "edge.txt", "p capvc 2 1 1\ncap 0 1\ncap 1 1\ne 0 1\n");
    let w = dir.path().join("w.txt");
    let o = ckernel(&["solve", "capvc", s(&edge), "--witness", s(&w)]);
    assert!(stdout(&o).starts_with("yes\n"));
    assert_eq!(std::fs::read_to_string(&w).unwrap().lines().count(), 1);
}

#[test]
fn oracle_cap_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let big = stdout(&ckernel(&["gen", "gnp", "20", "0.2", "--kind", "is", "--k", "3"]));
    let p = write(dir.path(), "big.txt", &big);
    let o = ckernel(&["solve", "is", s(&p)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--oracle-cap"));
    let o = ckernel(&["solve", "is", s(&p), "--oracle-cap", "20", "--oracle-edge-cap", "400"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "p graph 3 1 0\ne 0 9\n");
    let o = ckernel(&["params", s(&bad)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2:5:"));
    assert_eq!(ckernel(&["frobnicate"]).status.code(), Some(2));
    let c4 = write(dir.path(), "c4.txt", "p convc 4 4 3\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");
    assert_eq!(ckernel(&["kernel", "ds", s(&c4)]).status.code(), Some(2));
    let notsplit = write(dir.path(), "c5.txt", "p ds 5 5 1\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\n");
    assert_eq!(ckernel(&["kernel", "ds", s(&notsplit)]).status.code(), Some(2));
    assert_eq!(ckernel(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn kernel_writes_instance_and_replayable_trace() {
    let dir = tempfile::tempdir().unwrap();
    let star = (1..=6).map(|v| format!("e 0 {v}\n")).collect::<String>();
    let caps = (0..=6).map(|v| format!("cap {v} {}\n", if v == 0 { 6 } else { 0 })).collect::<String>();
    let input = write(dir.path(), "star.txt", &format!("p capvc 7 6 1\n{caps}{star}"));
    let (out, rep) = (dir.path().join("out.txt"), dir.path().join("rep.json"));
    let o = ckernel(&["kernel", "capvc", s(&input), "--out", s(&out), "--report", s(&rep)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    let steps = json["trace"]["steps"].as_array().unwrap();
    assert!(!steps.is_empty());
    assert!(steps.iter().all(|s| s["rule"] == "capvc.twin_crown"));

    let trace: Trace = serde_json::from_value(json["trace"].clone()).unwrap();
    let original = parse_instance(&std::fs::read_to_string(&input).unwrap()).unwrap();
    let reduced = parse_instance(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(trace.replay(&original).unwrap(), Outcome::Reduced(reduced));
}

#[test]
fn kernel_examples() {
    let dir = tempfile::tempdir().unwrap();
    let p5 = write(dir.path(), "p5.txt", "p convc 5 4 3\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n");
    let rep = dir.path().join("rep.json");
    let o = ckernel(&["kernel", "convc", s(&p5), "--mode", "c", "--report", s(&rep)]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&rep).unwrap();
    assert!(text.contains("convc.annotate") && text.contains("convc.simplicial"), "{text}");

    let empty = write(dir.path(), "e.txt", "p im 5 0 1\n");
    let o = ckernel(&["kernel", "im", s(&empty)]);
    let reduced = parse_instance(&stdout(&o)).unwrap();
    assert_eq!(reduced.kind, ProblemKind::Im);
    assert!(reduced.graph.n() <= 1 && reduced.k == 1);
}

#[test]
fn verify_is_deterministic() {
    let a = ckernel(&["verify", "--trials", "30", "--seed", "5"]);
    let b = ckernel(&["verify", "--trials", "30", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn generators_are_deterministic() {
    for args in [
        &["gen", "split", "8", "--seed", "4"][..],
        &["gen", "weakly-closed", "12", "2", "--seed", "4"],
        &["gen", "capvc-lowerbound", "--k", "2", "--sets", "4", "--seed", "9"],
        &["gen", "is-composition", "--t", "2", "--q", "2", "--parts", "2", "--seed", "1"],
    ] {
        let a = ckernel(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, ckernel(args).stdout);
    }
}
