use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn twotrans(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twotrans"))
        .current_dir(dir)
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let o = twotrans(dir, args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

#[test]
fn solve_cmbt_with_tree_method() {
    let d = TempDir::new().unwrap();
    ok(d.path(), &["generate", "cmbt", "4", "--out", "c.el"]);
    let out = ok(d.path(), &["solve", "--method", "tree", "c.el"]);
    assert_eq!(out.lines().last(), Some("tr2 4"));
}

#[test]
fn solve_k5_takes_the_split_path() {
    let d = TempDir::new().unwrap();
    ok(d.path(), &["generate", "complete", "5", "--out", "k5.el"]);
    let out = ok(d.path(), &["solve", "k5.el"]);
    assert!(out.contains("method split"), "{out}");
    assert_eq!(out.lines().last(), Some("tr2 3"));
}

#[test]
fn witness_verifies_and_certifies() {
    let d = TempDir::new().unwrap();
    ok(
        d.path(),
        &["generate", "random-split", "3", "9", "--out", "s.el"],
    );
    ok(d.path(), &["solve", "--witness", "--out", "w.part", "s.el"]);
    assert_eq!(ok(d.path(), &["verify", "s.el", "w.part"]), "valid\n");
    let out = ok(d.path(), &["solve", "s.el"]);
    let k = out
        .lines()
        .last()
        .unwrap()
        .strip_prefix("tr2 ")
        .unwrap()
        .to_string();
    let report = ok(d.path(), &["certify", "s.el", "w.part", &k]);
    assert!(report.ends_with("overall: pass\n"), "{report}");
}

#[test]
fn verify_rejects_a_broken_partition() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("p.el"), "3 2\n0 1\n1 2\n").unwrap();
    fs::write(d.path().join("bad.part"), "0 2\n1 1\n2 2\n").unwrap();
    let o = twotrans(d.path(), &["verify", "p.el", "bad.part"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid 1 2 0"), "{}", stdout(&o));
    fs::write(d.path().join("ok.part"), "0 1\n1 2\n2 1\n").unwrap();
    assert_eq!(ok(d.path(), &["verify", "p.el", "ok.part"]), "valid\n");
    let o = twotrans(d.path(), &["verify", "--transitive", "p.el", "bad.part"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("loop.el"), "2 1\n0 0\n").unwrap();
    assert_eq!(
        twotrans(d.path(), &["solve", "loop.el"]).status.code(),
        Some(2)
    );
    assert_eq!(
        twotrans(d.path(), &["solve", "missing.el"]).status.code(),
        Some(2)
    );
    assert_eq!(twotrans(d.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        twotrans(d.path(), &["generate", "cycle", "2"])
            .status
            .code(),
        Some(2)
    );
    ok(d.path(), &["generate", "cycle", "5", "--out", "c5.el"]);
    let o = twotrans(d.path(), &["solve", "--method", "tree", "c5.el"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn graph6_input_and_output() {
    let d = TempDir::new().unwrap();
    ok(
        d.path(),
        &[
            "generate",
            "complete-bipartite",
            "3",
            "3",
            "--out",
            "k33.g6",
        ],
    );
    let g6 = fs::read_to_string(d.path().join("k33.g6")).unwrap();
    assert!(g6.ends_with('\n') && g6.lines().count() == 1);
    assert_eq!(
        ok(d.path(), &["solve", "k33.g6"]).lines().last(),
        Some("tr2 2")
    );
    let el = ok(d.path(), &["--format", "el", "generate", "path", "3"]);
    assert_eq!(el, "3 2\n0 1\n1 2\n");
}

#[test]
fn reduce_writes_graph_and_handles() {
    let d = TempDir::new().unwrap();
    ok(d.path(), &["generate", "cycle", "4", "--out", "c4.el"]);
    let out = ok(d.path(), &["reduce", "chordal", "c4.el"]);
    assert!(out.starts_with("k 6\nvertices 103\nedges 124\n"), "{out}");
    let g = fs::read_to_string(d.path().join("reduced.el")).unwrap();
    assert!(g.starts_with("103 124\n"));
    let handles = fs::read_to_string(d.path().join("reduced.handles")).unwrap();
    assert_eq!(handles.lines().count(), 103);

    let out = ok(
        d.path(),
        &[
            "reduce",
            "bipartite",
            "c4.el",
            "--out",
            "b.el",
            "--handles",
            "b.h",
        ],
    );
    assert!(out.contains("k 7") && out.contains("edges 274") && out.contains("212"));

    ok(d.path(), &["generate", "path", "4", "--out", "p4.el"]);
    let o = twotrans(d.path(), &["reduce", "chordal", "p4.el"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("even number of edges"));
}

#[test]
fn bounds_output() {
    let d = TempDir::new().unwrap();
    ok(d.path(), &["generate", "path", "9", "--out", "p9.el"]);
    assert_eq!(
        ok(d.path(), &["bounds", "p9.el"]),
        "delta_bound: 2\nhas_p3: true\nclosed_form: 2\n"
    );
}

#[test]
fn certify_flags_an_overclaim() {
    let d = TempDir::new().unwrap();
    ok(d.path(), &["generate", "complete", "5", "--out", "k5.el"]);
    ok(
        d.path(),
        &["solve", "--witness", "--out", "w.part", "k5.el"],
    );
    let o = twotrans(d.path(), &["certify", "k5.el", "w.part", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("delta_bound: fail"));
}

#[test]
fn output_is_deterministic() {
    let d = TempDir::new().unwrap();
    let runs: Vec<(String, String)> = (0..2)
        .map(|_| {
            let gen = ok(d.path(), &["generate", "random-tree", "17", "30"]);
            fs::write(d.path().join("t.el"), &gen).unwrap();
            (gen, ok(d.path(), &["solve", "--witness", "t.el"]))
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    assert_eq!(
        ok(d.path(), &["generate", "random-chain", "5", "12"]),
        ok(d.path(), &["generate", "random-chain", "5", "12"])
    );
}

#[test]
fn brute_and_auto_agree() {
    let d = TempDir::new().unwrap();
    for (family, params) in [
        ("random-tree", ["1", "9"]),
        ("random-split", ["2", "8"]),
        ("random-chain", ["3", "9"]),
    ] {
        let mut args = vec!["generate", family];
        args.extend(params);
        args.extend(["--out", "g.el"]);
        ok(d.path(), &args);
        let last = |m: &str| {
            ok(d.path(), &["solve", "--method", m, "g.el"])
                .lines()
                .last()
                .unwrap()
                .to_string()
        };
        assert_eq!(last("auto"), last("brute"), "{family}");
    }
}
