use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn gencol(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gencol"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let out = gencol(dir, args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(dir: &Path, name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(dir.join(name)).unwrap()).unwrap()
}

#[test]
fn compute_examples() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    std::fs::write(d.join("p5.txt"), "5 4\n0 1\n1 2\n2 3\n3 4\n").unwrap();
    ok(d, &["compute", "wcol", "p5.txt", "-r", "2", "--exact", "--json", "r.json", "--witness", "w.ord"]);
    let r = json(d, "r.json");
    assert_eq!(r["values"]["value"], 3);
    assert_eq!(r["values"]["exact"], true);
    assert_eq!(r["witness_files"][0], "w.ord");
    for key in ["command", "input_hash", "params", "values", "bounds", "witness_files", "elapsed_ms", "seed"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
    // the witness reproduces the value
    let out = ok(d, &["compute", "wcol", "p5.txt", "-r", "2", "--order", "w.ord"]);
    assert!(out.contains("<= 3"), "{out}");

    let out = ok(d, &["compute", "wcol", "named:petersen", "-r", "1", "--heuristic", "degeneracy"]);
    assert!(out.contains("wcol_1 <= 4") && out.contains("upper bound"), "{out}");
    let out = ok(d, &["compute", "adm", "named:empty(5)", "-r", "1", "--exact"]);
    assert!(out.contains("adm_1 = 1"), "{out}");
}

#[test]
fn errors_exit_non_zero() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    std::fs::write(d.join("bad.txt"), "3 1\n2 1\n").unwrap();
    for args in [
        vec!["compute", "wcol", "missing.txt", "-r", "1"],
        vec!["compute", "wcol", "bad.txt", "-r", "1"],
        vec!["compute", "wcol", "named:petersen", "-r", "1", "--exact", "--heuristic", "degeneracy"],
        vec!["compute", "wcol", "named:clique(14)", "-r", "1", "--exact"],
        vec!["exp", "girth-lb", "named:cycle(8)", "-r", "1"],
    ] {
        let out = gencol(d, &args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn reports_are_reproducible() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    let run = |name: &str| {
        ok(d, &["exp", "girth-lb", "named:robertson", "-r", "2", "--samples", "50", "--seed", "3", "--json", name, "--csv", &format!("{name}.csv"), "-q"]);
        let mut v = json(d, name);
        v["elapsed_ms"] = Value::Null;
        (v, std::fs::read_to_string(d.join(format!("{name}.csv"))).unwrap())
    };
    let (a, csv_a) = run("a.json");
    let (b, csv_b) = run("b.json");
    assert_eq!(a, b);
    assert_eq!(csv_a, csv_b);
    assert_eq!(a["values"]["violations"], 0);
    assert_eq!(csv_a.lines().count(), 1 + 50 + 3);
    assert!(csv_a.starts_with("source,W_r,bound,holds\n"));
}

#[test]
fn decomposition_pipeline() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    let out = ok(d, &["gen", "gkr", "-k", "2", "-r", "1", "-o", "g.txt", "--td", "g.td", "--smooth"]);
    assert!(out.contains("wcol_1 <= 3"), "{out}");
    ok(d, &["td", "validate", "g.txt", "g.td", "--json", "v.json"]);
    assert_eq!(json(d, "v.json")["values"]["report"]["valid"], true);
    ok(d, &["td", "order", "g.txt", "g.td", "-r", "1", "-o", "o.ord"]);
    let out = ok(d, &["compute", "wcol", "g.txt", "-r", "1", "--order", "o.ord"]);
    assert!(out.contains("<= 3"), "{out}");
    // a decomposition for the wrong graph is rejected
    ok(d, &["gen", "named", "clique(13)", "-o", "k.txt"]);
    assert!(!gencol(d, &["td", "validate", "k.txt", "g.td"]).status.success());
}

#[test]
fn cover_pipeline() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    ok(d, &["cover", "build", "named:petersen", "-r", "1", "-o", "c.txt", "--json", "c.json"]);
    let c = json(d, "c.json");
    assert_eq!(c["values"]["report"]["is_cover"], true);
    assert_eq!(c["values"]["report"]["max_degree"], c["bounds"]["wcol_2r_of_order"]);
    ok(d, &["cover", "check", "named:petersen", "c.txt", "-r", "1"]);
    std::fs::write(d.join("singles.txt"), (0..10).map(|v| format!("{v}: {v}\n")).collect::<String>()).unwrap();
    assert!(!gencol(d, &["cover", "check", "named:petersen", "singles.txt", "-r", "1"]).status.success());

    ok(d, &["gen", "subdivide", "named:petersen", "-s", "1", "-o", "ps.txt"]);
    ok(d, &["cover", "build", "ps.txt", "-r", "2", "-o", "cs.txt"]);
    ok(d, &["cover", "project", "ps.txt", "named:petersen", "cs.txt", "-s", "1", "-r", "1", "-o", "cp.txt", "--json", "p.json"]);
    let p = json(d, "p.json");
    assert!(p["values"]["report"]["max_degree"].as_u64() <= p["values"]["original_degree"].as_u64());
}

#[test]
fn reduction_with_sidecar() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    ok(d, &["gen", "named", "complete_bipartite(2,3)", "-o", "k23.txt"]);
    let out = ok(d, &["reduce", "bcbs", "k23.txt", "-k", "2", "-o", "red.txt", "--verify"]);
    assert!(out.contains("equivalence holds: true"), "{out}");
    let side = json(d, "red.json");
    assert_eq!((side["n"].as_u64(), side["k"].as_u64(), side["threshold"].as_u64()), (Some(5), Some(2), Some(3)));
    assert!(std::fs::read_to_string(d.join("red.txt")).unwrap().starts_with("5 4\n"));
    assert!(!gencol(d, &["reduce", "bcbs", "named:cycle(5)", "-k", "1"]).status.success());
}

#[test]
fn tgrad_and_adm_bound() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    let out = ok(d, &["tgrad", "named:clique(4)", "-r", "0"]);
    assert!(out.contains("tgrad_0 = 3/2"), "{out}");
    // the sweep reports violations on near-empty graphs and exits non-zero
    let out = gencol(d, &["exp", "adm-bound", "--count", "20", "--n-min", "2", "--n-max", "3", "-p", "0.3", "--json", "a.json"]);
    let a = json(d, "a.json");
    assert_eq!(out.status.success(), a["values"]["violations"] == 0);
    let out = ok(d, &["exp", "cauchy", "named:petersen", "-r", "1", "--samples", "30"]);
    assert!(out.contains("violations 0"), "{out}");
}
