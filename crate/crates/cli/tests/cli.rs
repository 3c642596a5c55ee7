use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn queens(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_queens"))
        .args(args)
        .env_remove("QS_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Runs a JSON command, checks it succeeded and validates it against the
/// shipped schema.
fn json(name: &str, args: &[&str]) -> Value {
    let mut full = vec![name];
    full.extend_from_slice(args);
    let o = queens(&full);
    assert!(o.status.success(), "{full:?}: {}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let validator = jsonschema::validator_for(&schema(name)).unwrap();
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
    v
}

#[test]
fn graph_summaries() {
    let v = json("graph", &["--n", "4"]);
    assert_eq!(v["results"][0]["edges"], 76);
    let v = json("graph", &["--n", "1"]);
    assert_eq!(v["results"][0]["edges"], 0);
    let v = json("graph", &["--n", "2", "--edges"]);
    assert_eq!(v["results"][0]["edge_list"].as_array().unwrap().len(), 6);
    let v = json("graph", &["--n", "1..6", "--jobs", "2"]);
    let ns: Vec<u64> = v["results"].as_array().unwrap().iter().map(|r| r["n"].as_u64().unwrap()).collect();
    assert_eq!(ns, vec![1, 2, 3, 4, 5, 6]);
}

#[test]
fn graph_csv_edges() {
    let o = queens(&["graph", "--n", "8", "--format", "csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,u,v"));
    assert_eq!(lines.count(), 728);
}

#[test]
fn spectrum_reports() {
    let v = json("spectrum", &["--n", "2"]);
    let clusters = v["results"][0]["clusters"].as_array().unwrap();
    let pairs: Vec<(f64, u64)> = clusters
        .iter()
        .map(|c| (c["value"].as_f64().unwrap(), c["multiplicity"].as_u64().unwrap()))
        .collect();
    assert_eq!(pairs.len(), 2);
    assert!((pairs[0].0 - 3.0).abs() < 1e-9 && pairs[0].1 == 1);
    assert!((pairs[1].0 + 1.0).abs() < 1e-9 && pairs[1].1 == 3);

    let v = json("spectrum", &["--n", "3"]);
    let top = v["results"][0]["eigenvalues"][0].as_f64().unwrap();
    assert!((top - (5.0 + 57f64.sqrt()) / 2.0).abs() < 1e-9);

    let v = json("spectrum", &["--n", "4"]);
    let clusters = v["results"][0]["clusters"].as_array().unwrap();
    let near = |x: f64| {
        clusters
            .iter()
            .find(|c| (c["value"].as_f64().unwrap() - x).abs() < 1e-6)
            .map(|c| c["multiplicity"].as_u64().unwrap())
    };
    assert_eq!(near(-4.0), Some(1));
    assert!(near(0.0).unwrap() >= 1);
}

#[test]
fn spectrum_respects_the_dense_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_queens"))
        .args(["spectrum", "--n", "6"])
        .env("QS_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = queens(&["spectrum", "--n", "3", "--tol", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_ledger() {
    let v = json("verify", &["--n", "3..10"]);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    let results = v["results"].as_array().unwrap();
    let check = |n: usize, name: &str| -> Value {
        results[n - 3]["checks"]
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["name"] == name)
            .cloned()
            .unwrap()
    };
    for n in 4..=10 {
        assert_eq!(check(n, "-4 multiplicity")["status"], "pass");
    }
    let bound = check(3, "n-4 lower bound");
    assert_eq!(bound["status"], "pass");
    assert!(bound["detail"].as_str().unwrap().contains(">= 2"));
    assert_eq!(check(6, "divisibility chain")["status"], "pass");
    assert_eq!(check(6, "quotient polynomial n=6")["status"], "pass");
}

#[test]
fn domination_tables() {
    let o = queens(&["domination", "--n", "1..8", "--format", "csv"]);
    assert!(o.status.success());
    let values: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(2).unwrap().to_string()).collect();
    assert_eq!(values, ["1", "1", "1", "2", "3", "3", "4", "5"]);

    let v = json("domination", &["--n", "9..11"]);
    let values: Vec<u64> = v["results"].as_array().unwrap().iter().map(|r| r["value"].as_u64().unwrap()).collect();
    assert_eq!(values, [5, 5, 5]);
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["optimal"] == true));

    let v = json("domination", &["--n", "20", "--cap", "0"]);
    let r = &v["results"][0];
    assert_eq!(r["optimal"], false);
    assert_eq!(r["lower_bound"], 10);
    assert!(r["upper_bound"].as_u64().unwrap() <= 14);
}

#[test]
fn conjecture_reports() {
    let v = json("conjecture", &["--n", "3..11"]);
    for r in v["results"].as_array().unwrap() {
        assert_eq!(r["matches_published"], true, "n={}", r["n"]);
    }
    let v = json("conjecture", &["--n", "12"]);
    let ks: Vec<i64> = v["results"][0]["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p[0].as_i64().unwrap())
        .collect();
    assert_eq!(ks, [8, -4]);
    assert_eq!(v["results"][0]["agrees"], true);
    let v = json("conjecture", &["--n", "4"]);
    assert_eq!(v["results"][0]["published"], serde_json::json!([0, -4]));
}

#[test]
fn output_file_and_errors() {
    let dir = std::env::temp_dir().join(format!("queens-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.json");
    let o = queens(&["graph", "--n", "5", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["results"][0]["edges"], 160);
    std::fs::remove_dir_all(&dir).unwrap();

    assert_eq!(queens(&["graph", "--n", "0"]).status.code(), Some(2));
    assert_eq!(queens(&["graph", "--n", "500"]).status.code(), Some(2));
    assert_eq!(queens(&["graph", "--n", "5..3"]).status.code(), Some(2));
}
