use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use chromhom_core::graph::{encode_graph6, Graph};
use serde_json::Value;
use tempfile::TempDir;

fn chromhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromhom"))
        .args(args)
        .env_remove("CHROMHOM_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn homology_of_k5_and_k4() {
    let dir = TempDir::new().unwrap();
    let k5 = write(dir.path(), "k5.txt", &Graph::complete(5).to_edge_list());
    let out = chromhom(&["homology", s(&k5), "--shape", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["has_z2"], true);
    assert_eq!(v["shapes"][0]["dims"], serde_json::json!([15, 20, 5]));
    assert_eq!(v["shapes"][0]["torsion"], serde_json::json!([2]));

    let k4 = write(dir.path(), "k4.g6", &format!("{}\n", encode_graph6(&Graph::complete(4))));
    let out = chromhom(&["homology", s(&k4), "--all-shapes", "--input-format", "graph6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["has_z2"], false);
    assert!(!v["shapes"].as_array().unwrap().is_empty());
}

#[test]
fn loop_gives_zero_homology() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "loop.txt", "5 3\n1 1\n1 2\n2 3\n");
    let out = chromhom(&["homology", s(&g)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "zero");
    assert_eq!(v["shapes"], serde_json::json!([]));
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.txt", "3 1\n1 7\n");
    assert_eq!(chromhom(&["homology", s(&bad)]).status.code(), Some(2));
    assert_eq!(chromhom(&["homology", "/nonexistent/graph.txt"]).status.code(), Some(2));
    let k4 = write(dir.path(), "k4.txt", &Graph::complete(4).to_edge_list());
    assert_eq!(chromhom(&["homology", s(&k4), "--shape", "3"]).status.code(), Some(2));
    assert_eq!(chromhom(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn planar_graph_is_a_negative_verdict() {
    let dir = TempDir::new().unwrap();
    let c6 = write(dir.path(), "c6.txt", &Graph::cycle(6).to_edge_list());
    let out = chromhom(&["certify", s(&c6)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "planar");
}

#[test]
fn certificate_round_trip_and_tampering() {
    let dir = TempDir::new().unwrap();
    let k33 = write(dir.path(), "k33.txt", &Graph::complete_bipartite(3, 3).to_edge_list());
    let cert = dir.path().join("k33.json");
    let out = chromhom(&["certify", s(&k33), "--out", s(&cert)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(doc["h"].as_array().unwrap().len(), 4);
    assert_eq!(doc["prime"], 2);

    let out = chromhom(&["check", s(&cert), "--graph", s(&k33)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["valid"], true);

    // Flip the sign of one term of h.
    let mut tampered = doc.clone();
    let c = tampered["h"][0]["coeff"].as_i64().unwrap();
    tampered["h"][0]["coeff"] = Value::from(-c);
    let bad = write(dir.path(), "bad.json", &tampered.to_string());
    let out = chromhom(&["check", s(&bad), "--graph", s(&k33)]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["valid"], false);
    assert_eq!(v["doubled"], false);

    // Right size, wrong graph.
    let other = write(dir.path(), "k6.txt", &Graph::complete(6).to_edge_list());
    let out = chromhom(&["check", s(&cert), "--graph", s(&other)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension mismatch"));

    let junk = write(dir.path(), "junk.json", "{\"graph\": 3}");
    assert_eq!(chromhom(&["check", s(&junk), "--graph", s(&k33)]).status.code(), Some(2));
}

#[test]
fn certify_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "petersen.txt", &Graph::petersen().to_edge_list());
    let a = chromhom(&["certify", s(&p)]);
    let b = chromhom(&["certify", s(&p)]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn survey_corpus_marks_exactly_the_nonplanar_graphs() {
    let dir = TempDir::new().unwrap();
    let corpus = [Graph::complete(5), Graph::complete_bipartite(3, 3), Graph::complete(4)]
        .iter()
        .map(Graph::to_edge_list)
        .collect::<Vec<_>>()
        .join("\n");
    let corpus = write(dir.path(), "corpus.txt", &corpus);
    let cache = dir.path().join("cache");
    let out = chromhom(&["survey", s(&corpus), "--cache", s(&cache), "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rows: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 3);
    let ids: Vec<&str> = rows.iter().map(|r| r["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for r in &rows {
        let planar = r["planar"].as_bool().unwrap();
        assert_eq!(r["certificate"].is_string(), !planar, "{r}");
        if let Some(name) = r["certificate"].as_str() {
            assert!(cache.join(name).exists());
        }
    }
    assert_eq!(rows.iter().filter(|r| r["certificate"].is_string()).count(), 2);
}

#[test]
fn survey_csv_and_env_cache() {
    let dir = TempDir::new().unwrap();
    let cache = dir.path().join("env-cache");
    let out = Command::new(env!("CARGO_BIN_EXE_chromhom"))
        .args(["survey", "--generate", "5", "--format", "csv"])
        .env("CHROMHOM_CACHE_DIR", &cache)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    assert!(headers.iter().any(|h| h == "has_z2"));
    assert_eq!(reader.records().count(), 1 + 1 + 2 + 6 + 21);
    assert!(std::fs::read_dir(&cache).unwrap().count() > 0);
}

#[test]
fn verify_examples_and_mutation() {
    let out = chromhom(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 10);

    let out = chromhom(&["verify-examples", "--mutation", "d2-sign"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let failed: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failed.len(), 1);
    assert!(failed[0].contains("d2(W_{1,8})"));
}
