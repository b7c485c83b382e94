use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn totdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_totdom")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect()
}

#[test]
fn gamma_t_inline_and_file() {
    let out = totdom(&["gamma-t", "EhEG"]);
    assert!(out.status.success());
    let v = &json(&out)[0];
    assert_eq!(v["gamma_t"], 4);
    assert_eq!(v["certificate"], serde_json::json!([0, 1, 2, 3]));

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.g6");
    fs::write(&file, ">>graph6<<A_\nBw\nEhEG\n").unwrap();
    let out = totdom(&["gamma", file.to_str().unwrap()]);
    let values: Vec<i64> = json(&out).iter().map(|v| v["gamma"].as_i64().unwrap()).collect();
    assert_eq!(values, [1, 1, 2]);
    let out = totdom(&["rho2", file.to_str().unwrap()]);
    assert_eq!(json(&out).len(), 3);
}

#[test]
fn exit_codes() {
    assert_eq!(totdom(&["gamma-t", "A "]).status.code(), Some(3));
    assert_eq!(totdom(&["gamma-t", "A"]).status.code(), Some(3));
    assert_eq!(totdom(&["gamma-t", "A?"]).status.code(), Some(2), "isolated vertices");
    assert_eq!(totdom(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(totdom(&["gn", "--k", "3", "--n", "2"]).status.code(), Some(2));
    assert_eq!(totdom(&["decompose", "--g", "EhEG", "--h", "Bw"]).status.code(), Some(2), "hypothesis");
}

#[test]
fn classify_and_quotient() {
    let v = &json(&totdom(&["classify", "EhEG"]))[0];
    assert_eq!(v["families"], serde_json::json!(["F1", "F2"]));
    let v = &json(&totdom(&["quotient", "--g", "Bw", "--h", "Bw"]))[0];
    assert_eq!(v["qt"], "3/4");
    assert_eq!(v["ho_tight"], false);
}

#[test]
fn product_and_decompose() {
    let v = &json(&totdom(&["product", "--g", "A_", "--h", "Bw", "--gamma-t"]))[0];
    assert_eq!((v["n"].as_i64(), v["edges"].as_i64(), v["gamma_t"].as_i64()), (Some(6), Some(9), Some(2)));
    let out = totdom(&["decompose", "--g", "EhEG", "--h", "A_", "--all-min-sets"]);
    assert!(out.status.success());
    let reports = json(&out);
    assert!(reports.len() > 1);
    assert!(reports.iter().all(|r| r["statements"]["M"] == "not_applicable"));
}

#[test]
fn gn_construct_and_exact() {
    let out = totdom(&["gn", "--k", "2", "--n", "2", "--construct", "--exact"]);
    assert!(out.status.success());
    let v = &json(&out)[0];
    assert_eq!(v["construction_size"], 12);
    assert_eq!(v["exact"], 12);
    assert_eq!(v["qt"], "3/4");
    assert_eq!(v["corollary_interval"], serde_json::json!(["5/8", "3/4"]));
    let out = totdom(&["gn", "--k", "4", "--n", "5", "--exact"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let out = totdom(&["enumerate", "--n", "5", "--connected"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 21);
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("all4.g6");
    assert!(totdom(&["enumerate", "--n", "4", "--out", file.to_str().unwrap()]).status.success());
    assert_eq!(fs::read_to_string(&file).unwrap().lines().count(), 11);
    assert_eq!(totdom(&["enumerate", "--n", "8"]).status.code(), Some(2));
}

#[test]
fn verify_resume_matches_uninterrupted_run() {
    let dir = tempfile::tempdir().unwrap();
    let full = dir.path().join("full.jsonl");
    let part = dir.path().join("part.jsonl");
    let ckpt = dir.path().join("part.ckpt");
    let base = ["verify", "q1", "--g-max", "4", "--h-max", "4", "--jobs", "2"];

    let mut args = base.to_vec();
    args.extend(["--out", full.to_str().unwrap(), "--csv"]);
    let out = totdom(&args);
    assert!(out.status.success());
    let report = &json(&out)[0];
    assert_eq!(report["items_total"], 81);
    assert!(dir.path().join("full.jsonl.csv").exists());

    let mut args = base.to_vec();
    args.extend(["--out", part.to_str().unwrap(), "--checkpoint", ckpt.to_str().unwrap(), "--stop-at", "40"]);
    let report = &json(&totdom(&args))[0];
    assert_eq!(report["complete"], false);
    args.truncate(args.len() - 2);
    let report = &json(&totdom(&args))[0];
    assert_eq!(report["complete"], true);
    assert_eq!(fs::read(&full).unwrap(), fs::read(&part).unwrap());
    let text = fs::read_to_string(&full).unwrap();
    assert!(text.lines().next().unwrap().starts_with(r#"{"format":"1","campaign":"q1""#));
    assert!(!text.contains("0.5"));
}

#[test]
fn verify_theorem_campaigns_exit_zero() {
    for kind in ["thm2", "thm3", "prop1", "ho"] {
        let out = totdom(&["verify", kind, "--g-max", "5", "--h-max", "4"]);
        assert_eq!(out.status.code(), Some(0), "{kind}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn verify_rejects_bad_corpus_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.g6");
    fs::write(&file, "A_\nB\n").unwrap();
    let out = totdom(&["verify", "q1", "--g-file", file.to_str().unwrap(), "--h-max", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}
