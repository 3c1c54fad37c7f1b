use std::io::Write;
use std::process::{Command, Output};

use gbei_cli::report::{build_report, Options, Report, Stage, VerdictStatus};
use gbei_cli::text::render_report;
use gbei_core::graph::Graph;

fn graph_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn gbei(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gbei")).args(args).output().unwrap()
}

fn json_report(args: &[&str]) -> (Report, i32) {
    let out = gbei(args);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let report = Report::from_json(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout}"));
    assert_eq!(report.to_json(), stdout, "round trip is byte-identical");
    (report, out.status.code().unwrap())
}

const FAN: &str = "5\n1 2\n1 3\n2 3\n1 4\n2 4\n1 5\n2 5\n";
const STAR: &str = "4\n1 2\n1 3\n1 4\n";
const K3: &str = "3\n1 2\n1 3\n2 3\n";
const P3: &str = "3\n1 2\n2 3\n";
const P4: &str = "4\n1 2\n2 3\n3 4\n";
const P5: &str = "5\n1 2\n2 3\n3 4\n4 5\n";
const C4: &str = "4\n1 2\n2 3\n3 4\n4 1\n";

fn formula(stage: &Stage<gbei_cli::report::FormulaOut>) -> (&str, usize) {
    let f = stage.value().expect("formula computed");
    (f.kind.as_str(), f.value)
}

#[test]
fn classify_examples() {
    let p5 = graph_file(P5);
    let (r, code) = json_report(&["classify", "--graph", p5.path().to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    assert!(r.classification.block_graph);
    assert_eq!(r.census.value().unwrap().a[0], 3);
    assert!(r.formulas.is_none() && r.verification.is_none());

    let fan = graph_file(FAN);
    let (r, _) = json_report(&["classify", "--graph", fan.path().to_str().unwrap(), "--json"]);
    assert!(r.classification.generalized_block_graph && !r.classification.block_graph);
    assert_eq!(r.census.value().unwrap().a, vec![0, 1]);

    let c4 = graph_file(C4);
    let (r, code) = json_report(&["invariants", "--graph", c4.path().to_str().unwrap(), "--rows", "2", "--json"]);
    assert_eq!(code, 0);
    assert!(!r.classification.generalized_block_graph);
    let f = r.formulas.unwrap();
    assert!(f.depth.is_skipped() && f.regularity.is_skipped());
    assert!(r.census.value().is_some());
}

#[test]
fn invariants_examples() {
    let star = graph_file(STAR);
    let (r, _) = json_report(&["invariants", "--graph", star.path().to_str().unwrap(), "--rows", "2", "--json"]);
    let f = r.formulas.unwrap();
    assert_eq!(formula(&f.depth), ("exact", 5));
    assert_eq!(formula(&f.regularity), ("upper-bound", 3));

    let k3 = graph_file(K3);
    let (r, _) = json_report(&["invariants", "--graph", k3.path().to_str().unwrap(), "--rows", "3", "--json"]);
    let f = r.formulas.unwrap();
    assert_eq!(formula(&f.depth), ("exact", 5));
    assert_eq!(formula(&f.regularity), ("exact", 2));
    assert_eq!(f.unmixed.value(), Some(&true));

    let p4 = graph_file(P4);
    let (r, _) = json_report(&["invariants", "--graph", p4.path().to_str().unwrap(), "--rows", "2", "--json"]);
    let f = r.formulas.unwrap();
    assert_eq!(formula(&f.depth), ("exact", 5));
    assert_eq!(formula(&f.regularity), ("exact", 3));
    assert_eq!(f.regularity.value().unwrap().provenance, vec!["regularity-path"]);
}

#[test]
fn verify_examples() {
    let p3 = graph_file(P3);
    let (r, code) = json_report(&[
        "verify", "--graph", p3.path().to_str().unwrap(), "--rows", "2", "--with-primes", "--json",
    ]);
    assert_eq!(code, 0);
    let v = r.verification.unwrap();
    assert_eq!(v.verdicts.len(), 5);
    assert!(v.verdicts.iter().all(|d| d.status == VerdictStatus::Pass), "{v:?}");

    let fan = graph_file(FAN);
    let (r, code) = json_report(&["verify", "--graph", fan.path().to_str().unwrap(), "--rows", "2", "--json"]);
    assert_eq!(code, 0);
    let v = r.verification.unwrap();
    let statuses: Vec<VerdictStatus> = v.verdicts.iter().map(|d| d.status).collect();
    assert_eq!(statuses[..4], [VerdictStatus::Pass; 4]);
    assert_eq!(statuses[4], VerdictStatus::Skipped);
    assert!(v.verdicts[4].detail.contains("10 variables"));

    let k3 = graph_file(K3);
    let (r, _) = json_report(&["verify", "--graph", k3.path().to_str().unwrap(), "--rows", "3", "--json"]);
    assert_eq!(r.verification.unwrap().oracle.value().unwrap().regularity, 2);
}

#[test]
fn verification_is_size_gated() {
    let fan = graph_file(FAN);
    let (r, code) = json_report(&[
        "verify", "--graph", fan.path().to_str().unwrap(), "--rows", "3", "--json",
    ]);
    assert_eq!(code, 0);
    assert!(r.verification.is_none());
    assert!(r.verification_skipped.unwrap().contains("15 variables"));
}

#[test]
fn exit_codes() {
    let bad = graph_file("3\n1 2\n2 x\n");
    let out = gbei(&["classify", "--graph", bad.path().to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let empty = graph_file("");
    assert_eq!(gbei(&["classify", "--graph", empty.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(gbei(&["classify", "--graph", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(gbei(&["classify"]).status.code(), Some(2));

    let p3 = graph_file(P3);
    let out = gbei(&["invariants", "--graph", p3.path().to_str().unwrap(), "--rows", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let c4 = graph_file(C4);
    let path = c4.path().to_str().unwrap();
    assert_eq!(gbei(&["invariants", "--graph", path, "--rows", "2"]).status.code(), Some(0));
    let out = gbei(&["invariants", "--graph", path, "--rows", "2", "--strict"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(gbei(&["invariants", "--graph", p3.path().to_str().unwrap(), "--rows", "2", "--strict"]).status.code(), Some(0));
}

#[test]
fn corpus_examples() {
    let out = gbei(&["corpus", "--enumerate", "4", "--rows", "2", "--filter", "gblock", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("summary:") && last.contains("fail=0"), "{last}");

    let out = gbei(&["corpus", "--enumerate", "3", "--rows", "3", "--filter", "all", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = report["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert_eq!(row["status"], "pass");
        assert_eq!(row["verdicts"][0]["check"], "groebner");
    }

    let out = gbei(&["corpus", "--enumerate", "2", "--rows", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["summary"]["graphs"], 1);
    assert_eq!(report["summary"]["pass"], 1);
}

#[test]
fn corpus_rows_keep_enumeration_order() {
    let a = gbei(&["corpus", "--enumerate", "4", "--rows", "2", "--filter", "all", "--json"]);
    let b = gbei(&["corpus", "--enumerate", "4", "--rows", "2", "--filter", "all", "--json"]);
    let rows = |o: &Output| {
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v["rows"].clone()
    };
    assert_eq!(rows(&a), rows(&b));
    let v = rows(&a);
    let idx: Vec<u64> = v.as_array().unwrap().iter().map(|r| r["index"].as_u64().unwrap()).collect();
    assert_eq!(idx, (1..=38).collect::<Vec<u64>>());
}

fn numbers(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        if ch.is_ascii_digit() {
            cur.push(ch);
        } else if !cur.is_empty() {
            out.push(std::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out.sort();
    out
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    let opts = Options {
        rows: Some(2),
        verify: true,
        max_vars: 12,
        with_primes: true,
    };
    for text in [FAN, STAR, P4, C4] {
        let report = build_report(&Graph::parse(text).unwrap(), "verify", &opts);
        let mut value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        value.as_object_mut().unwrap().remove("schemaVersion");
        let json_numbers = numbers(&serde_json::to_string(&value).unwrap());

        let mut rendered = render_report(&report);
        let omega = report.census.value().unwrap().omega;
        for k in 1..omega {
            rendered = rendered.replace(&format!("a_{k}="), "a=");
        }
        assert_eq!(numbers(&rendered), json_numbers, "{rendered}");
    }
}
