use std::io::Write;
use std::process::Command;

use ricci_cli::run;
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ricci").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn path(f: &tempfile::NamedTempFile) -> String {
    f.path().to_str().unwrap().to_string()
}

fn graph6_of(tokens: &[&str]) -> String {
    let mut args = vec!["family"];
    args.extend_from_slice(tokens);
    let (code, out, err) = cli(&args);
    assert_eq!(code, 0, "{err}");
    out.trim().to_string()
}

#[test]
fn edge_text_output() {
    let (code, out, _) = cli(&["edge", "--family", "petersen", "0", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("kappa: 0\n"), "{out}");
    assert!(out.contains("kappa_0: -1/3\n"), "{out}");
    assert!(out.contains("breakpoint: 1/4"), "{out}");
}

#[test]
fn edge_json_carries_exact_rationals() {
    let (code, out, _) = cli(&["edge", "--family", "cocktail:4", "0", "2", "--alpha", "1/2", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["kappa"]["num"], 1);
    assert_eq!(v["report"]["kappa"]["den"], 1);
    assert_eq!(v["report"]["kappa0"]["num"], 2);
    assert_eq!(v["report"]["kappa0"]["den"], 3);
    assert_eq!(v["kappa_alpha"][0]["value"]["num"], 1);
    assert_eq!(v["kappa_alpha"][0]["value"]["den"], 2);
    assert!(v["report"]["kappa0"]["decimal"].is_string());
}

#[test]
fn edge_from_edge_list_with_labels() {
    let f = temp_file("# a square\n4 4\na b\nb c\nc d\nd a\n");
    let (code, out, _) = cli(&["edge", "--file", &path(&f), "a", "b"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("edge a-b\n"), "{out}");
    assert!(out.contains("kappa: 1\n"), "{out}");
    let (code, _, err) = cli(&["edge", "--file", &path(&f), "a", "zz"]);
    assert_eq!(code, 3, "{err}");
}

#[test]
fn edge_from_graph6_and_designated_edges() {
    let (code, out, _) = cli(&["edge", "--graph6", "C~", "0", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("kappa: 4/3"), "{out}");
    let (code, out, _) = cli(&["edge", "--family", "fixture:example1"]);
    assert_eq!(code, 0);
    assert!(out.contains("kappa: 1/6\n") && out.contains("kappa_0: -1/6\n"), "{out}");
    let (code, out, _) = cli(&["edge", "--family", "sharpness:12"]);
    assert_eq!(code, 0);
    assert!(out.contains("kappa: 0\n") && out.contains("kappa_0: -1/12\n"), "{out}");
}

#[test]
fn exit_codes() {
    // Input errors.
    assert_eq!(cli(&["edge", "--family", "nosuch:3", "0", "1"]).0, 2);
    assert_eq!(cli(&["edge", "--graph6", "!!", "0", "1"]).0, 2);
    assert_eq!(cli(&["edge", "--family", "cycle:5", "0", "1", "--alpha", "x"]).0, 2);
    assert_eq!(cli(&["edge", "--family", "cycle:5", "0", "1", "--alpha", "3/2"]).0, 2);
    assert_eq!(cli(&["edge", "--family", "cycle:5", "0"]).0, 2);
    // Domain errors.
    assert_eq!(cli(&["edge", "--family", "cycle:5", "0", "2"]).0, 3);
    assert_eq!(cli(&["edge", "--family", "cycle:5", "0", "9"]).0, 3);
    assert_eq!(cli(&["census", "7", "3"]).0, 3);
    // Unsupported range.
    assert_eq!(cli(&["census", "12", "3"]).0, 4);
    assert_eq!(cli(&["census", "10", "4"]).0, 4);
}

#[test]
fn binary_exit_codes_and_streams() {
    let bin = env!("CARGO_BIN_EXE_ricci");
    let ok = Command::new(bin).args(["census", "6", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("total: 2"));
    let range = Command::new(bin).args(["census", "11", "3"]).output().unwrap();
    assert_eq!(range.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&range.stderr).starts_with("error:"));
    assert!(range.stdout.is_empty());
}

#[test]
fn census_text_and_json() {
    let (code, out, _) = cli(&["census", "8", "3"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "n = 8, d = 3\ntotal: 5\nric_positive: 2\nricci_flat: 0\nbone_idle: 0\n"
    );
    let (_, out, _) = cli(&["census", "9", "4", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["total"].as_u64(), v["ric_positive"].as_u64()), (Some(16), Some(15)));
}

#[test]
fn graph_command() {
    let (code, out, _) = cli(&["graph", "--family", "bi:6"]);
    assert_eq!(code, 0);
    assert!(out.contains("n: 12  m: 24"), "{out}");
    assert!(out.contains("bone_idle: yes"), "{out}");
    let (code, out, _) = cli(&["graph", "--family", "product cycle:5 cycle:5", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 25);
    assert_eq!(v["class"]["ric_min"]["num"], 1);
    assert_eq!(v["class"]["ric_min"]["den"], 4);
    let (_, out, _) = cli(&["graph", "--family", "fixture:counterexample_9v4r", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["positivity_bound"]["applies"], false);
}

#[test]
fn family_command_formats() {
    assert_eq!(graph6_of(&["complete:4"]), "C~");
    let (code, out, _) = cli(&["family", "cycle:4", "--format", "edgelist"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "4 4");
    assert_eq!(&lines[1..], ["0 1", "0 3", "1 2", "2 3"]);
    assert_eq!(cli(&["family", "bi:5"]).0, 2);
}

fn scan_input() -> String {
    let mut lines = Vec::new();
    for name in ["bi:6", "bi:7", "cycle:12", "petersen", "hypercube:3", "complete:5", "prism:6"] {
        lines.push(graph6_of(&[name]));
    }
    lines.join("\n") + "\n"
}

#[test]
fn scan_csv_and_bone_idle_count() {
    let f = temp_file(&scan_input());
    let (code, out, err) = cli(&["scan", &path(&f)]);
    assert_eq!(code, 0, "{err}");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "id,n,regular_degree,ric_min_num,ric_min_den,ricci_flat,zero_ricci_flat,bone_idle"
    );
    assert_eq!(lines.len(), 1 + 7 + 1);
    assert_eq!(lines[1], "1,12,4,0,1,true,true,true");
    assert_eq!(lines[4], "4,10,3,0,1,true,false,false");
    assert_eq!(
        *lines.last().unwrap(),
        "# total=7,ric_positive=2,ricci_flat=4,bone_idle=3,failed=0"
    );
}

#[test]
fn scan_json_lines() {
    let f = temp_file(&scan_input());
    let (code, out, _) = cli(&["scan", &path(&f), "--emit", "json", "--detail"]);
    assert_eq!(code, 0);
    let records: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 8);
    assert_eq!(records[5]["ric_min"]["num"], 5);
    assert_eq!(records[5]["ric_min"]["den"], 4);
    assert_eq!(records[5]["edges"].as_array().unwrap().len(), 10);
    assert_eq!(records[7]["summary"]["bone_idle"], 3);
    let cube = records[4]["edges"].as_array().unwrap();
    assert_eq!(cube.len(), 12);
    for e in cube {
        assert_eq!((e["kappa"]["num"].as_i64(), e["kappa"]["den"].as_i64()), (Some(2), Some(3)));
    }
}

#[test]
fn scan_of_enumerated_cubic_graphs() {
    let req = ricci_core::enumerate::CensusRequest::new(10, 3).unwrap();
    let mut text = String::new();
    for g in ricci_core::enumerate::enumerate_regular(req) {
        text.push_str(&ricci_core::graph::emit_graph6(&g).unwrap());
        text.push('\n');
    }
    let f = temp_file(&text);
    let (code, out, _) = cli(&["scan", &path(&f), "--jobs", "3"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("# total=19,ric_positive=1,ricci_flat=1,bone_idle=0,failed=0\n"), "{out}");
}

#[test]
fn scan_output_is_independent_of_job_count() {
    let mut text = String::new();
    for _ in 0..150 {
        text.push_str(&scan_input());
    }
    let f = temp_file(&text);
    let base = cli(&["scan", &path(&f), "--jobs", "1"]);
    for jobs in ["2", "4", "8"] {
        assert_eq!(cli(&["scan", &path(&f), "--jobs", jobs]), base, "jobs={jobs}");
    }
    let json1 = cli(&["scan", &path(&f), "--jobs", "1", "--emit", "json"]);
    let json8 = cli(&["scan", &path(&f), "--jobs", "8", "--emit", "json"]);
    assert_eq!(json1, json8);
}

#[test]
fn scan_failures_and_strict_mode() {
    let f = temp_file("C~\n\nnot graph6 !\nA_\n");
    let (code, out, err) = cli(&["scan", &path(&f)]);
    assert_eq!(code, 0);
    assert!(err.contains("line 3:"), "{err}");
    // "A_" is a single edge on two vertices; fine. Blank line 2 is skipped.
    assert!(out.ends_with("# total=2,ric_positive=2,ricci_flat=0,bone_idle=0,failed=1\n"), "{out}");
    assert_eq!(cli(&["scan", &path(&f), "--strict"]).0, 2);

    // Disconnected graph: a domain failure.
    let g = temp_file("C`\n");
    let (code, _, err) = cli(&["scan", &path(&g), "--strict"]);
    assert_eq!(code, 3, "{err}");

    let empty = temp_file("");
    let (code, out, _) = cli(&["scan", &path(&empty)]);
    assert_eq!(code, 0);
    assert!(out.ends_with("# total=0,ric_positive=0,ricci_flat=0,bone_idle=0,failed=0\n"));

    assert_eq!(cli(&["scan", "/definitely/not/here.g6"]).0, 2);
}
