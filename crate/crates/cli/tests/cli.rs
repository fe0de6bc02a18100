use std::path::PathBuf;
use std::process::{Command, Output};

use monogenic_cli::{example, example_spec, parse_document, parse_spec};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_monogenic"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("monogenic-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_example(name: &str) -> PathBuf {
    let path = tmp(&format!("{}.json", name.replace(':', "_")));
    let out = bin().args(["example", name, "-o"]).arg(&path).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn run(args: &[&str], spec: &PathBuf) -> Output {
    bin().args(args).arg("--spec").arg(spec).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn sweedler_hh_with_oracle() {
    let p = write_example("sweedler");
    let out = run(&["hh", "--max-degree", "6", "--oracle", "--json"], &p);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dimensions"]["dims"], serde_json::json!([2, 1, 1, 1, 1, 1]));
    assert_eq!(v["comparisons"][0]["agrees"], true);
    assert_eq!(v["hypotheses"]["collapse"], true);
    assert_eq!(v["hypotheses"]["lambda_breve"]["holds"], true);
}

#[test]
fn trunc3_closed_form() {
    let p = write_example("trunc:3");
    let out = run(&["hh", "--closed-form", "--json"], &p);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dimensions"]["dims"], serde_json::json!([3, 2, 2, 2, 2, 2]));
    assert_eq!(v["comparisons"][0]["agrees"], true);
}

#[test]
fn hc_examples() {
    let p = write_example("sweedler");
    let v = json(&run(&["hc", "--max-degree", "5", "--oracle", "--json"], &p));
    assert_eq!(v["dimensions"]["dims"], serde_json::json!([2, 1, 2, 1, 2]));
    let p = write_example("rank1:c4");
    let out = run(&["hc", "--max-degree", "5", "--closed-form"], &p);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("displayed reading"), "{}", text);
    assert!(text.contains("cycle condition"), "{}", text);
    let p = write_example("taft:3");
    let v = json(&run(&["hc", "--max-degree", "3", "--json"], &p));
    assert_eq!(v["dimensions"]["dims"], serde_json::json!([3, 2, 3]));
}

#[test]
fn dihedral_warns_and_uses_generic_path() {
    let p = write_example("dihedral:3");
    let out = run(&["hh", "--max-degree", "4"], &p);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("warning: collapse condition fails"), "{}", text);
    let out = run(&["hh", "--decompose"], &p);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--decompose refused"));
}

#[test]
fn verify_exit_codes() {
    for name in ["sweedler", "trunc:3", "taft:3"] {
        let p = write_example(name);
        let out = run(&["verify", "--json"], &p);
        assert_eq!(out.status.code(), Some(0), "{}", name);
        let v = json(&out);
        assert!(v["identities"].as_array().unwrap().iter().all(|i| i["pass"] == true));
        if name == "trunc:3" {
            assert_eq!(v["hypotheses"]["collapse"], false);
        }
    }
}

#[test]
fn validation_failures_exit_one() {
    let p = write_example("trunc:1");
    let out = run(&["hh"], &p);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree n >= 2"));

    let text = std::fs::read_to_string(write_example("dihedral:3")).unwrap().replace("\"-1\"", "\"2\"");
    let bad = tmp("bad_character.json");
    std::fs::write(&bad, text).unwrap();
    let out = run(&["hh"], &bad);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not multiplicative"));

    let broken = tmp("broken.json");
    std::fs::write(&broken, "{\n  \"field\": {\"kind\": \"rational\"},\n  \"base_algebra\": 7\n}").unwrap();
    let out = run(&["hc"], &broken);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let out = bin().args(["example", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reports_are_deterministic() {
    let p = write_example("taft:3");
    let a = run(&["hc", "--closed-form", "--oracle", "--basis", "--json"], &p);
    let b = run(&["hc", "--closed-form", "--oracle", "--basis", "--json"], &p);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["hh", "--decompose", "--basis"], &p);
    let b = run(&["hh", "--decompose", "--basis"], &p);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn examples_round_trip() {
    for name in ["trunc:2", "trunc:4", "sweedler", "taft:2", "taft:3", "rank1:c4", "rank1nc", "rank1nc:c2xc4", "dihedral:3", "dihedral:6"] {
        let doc = example(name).unwrap();
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let back = parse_document(&text).unwrap();
        assert_eq!(back, doc, "{}", name);
        parse_spec(&back).unwrap_or_else(|e| panic!("{}: {}", name, e));
    }
}

#[test]
fn sweedler_is_taft_two() {
    let mut s = example("sweedler").unwrap();
    let t = example("taft:2").unwrap();
    s.name = t.name.clone();
    assert_eq!(s, t);
}

#[test]
fn rank1nc_rewrites_over_quotient() {
    let s = example_spec("rank1nc:c2xc4").unwrap();
    assert_eq!(s.algebra.dim_k(), 8);
    assert!(s.hypotheses.chi_n_case.as_deref().unwrap().contains("rewritten"));
    assert!(s.notes.iter().any(|n| n.contains("b^2")));
    assert!(s.hypotheses.lambda_breve.as_ref().unwrap().holds);
}

#[test]
fn dihedral_example_table() {
    let d = example("dihedral:3").unwrap();
    let v = serde_json::to_value(&d).unwrap();
    assert_eq!(v["base_algebra"]["labels"].as_array().unwrap().len(), 6);
    assert_eq!(v["endomorphism"]["values"]["h"], "-1");
    assert_eq!(v["endomorphism"]["values"]["g"], "1");
    assert_eq!(v["endomorphism"]["values"]["g^2h"], "-1");
    assert_eq!(example_spec("dihedral:3").unwrap().dihedral, Some(3));
}

#[test]
fn structure_constant_spec() {
    // K = Q x Q with alpha swapping the idempotents, f = x^2
    let text = r#"{
      "name": "swap",
      "field": {"kind": "rational"},
      "base_algebra": {"kind": "structure_constants", "labels": ["p", "q"],
        "unit": {"p": "1", "q": "1"},
        "products": [[{"p": "1"}, {}], [{}, {"q": "1"}]]},
      "endomorphism": {"kind": "matrix", "rows": [["0", "1"], ["1", "0"]]},
      "extension": {"n": 2}
    }"#;
    let s = parse_spec(&parse_document(text).unwrap()).unwrap();
    let rep = monogenic_cli::cmd_hh(&s, 4, monogenic_cli::Flags { oracle: true, ..Default::default() }).unwrap();
    assert!(rep.passes());
}
