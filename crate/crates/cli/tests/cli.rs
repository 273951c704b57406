use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn hodge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodge")).args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let path: PathBuf = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const CHAIN: &str = r#"{"elements": ["a", "b", "c"], "covers": [["a", "b"], ["b", "c"]]}"#;
const TWO_CHAINS: &str = r#"{"elements": ["a", "b", "c", "d"], "covers": [["a", "b"], ["c", "d"]]}"#;
const ANTICHAIN: &str = r#"{"elements": ["a", "b"], "covers": []}"#;

#[test]
fn check_poset_on_a_chain() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "chain.json", CHAIN);
    let out = hodge(&["check-poset", &f, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["pure"], true);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["fields"].as_array().unwrap().len(), 2);
    for f in v["fields"].as_array().unwrap() {
        assert_eq!(f["cm"], true);
        assert_eq!(f["depth"], 3);
    }
}

#[test]
fn check_poset_on_two_chains() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "two.json", TWO_CHAINS);
    let v = json(&hodge(&["check-poset", &f, "--json", "--char", "0"]));
    let fields = v["fields"].as_array().unwrap();
    assert_eq!(fields.len(), 1);
    assert_eq!(fields[0]["field"]["char"], 0);
    assert_eq!(fields[0]["cm"], false);
    assert_eq!(fields[0]["buchsbaum"], true);
}

#[test]
fn malformed_input_exits_with_two_and_line_context() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.json", "{\n  \"elements\": [\"a\",\n}\n");
    let out = hodge(&["check-poset", &f]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
    let cyclic = write(&dir, "cycle.json", r#"{"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]}"#);
    assert_eq!(hodge(&["check-poset", &cyclic]).status.code(), Some(2));
    assert_eq!(hodge(&["check-poset", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn uplus_chain_with_minimal_element() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "chain.json", CHAIN);
    let q = write(&dir, "q.json", r#"{"ideal": ["a"]}"#);
    let out = hodge(&["uplus", &p, &q, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["uplus"]["elements"], serde_json::json!(["a", "b", "c", "a*"]));
    for r in v["reports"].as_array().unwrap() {
        for key in ["cm_p", "cm_uplus", "a_negative", "cond_q", "cond_interval", "consistent"] {
            assert_eq!(r[key], true, "{key}");
        }
    }
}

#[test]
fn uplus_antichain() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "anti.json", ANTICHAIN);
    let q = write(&dir, "q.json", r#"{"ideal": ["a"]}"#);
    let v = json(&hodge(&["uplus", &p, &q, "--json"]));
    let r = &v["reports"][0];
    assert_eq!(r["cm_p"], true);
    assert_eq!(r["a_negative"], false);
    assert_eq!(r["cm_uplus"], false);
    assert_eq!(r["consistent"], true);
}

#[test]
fn uplus_degenerate_and_invalid_ideals() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "chain.json", CHAIN);
    let empty = write(&dir, "empty.json", r#"{"ideal": []}"#);
    let out = hodge(&["uplus", &p, &empty, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(json(&out)["reports"][0]["degenerate"], "empty_q");
    assert_eq!(json(&out)["reports"][0]["a_negative"], Value::Null);
    let not_ideal = write(&dir, "up.json", r#"{"ideal": ["b"]}"#);
    assert_eq!(hodge(&["uplus", &p, &not_ideal]).status.code(), Some(2));
    let starred = write(&dir, "star.json", r#"{"elements": ["a*"], "covers": []}"#);
    assert_eq!(hodge(&["uplus", &starred, &empty]).status.code(), Some(2));
}

#[test]
fn detsym_reports_and_cap() {
    let v = json(&hodge(&["detsym", "--n", "3", "--char", "0", "--json"]));
    let r = &v[0];
    assert_eq!((r["dim"].as_u64(), r["depth"].as_u64()), (Some(3), Some(2)));
    assert_eq!((r["core_dim"].as_u64(), r["core_depth"].as_u64()), (Some(1), Some(0)));
    let v = json(&hodge(&["detsym", "--n", "4", "--char", "2", "--json"]));
    assert_eq!(v[0]["dim"], 4);
    assert_eq!(v[0]["core_dim"], 2);
    let out = hodge(&["detsym", "--n", "99"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    assert_eq!(hodge(&["detsym", "--n", "3", "--t", "3"]).status.code(), Some(2));
}

#[test]
fn sweep_small_sizes() {
    let out = hodge(&["sweep", "--max-elements", "4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["first_counterexample"], Value::Null);
    assert_eq!(v["posets"], 1 + 1 + 2 + 7 + 40);
    let vacuous = json(&hodge(&["sweep", "--max-elements", "0", "--json"]));
    assert_eq!(vacuous["pairs"], 1);
    let labelled = json(&hodge(&["sweep", "--max-elements", "3", "--labelled", "--random", "5", "--json"]));
    assert_eq!(labelled["posets"], 1 + 1 + 3 + 19 + 5);
    assert_eq!(hodge(&["sweep", "--max-elements", "7"]).status.code(), Some(2));
}

#[test]
fn homology_of_complex_and_poset() {
    let dir = TempDir::new().unwrap();
    let rp2 = write(
        &dir,
        "rp2.json",
        r#"{"vertices": ["1","2","3","4","5","6"], "facets": [
            ["1","2","3"],["1","3","4"],["1","4","5"],["1","5","6"],["1","6","2"],
            ["2","3","5"],["3","4","6"],["4","5","2"],["5","6","3"],["6","2","4"]]}"#,
    );
    let v = json(&hodge(&["homology", &rp2, "--json", "--char", "0", "--char", "2"]));
    assert_eq!(v["homology"][0]["betti"], serde_json::json!([0, 0, 0, 0]));
    assert_eq!(v["homology"][1]["betti"], serde_json::json!([0, 0, 1, 1]));
    let p = write(&dir, "two.json", TWO_CHAINS);
    let v = json(&hodge(&["homology", &p, "--json", "--char", "0"]));
    assert_eq!(v["homology"][0]["betti"], serde_json::json!([0, 1, 0]));
    let c = json(&hodge(&["check-complex", &rp2, "--json"]));
    assert_eq!(c["reports"][0]["cm"], true);
    assert_eq!(c["reports"][1]["cm"], false);
    assert_eq!(c["reports"][1]["depth"], 2);
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "two.json", TWO_CHAINS);
    let q = write(&dir, "q.json", r#"{"ideal": ["a", "c"]}"#);
    let a = hodge(&["uplus", &p, &q, "--json"]).stdout;
    let b = hodge(&["uplus", &p, &q, "--json"]).stdout;
    assert_eq!(a, b);
    let text = String::from_utf8(hodge(&["uplus", &p, &q]).stdout).unwrap();
    assert!(text.contains("consistent"));
}
