use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

const SPEC: &str = "\
field Q
quaternion D = (-1, -1)
element c in D = [0, 4, 0, 0]
algebra A = cay(D, i)
algebra A4 = cay(D, c)
algebra Ar = cay_r(D, i)
quaternion M = (1, 1)
algebra S = cay(M, i)
";

fn spec_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().expect("temp file");
    f.write_all(text.as_bytes()).expect("write spec");
    f
}

fn dickson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dickson")).args(args).env_remove("DICKSON_SEED").output().expect("dickson runs")
}

fn with_spec(text: &str, args: &[&str]) -> Output {
    let f = spec_file(text);
    let mut all = args.to_vec();
    all.extend(["--spec", f.path().to_str().expect("utf-8 path")]);
    dickson(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn keys(v: &Value) -> Vec<String> {
    let mut k: Vec<String> = v.as_object().expect("object").keys().cloned().collect();
    k.sort();
    k
}

#[test]
fn analyze_reports_fingerprint_and_provenance() {
    let o = with_spec(SPEC, &["analyze", "A"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("nucleus   left 1 middle 1 right 1 full 1"), "{text}");
    assert!(text.contains("Der       dim 4"), "{text}");
    assert!(text.contains("placement cay\n"), "{text}");

    let o = with_spec(SPEC, &["analyze", "D"]);
    assert!(stdout(&o).contains("nucleus   left 4 middle 4 right 4 full 4"));
}

#[test]
fn json_schema_keys_are_fixed() {
    let o = with_spec(SPEC, &["analyze", "A", "--json"]);
    let v = json(&o);
    assert_eq!(keys(&v), ["algebra", "certificates", "field", "fingerprint", "placement", "scalar", "versions"]);
    assert_eq!(
        keys(&v["fingerprint"]),
        [
            "center",
            "comm",
            "der_center_dim",
            "der_derived_dim",
            "der_dim",
            "derived_kernel_dim",
            "division",
            "nuc",
            "nuc_l",
            "nuc_m",
            "nuc_r",
            "third_power_assoc_at_l",
        ]
    );
    assert_eq!(v["field"], "Q");
    assert_eq!(v["placement"], "cay");
    assert_eq!(v["scalar"], "i");
    assert_eq!(v["fingerprint"]["der_dim"], 4);
    assert_eq!(v["fingerprint"]["third_power_assoc_at_l"], false);
    assert_eq!(v["fingerprint"]["division"], "division");
}

#[test]
fn certify_reports_reasons() {
    let o = dickson(&["certify", "cay_h_i"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("division (Hilbert symbol -1, c not in F)"), "{}", stdout(&o));
    let o = dickson(&["certify", "oct16"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("division (norm 2 not a square)"), "{}", stdout(&o));
    let o = with_spec(SPEC, &["certify", "S"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("re-verified: true"));
}

#[test]
fn probe_exit_codes_and_seeds() {
    let o = with_spec(SPEC, &["probe", "S", "--trials", "50"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("witness x ="), "{}", stdout(&o));

    let o = with_spec(SPEC, &["probe", "A", "--trials", "40", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let cert = &json(&o)["certificates"][0];
    assert_eq!(cert["verdict"], "probabilistic_no_witness");
    assert_eq!(cert["seed"], dickson_cli::criteria::DEFAULT_SEED);
    assert_eq!(cert["trials"], 40);

    let f = spec_file(SPEC);
    let path = f.path().to_str().unwrap();
    let run = |extra: &[&str]| {
        let mut args = vec!["probe", "A", "--trials", "10", "--json", "--spec", path];
        args.extend(extra);
        Command::new(env!("CARGO_BIN_EXE_dickson")).args(&args).env("DICKSON_SEED", "77").output().unwrap()
    };
    assert_eq!(json(&run(&[]))["certificates"][0]["seed"], 77);
    assert_eq!(json(&run(&["--seed", "5"]))["certificates"][0]["seed"], 5);
}

#[test]
fn isocheck_examples() {
    let o = dickson(&["isocheck", "--map", "inner(a=i, z=1)", "cay_h_i"]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("verdict pass"));

    let o = dickson(&["isocheck", "--map", "explicit(identity)", "cay_h_i", "cay_r_h_i"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("basis pair"), "{}", stdout(&o));

    let o = with_spec(SPEC, &["isocheck", "--map", "scale(id, m=2)", "A", "A4"]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));

    let o = with_spec(SPEC, &["isocheck", "--map", "scale(id, m=3)", "A", "A4", "--json"]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&o);
    assert_eq!(v["verdict"], "fail");
    assert!(v["failure"].as_str().unwrap().contains("basis pair"));
}

#[test]
fn user_errors_exit_2() {
    let o = with_spec(SPEC, &["analyze", "Nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown algebra 'Nope'"));

    let o = with_spec("field Q\nquaternion D = (-1, -1)\nalgebra A = cay(E, i)\n", &["analyze"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(":3:17: UnknownName"), "{}", stderr(&o));

    let o = with_spec("field GF(4)\n", &["analyze"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("SyntaxError"));

    let o = with_spec("field Q\nquaternion2 D = [1, 1)\n", &["analyze"]);
    assert!(stderr(&o).contains("WrongCharacteristic"), "{}", stderr(&o));

    for map in ["inner(q=1)", "warp(2)", "scale(id, m=0)"] {
        let o = dickson(&["isocheck", "--map", map, "cay_h_i"]);
        assert_eq!(o.status.code(), Some(2), "{map}: {}", stderr(&o));
    }
    assert_eq!(dickson(&["catalog", "--only", "nosuchtag"]).status.code(), Some(2));
    assert_eq!(dickson(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(dickson(&["probe", "cay_h_i", "--trials", "x"]).status.code(), Some(2));
    assert_eq!(dickson(&["--help"]).status.code(), Some(0));
}

#[test]
fn catalog_char2_subset_is_probe_only() {
    let o = dickson(&["catalog", "--only", "char2", "--json", "--trials", "200"]);
    let v = json(&o);
    let names: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["algebra"]["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["char2_cay", "char2_cay_m", "char2_cay_r"]);
    for e in v["entries"].as_array().unwrap() {
        assert_eq!(e["field"], "GF(2)(t)");
        assert_eq!(e["certificates"][0]["method"], "probe");
    }
    let ids: Vec<&str> = v["expectations"].as_array().unwrap().iter().map(|x| x["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["criterion-11"]);
    let all_hold = v["entries"].as_array().unwrap().iter().all(|e| e["holds"] == true)
        && v["expectations"].as_array().unwrap().iter().all(|x| x["holds"] == true);
    assert_eq!(o.status.code(), Some(if all_hold { 0 } else { 1 }));
}

#[test]
fn catalog_entries_are_sorted() {
    let o = dickson(&["catalog", "--only", "baseline", "--json"]);
    let v = json(&o);
    let names: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["algebra"]["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["hamilton", "nonassoc_quat"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
