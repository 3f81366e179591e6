use std::path::Path;
use std::process::Command as Process;

use clap::Parser;
use serde_json::Value;

use stabcat::search::{parallel_check_balance, parallel_search};
use stabcat::{run, Cli, CliError, Report};
use stabcat_core::balance::{check_balance, search_counterexample, SearchMode, SearchOptions};
use stabcat_core::catalog::builtin;
use stabcat_core::stable::Decision;
use stabcat_core::Field;

fn cli(args: &[&str]) -> Cli {
    Cli::try_parse_from(std::iter::once("stabcat").chain(args.iter().copied())).unwrap()
}

fn report(args: &[&str]) -> Report {
    run(&cli(args)).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut v = report(args).json;
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

fn binary(args: &[&str]) -> (i32, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_stabcat")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn write_report(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let text = serde_json::to_string(&report(args).json).unwrap();
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn a3_quotient_map_is_not_a_stable_epi() {
    let v = json(&["--workspace", "builtin:a3", "decide", "is-stable-epi", "--morphism", "f", "--T", "T"]);
    assert_eq!(v["answer"], false);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["field"]["p"], 101);
    assert_eq!(v["certificate"]["kind"], "square");
    assert!(v["route"].as_str().unwrap().len() > 5);
}

#[test]
fn a3_stable_hom_from_p2_to_s2_is_one_dimensional() {
    let v = json(&["--workspace", "builtin:a3", "stable-hom", "--from", "P2", "--to", "S2", "--T", "T"]);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["verdict"], 1);
}

#[test]
fn six_vertex_balance_finds_the_witness() {
    for p in ["2", "101"] {
        let args = ["--workspace", "builtin:six_vertex", "--field-p", p, "balance", "--corpus", "all", "--budget", "10000", "--seed", "1"];
        let r = report(&args);
        assert_eq!(r.exit_code, 0);
        let v = &r.json;
        assert_eq!(v["verdict"], "not_balanced");
        let answers: Vec<(String, bool)> = v["witness"]["verdicts"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| (x["decision"].as_str().unwrap().to_string(), x["answer"].as_bool().unwrap()))
            .collect();
        let want = [
            ("is-stable-mono", true),
            ("is-stable-epi", true),
            ("is-strong-mono", true),
            ("is-strong-epi", false),
            ("is-iso", false),
        ];
        assert_eq!(answers, want.map(|(d, a)| (d.to_string(), a)));
        assert_eq!(v["witness"]["morphism"]["to"]["dims"]["5"], 1);
    }
}

#[test]
fn six_vertex_weak_balance_passes_per_summand() {
    let v = json(&["--workspace", "builtin:six_vertex", "weak-balance"]);
    assert_eq!(v["verdict"], "weakly_balanced");
    let gens = v["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 6);
    for (i, g) in gens.iter().enumerate() {
        assert_eq!(g["passes"], true);
        let s = &g["summands"][0];
        assert_eq!(s["envelope_projective"], [0, 1, 2, 5].contains(&i), "generator {i}");
    }
}

#[test]
fn reports_are_deterministic() {
    let cases: [&[&str]; 4] = [
        &["--workspace", "builtin:six_vertex", "balance", "--seed", "7"],
        &["--workspace", "builtin:a3", "--field-p", "2", "balance", "--seed", "3"],
        &["--workspace", "builtin:a3", "decide", "is-iso", "--morphism", "p"],
        &["--workspace", "builtin:a2_serre", "--field-p", "2", "serre", "balance"],
    ];
    for args in cases {
        assert_eq!(json(args), json(args), "{args:?}");
        assert_eq!(report(args).json["seed"], report(args).json["seed"]);
    }
}

#[test]
fn every_decision_certificate_reverifies_on_import() {
    let dir = tempfile::tempdir().unwrap();
    for p in ["2", "101"] {
        for morphism in ["f", "j", "p", "jf"] {
            for d in Decision::ALL.iter().filter(|d| **d != Decision::InAdd) {
                let args = ["--workspace", "builtin:a3", "--field-p", p, "decide", d.name(), "--morphism", morphism];
                let path = write_report(dir.path(), "r.json", &args);
                let v = json(&["--workspace", "builtin:a3", "--field-p", p, "verify", &path]);
                assert_eq!(v["verdict"], "verified", "{} {morphism} over F_{p}", d.name());
            }
        }
        for module in ["P1", "P2", "S2", "I2"] {
            let args = ["--workspace", "builtin:a3", "--field-p", p, "decide", "in-add", "--module", module];
            let path = write_report(dir.path(), "r.json", &args);
            let v = json(&["--workspace", "builtin:a3", "--field-p", p, "verify", &path]);
            assert_eq!(v["verdict"], "verified", "in-add {module}");
        }
    }
}

const A2: &str = r#"{
  "field": {"p": 2},
  "quiver": {"vertices": ["1", "2"], "arrows": [{"name": "a", "from": "1", "to": "2"}]},
  "modules": {
    "P1": {"dims": {"1": 1, "2": 1}, "maps": {"a": [[1]]}},
    "S1": {"dims": {"1": 1}},
    "S2": {"dims": {"2": 1}}
  },
  "subcategories": {"T": ["S2"]}
}"#;

#[test]
fn witness_reports_reverify_on_import() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = dir.path().join("a2.json");
    std::fs::write(&a2, A2).unwrap();
    let a2 = a2.to_str().unwrap();
    let cases: [(&str, &[&str], &str); 3] = [
        ("builtin:six_vertex", &["balance", "--seed", "1"], "not_balanced"),
        ("builtin:a2_serre", &["serre", "balance"], "not_balanced"),
        (a2, &["weak-balance"], "not_weakly_balanced"),
    ];
    for (ws, rest, verdict) in cases {
        let mut args = vec!["--workspace", ws];
        args.extend_from_slice(rest);
        assert_eq!(report(&args).json["verdict"], verdict, "{ws} {rest:?}");
        let path = write_report(dir.path(), "w.json", &args);
        let r = report(&["--workspace", ws, "verify", &path]);
        assert_eq!(r.json["verdict"], "verified", "{ws} {rest:?}");
    }
}

#[test]
fn tampered_certificates_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--workspace", "builtin:a3", "decide", "is-stable-epi", "--morphism", "f"];
    let mut v = report(&args).json;
    v["answer"] = Value::Bool(true);
    let path = dir.path().join("t.json");
    std::fs::write(&path, v.to_string()).unwrap();
    let r = report(&["--workspace", "builtin:a3", "verify", path.to_str().unwrap()]);
    assert_eq!(r.json["verdict"], "rejected");
    assert_eq!(r.exit_code, 1);

    let v = report(&["--workspace", "builtin:a3", "decide", "is-stable-zero", "--morphism", "jf"]).json;
    assert_eq!(v["certificate"]["kind"], "factorization");
    let mut bad = v.clone();
    bad["certificate"]["second"]["maps"]["2"] = serde_json::json!([[0]]);
    std::fs::write(&path, bad.to_string()).unwrap();
    let out = run(&cli(&["--workspace", "builtin:a3", "verify", path.to_str().unwrap()]));
    match out {
        Ok(r) => assert_eq!(r.json["verdict"], "rejected"),
        Err(e) => assert!(matches!(e, CliError::Validation { .. })),
    }
}

#[test]
fn verify_refuses_a_report_over_another_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_report(dir.path(), "r.json", &["--workspace", "builtin:a3", "decide", "is-iso", "--morphism", "f"]);
    let err = run(&cli(&["--workspace", "builtin:a3", "--field-p", "2", "verify", &path])).unwrap_err();
    assert!(matches!(err, CliError::Validation { .. }));
}

#[test]
fn parallel_search_matches_the_sequential_one() {
    for p in [2, 101] {
        let sc = builtin("six_vertex", Field::new(p).unwrap()).unwrap();
        let ctx = sc.context("T").unwrap();
        for seed in [0, 1, 5] {
            for mode in [SearchMode::Balance, SearchMode::WeakBalance] {
                let opts = SearchOptions { seed, mode, budget: 400, ..SearchOptions::default() };
                let a = search_counterexample(&ctx, &sc.modules, &opts).unwrap();
                let b = parallel_search(&ctx, &sc.modules, &opts).unwrap();
                assert_eq!(a.verdict, b.verdict);
                assert_eq!(a.stats, b.stats);
                assert_eq!(a.witness.map(|w| w.morphism), b.witness.map(|w| w.morphism));
            }
        }
        let sc = builtin("a3", Field::new(p).unwrap()).unwrap();
        let ctx = sc.context("T").unwrap();
        let opts = SearchOptions::default();
        let a = check_balance(&ctx, &sc.modules, &opts).unwrap();
        let b = parallel_check_balance(&ctx, &sc.modules, &opts).unwrap();
        assert_eq!((a.verdict, a.route, a.stats), (b.verdict, b.route, b.stats));
    }
}

#[test]
fn examples_report_their_facts() {
    for name in ["a3", "six_vertex", "a2_serre", "tn(1)", "tn(3)"] {
        for p in ["2", "101"] {
            let r = report(&["--field-p", p, "example", name]);
            assert_eq!(r.exit_code, 0, "{name} over F_{p}");
            assert_eq!(r.json["verdict"], "all facts hold");
            assert!(r.json["facts"].as_array().unwrap().iter().all(|f| f["holds"] == true));
        }
    }
}

#[test]
fn exported_examples_load_as_workspaces() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("six.json");
    let text = report(&["example", "six_vertex", "--export"]).text;
    std::fs::write(&path, &text).unwrap();
    let ws = path.to_str().unwrap();
    let v = json(&["--workspace", ws, "check"]);
    assert_eq!(v["verdict"], "valid");
    assert_eq!(v["vertices"], 6);
    let from_file = json(&["--workspace", ws, "balance", "--seed", "1"]);
    let builtin = json(&["--workspace", "builtin:six_vertex", "balance", "--seed", "1"]);
    assert_eq!(from_file, builtin);
}

#[test]
fn loop_and_suspension_objects() {
    let v = json(&["--workspace", "builtin:a3", "omega", "--module", "S2"]);
    assert_eq!(v["is_zero"], true);
    let v = json(&["--workspace", "builtin:a3", "sigma", "--module", "P2"]);
    assert_eq!(v["verdict"]["dims"], serde_json::json!({"1": 1, "2": 0, "3": 0}));
    let v = json(&["--workspace", "builtin:a3", "approx", "precover", "--module", "I2"]);
    assert_eq!(v["verdict"]["dims"], serde_json::json!({"1": 1, "2": 1, "3": 1}));
    let v = json(&["--workspace", "builtin:a3", "approx", "preenvelope", "--module", "P3"]);
    assert_eq!(v["verdict"]["dims"], serde_json::json!({"1": 1, "2": 1, "3": 1}));
}

#[test]
fn serre_torsion_and_hom() {
    let v = json(&["--workspace", "builtin:a2_serre", "serre", "torsion", "--module", "P1"]);
    assert_eq!(v["verdict"]["dims"], serde_json::json!({"1": 0, "2": 1}));
    let v = json(&["--workspace", "builtin:six_vertex", "--field-p", "2", "hom", "--from", "E", "--to", "P1"]);
    assert!(v["dim"].as_u64().is_some());
    assert_eq!(v["basis"].as_array().unwrap().len() as u64, v["dim"].as_u64().unwrap());
}

#[test]
fn hereditary_reports() {
    let v = json(&["--workspace", "builtin:a3", "--field-p", "2", "hereditary"]);
    assert_eq!(v["verdict"], "balanced-evidence");
    let err = run(&cli(&["--workspace", "builtin:a3", "hereditary"])).unwrap_err();
    assert_eq!(err.exit_code(), 3);
    let v = json(&["--workspace", "builtin:a3", "hereditary", "--any-field"]);
    assert_eq!(v["verdict"], "balanced-evidence");
}

#[test]
fn usage_errors() {
    let cases: [&[&str]; 5] = [
        &["--workspace", "builtin:a3", "decide", "is-stable-epi"],
        &["--workspace", "builtin:a3", "decide", "is-fancy", "--morphism", "f"],
        &["--workspace", "builtin:a3", "decide", "in-add", "--morphism", "f"],
        &["check"],
        &["--workspace", "builtin:a2_serre", "serre", "balance", "--serre", "nope"],
    ];
    for args in cases {
        let e = run(&cli(args)).unwrap_err();
        assert_eq!(e.exit_code(), 2, "{args:?}");
    }
    let e = run(&cli(&["--workspace", "builtin:nope", "check"])).unwrap_err();
    assert!(matches!(e, CliError::Library(_)));
}

#[test]
fn exit_codes_from_the_binary() {
    let (code, out) = binary(&["--workspace", "builtin:a3", "decide", "is-stable-epi", "--morphism", "f", "--expect", "false"]);
    assert_eq!(code, 0);
    assert!(out.contains("is-stable-epi f: false"), "{out}");
    let (code, _) = binary(&["--workspace", "builtin:a3", "decide", "is-stable-epi", "--morphism", "f", "--expect", "true"]);
    assert_eq!(code, 1);
    let (code, _) = binary(&["--workspace", "/nonexistent/ws.json", "check"]);
    assert_eq!(code, 2);
    let (code, out) = binary(&["--workspace", "builtin:six_vertex", "--budget", "5", "balance", "--format", "json"]);
    assert_eq!(code, 3);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "undetermined");
    assert_eq!(v["stats"]["budget_exhausted"], true);
    let (code, out) = binary(&["--workspace", "builtin:a3", "hereditary", "--format", "json"]);
    assert_eq!(code, 3);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["kind"], "budget_exceeded");
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.txt");
    let (code, out) = binary(&["--workspace", "builtin:a3", "check", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("check: valid"), "{text}");
    assert!(text.contains("subcategory T = add(P1)"), "{text}");
}
