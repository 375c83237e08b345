use std::process::{Command, Output};

use serde_json::Value;

fn twistlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistlab")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn smooth_locus_example() {
    let out = twistlab(&["smooth-locus", "--type", "A", "--rank", "2", "--m", "4", "--lambda", "2,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["variant"], "special");
    assert_eq!(v["lambda"], serde_json::json!([4]));
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 3);
    // γ₁ = 2ϖ₁
    assert_eq!(cells[1]["mu"], serde_json::json!([2]));
    assert_eq!(cells[1]["verdict"], "singular");
    assert_eq!(cells[2]["reason"], "step1-c-ell-even");
}

#[test]
fn fractional_coweight_names_the_averaged_class() {
    let half = twistlab(&["smooth-locus", "--type", "A", "--rank", "4", "--m", "4", "--lambda", "0,1/2,1/2,0"]);
    let whole = twistlab(&["smooth-locus", "--type", "A", "--rank", "4", "--m", "4", "--lambda", "0,1,0,0"]);
    assert_eq!(half.status.code(), Some(0));
    assert_eq!(json(&half)["lambda"], json(&whole)["lambda"]);
}

#[test]
fn fold_e6() {
    let v = json(&twistlab(&["fold", "--type", "E", "--rank", "6", "--m", "2"]));
    assert_eq!(v["fixed_type"], "F4");
    assert_eq!(v["level_one_set"], serde_json::json!([[0, 0, 0, 0]]));
    assert_eq!(v["eta"], serde_json::json!([4, 1, 3, 2, 3, 4]));
    assert_eq!(v["passed"], true);
}

#[test]
fn e6_scorecard() {
    let out = twistlab(&["e6-duality"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let s = &v["scorecard"];
    assert_eq!(s["orbit_size"], 240);
    assert_eq!(s["rank"], 45);
    for k in ["vzero_nonzero", "levi_extremal_ok", "chain_ok", "poset_ok"] {
        assert_eq!(s[k], true, "{k}");
    }
    // progress goes to stderr only
    assert!(!out.stderr.is_empty());
}

#[test]
fn output_is_deterministic_across_runs_and_jobs() {
    let args = ["hyperspecial-check", "--ell", "2", "--degree", "5"];
    let a = twistlab(&[&args[..], &["--jobs", "1"]].concat());
    let b = twistlab(&[&args[..], &["--jobs", "4"]].concat());
    let c = twistlab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let a = twistlab(&["levi-extremal", "--jobs", "1"]);
    let b = twistlab(&["levi-extremal", "--jobs", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_and_input_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["fold", "--type", "A", "--rank", "3", "--m", "2", "--bogus"],
        &["fold", "--type", "A", "--rank", "4", "--m", "2"],
        &["fold", "--type", "Q", "--rank", "4", "--m", "2"],
        &["smooth-locus", "--type", "A", "--rank", "4", "--m", "4", "--class", "0,1"],
        &["smooth-locus", "--type", "A", "--rank", "4", "--m", "4", "--class", "1/2,0"],
        &["smooth-locus", "--type", "A", "--rank", "4", "--m", "4", "--class", "1,-1"],
        &["smooth-locus", "--type", "A", "--rank", "2", "--m", "4", "--lambda", "2,0", "--class", "4"],
        &["smooth-locus", "--type", "E", "--rank", "6", "--m", "2", "--lambda", "0,1,0,0,0,0", "--variant", "absolutely-special"],
        &["dominance", "--type", "D", "--rank", "4", "--m", "3", "--lambda", "1,1"],
        &["hyperspecial-check", "--ell", "1", "--degree", "2"],
        &["rootsys", "--type", "A", "--rank", "0"],
    ] {
        let out = twistlab(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn tsv_output() {
    let out = twistlab(&["numbers-game", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("schema_version\t1\n"));
    assert!(text.contains("\n# poset\nweight\tstar\tout\n"));
}

#[test]
fn rootsys_e8() {
    let v = json(&twistlab(&["rootsys", "--type", "E", "--rank", "8"]));
    assert_eq!(v["positive_roots"], 120);
    assert_eq!(v["weyl_group_order"], 696729600u64);
    assert_eq!(v["passed"], true);
    let v = json(&twistlab(&["rootsys", "--type", "E", "--rank", "7"]));
    assert_eq!(v["minuscule_nodes"], serde_json::json!([7]));
    assert_eq!(v["minuscule_cosets"][0]["coset_reps"], 56);
}
