use std::process::{Command, Output};

use serde_json::Value;

fn gbgw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gbgw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn tau_order_one_is_mu0_t1() {
    let out = gbgw(&["tau", "--order", "3", "--nu", "symbolic"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["orders"], 3);
    let first = v["tau"][1].as_array().unwrap();
    let terms: Vec<(String, u64, u64)> = first
        .iter()
        .map(|t| {
            (
                t["coeff"].as_str().unwrap().to_string(),
                t["nu"].as_u64().unwrap(),
                t["t"]["1"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(terms, vec![("1/16".into(), 0, 1), ("-1/4".into(), 1, 1)]);
}

#[test]
fn schur_level_two_matches_printed_polynomial() {
    let v = json(&gbgw(&["schur", "--level", "2"]));
    let terms: Vec<(String, Value)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["coeff"].as_str().unwrap().to_string(), t["t"].clone()))
        .collect();
    let expect = [
        ("1/1", serde_json::json!({})),
        ("-3/2", serde_json::json!({"1": 1})),
        ("3/4", serde_json::json!({"1": 2})),
        ("3/8", serde_json::json!({"3": 1})),
        ("-1/8", serde_json::json!({"1": 3})),
    ];
    assert_eq!(terms.len(), expect.len());
    for (c, t) in expect {
        assert!(terms.contains(&(c.to_string(), t)));
    }
}

#[test]
fn output_is_deterministic() {
    let a = gbgw(&["free-energy", "--genus", "2", "--form", "moments"]);
    let b = gbgw(&["free-energy", "--genus", "2", "--form", "moments"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["pieces"][0]["F"][0]["coeff"], "9/128");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["tau", "--order", "-1"][..],
        &["tau", "--order", "2", "--nu", "1/0"],
        &["tau", "--order", "2", "--nu", "abc"],
        &["verify", "--suite", "nope"],
        &["correlator", "-g", "0", "--n", "3", "--format", "csv"],
        &["free-energy", "--genus", "1", "--form", "bdecomp"],
        &["bench", "--order", "0"],
    ] {
        let out = gbgw(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn csv_for_flat_tables() {
    let out = gbgw(&["tau", "-k", "1", "--format", "csv"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "order,nu_power,monomial,coeff\n0,0,1,1/1\n1,0,t1,1/16\n1,1,t1,-1/4\n"
    );
}

#[test]
fn correlator_forms() {
    let v = json(&gbgw(&[
        "correlator",
        "-g",
        "1",
        "--n",
        "1",
        "--coords",
        "x",
    ]));
    assert_eq!(v["components"]["u1"]["numerator"], "4*x1^2");
    let v = json(&gbgw(&[
        "correlator",
        "-g",
        "0",
        "--n",
        "3",
        "--coords",
        "z",
    ]));
    let coeffs = v["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 1);
    assert_eq!(coeffs[0]["coeff"], "8/1");
}

#[test]
fn bench_reports_term_counts() {
    let v = json(&gbgw(&["bench", "--order", "1"]));
    assert_eq!(v["term_counts"], serde_json::json!([1, 2]));
}

#[test]
fn verify_suite_passes_and_writes_file() {
    let dir = std::env::temp_dir().join(format!("gbgw-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("schur.json");
    let out = gbgw(&[
        "verify",
        "--suite",
        "schur",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["schur"]["counts"]["fail"], 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_all_exits_zero() {
    let out = gbgw(&["verify", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for suite in [
        "cutjoin",
        "virasoro",
        "schur",
        "freenergy",
        "sato",
        "correlators",
    ] {
        assert_eq!(v[suite]["counts"]["fail"], 0, "{suite}");
    }
}
