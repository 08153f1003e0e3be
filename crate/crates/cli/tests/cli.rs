use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_newtonpoly"))
        .args(args)
        .env_remove("NEWTONPOLY_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let o = run(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    serde_json::from_str(&stdout(&a)).unwrap()
}

#[test]
fn polygon_sum_is_canonical() {
    let v = json(&[
        "polygon",
        "sum",
        r#"{"edges":[{"l":2,"h":1}]}"#,
        r#"{"edges":[{"l":3,"h":2}]}"#,
    ]);
    assert_eq!(v["edges"][0]["l"], 3);
    assert_eq!(v["edges"][1]["l"], 2);
    assert_eq!(
        stdout(&["polygon", "sum", "{2/1}", "{3/2}"]),
        "{3/2}+{2/1}\n"
    );
}

#[test]
fn polygon_verbs() {
    assert_eq!(stdout(&["polygon", "product", "{2/1}", "{1/2}"]), "{2/1}\n");
    assert_eq!(
        stdout(&["polygon", "decompose", "{4/2}+{1/3}"]),
        "{1/3}\n{4/2}\n"
    );
    assert_eq!(
        stdout(&["polygon", "dominates", "{8/2}+{48/6}", "{56/7}"]),
        "true\n"
    );
    assert_eq!(
        stdout(&["polygon", "render", "{2/1}"]),
        "exp y\n1 |*## (0,1)\n0 |..* (2,0)\n  +--- exp x\n   012\n"
    );
    let svg = stdout(&["polygon", "render", "--format", "svg", "{2/1}", "{1/2}"]);
    assert!(svg.starts_with("<?xml") && svg.contains("</svg>"));
}

#[test]
fn merle_report() {
    let v = json(&["curve", "merle", "<4,6,13>", "--report"]);
    assert_eq!(v["mu"], 16);
    assert_eq!(v["pairs"], serde_json::json!([[5, 1], [11, 2]]));
    assert_eq!(v["report"]["mu_n"], 16);
    assert_eq!(stdout(&["curve", "invert", "{5/1}+{11/2}"]), "<4,6,13>\n");
}

#[test]
fn cusp_invariants() {
    let v = json(&["curve", "invariants", "y^2 - x^3"]);
    let r = &v["report"];
    assert_eq!(
        (r["mu_n"].clone(), r["theta2"].clone()),
        (2.into(), "2".into())
    );
    assert_eq!(
        (r["theta1"].clone(), r["determinacy"].clone()),
        ("2/3".into(), 3.into())
    );
    assert_eq!(r["is_Ak"], true);
}

#[test]
fn series_and_puiseux() {
    assert_eq!(
        stdout(&["series", "intersect", "y - x^2", "y^2 + x^3"]),
        "3\n"
    );
    assert_eq!(
        stdout(&["series", "polygon", "(y - x)*(y - x^2)*(y^2 - x^3)"]),
        "{1/1}+{3/2}+{2/1}\n"
    );
    assert_eq!(
        stdout(&["puiseux", "expand", "y^2 - x^3"]),
        "x = t^2; y = t^3; conj = 1; field = Q\n"
    );
    let o = Command::new(env!("CARGO_BIN_EXE_newtonpoly"))
        .args(["puiseux", "expand", "y - x - x^2 - x^3"])
        .env("NEWTONPOLY_PRECISION", "2")
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(o.stdout).unwrap(),
        "x = t; y = t + O(t^2); conj = 1; field = Q\n"
    );
}

#[test]
fn dual_degree_and_bs() {
    assert_eq!(
        stdout(&[
            "curve",
            "dual-degree",
            "--d",
            "3",
            "--n",
            "2",
            "--sing",
            "1,1"
        ]),
        "4\n"
    );
    let v = json(&["curve", "bs-example"]);
    assert_eq!(v["special_dominates_generic"], true);
}

#[test]
fn exit_codes() {
    let o = run(&["polygon", "product", "{1/inf}", "{inf/1}"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("UnsupportedInfiniteCombination"));
    let o = run(&["polygon", "sum", "nonsense{"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["curve", "merle", "<4,6,8>"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn verify_all_is_deterministic() {
    let a = json(&["verify", "all", "--seed", "7"]);
    for s in a["suites"].as_array().unwrap() {
        assert_eq!(s["pass"], true, "{s}");
    }
    let b = json(&["verify", "laws", "--seed", "7"]);
    assert_eq!(b["suites"][0]["checks"], a["suites"][0]["checks"]);
}
