//! End-to-end runs of the `binsquare` binary.

use std::process::{Command, Output};

use binsquare::Rat;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binsquare"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn records(args: &[&str]) -> Vec<Value> {
    let mut full = vec!["--format", "structured"];
    full.extend_from_slice(args);
    stdout(&full)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON record per line"))
        .collect()
}

fn str_at<'a>(v: &'a Value, path: &[&str]) -> &'a str {
    let mut cur = v;
    for key in path {
        cur = &cur[*key];
    }
    cur.as_str()
        .unwrap_or_else(|| panic!("{path:?} missing in {v}"))
}

#[test]
fn square_test_reports_root() {
    let text = stdout(&["square-test", "4", "5", "1"]);
    assert!(text.starts_with("present"), "{text}");
    assert!(text.contains("-1 + ω + 1/2ω^2"), "{text}");

    let rec = &records(&["square-test", "4", "5", "1"])[0];
    assert_eq!(rec["square"], Value::Bool(true));
    assert_eq!(str_at(rec, &["root", "r"]), "-1");
    assert_eq!(str_at(rec, &["root", "s"]), "1");
    assert_eq!(str_at(rec, &["root", "t"]), "1/2");

    let rec = &records(&["square-test", "26", "35", "1"])[0];
    assert_eq!(rec["square"], Value::Bool(false));
    assert!(rec["root"].is_null());
}

#[test]
fn star_worked_example() {
    let args = [
        "star",
        "2",
        "9/10",
        "-3/5",
        "-1/5",
        "-16641/7660",
        "1290/383",
        "1000/383",
    ];
    let rec = &records(&args)[0];
    assert_eq!(str_at(rec, &["terms", "s3"]), "-28099233/66234835");
    assert_eq!(str_at(rec, &["terms", "t3"]), "-5000211/66234835");
    assert_eq!(str_at(rec, &["terms", "r3"]), "27002048329/22652313570");
    assert_eq!(str_at(rec, &["terms", "sigma"]), "-6138414/733445");
    assert_eq!(str_at(rec, &["product", "s"]), "-28099233/66234835");
    assert!(stdout(&args).contains("s3 = -28099233/66234835"));
}

#[test]
fn curve_commands() {
    assert_eq!(
        stdout(&["curve-double", "-2", "3", "5"]).trim(),
        "(129/100, -383/1000)"
    );
    assert_eq!(
        stdout(&["curve-mul", "-2", "3", "3", "5"]).trim(),
        "(164323/29241, -66234835/5000211)"
    );
    assert_eq!(
        stdout(&["curve-mul", "-2", "-1", "3", "5"]).trim(),
        "(3, -5)"
    );
    assert_eq!(
        stdout(&["curve-add", "-2", "3", "5", "3", "-5"]).trim(),
        "inf"
    );
    assert_eq!(
        stdout(&["curve-add", "-2", "inf", "3", "5"]).trim(),
        "(3, 5)"
    );
    assert!(stdout(&["halve", "-4", "5", "11"]).contains("(2, -2)"));
    assert!(stdout(&["halve", "6860", "-19", "1"]).contains("(14, 98)"));
    assert_eq!(stdout(&["halve", "-2", "3", "5"]).trim(), "none");

    let rec = &records(&["search", "-26", "--e-bound", "1", "--a-bound", "40"])[0];
    let pts = rec["points"].as_array().unwrap();
    for (x, y) in [("3", "1"), ("3", "-1"), ("35", "207"), ("35", "-207")] {
        assert!(pts.iter().any(|p| p["x"] == x && p["y"] == y), "{x} {y}");
    }
    let rec = &records(&["search", "-3", "--e-bound", "10", "--a-bound", "1000"])[0];
    assert!(rec["points"].as_array().unwrap().is_empty());
}

#[test]
fn element_point_commands() {
    let rec = &records(&["from-point", "2", "1", "3", "5"])[0];
    assert_eq!(str_at(rec, &["a"]), "129/100");
    assert_eq!(str_at(rec, &["alpha", "r"]), "-9/10");

    let rec = &records(&["to-point", "2", "-9/10", "3/5", "1/5"])[0];
    assert_eq!(str_at(rec, &["point", "x"]), "3");
    assert_eq!(str_at(rec, &["point", "y"]), "5");
    assert_eq!(str_at(rec, &["b"]), "1");

    assert_eq!(stdout(&["norm", "2", "1", "-1", "-1"]).trim(), "-11");
    assert_eq!(
        stdout(&["sqrt", "2", "5", "0", "-1"]).trim(),
        "-1 + ω + ω^2"
    );
    assert_eq!(
        stdout(&["sqrt", "2", "3", "0", "0", "--precision", "64"]).trim(),
        "absent"
    );
}

#[test]
fn kappa_and_sextics() {
    let rec = &records(&["kappa", "47", "1", "6", "13"])[0];
    assert_eq!(str_at(rec, &["norm"]), "169");
    assert_eq!(str_at(rec, &["norm_sqrt"]), "13");
    let rec = &records(&["kappa", "101", "2", "14", "44"])[0];
    assert_eq!(rec["gcd_ab_ok"], Value::Bool(false));
    let rec = &records(&["kappa", "26", "1", "35", "207"])[0];
    assert_eq!(rec["eligible_mod9"], Value::Bool(false));

    assert_eq!(
        stdout(&["ext-poly", "113", "3", "97/4", "847/8"]).trim(),
        "x^6 - 291x^4 + 28227x^2 - 717409"
    );
    let y = "9629/64";
    let x = "-551/16";
    // y^2 = x^3 + 27·2351 at x = -551/16.
    let f = stdout(&["ext-poly", "2351", "-3", x, y]);
    assert_eq!(f.trim(), "x^6 + 1653x^4 + 910803x^2 - 92717641");
}

#[test]
fn table1_reports_every_row() {
    let recs = records(&["table1"]);
    let summary = recs.last().unwrap();
    assert_eq!(summary["command"], "table1-summary");
    assert_eq!(summary["all_pass"], Value::Bool(true));
    let sextics: Vec<&str> = recs
        .iter()
        .filter(|r| r["label"] == "113")
        .map(|r| r["sextic"].as_str().unwrap())
        .collect();
    assert_eq!(
        sextics,
        [
            "x^6 - 291x^4 + 28227x^2 - 717409",
            "x^6 - 130347x^4 + 5663446803x^2 - 34351825047849",
            "x^6 - 3771x^4 + 4740147x^2 - 1186320249",
        ]
    );
    let text = stdout(&["table1"]);
    assert!(text.contains("x^6 - 291x^4 + 28227x^2 - 717409"));
    assert!(text.trim_end().ends_with("25/25 rows pass"));
}

#[test]
fn table1_path_override() {
    let dir = std::env::temp_dir().join(format!("binsquare-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rows.json");
    std::fs::write(
        &path,
        r#"{"version": 1, "rows": [
            {"label": "11", "m": "11", "k": "-11", "x_num": "9", "x_den": "4",
             "alpha_a": "9", "alpha_b_coeff": "-4", "omega_power": 1},
            {"label": "11", "m": "11", "k": "-11", "x_num": "9", "x_den": "4",
             "alpha_a": "9", "alpha_b_coeff": "4", "omega_power": 1}
        ]}"#,
    )
    .unwrap();
    let recs = records(&["table1", "--table", path.to_str().unwrap()]);
    assert_eq!(recs.len(), 3);
    assert_eq!(recs[0]["pass"], Value::Bool(true));
    assert_eq!(recs[1]["pass"], Value::Bool(false));
    assert_eq!(recs[2]["passed"], 1);

    let out = run(&[
        "table1",
        "--table",
        dir.join("missing.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("TableData"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn domain_errors_exit_one_with_name() {
    for (args, name) in [
        (vec!["curve-add", "-2", "3", "4", "inf"], "InvalidPoint"),
        (vec!["to-point", "2", "1", "1", "1"], "NotBinomial"),
        (vec!["to-point", "2", "0", "0", "0"], "ZeroElement"),
        (vec!["norm", "8", "1", "0", "0"], "InvalidField"),
        (
            vec!["ext-poly", "2", "1", "129/100", "-383/1000"],
            "AlphaIsSquare",
        ),
        (
            vec![
                "halve",
                "-2",
                "307326105747363/160280942564521",
                "4559771683571581358275/2029190552145716973931",
                "--effort",
                "0",
            ],
            "EffortExceeded",
        ),
        (vec!["curve-double", "0", "inf"], "InvalidCurve"),
    ] {
        let out = run(&args);
        let err = String::from_utf8_lossy(&out.stderr);
        assert_eq!(out.status.code(), Some(1), "{args:?}: {err}");
        assert!(err.contains(name), "{args:?}: {err}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["square-test", "4", "1.5", "1"],
        vec!["square-test", "4", "5"],
        vec!["curve-add", "-2", "3"],
        vec!["curve-double", "-2", "3", "5", "7"],
        vec!["norm", "2/3", "1", "0", "0"],
        vec!["no-such-command"],
        vec!["--format", "xml", "norm", "2", "1", "0", "0"],
        vec!["search", "-2", "--e-bound", "0", "--a-bound", "5"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

fn walk_rationals(v: &Value, f: &mut impl FnMut(&str)) {
    match v {
        Value::String(s) => f(s),
        Value::Array(a) => a.iter().for_each(|x| walk_rationals(x, f)),
        Value::Object(o) => o.values().for_each(|x| walk_rationals(x, f)),
        Value::Number(n) => assert!(!n.is_f64(), "floating output {n}"),
        _ => {}
    }
}

#[test]
fn structured_output_round_trips() {
    let commands: Vec<Vec<&str>> = vec![
        vec!["curve-mul", "-2", "3", "3", "5"],
        vec!["halve", "-4", "5", "11"],
        vec!["from-point", "2", "1", "3", "5"],
        vec![
            "star",
            "2",
            "9/10",
            "-3/5",
            "-1/5",
            "-16641/7660",
            "1290/383",
            "1000/383",
        ],
        vec!["kappa", "57", "1", "4873/36", "-340165/216"],
        vec!["table1"],
    ];
    let numeric_keys = [
        "x",
        "y",
        "r",
        "s",
        "t",
        "a",
        "b",
        "norm",
        "norm_sqrt",
        "s3",
        "t3",
        "r3",
    ];
    for args in commands {
        let mut full = vec!["--format", "structured"];
        full.extend_from_slice(&args);
        for line in stdout(&full).lines() {
            let v: Value = serde_json::from_str(line).unwrap();
            assert_eq!(v.to_string(), line, "re-rendering changed the record");
            walk_rationals(&v, &mut |_| {});
            check_rational_fields(&v, &numeric_keys);
        }
    }
}

/// Every exact quantity is a `p/q` string that re-renders unchanged.
fn check_rational_fields(v: &Value, keys: &[&str]) {
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                if let (true, Value::String(s)) = (keys.contains(&k.as_str()), x) {
                    let q: Rat = s.parse().unwrap_or_else(|_| panic!("{k} = {s:?}"));
                    assert_eq!(&q.to_string(), s);
                }
                check_rational_fields(x, keys);
            }
        }
        Value::Array(a) => a.iter().for_each(|x| check_rational_fields(x, keys)),
        _ => {}
    }
}
