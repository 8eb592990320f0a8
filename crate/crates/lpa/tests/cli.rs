use std::path::PathBuf;
use std::process::{Command, Output};

use lpa::{parse_element, parse_graph};
use lpa_core::{fixtures, Algebra, Field};
use serde_json::Value;

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    path.to_string_lossy().into_owned()
}

fn lpa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpa")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = lpa(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn fixture_files_match_the_library_fixtures() {
    for (i, (_, g)) in fixtures::all().into_iter().enumerate() {
        let text = std::fs::read_to_string(fixture(&format!("g{}.lpa", i + 1))).unwrap();
        assert_eq!(lpa::write_graph(&parse_graph(&text).unwrap()), lpa::write_graph(&g));
    }
}

#[test]
fn analyze_reports() {
    let g3 = json(&["analyze", &fixture("g3.lpa")]);
    assert_eq!(g3["format_version"], "1");
    assert_eq!(g3["command"], "analyze");
    assert_eq!(g3["graph"]["vertices"], 5);
    assert_eq!(g3["payload"]["k"], 2);
    assert_eq!(g3["payload"]["m"], 2);
    assert_eq!(g3["payload"]["isomorphism"], "F[t^-1,t] (+) F");
    assert_eq!(g3["payload"]["classes"][0]["cycle"], "[b2 b3 b4]");
    assert_eq!(json(&["analyze", &fixture("g1.lpa")])["payload"]["isomorphism"], "F[t^-1,t]");
    let g6 = json(&["analyze", &fixture("g6.lpa")]);
    assert_eq!(g6["payload"]["isomorphism"], "F");
    assert_eq!(g6["payload"]["finitary_size"], 2);
    assert_eq!(g6["payload"]["annihilator_size"], 4);
}

fn elements(v: &Value) -> Vec<String> {
    v["payload"]["elements"].as_array().unwrap().iter().map(|x| x["element"].as_str().unwrap().to_string()).collect()
}

#[test]
fn center_reports() {
    let alg = Algebra::new(fixtures::g3_example(), Field::Rational);
    let d0 = json(&["center", &fixture("g3.lpa"), "--degree", "0"]);
    let expected: Vec<String> =
        ["v2 + v3 + v4 + [a][a]", "v5 + [d][d]"].iter().map(|t| parse_element(&alg, t).unwrap().to_text()).collect();
    assert_eq!(elements(&d0), expected);
    assert_eq!(elements(&d0)[0], "v1 + v2 + v3 + v4 - [d][d]");
    let d1 = json(&["center", &fixture("g3.lpa"), "--degree", "1"]);
    assert!(elements(&d1).is_empty());
    assert_eq!(d1["payload"]["predicted_dimension"], 0);
    let minus = json(&["center", &fixture("g3.lpa"), "--degree", "-3"]);
    assert_eq!(minus["payload"]["elements"][0]["power"], -1);
    assert_eq!(elements(&json(&["center", &fixture("g1.lpa"), "--degree", "2"])), ["[c c][@v1]"]);
}

#[test]
fn verify_reports_and_exit_codes() {
    let g3 = json(&["verify", &fixture("g3.lpa"), "--max-degree", "4"]);
    let dims: Vec<(i64, u64)> = g3["payload"]["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| {
            assert_eq!(d["status"], "OK");
            (d["degree"].as_i64().unwrap(), d["oracle_dimension"].as_u64().unwrap())
        })
        .collect();
    let expected: Vec<(i64, u64)> =
        (-4..=4).map(|d: i64| (d, u64::from(d == 0) * 2 + u64::from(d.abs() == 3))).collect();
    assert_eq!(dims, expected);
    for (file, max_degree) in [("g1.lpa", "3"), ("g2.lpa", "2"), ("g6.lpa", "2")] {
        let out = lpa(&["verify", &fixture(file), "--max-degree", max_degree]);
        assert_eq!(out.status.code(), Some(0), "{file}");
    }
    let g1 = json(&["verify", &fixture("g1.lpa"), "--max-degree", "3"]);
    assert!(g1["payload"]["degrees"].as_array().unwrap().iter().all(|d| d["oracle_dimension"] == 1));
    // At length 0 the oracle cannot see the loop.
    let out = lpa(&["verify", &fixture("g1.lpa"), "--max-degree", "1", "--max-len", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn idempotent_reports() {
    let rows = |file: &str, field: &str| -> Vec<(Value, String)> {
        json(&["idempotents", &fixture(file), "--field", field])["payload"]["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| (r["set"].clone(), r["element"].as_str().unwrap().to_string()))
            .collect()
    };
    let g3 = rows("g3.lpa", "rat");
    assert_eq!(g3.len(), 4);
    assert_eq!(g3[0].1, "0");
    assert_eq!(g3[1].1, "v5 + [d][d]");
    assert_eq!(g3[3].1, "v1 + v2 + v3 + v4 + v5");
    let alg = Algebra::new(fixtures::g4_fork(), Field::Rational);
    let w1 = rows("g4.lpa", "rat").into_iter().find(|(s, _)| s == &serde_json::json!(["w1"])).unwrap();
    assert_eq!(w1.1, parse_element(&alg, "w1 + [e][e]").unwrap().to_text());
    assert_eq!(rows("g6.lpa", "rat").len(), 2);
    assert_eq!(rows("g3.lpa", "fp:3")[2].1, "v1 + v2 + v3 + v4 + 2 * [d][d]");
}

#[test]
fn output_is_byte_stable() {
    for args in [
        vec!["analyze", "g3.lpa"],
        vec!["center", "g3.lpa", "--degree", "-3"],
        vec!["verify", "g6.lpa", "--max-degree", "2"],
        vec!["idempotents", "g4.lpa"],
    ] {
        let path = fixture(args[1]);
        let mut full: Vec<&str> = args.clone();
        full[1] = &path;
        for json_flag in [false, true] {
            let mut run = full.clone();
            if json_flag {
                run.push("--json");
            }
            assert_eq!(lpa(&run).stdout, lpa(&run).stdout);
        }
    }
}

#[test]
fn input_errors_exit_with_two() {
    let dir = std::env::temp_dir().join(format!("lpa-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.lpa");
    std::fs::write(&bad, "vertex v1\nvertex v1\n").unwrap();
    let out = lpa(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2: duplicate id `v1`"));
    assert_eq!(lpa(&["analyze", dir.join("missing.lpa").to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(lpa(&["center", &fixture("g1.lpa")]).status.code(), Some(2));
    assert_eq!(lpa(&["analyze", &fixture("g1.lpa"), "--field", "fp:4"]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}
