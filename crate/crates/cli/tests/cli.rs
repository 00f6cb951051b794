use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradedalg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn regularity_of_colon_ideal() {
    assert_eq!(ok(&["reg", "--ideal", &path("J.ideal")]), "reg = 5\n");
}

#[test]
fn betti_rows_and_json() {
    assert_eq!(ok(&["betti", "--ideal", &path("J.ideal")]), "0: {3: 1, 4: 1, 5: 1}\n1: {6: 2}\n");
    let v: serde_json::Value = serde_json::from_str(&ok(&["betti", "--json", "--ideal", &path("J.ideal")])).unwrap();
    assert_eq!(v["entries"]["1"]["6"], 2);
}

#[test]
fn hilbert_series_display() {
    let out = ok(&["hilbert", "--ideal", &path("J.ideal"), "--upto", "4"]);
    assert_eq!(out, "(1 - t^3 - t^4 - t^5 + 2*t^6) / (1-t)^4\nHF(0..=4) = [1, 4, 10, 19, 30]\n");
    assert_eq!(ok(&["dim", "--ideal", &path("J.ideal")]), "dim = 2\n");
    assert_eq!(ok(&["deg", "--ideal", &path("J.ideal")]), "deg = 11\n");
    assert_eq!(ok(&["depth", "--ideal", &path("J.ideal")]), "depth = 2\n");
}

#[test]
fn gb_of_one_generator_is_that_generator_made_monic() {
    let out = ok(&["gb", "--ideal", &path("small.ideal")]);
    assert_eq!(out, "field: Q\nvars: x y\nI = x^2 + y\n");
    let out = ok(&["gb", "--char", "7", "--ideal", &path("small.ideal"), "--name", "L"]);
    assert!(out.starts_with("field: Fp 7\n"));
}

#[test]
fn elimination_gives_the_twisted_cubic() {
    let out = ok(&["eliminate", "--ideal", &path("param.ideal"), "--vars", "s t"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[1], "vars: x y z w");
    let gens: Vec<&str> = lines[2].trim_start_matches("E = ").split(", ").collect();
    assert_eq!(gens.len(), 3);
}

#[test]
fn colon_intersection_saturation() {
    let f = path("three_component.ideal");
    let q = ok(&["quotient", "--ideal", &f, "--name", "I", "--by", "K"]);
    assert!(q.contains("Q = "));
    let s = ok(&["saturate", "--ideal", &f, "--name", "J", "--by", "K"]);
    assert!(s.contains("# colon steps:"));
    let k = ok(&["intersect", "--ideal", &path("small.ideal"), "--with", "L"]);
    assert_eq!(k.lines().nth(2).unwrap(), "K = x^2 + y");
    assert_eq!(ok(&["member", "--ideal", &f, "--name", "K", "--poly", "x*y^2*t^2 - x^2*z^3"]), "member = true\n");
    assert_eq!(ok(&["same-radical", "--ideal", &f, "--name", "J", "--with", "K"]), "same radical = true\n");
}

#[test]
fn appendix_count_modes_agree() {
    let out = ok(&["appendix-count", "--m", "1", "--n", "3", "--alpha", "12", "--mode", "both"]);
    let nums: Vec<u64> = out.split_whitespace().map(|s| s.parse().unwrap()).collect();
    assert_eq!(nums.len(), 2);
    assert_eq!(nums[0], nums[1]);
    assert_eq!(run(&["appendix-count", "--m", "1", "--n", "3", "--alpha", "2", "--mode", "closed"]).status.code(), Some(2));
}

#[test]
fn resolution_round_trips_through_verify_complex() {
    let dir = std::env::temp_dir().join(format!("gradedalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cx = dir.join("k.cx");
    let cx = cx.to_str().unwrap();
    ok(&["resolve", "--ideal", &path("three_component.ideal"), "--name", "K", "--out", cx]);
    let report = ok(&["verify-complex", "--complex", cx]);
    assert!(report.contains("verdict: exact"));
    assert!(report.contains("3: {8: 1}"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn failed_checks_exit_one() {
    let o = run(&["verify-complex", "--complex", &path("not_a_complex.cx")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("composition zero: FAIL"));
    let o = run(&["verify-complex", "--complex", &path("non_exact.cx"), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], false);
    assert_eq!(v["positions"][1]["codim_ok"], false);
}

#[test]
fn family_complexes_verify() {
    for fam in ["three-component-j", "three-component-k", "curve168"] {
        assert!(ok(&["verify-complex", "--family", fam]).contains("verdict: exact"), "{fam}");
    }
    assert!(ok(&["verify-complex", "--family", "cm", "--m", "2", "--n", "2"]).contains("verdict: exact"));
}

#[test]
fn family_output_is_a_valid_ideal_file() {
    let dir = std::env::temp_dir().join(format!("gradedalg-fam-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("cm.ideal");
    let file = file.to_str().unwrap();
    ok(&["family", "--kind", "cm", "--m", "1", "--n", "2", "--out", file]);
    // reg(I_{m,n}) = m + n + 2
    assert_eq!(ok(&["reg", "--ideal", file, "--name", "I"]), "reg = 5\n");
    assert_eq!(ok(&["lc-dims", "--ideal", file, "--name", "radical", "--i", "0", "--from", "0", "--to", "1"]), "0: 0\n1: 0\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn ext_and_socle() {
    let out = ok(&["ext", "--ideal", &path("J.ideal"), "--q", "2", "--w", "4"]);
    assert!(out.contains("generators in degrees [-2, -2]"));
    let out = ok(&["socle", "--ideal", &path("small.ideal"), "--name", "L"]);
    assert_eq!(out, "socle degrees of R/L = [0]\n");
}

#[test]
fn suites_run_and_report() {
    let out = ok(&["suite", "ex21"]);
    assert!(out.ends_with("7/7 checks passed\n"));
    let v: serde_json::Value = serde_json::from_str(&ok(&["suite", "ex22", "--json"])).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn suite_with_a_failing_claim_exits_one() {
    let o = run(&["suite", "ex25"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL reg(I_C ∩ (z,u,v))"));
}

#[test]
fn input_errors_exit_two() {
    let o = run(&["suite", "ex99"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["reg", "--ideal", &path("J.ideal"), "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["reg", "--ideal", &path("missing.ideal")]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["member", "--ideal", &path("J.ideal"), "--poly", "x +* y"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_files_report_line_and_column() {
    let dir = std::env::temp_dir().join(format!("gradedalg-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        ("field: Q\nvars: x y\nI = x^2 + 3*q\n", "line 3, column 13"),
        ("field: Fp 101\nvars: x y\n\nI = x, , y\n", "line 4, column 8"),
        ("field: R\nvars: x\n", "line 1, column 8"),
        ("vars: x y\nmap: 0 -> 1 1\n  x\n", "line 3, column 3"),
    ];
    for (k, (src, loc)) in cases.iter().enumerate() {
        let f = dir.join(format!("bad{k}.ideal"));
        std::fs::write(&f, src).unwrap();
        let sub = if src.contains("map:") { ["verify-complex", "--complex"] } else { ["reg", "--ideal"] };
        let o = run(&[sub[0], sub[1], f.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{src}");
        assert!(stderr(&o).contains(loc), "{src}: {}", stderr(&o));
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = ["resolve", "--ideal", &path("three_component.ideal"), "--name", "K", "--json"];
    let a = ok(&args);
    let b = ok(&args);
    assert_eq!(a, b);
    assert_eq!(ok(&["family", "--kind", "p4"]), ok(&["family", "--kind", "p4"]));
}

/// Every property a published schema marks as required is present in the
/// corresponding command output (full validation is left to JSON tooling).
#[test]
fn json_outputs_follow_published_schemas() {
    let schemas = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas");
    let load = |name: &str| -> serde_json::Value {
        serde_json::from_str(&std::fs::read_to_string(schemas.join(name)).unwrap()).unwrap()
    };
    let required = |schema: &serde_json::Value| -> Vec<String> {
        schema["required"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect()
    };
    let parse = |s: String| -> serde_json::Value { serde_json::from_str(&s).unwrap() };

    let betti = parse(ok(&["betti", "--json", "--ideal", &path("J.ideal")]));
    let be = parse(ok(&["verify-complex", "--json", "--family", "curve168"]));
    let suite = parse(ok(&["suite", "ex21", "--json"]));
    for (schema, value) in [("betti-table.schema.json", &betti), ("be-report.schema.json", &be), ("suite-report.schema.json", &suite)] {
        let schema = load(schema);
        for key in required(&schema) {
            assert!(value.get(&key).is_some(), "{key} missing");
        }
    }
    let position = &load("be-report.schema.json")["properties"]["positions"]["items"];
    for key in required(position) {
        assert!(be["positions"][0].get(&key).is_some(), "{key} missing");
    }
}
