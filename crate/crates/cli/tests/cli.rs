use std::process::{Command, Output};

fn ppsieve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ppsieve")).args(args).env_remove("PPSIEVE_CAP").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn enumerate_counts() {
    let o = ppsieve(&["enumerate", "--pp", "2", "2", "--m", "1", "--format", "json"]);
    assert!(o.status.success());
    assert_eq!(json_lines(&o).len(), 6);
    let o = ppsieve(&["enumerate", "--pp", "1", "1", "--m", "0", "--format", "json"]);
    assert_eq!(json_lines(&o).len(), 1);
    let o = ppsieve(&["enumerate", "--poset", "tall", "--n", "2", "--m", "1", "--format", "json"]);
    assert_eq!(json_lines(&o).len(), 4);
    let o = ppsieve(&["enumerate", "--ssyt", "2", "1", "--k", "3", "--format", "json"]);
    assert_eq!(json_lines(&o).len(), 8);
}

#[test]
fn enumerate_table_and_csv() {
    let o = ppsieve(&["enumerate", "--pp", "2", "2", "--m", "1"]);
    let text = stdout(&o);
    assert!(text.starts_with("0 0 / 0 0\n"));
    assert!(text.ends_with("6 objects\n"));
    let o = ppsieve(&["enumerate", "--pp", "2", "2", "--m", "1", "--format", "csv"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("index,size,rows"));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn verify_sieve_exits_zero() {
    let o = ppsieve(&["verify", "ppart-csp", "--a", "2", "--b", "2", "--m-max", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let reports = json_lines(&o);
    assert_eq!(reports.len(), 3);
    assert!(reports.iter().all(|r| r["schema"] == 1 && r["theorem"] == "pro-csp"));
}

#[test]
fn twisted_pattern() {
    let o = ppsieve(&["verify", "trcom-csp", "--n", "2", "--m", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = &json_lines(&o)[0];
    let counts: Vec<u64> = r["rows"].as_array().unwrap().iter().map(|x| x["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, [4, 2, 0, 2]);
}

#[test]
fn other_selectors() {
    for args in [
        &["verify", "reciprocity", "--a", "2", "--b", "2", "--m", "0"][..],
        &["verify", "reciprocity", "--a-max", "2", "--b-max", "2", "--m-max", "2"],
        &["verify", "com-csp", "--a-max", "3", "--b-max", "3", "--m-max", "1"],
        &["verify", "tr-csp", "--n-max", "2", "--m-max", "2"],
        &["verify", "row-csp-family", "--a-max", "2", "--b-max", "2", "--n-max", "2", "--m-max", "2"],
        &["verify", "qneg-family", "--a-max", "2", "--b-max", "2", "--n-max", "2", "--m-max", "2"],
        &["verify", "cy-bijection", "--n-max", "3", "--M-max", "1"],
        &["verify", "lemma-identities", "--a-max", "2", "--b-max", "2", "--m-max", "1"],
        &["verify", "conj-tall", "--n-max", "2", "--m-max", "1"],
        &["verify", "conj-wide", "--n-max", "2", "--m-max", "1"],
        &["verify", "conj-corner", "--n", "1", "--m-max", "1"],
        &["verify", "bijection-suite", "--sum-max", "3", "--m-max", "1", "--n-max", "2", "--M-max", "1"],
    ] {
        let o = ppsieve(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn output_is_deterministic_across_workers() {
    let args = [
        "verify",
        "row-csp-family",
        "--a-max",
        "3",
        "--b-max",
        "2",
        "--n-max",
        "2",
        "--m-max",
        "2",
        "--format",
        "json",
    ];
    let one = ppsieve(&[&args[..], &["--workers", "1"]].concat());
    let three = ppsieve(&[&args[..], &["--workers", "3"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, three.stdout);
    assert!(!stdout(&one).contains("elapsed_ms"));
    let timed = ppsieve(&[&args[..], &["--timing"]].concat());
    assert!(stdout(&timed).contains("elapsed_ms"));
}

#[test]
fn poly_output() {
    let o = ppsieve(&["poly", "symmac", "--n", "2", "--m", "1"]);
    assert_eq!(stdout(&o).lines().next(), Some("1 + q + q^3 + q^4"));
    let o = ppsieve(&["poly", "mac", "--a", "1", "--b", "1", "--m", "1"]);
    assert_eq!(stdout(&o).trim(), "1 + q");
    let o = ppsieve(&["poly", "mac", "--a", "2", "--b", "2", "--m", "1", "--eval", "4", "--format", "json"]);
    let v = &json_lines(&o)[0];
    let values: Vec<i64> = v["evaluations"].as_array().unwrap().iter().map(|e| e["value"].as_i64().unwrap()).collect();
    assert_eq!(values, [6, 0, 2, 0]);
    let o = ppsieve(&["poly", "mac", "--a", "2", "--b", "2", "--m", "1", "--eval", "5", "--format", "json"]);
    assert!(o.status.success());
    assert!(json_lines(&o)[0]["evaluations"][1]["value"].as_str().unwrap().starts_with("not-rational"));
}

#[test]
fn exit_codes() {
    assert_eq!(ppsieve(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(ppsieve(&["poly", "mac", "--a", "2"]).status.code(), Some(2));
    assert_eq!(ppsieve(&["verify", "ppart-csp", "--a", "3", "--a-max", "2", "--b", "1"]).status.code(), Some(0));
    assert_eq!(ppsieve(&["verify", "ppart-csp", "--a-max", "0"]).status.code(), Some(2));
    assert_eq!(ppsieve(&["verify", "ppart-csp", "--a", "4", "--b", "4", "--m", "6"]).status.code(), Some(3));
    let o = ppsieve(&["enumerate", "--pp", "2", "2", "--m", "2", "--cap", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("20"));
    let o = Command::new(env!("CARGO_BIN_EXE_ppsieve"))
        .args(["enumerate", "--pp", "2", "2", "--m", "2"])
        .env("PPSIEVE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}
