use degcone::cli::cmd_dispatch;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["degcone"];
    argv.extend_from_slice(args);
    let (code, rep) = cmd_dispatch(argv);
    (code, rep.map_or(Value::Null, |r| r.json))
}

#[test]
fn c2_quantum_cone_has_the_three_forms() {
    let (code, j) = run(&["cone-quantum", "--type", "C", "--rank", "2", "--word", "1212"]);
    assert_eq!(code, 0);
    let mut got: Vec<String> = j["rendered"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect();
    got.sort();
    let mut want = vec!["d_{1,1} + d_{2,2} > d_{1,2}", "d_{1,1} + d_{1,2} > d_{1,1̄}", "d_{2,2} + d_{1,1̄} > 2d_{1,2}"];
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn c3_section_reports_the_minimal_vectors() {
    let (code, j) = run(&["reproduce-paper", "--section", "6.4"]);
    assert_eq!(code, 0);
    let checks = j["groups"][0]["checks"].as_array().unwrap();
    let min = checks.iter().find(|c| c["id"] == "c3-minimal").unwrap();
    let pts: Vec<Vec<i64>> = serde_json::from_value(min["data"]["points"].clone()).unwrap();
    assert_eq!(pts, [[2, 1, 1, 1, 1, 1, 4, 4, 5], [3, 2, 2, 1, 1, 1, 3, 3, 4], [4, 3, 3, 1, 1, 1, 2, 2, 3], [5, 4, 4, 1, 1, 1, 1, 1, 2]]);
}

#[test]
fn b3_degree_is_monomial_on_fundamentals() {
    let (code, j) = run(&["monomial-check", "--type", "B", "--rank", "3", "--degree", "4,3,3,3,1,1,4,3,2", "--fundamentals"]);
    assert_eq!(code, 0);
    assert_eq!(j["all_monomial"], true);
}

#[test]
fn failed_expectation_and_usage_errors() {
    let (code, j) = run(&["cone-equal", "--type", "A", "--rank", "3", "--word", "121321", "--other", "132312", "--expect", "equal"]);
    assert_eq!((code, j["equal"].clone()), (1, Value::Bool(false)));
    let (code, _) = run(&["cone-empty", "--type", "A", "--rank", "3", "--word", "121321", "--other", "132312", "--expect", "empty"]);
    assert_eq!(code, 0);
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["roots", "--type", "A", "--rank", "3", "--bogus"]).0, 2);
    assert_eq!(run(&["cone-quantum", "--type", "A", "--rank", "2", "--word", "1213"]).0, 2);
    assert_eq!(run(&["monomial-check", "--type", "A", "--rank", "2", "--degree", "1,1"]).0, 2);
    assert_eq!(run(&["cone-quantum", "--type", "A", "--rank", "2", "--word", "121", "--jobs", "0"]).0, 2);
}

#[test]
fn out_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (p, jobs) in [(&a, "1"), (&b, "3")] {
        let (code, _) = run(&["reproduce-paper", "--section", "4.1", "--jobs", jobs, "--out", p.to_str().unwrap()]);
        assert_eq!(code, 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn relation_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("rel.json");
    let args = ["ls-relations", "--type", "B", "--rank", "3", "--word", "121321323", "--cache", cache.to_str().unwrap()];
    let (c1, j1) = run(&args);
    assert_eq!(c1, 0);
    let stored: Value = serde_json::from_str(&std::fs::read_to_string(&cache).unwrap()).unwrap();
    assert_eq!(stored["entries"].as_object().unwrap().len(), 36);
    assert!(stored["entries"].get("B3|121321323|1|2").is_some());
    let (c2, j2) = run(&args);
    assert_eq!((c2, j2), (0, j1.clone()));
    // a different mode does not reuse the cached entries
    let mut exact = args.to_vec();
    exact.extend(["--mode", "exact"]);
    let (c3, j3) = run(&exact);
    assert_eq!(c3, 0);
    assert_eq!(j3["relations"].as_array().unwrap().len(), 36);
    assert_eq!(j3["mode"], "exact");
    for (x, y) in j1["relations"].as_array().unwrap().iter().zip(j3["relations"].as_array().unwrap()) {
        assert_eq!((&x["i"], &x["j"], &x["qpow"], &x["support"]), (&y["i"], &y["j"], &y["qpow"], &y["support"]));
    }
}

#[test]
fn csv_and_counts() {
    let (code, j) = run(&["counts", "--max-a", "3", "--max-m", "2", "--format", "csv"]);
    assert_eq!((code, j["mismatches"].clone()), (0, Value::from(0)));
    assert_eq!(j["cases"], 16 + 9);
    assert_eq!(run(&["g2-experiment", "--bound", "1", "--format", "csv"]).0, 0);
    // no tabular output for the classical cone of a missing type
    assert_eq!(run(&["cone-classical"]).0, 2);
}

#[test]
fn small_commands() {
    let (code, j) = run(&["words", "--type", "A", "--rank", "3"]);
    assert_eq!((code, j["count"].clone()), (0, Value::from(16)));
    let (code, j) = run(&["irrep", "--type", "G", "--rank", "2", "--weight", "0,1"]);
    assert_eq!((code, j["dim"].clone()), (0, Value::from(14)));
    let (code, j) = run(&["hull", "--type", "G", "--rank", "2", "--weight", "0,1"]);
    assert_eq!((code, j["set"].clone(), j["hull"].clone()), (0, Value::from(14), Value::from(16)));
    let (code, j) = run(&["fflv", "--type", "C", "--rank", "2", "--weight", "1,1", "--points"]);
    assert_eq!((code, j["count"].clone()), (0, Value::from("16")));
    let (code, j) = run(&["sp4", "--m1", "2", "--m2", "1"]);
    assert_eq!((code, j["count"].clone()), (0, Value::from("35")));
    let (code, j) = run(&["minimal-points", "--type", "C", "--rank", "2", "--word", "1212"]);
    assert_eq!((code, j["sum"].clone()), (0, Value::from(5)));
    let (code, j) = run(&["interior-point", "--type", "G", "--rank", "2", "--word", "212121"]);
    assert_eq!((code, j["contained"].clone()), (0, Value::Bool(true)));
    let (code, j) = run(&["minkowski-check", "--type", "A", "--rank", "4", "--variant", "power-of-two", "--weight", "1,1,1,1"]);
    assert_eq!((code, j["results"][0]["count"].clone()), (1, Value::from(1023)));
    let (code, j) = run(&["cone-classical", "--type", "A", "--rank", "2"]);
    assert_eq!((code, j["forms"].as_array().unwrap().len()), (0, 1));
    let (code, _) = run(&["roots", "--type", "G2", "--format", "json"]);
    assert_eq!(code, 0);
}
