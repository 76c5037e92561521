use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cherednik")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn single_trivial_eigen_check() {
    let o = run(&["--suite", "eigen", "--algebra", "AW", "--max-n", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    let r = &rows[0];
    assert_eq!(r["check_id"], "eigen/AW/n=00");
    assert_eq!(r["verdict"], "pass");
    assert_eq!(r["residual"], "");
    assert!(r["ms"].is_null());
    assert!(r["anchor"].as_str().is_some_and(|a| !a.is_empty()));
    let keys: Vec<&str> = r.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys.len(), 5);
}

#[test]
fn tiny_budget_fails_with_nonzero_exit() {
    let o = run(&["--suite", "rewrite", "--budget", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("budget exhausted after 1 steps"));
}

#[test]
fn empty_selection_reports_zero_checks() {
    let o = run(&["--suite", "rewrite", "--algebra", "H_V"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 checks\n");
    let j = run(&["--suite", "rewrite", "--algebra", "H_V", "--format", "json"]);
    assert_eq!(stdout(&j).trim(), "[]");
}

#[test]
fn adhoc_statements() {
    let ok = run(&["--check", "Vc1*V1*V0*Vc0 - q^(-1/2) == 0 in H"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let ok = run(&["--check", "(T1 + a*b)*(T1 + 1) == 0 in H", "--format", "json"]);
    assert_eq!(ok.status.code(), Some(2), "T1 is not a generator of H");

    let bad = run(&["--check", "Vc1*V1*V0*Vc0 + q^(-1/2) == 0 in H", "--format", "json"]);
    assert_eq!(bad.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&bad)).unwrap();
    assert_eq!(v[0]["verdict"], "fail");
    let res = v[0]["residual"].as_str().unwrap();
    assert!(!res.is_empty() && !res.starts_with("error"), "{}", res);

    let inv = run(&["--check", "V0^(-1) == 0 in H_V"]);
    assert_eq!(inv.status.code(), Some(1));
    assert!(stdout(&inv).contains("no inverse available for V0"));
}

#[test]
fn configuration_errors_exit_with_two() {
    for args in [
        &["--suite", "nonsense"][..],
        &["--format", "yaml"],
        &["--algebra", "H_IX"],
        &["--check", "V0 + == 0 in H"],
        &["--check", "V0 == 0 in H_VII"],
        &["--check", "V0"],
        &["--max-n", "-1"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{:?}", args);
        assert!(o.stdout.is_empty(), "{:?}", args);
    }
}

#[test]
fn reports_are_byte_deterministic() {
    let args = ["--suite", "presentations,spherical", "--algebra", "H_V", "--format", "json"];
    let a = run(&args);
    let b = run(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let t1 = run(&["--suite", "classical", "--algebra", "PVI"]);
    let t2 = run(&["--suite", "classical", "--algebra", "pvi", "--jobs", "1"]);
    assert_eq!(t1.stdout, t2.stdout);
}

#[test]
fn sorted_by_check_id() {
    let o = run(&["--suite", "zhedanov", "--algebra", "Z_I", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["check_id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(!ids.is_empty());
}

#[test]
fn timings_fill_the_ms_field() {
    let o = run(&["--suite", "eigen", "--algebra", "AW", "--max-n", "1", "--format", "json", "--timings"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["ms"].is_u64()));
}

#[test]
fn strict_basis_is_accepted() {
    let o = run(&["--suite", "zhedanov", "--algebra", "Z_II", "--strict-basis"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
