use cherednik::suite::*;

fn rec(id: &str, verdict: Outcome, residual: &str) -> CheckRecord {
    CheckRecord { check_id: id.into(), anchor: "a".into(), verdict, residual: residual.into(), ms: None }
}

#[test]
fn empty_report() {
    let r = Report::new(Vec::new(), true);
    assert_eq!(emit_report(&r, Format::Text), "0 checks\n");
    assert_eq!(emit_report(&r, Format::Json), "[]\n");
    assert!(r.all_pass());
}

#[test]
fn single_pass_serialises_with_empty_residual() {
    let r = Report::new(vec![rec("x", Outcome::Pass, "")], true);
    let v: serde_json::Value = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
    assert_eq!(v, serde_json::json!([{"check_id": "x", "anchor": "a", "verdict": "pass", "residual": "", "ms": null}]));
}

#[test]
fn records_sort_by_id_and_columns_line_up() {
    let r = Report::new(vec![rec("b/long-id", Outcome::Fail, "x - 1"), rec("a", Outcome::PassBasis(16), "")], true);
    assert_eq!(r.records[0].check_id, "a");
    let t = emit_report(&r, Format::Text);
    let lines: Vec<&str> = t.lines().collect();
    assert_eq!(lines[0].find("VERDICT"), lines[1].find("pass-basis-16"));
    assert_eq!(lines[0].find("VERDICT"), lines[2].find("fail"));
    assert_eq!(lines[3], "    residual: x - 1");
    assert_eq!(*lines.last().unwrap(), "2 checks, 1 passed, 1 failed");
}

#[test]
fn basis_verdicts_pass_only_when_allowed() {
    let recs = vec![rec("a", Outcome::PassBasis(16), "")];
    assert!(Report::new(recs.clone(), true).all_pass());
    assert!(!Report::new(recs, false).all_pass());
    assert!(Report::new(vec![rec("a", Outcome::PassAmended, "r")], false).all_pass());
}

#[test]
fn single_trivial_eigen_check() {
    let cfg = SuiteConfig { suites: vec![SuiteId::Eigen], algebras: vec!["aw".into()], max_n: 0, ..Default::default() };
    let r = run_suite(&cfg).unwrap();
    assert_eq!(r.records.len(), 1);
    assert_eq!(r.records[0].verdict, Outcome::Pass);
}

#[test]
fn budget_one_exhausts() {
    let cfg = SuiteConfig { suites: vec![SuiteId::Rewrite], algebras: vec!["D8".into()], budget: 1, ..Default::default() };
    let r = run_suite(&cfg).unwrap();
    assert!(!r.all_pass());
    assert!(r.failures().iter().any(|f| f.residual.starts_with("budget exhausted")));
}

#[test]
fn printed_failures_show_as_amended_passes() {
    let cfg = SuiteConfig { suites: vec![SuiteId::Presentations], algebras: vec!["H".into()], ..Default::default() };
    let r = run_suite(&cfg).unwrap();
    assert!(r.all_pass());
    let d = r.get("presentations/H/daha5").unwrap();
    assert_eq!(d.verdict, Outcome::PassAmended);
    assert!(!d.residual.is_empty());
    assert_eq!(r.get("presentations/H/daha1").unwrap().verdict, Outcome::Pass);
}

#[test]
fn algebra_filter_accepts_short_names() {
    let a = SuiteConfig { suites: vec![SuiteId::Spherical], algebras: vec!["V".into()], ..Default::default() };
    let b = SuiteConfig { algebras: vec!["h_v".into()], ..a.clone() };
    let (ra, rb) = (run_suite(&a).unwrap(), run_suite(&b).unwrap());
    assert_eq!(emit_report(&ra, Format::Json), emit_report(&rb, Format::Json));
    assert!(ra.records.iter().all(|r| r.check_id.starts_with("spherical/H_V/") || r.check_id.starts_with("spherical/gamma")));
}

#[test]
fn bad_configuration_is_an_error() {
    assert!(run_suite(&SuiteConfig { algebras: vec!["H_VII".into()], ..Default::default() }).is_err());
    assert!("nope".parse::<SuiteId>().is_err());
    assert!("xml".parse::<Format>().is_err());
    assert!(check_statement("V0 == 0").is_err());
}

#[test]
fn statements_evaluate_on_the_embedding() {
    let ok = check_statement("Vc1*V1*V0*Vc0 == q^(-1/2) in H").unwrap();
    assert_eq!(ok.verdict, Outcome::Pass);
    let bad = check_statement("Vc1*V1*V0*Vc0 + q^(-1/2) == 0 in H").unwrap();
    assert_eq!(bad.verdict, Outcome::Fail);
    assert!(!bad.residual.is_empty());
}

#[test]
fn long_residuals_are_cut() {
    let r = check_statement("V0*V1*Vc0 == 0 in H").unwrap();
    assert_eq!(r.verdict, Outcome::Fail);
    assert!(r.residual.ends_with("more chars]"), "{}", r.residual.len());
    assert!(r.residual.len() < MAX_RESIDUAL + 100);
}
