use cherednik::nc::{word, NCExpression};
use cherednik::parse::{parse_expression, ParseContext};
use cherednik::ring::Ring;
use cherednik::rewrite::*;
use proptest::prelude::*;

fn nf(v: Variant, text: &str) -> NCExpression {
    let e = parse_expression(text, &ParseContext::new(&["X", "W", "T0", "T1"])).unwrap();
    system(v).unwrap().normalize(&e, DEFAULT_BUDGET).expr
}

fn same(v: Variant, a: &str, b: &str) -> bool {
    nf(v, a).minus(&nf(v, b)).is_zero()
}

#[test]
fn sandwich_rules() {
    assert!(same(Variant::D7, "T1*X*T1", "-a*T1"));
    assert!(same(Variant::D7, "T0*X*T0", "T0"));
    assert!(same(Variant::D7, "T0*W*T0", "-1/q*T0"));
    assert!(same(Variant::D7, "(T1+1)*W*(T1+1)", "a*(T1+1)"));
    assert!(same(Variant::D8, "T1*X*T1", "0"));
    assert!(same(Variant::D8, "(T1+1)*W*(T1+1)", "0"));
    assert!(same(Variant::D7, "X*W", "1"));
}

#[test]
fn rewriting_is_locally_confluent() {
    for v in [Variant::D7, Variant::D8] {
        assert!(system(v).unwrap().unresolved_overlaps().is_empty());
    }
}

#[test]
fn amended_identities_hold() {
    for v in [Variant::D7, Variant::D8] {
        for c in check_all(v).unwrap() {
            assert!(c.holds, "{} {}: {}", v.name(), c.id, c.residual);
        }
    }
}

#[test]
fn printed_failures_are_exactly_the_amended_ones() {
    for v in [Variant::D7, Variant::D8] {
        let failed: Vec<String> =
            check_printed(v).unwrap().into_iter().filter(|c| !c.holds).map(|c| c.id).collect();
        let amended: Vec<String> =
            amendments().into_iter().filter(|(w, _, _)| *w == v).map(|(_, i, _)| i.id.to_string()).collect();
        assert_eq!(failed, amended);
    }
}

#[test]
fn zhedanov_relations_hold() {
    for v in [Variant::D7, Variant::D8] {
        assert!(check_zhedanov(v).unwrap().iter().all(|c| c.holds));
    }
}

#[test]
fn trace_is_deterministic() {
    let id = &skein(Variant::D7)[0];
    let a = check_identities(Variant::D7, std::slice::from_ref(id), DEFAULT_BUDGET).unwrap();
    let b = check_identities(Variant::D7, std::slice::from_ref(id), DEFAULT_BUDGET).unwrap();
    assert_eq!(a[0].trace, b[0].trace);
    assert!(!a[0].trace.is_empty());
}

#[test]
fn small_budget_is_reported() {
    let sys = system(Variant::D7).unwrap();
    let e = expand(Variant::D7, &skein(Variant::D7)[2]).unwrap();
    let out = sys.normalize(&e, 5);
    assert!(out.exhausted);
    assert!(normalize_strict(&sys, &e, 5).is_err());
}

fn arb_word() -> impl Strategy<Value = NCExpression> {
    proptest::collection::vec(prop_oneof![Just("X"), Just("W"), Just("T0"), Just("T1")], 0..7)
        .prop_map(|w| NCExpression::term(cherednik::RF::one(), word(&w)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_forms_are_stable(a in arb_word()) {
        let sys = system(Variant::D7).unwrap();
        let once = sys.normalize(&a, DEFAULT_BUDGET).expr;
        let twice = sys.normalize(&once, DEFAULT_BUDGET);
        prop_assert_eq!(twice.steps, 0);
        prop_assert!(twice.expr.minus(&once).is_zero());
    }

    #[test]
    fn normalisation_respects_products(a in arb_word(), b in arb_word()) {
        let sys = system(Variant::D7).unwrap();
        let n = |e: &NCExpression| sys.normalize(e, DEFAULT_BUDGET).expr;
        prop_assert!(n(&a.times(&b)).minus(&n(&n(&a).times(&n(&b)))).is_zero());
    }
}
