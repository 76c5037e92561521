use cherednik::qmat::AlgebraId;
use cherednik::spherical::*;
use cherednik::Error;

fn failing(reports: &[cherednik::presentations::ResidualReport]) -> Vec<String> {
    reports.iter().flat_map(|r| r.failures()).map(|c| c.id.clone()).collect()
}

#[test]
fn amended_spherical_relations_hold() {
    for a in AlgebraId::ALL {
        let reports = check_all(a).unwrap();
        assert!(failing(&reports).is_empty(), "{}: {:?}", a, failing(&reports));
    }
}

#[test]
fn printed_hatted_cubic_fails_only_for_h_and_v() {
    for a in AlgebraId::ALL {
        let spec = cubic_spec(a);
        let fails = failing(&check_all_with(&spec).unwrap());
        match a {
            AlgebraId::H | AlgebraId::V => assert_eq!(fails, vec![spec.hat_cubic.id.to_string()]),
            _ => assert!(fails.is_empty(), "{}: {:?}", a, fails),
        }
    }
}

#[test]
fn negated_omega_breaks_the_cubic() {
    let spec = cubic_spec_amended(AlgebraId::V);
    let t = build_triple(AlgebraId::V).unwrap();
    for w in ["w1", "w2", "w3", "w4"] {
        let r = check_cubic(&t, &spec.with_negated_omega(w), true);
        assert!(!r.check(spec.hat_cubic.id).unwrap().zero, "{}", w);
    }
}

#[test]
fn zhedanov_isomorphism() {
    for a in [AlgebraId::V, AlgebraId::IV, AlgebraId::III] {
        assert!(check_zhedanov_iso(a).unwrap().all_zero(), "{}", a);
        assert!(!check_zhedanov_iso_with(a, &ISO_IMAGES).unwrap().all_zero(), "{}", a);
    }
    assert!(matches!(check_zhedanov_iso(AlgebraId::H), Err(Error::UnknownAlgebra(_))));
}

#[test]
fn gamma_exchanges_first_two_omegas() {
    let id = check_gamma_spherical(true).unwrap();
    let g = check_gamma_spherical(false).unwrap();
    assert!(id.report.all_zero());
    assert!(g.report.all_zero());
    let w = |c: &GammaCheck, n: &str| c.omega.iter().find(|(m, _)| m == n).unwrap().1.clone();
    assert_eq!(w(&g, "w1"), w(&id, "w2"));
    assert_eq!(w(&g, "w2"), w(&id, "w1"));
    assert_eq!(w(&g, "w3"), w(&id, "w3"));
    assert_eq!(w(&g, "w4"), w(&id, "w4"));
}
