use cherednik::classical::monodromy::{classical_monodromy, Check};
use cherednik::classical::shear::{g_closed, omegas};
use cherednik::classical::*;
use cherednik::qmat::AlgebraId;
use cherednik::{Ring, RF};
use proptest::prelude::*;

fn failing(c: &[Check]) -> Vec<String> {
    c.iter().filter(|c| !c.zero).map(|c| c.id.clone()).collect()
}

#[test]
fn classical_cubics_are_limits_of_the_quantum_ones() {
    for a in AlgebraId::ALL {
        let r = check_classical_cubic(a).unwrap();
        assert_eq!(r.scalar, [true; 3], "{}", a);
        assert!(r.zero, "{}: {}", a, r.residual);
        assert_eq!(r.limit_ratio.as_deref(), Some("1"), "{}", a);
    }
}

#[test]
fn fricke_cubic_vanishes_on_the_shear_parametrisation() {
    let r = check_fricke();
    assert!(r.zero, "{}", r.residual);
    for t in &r.traces {
        assert!(t.minus_half_p && !t.unshifted && !t.plus_half_p, "{:?}", t);
    }
}

// At s = p = 0 every G_i and G∞ is 2 and each G_ij is −1−1−1−2−2.
#[test]
fn origin_values_match_plain_integer_arithmetic() {
    let (g, gij) = (2i64, -7i64);
    let w = g * g + g * g;
    let winf = 3 * g * g + g * g + g * g * g * g - 4;
    let phi = 3 * gij * gij + gij * gij * gij - 3 * w * gij + winf;
    assert_eq!(phi, 0);
    for x in g_closed() {
        assert_eq!(x.at_origin(), RF::int(gij));
    }
    let om = omegas();
    for k in 0..3 {
        assert_eq!(om[k].at_origin(), RF::int(w));
    }
    assert_eq!(om[3].at_origin(), RF::int(winf));
    assert_eq!(check_fricke().origin, "0");
}

#[test]
fn shear_bracket_is_the_fricke_gradient() {
    let r = check_poisson();
    assert_eq!(r.sign, Some(1), "{:?}", r.checks);
}

#[test]
fn amended_monodromy_relations_hold() {
    let c = check_classical_monodromy(MonReading::Amended);
    assert_eq!(failing(&c), vec!["tr M1=G1"]);
    let q = check_quantum_monodromy(MonReading::Amended);
    assert!(failing(&q).is_empty(), "{:?}", failing(&q));
    let f = check_fock_monodromy(MonReading::Amended);
    assert!(failing(&f).is_empty(), "{:?}", failing(&f));
}

#[test]
fn printed_monodromy_fails_where_expected() {
    let c = failing(&check_classical_monodromy(MonReading::Printed));
    for id in ["(M3+P2)(M3+1/P3)", "(Minf+e^S)(Minf+e^-S)", "M1*M2*M3*Minf=1", "det M3=1", "tr M1=G1"] {
        assert!(c.iter().any(|x| x == id), "{} missing from {:?}", id, c);
    }
    assert_eq!(failing(&check_fock_monodromy(MonReading::Printed)), vec!["Fock M3"]);
}

#[test]
fn monodromy_matrices_are_unimodular_with_trace_minus_g() {
    let m = classical_monodromy(MonReading::Amended);
    for k in 0..3 {
        assert!(m[k].det().minus(&CommLaurent::scalar(RF::one())).is_zero());
        let p = CommLaurent::exp_half({
            let mut e = [0; 6];
            e[3 + k] = 1;
            e
        });
        let g = p.plus(&CommLaurent::exp_half({
            let mut e = [0; 6];
            e[3 + k] = -1;
            e
        }));
        assert!(m[k].trace().plus(&g).is_zero());
    }
}

#[test]
fn final_identification_reproduces_the_embedding() {
    let r = check_final_identification(MonReading::Amended).unwrap();
    assert!(r.relations.failures().is_empty());
    assert!(r.matches_embedding.iter().all(|(_, ok)| *ok), "{:?}", r.matches_embedding);
    let p = check_final_identification(MonReading::Printed).unwrap();
    assert!(!p.relations.failures().is_empty());
}

#[test]
fn quantum_shear_algebra() {
    let a = check_quantum_shear(MonReading::Amended);
    assert!(failing(&a).is_empty(), "{:?}", failing(&a));
    let p = failing(&check_quantum_shear(MonReading::Printed));
    assert_eq!(p, vec!["q-comm x1x2", "q-comm x2x3", "q-comm x3x1", "q-cubic"]);
}

fn laurent() -> impl Strategy<Value = CommLaurent> {
    prop::collection::vec(((-2i32..=2, -2i32..=2, -2i32..=2), -3i64..=3, -1i32..=1), 1..4).prop_map(|ts| {
        ts.into_iter().fold(CommLaurent::zero(), |acc, ((a, b, c), k, p)| {
            acc.plus(&CommLaurent::exp_int([a, b, c], [p, 0, 0]).scale(&RF::int(k)))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bracket_is_antisymmetric(f in laurent(), g in laurent()) {
        prop_assert!(poisson_bracket(&f, &g).plus(&poisson_bracket(&g, &f)).is_zero());
    }

    #[test]
    fn bracket_is_a_derivation(f in laurent(), g in laurent(), h in laurent()) {
        let lhs = poisson_bracket(&f, &g.times(&h));
        let rhs = poisson_bracket(&f, &g).times(&h).plus(&g.times(&poisson_bracket(&f, &h)));
        prop_assert!(lhs.minus(&rhs).is_zero());
    }

    #[test]
    fn bracket_satisfies_jacobi(f in laurent(), g in laurent(), h in laurent()) {
        let j = poisson_bracket(&f, &poisson_bracket(&g, &h))
            .plus(&poisson_bracket(&g, &poisson_bracket(&h, &f)))
            .plus(&poisson_bracket(&h, &poisson_bracket(&f, &g)));
        prop_assert!(j.is_zero());
    }
}
