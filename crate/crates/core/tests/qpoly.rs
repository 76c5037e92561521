use cherednik::error::Error;
use cherednik::parse::{parse_scalar_with, ParseContext};
use cherednik::qdiff::{OpReading, XLaurent};
use cherednik::qpoly::*;
use cherednik::{Var, RF};
use proptest::prelude::*;

fn s(t: &str) -> RF {
    parse_scalar_with(t, &ParseContext::new(&[])).unwrap()
}

fn qpow(e: i32) -> RF {
    RF::var_pow(Var::Q, 2 * e as i16)
}

#[test]
fn degree_zero_is_one() {
    for id in FamilyId::ALL {
        assert_eq!(family(id).polynomial(0).unwrap(), XLaurent::one(), "{}", id);
    }
}

// One term of the 4φ3 besides k = 0: (1−q⁻¹)(1−abcd)(1−ax)(1−a/x)q over
// (1−ab)(1−ac)(1−ad)(1−q), and (1−q⁻¹)q/(1−q) = −1.
#[test]
fn aw_p1_by_hand() {
    let pre = s("(1-a*b)*(1-a*c)*(1-a*d)/(a*(1-a*b*c*d))");
    let expected = &pre - &(&s("(1-a*x)*(1-a/x)") / &s("a"));
    let p1 = family(FamilyId::AW).polynomial(1).unwrap();
    assert_eq!(p1.to_rf(), expected);
    assert_eq!(p1.top().unwrap().0, 1);
    assert!(p1.top().unwrap().1.is_one());
}

// 2φ1(q⁻¹, 0; aq; q, qx) = 1 + (1−q⁻¹)qx/((1−aq)(1−q)) = 1 − x/(1−aq).
#[test]
fn little_q_laguerre_p1_by_hand() {
    let p1 = family(FamilyId::LittleQLaguerre).polynomial(1).unwrap();
    assert_eq!(p1.to_rf(), s("1-x/(1-a*q)"));
}

#[test]
fn aw_polynomials_are_symmetric_and_monic() {
    for n in 0..=6 {
        let p = family(FamilyId::AW).polynomial(n).unwrap();
        assert!(p.is_symmetric(), "n={}", n);
        let (t, c) = p.top().unwrap();
        assert_eq!(t, n as i32);
        assert!(c.is_one(), "n={}: {}", n, c);
    }
}

#[test]
fn shapes() {
    for id in FamilyId::ALL {
        let f = family(id);
        for n in 0..=5u32 {
            let p = f.polynomial(n).unwrap();
            assert_eq!(p.top().unwrap().0, n as i32, "{} n={}", id, n);
            let bottom = if f.symmetric { -(n as i32) } else { 0 };
            assert_eq!(p.bottom().unwrap(), bottom, "{} n={}", id, n);
            assert_eq!(p.is_symmetric(), f.symmetric || n == 0, "{} n={}", id, n);
        }
    }
}

#[test]
fn big_q_jacobi_p0() {
    assert_eq!(family(FamilyId::BigQJacobi).polynomial(0).unwrap(), XLaurent::one());
}

#[test]
fn dual_q_hahn_is_aw_at_d_zero() {
    for n in 0..=5 {
        let aw = family(FamilyId::AW).polynomial(n).unwrap();
        let at0 = aw.map_coeffs(|c| c.substitute(&[(Var::D, RF::zero())])).unwrap();
        assert_eq!(at0, family(FamilyId::CDqHahn).polynomial(n).unwrap(), "n={}", n);
    }
}

#[test]
fn eigenvalues_as_stated() {
    assert_eq!(family(FamilyId::AW).eigenvalue(3), s("q^(-3)+a*b*c*d*q^2"));
    assert_eq!(family(FamilyId::AlSalamChihara).eigenvalue(2), s("1/q^2-1+(1+a+b-a*b)/(q+1)"));
    assert_eq!(family(FamilyId::BigQJacobi).eigenvalue(1), s("(1+q^3*a*b)/q"));
}

#[test]
fn every_family_is_an_eigenbasis_up_to_degree_8() {
    for id in FamilyId::ALL {
        let f = family(id);
        for n in 0..=8 {
            let c = verify_eigen(&f, n, OpReading::Amended).unwrap();
            assert!(c.holds, "{}: {}", c.id, c.residual);
        }
    }
}

#[test]
fn operator_on_one_is_the_first_eigenvalue() {
    for id in FamilyId::ALL {
        let f = family(id);
        let mut op = f.eigen_operator(OpReading::Amended).unwrap();
        op = op.substitute(&f.bindings()).unwrap();
        assert_eq!(op.apply(&XLaurent::one()).unwrap(), XLaurent::monomial(f.eigenvalue(0), 0), "{}", id);
    }
}

// The basis method and the full residual must agree, in both readings.
#[test]
fn basis_method_matches_direct_residual() {
    for id in FamilyId::ALL {
        let f = family(id);
        for reading in [OpReading::Printed, OpReading::Amended] {
            for n in 0..=3 {
                let direct = eigen_residual(&f, n, reading);
                let via = verify_eigen(&f, n, reading);
                match (direct, via) {
                    (Ok(r), Ok(c)) => assert_eq!(r.is_zero(), c.holds, "{} {:?} n={}", id, reading, n),
                    (Err(_), Err(_)) => {}
                    (d, v) => panic!("{} {:?} n={}: {:?} vs {:?}", id, reading, n, d.map(|r| r.is_zero()), v.map(|c| c.holds)),
                }
            }
        }
    }
}

#[test]
fn printed_operators_break_where_expected() {
    let holds = |id, n| verify_eigen(&family(id), n, OpReading::Printed).map(|c| c.holds);
    for n in 0..=3 {
        for id in [FamilyId::AW, FamilyId::CDqHahn, FamilyId::ContQHermite, FamilyId::LittleQLaguerre, FamilyId::LittleQLaguerreA0] {
            assert!(holds(id, n).unwrap(), "{} n={}", id, n);
        }
        for id in [FamilyId::BigQJacobi, FamilyId::BigQLaguerre, FamilyId::AlSalamChihara] {
            assert!(!holds(id, n).unwrap(), "{} n={}", id, n);
        }
        assert!(matches!(holds(FamilyId::ContBigQHermite, n), Err(Error::NonPolynomialResult)));
    }
}

#[test]
fn zero_lower_pochhammer_is_an_error() {
    let series = PhiSeries::new(vec![qpow(-3), s("a")], vec![qpow(-1)], s("q")).unwrap();
    assert!(matches!(series.sum(), Err(Error::ZeroDenominatorPochhammer)));
    // q^{−3} in the lower list is fine for n = 3
    let ok = PhiSeries::new(vec![qpow(-3), s("a")], vec![qpow(-3)], s("q")).unwrap();
    assert!(ok.sum().is_ok());
}

#[test]
fn non_terminating_series_is_rejected() {
    assert!(PhiSeries::new(vec![s("a"), s("b")], vec![s("c")], s("q")).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    // 1φ0(q^{−n}; —; q, z) = (q^{−n} z; q)_n
    #[test]
    fn q_binomial_theorem(n in 0i32..6) {
        let series = PhiSeries::new(vec![qpow(-n)], vec![], s("x")).unwrap();
        prop_assert_eq!(series.degree(), n as u32);
        prop_assert_eq!(series.sum().unwrap(), poch(&(&qpow(-n) * &s("x")), n));
    }

    // 2φ1(q^{−n}, b; c; q, q) = (c/b; q)_n b^n / (c; q)_n
    #[test]
    fn q_chu_vandermonde(n in 0i32..5) {
        let series = PhiSeries::new(vec![qpow(-n), s("b")], vec![s("c")], s("q")).unwrap();
        let rhs = &(&poch(&s("c/b"), n) * &s("b").pow(n).unwrap()) / &poch(&s("c"), n);
        prop_assert_eq!(series.sum().unwrap(), rhs);
    }

    #[test]
    fn poch_recursion(k in 0i32..6, e in -3i32..3) {
        let a = &s("a") * &qpow(e);
        let step = &RF::one() - &(&a * &qpow(k));
        prop_assert_eq!(poch(&a, k + 1), &poch(&a, k) * &step);
    }
}
