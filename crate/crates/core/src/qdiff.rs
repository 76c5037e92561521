//! q-shift operators with rational coefficients acting on Laurent
//! polynomials in x, the operator representations of the Zhedanov algebras
//! and their relation and Casimir checks.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Monomial, Var, RF};
use crate::nc::{Env, NCExpression};
use crate::parse::{parse_expression, parse_scalar_with, ParseContext};
use crate::presentations::presentation;
use crate::ring::Ring;

/// Finite Laurent polynomial Σ c_n x^n with coefficients free of x.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct XLaurent {
    terms: BTreeMap<i32, RF>,
}

impl XLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(RF::one(), 0)
    }

    pub fn monomial(c: RF, n: i32) -> Self {
        let mut out = Self::zero();
        out.add_term(n, &c);
        out
    }

    pub fn x_pow(n: i32) -> Self {
        Self::monomial(RF::one(), n)
    }

    /// x^n + x^{−n} for n > 0, and 1 for n = 0.
    pub fn sym(n: i32) -> Self {
        if n == 0 {
            Self::one()
        } else {
            Self::x_pow(n).plus(&Self::x_pow(-n))
        }
    }

    pub fn terms(&self) -> &BTreeMap<i32, RF> {
        &self.terms
    }

    fn add_term(&mut self, n: i32, c: &RF) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.get(&n) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if s.is_zero() {
            self.terms.remove(&n);
        } else {
            self.terms.insert(n, s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (n, c) in &o.terms {
            out.add_term(*n, c);
        }
        out
    }

    pub fn minus(&self, o: &Self) -> Self {
        self.plus(&o.scale(&RF::int(-1)))
    }

    pub fn scale(&self, c: &RF) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        XLaurent { terms: self.terms.iter().map(|(n, v)| (*n, v * c)).collect() }
    }

    pub fn times(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (n, c) in &self.terms {
            for (m, d) in &o.terms {
                out.add_term(n + m, &(c * d));
            }
        }
        out
    }

    pub fn top(&self) -> Option<(i32, &RF)> {
        self.terms.iter().next_back().map(|(n, c)| (*n, c))
    }

    pub fn bottom(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// Invariance under x ↔ 1/x.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(n, c)| self.terms.get(&-n).is_some_and(|d| d.is_equal(c)))
    }

    /// f(q^k x^σ).
    pub fn shifted(&self, k: i32, sigma: i8) -> Self {
        let mut out = Self::zero();
        for (n, c) in &self.terms {
            let qpow = RF::var_pow(Var::Q, (2 * k * n) as i16);
            out.add_term(sigma as i32 * n, &(c * &qpow));
        }
        out
    }

    /// f(λx) for a scalar λ.
    pub fn dilate(&self, lam: &RF) -> Result<Self> {
        let mut out = Self::zero();
        for (n, c) in &self.terms {
            out.add_term(*n, &(c * &lam.pow(*n)?));
        }
        Ok(out)
    }

    pub fn map_coeffs<F: Fn(&RF) -> Result<RF>>(&self, f: F) -> Result<Self> {
        let mut out = Self::zero();
        for (n, c) in &self.terms {
            out.add_term(*n, &f(c)?);
        }
        Ok(out)
    }

    pub fn to_rf(&self) -> RF {
        self.terms.iter().fold(RF::zero(), |acc, (n, c)| &acc + &(c * &RF::var_pow(Var::X, *n as i16)))
    }

    /// Laurent expansion of a rational function in x; fails unless every
    /// denominator factor involving x cancels.
    pub fn from_rf(r: &RF) -> Result<Self> {
        let parts = r.collect_var(Var::X).ok_or(Error::NonPolynomialResult)?;
        let mut out = Self::zero();
        for (n, c) in parts {
            out.add_term(n as i32, &c);
        }
        Ok(out)
    }
}

impl fmt::Display for XLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(n, c)| match n {
                0 => format!("({})", c),
                1 => format!("({})*x", c),
                _ => format!("({})*x^{}", c, n),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// c(q^k x^σ) for a rational function c in x.
pub fn shift_coeff(c: &RF, k: i32, sigma: i8) -> Result<RF> {
    if k == 0 && sigma == 1 {
        return Ok(c.clone());
    }
    c.map_monomials(|m| {
        let e = m.exp(Var::X);
        let out = m.with(Var::X, sigma as i16 * e).mul(&Monomial::var(Var::Q, 2 * k as i16 * e));
        (out, crate::GaussianRational::one())
    })
}

/// Σ c_j(x) · f(q^{k_j} x^{σ_j}), keyed by (k, σ).
#[derive(Clone, Debug, Default)]
pub struct QShiftOperator {
    terms: BTreeMap<(i32, i8), RF>,
}

impl QShiftOperator {
    pub fn term(c: RF, k: i32, sigma: i8) -> Self {
        let mut out = Self::default();
        out.add_term((k, sigma), &c);
        out
    }

    /// Multiplication by c(x).
    pub fn mult(c: RF) -> Self {
        Self::term(c, 0, 1)
    }

    /// f ↦ f(q^k x).
    pub fn shift(k: i32) -> Self {
        Self::term(RF::one(), k, 1)
    }

    /// f ↦ f(1/x).
    pub fn inversion() -> Self {
        Self::term(RF::one(), 0, -1)
    }

    pub fn terms(&self) -> &BTreeMap<(i32, i8), RF> {
        &self.terms
    }

    fn add_term(&mut self, key: (i32, i8), c: &RF) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.get(&key) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if s.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, s);
        }
    }

    /// (c1,k1,σ1)∘(c2,k2,σ2) = (c1(x)·c2(q^{k1}x^{σ1}), k2 + σ2k1, σ1σ2).
    pub fn compose(&self, o: &Self) -> Result<Self> {
        let mut out = Self::default();
        for ((k1, s1), c1) in &self.terms {
            for ((k2, s2), c2) in &o.terms {
                let c = c1 * &shift_coeff(c2, *k1, *s1)?;
                out.add_term((k2 + *s2 as i32 * k1, s1 * s2), &c);
            }
        }
        Ok(out)
    }

    pub fn apply(&self, f: &XLaurent) -> Result<XLaurent> {
        let mut acc = RF::zero();
        for ((k, s), c) in &self.terms {
            acc = &acc + &(c * &f.shifted(*k, *s).to_rf());
        }
        XLaurent::from_rf(&acc)
    }

    pub fn substitute(&self, bindings: &[(Var, RF)]) -> Result<Self> {
        let mut out = Self::default();
        for (key, c) in &self.terms {
            out.add_term(*key, &c.substitute(bindings)?);
        }
        Ok(out)
    }
}

impl fmt::Display for QShiftOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((k, s), c)| {
                let arg = match (k, s) {
                    (0, 1) => "x".to_string(),
                    (0, _) => "1/x".to_string(),
                    (k, 1) => format!("q^{}*x", k),
                    (k, _) => format!("q^{}/x", k),
                };
                format!("({})*f[{}]", c, arg)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Ring for QShiftOperator {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::mult(RF::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c);
        }
        out
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negate())
    }
    fn times(&self, o: &Self) -> Self {
        self.compose(o).expect("shifted coefficient has a zero denominator")
    }
    fn negate(&self) -> Self {
        self.scale(&RF::int(-1))
    }
    fn scale(&self, c: &RF) -> Self {
        let mut out = Self::default();
        for (k, v) in &self.terms {
            out.add_term(*k, &(v * c));
        }
        out
    }
}

/// The space an operator family acts on, and the test basis used when
/// canonical comparison is inconclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Space {
    /// Symmetric Laurent polynomials, basis x^n + x^{−n}.
    Symmetric,
    /// Polynomials, basis x^n.
    Polynomial,
    /// All Laurent polynomials, basis x^{±n}.
    Laurent,
}

impl Space {
    pub fn basis(self, n: i32) -> Vec<XLaurent> {
        match self {
            Space::Symmetric => (0..=n).map(XLaurent::sym).collect(),
            Space::Polynomial => (0..=n).map(XLaurent::x_pow).collect(),
            Space::Laurent => (-n..=n).map(XLaurent::x_pow).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    EqualCanonical,
    EqualOnSymmetricBasisUpTo(i32),
    NotEqual,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        !matches!(self, Verdict::NotEqual)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::EqualCanonical => write!(f, "equal"),
            Verdict::EqualOnSymmetricBasisUpTo(n) => write!(f, "equal on basis up to degree {}", n),
            Verdict::NotEqual => write!(f, "not equal"),
        }
    }
}

/// Canonical comparison first; otherwise the difference is applied to the
/// basis of `space` up to degree `n`.
pub fn operator_equal(a: &QShiftOperator, b: &QShiftOperator, space: Space, n: i32) -> Verdict {
    let d = a.minus(b);
    if d.is_zero() {
        return Verdict::EqualCanonical;
    }
    let vanishes = space.basis(n).iter().all(|f| d.apply(f).is_ok_and(|r| r.is_zero()));
    if vanishes {
        Verdict::EqualOnSymmetricBasisUpTo(n)
    } else {
        Verdict::NotEqual
    }
}

pub const DEFAULT_BASIS_DEGREE: i32 = 16;

/// Structure constants of a (confluent) Zhedanov algebra.
#[derive(Clone, Debug)]
pub struct ZhedanovParams {
    pub b: RF,
    pub c0: RF,
    pub c1: RF,
    pub d0: RF,
    pub d1: RF,
}

impl ZhedanovParams {
    fn parse(b: &str, c0: &str, c1: &str, d0: &str, d1: &str) -> Self {
        let p = |s: &str| scalar(s);
        ZhedanovParams { b: p(b), c0: p(c0), c1: p(c1), d0: p(d0), d1: p(d1) }
    }

    pub fn fields(&self) -> [(&'static str, &RF); 5] {
        [("B", &self.b), ("C0", &self.c0), ("C1", &self.c1), ("D0", &self.d0), ("D1", &self.d1)]
    }

    pub fn substitute(&self, bindings: &[(Var, RF)]) -> Result<Self> {
        let s = |r: &RF| r.substitute(bindings);
        Ok(ZhedanovParams { b: s(&self.b)?, c0: s(&self.c0)?, c1: s(&self.c1)?, d0: s(&self.d0)?, d1: s(&self.d1)? })
    }

    fn context(&self) -> ParseContext {
        let mut ctx = ParseContext::new(&["K0", "K1", "K2"]);
        for (n, v) in self.fields() {
            ctx = ctx.with_scalar(n, v.clone());
        }
        ctx
    }
}

fn scalar(s: &str) -> RF {
    parse_scalar_with(s, &ParseContext::new(&[])).unwrap_or_else(|e| panic!("bad coefficient {}: {}", s, e))
}

/// Identifiers of the operator representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RepId {
    /// Askey–Wilson operators of the full Zhedanov algebra.
    AW,
    ZV,
    /// Z_V after the γ automorphism, on polynomials evaluated at λx.
    ZVGamma,
    ZIV,
    ZIII,
    ZIIID7,
    ZIIID8,
    ZII,
    ZI,
}

impl RepId {
    pub const ALL: [RepId; 9] =
        [RepId::AW, RepId::ZV, RepId::ZVGamma, RepId::ZIV, RepId::ZIII, RepId::ZIIID7, RepId::ZIIID8, RepId::ZII, RepId::ZI];

    pub fn name(self) -> &'static str {
        match self {
            RepId::AW => "AW",
            RepId::ZV => "Z_V",
            RepId::ZVGamma => "Z_V^gamma",
            RepId::ZIV => "Z_IV",
            RepId::ZIII => "Z_III",
            RepId::ZIIID7 => "Z_III^D7",
            RepId::ZIIID8 => "Z_III^D8",
            RepId::ZII => "Z_II",
            RepId::ZI => "Z_I",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
        RepId::ALL
            .into_iter()
            .find(|r| r.name().chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::UnknownRepresentation(s.to_string()))
    }
}

impl fmt::Display for RepId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which version of a printed representation to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OpReading {
    Printed,
    /// Corrections forced by the relations themselves:
    /// Z_V: D0 and D1 are the Askey–Wilson values at d = 0 (ac/q inside D0,
    /// q² in the denominator of D1).
    /// Z_V^γ, Z_IV: λx in place of x in the f[x] coefficient and λ²x² in
    /// the denominator of the f[qx] coefficient, so that K0 depends on λx
    /// only.
    /// Z_III: no f[x] term beyond the two differences.
    /// D7: the same, and +x²(a − x) in the backward term, which makes K0
    /// preserve symmetric Laurent polynomials.
    /// Z_III, D7: the constant in K0β enters with a plus sign; with the
    /// amended K0 this is what makes the stated eigenvalues come out.
    Amended,
}

#[derive(Clone, Debug)]
pub struct Representation {
    pub id: RepId,
    pub k0: QShiftOperator,
    pub k1: QShiftOperator,
    /// (q/(q²−1))(K0K1 − qK1K0 − const), where printed.
    pub k0_beta: Option<QShiftOperator>,
    pub params: ZhedanovParams,
    pub space: Space,
}

/// up·(f[qx] − f[x]) + down·(f[x/q] − f[x]) + constant·f[x].
fn aw_type(up: &str, down: &str, constant: &str) -> QShiftOperator {
    let (u, d, c) = (scalar(up), scalar(down), scalar(constant));
    let mid = &(&c - &u) - &d;
    QShiftOperator::term(u, 1, 1).plus(&QShiftOperator::term(d, -1, 1)).plus(&QShiftOperator::mult(mid))
}

/// Terms (coefficient, shift) with no inversion.
fn shifts(terms: &[(&str, i32)]) -> QShiftOperator {
    terms.iter().fold(QShiftOperator::zero(), |acc, (c, k)| acc.plus(&QShiftOperator::term(scalar(c), *k, 1)))
}

fn beta(k0: &QShiftOperator, k1: &QShiftOperator, constant: &str) -> QShiftOperator {
    let q = crate::field::q();
    let inner = k0.times(k1).minus(&k1.times(k0).scale(&q)).minus(&QShiftOperator::mult(scalar(constant)));
    let pre = &q / &(&(&q * &q) - &RF::one());
    inner.scale(&pre)
}

pub fn catalogue(id: RepId) -> Representation {
    catalogue_with(id, OpReading::Amended)
}

pub fn catalogue_with(id: RepId, reading: OpReading) -> Representation {
    let sym_k1 = || QShiftOperator::mult(scalar("x+1/x"));
    let x_k1 = || QShiftOperator::mult(scalar("x"));
    let zero = "0";
    let c0 = "(q-1/q)^2";
    let amended = reading == OpReading::Amended;
    let pick = |printed: &'static str, fixed: &'static str| if amended { fixed } else { printed };
    let (k0, k1, k0_beta, params, space) = match id {
        RepId::AW => (
            aw_type(
                "(1-a*x)*(1-b*x)*(1-c*x)*(1-d*x)/((1-x^2)*(1-q*x^2))",
                "(a-x)*(b-x)*(c-x)*(d-x)/((1-x^2)*(q-x^2))",
                "1+a*b*c*d/q",
            ),
            sym_k1(),
            None,
            ZhedanovParams::parse(
                "(q-1)^2/q*((1+a*b/q)*(d/c+1)*c+(b/a+1)*(1+c*d/q)*a)",
                c0,
                "a*b*c*d/q*(q-1/q)^2",
                "-(q+1)*(q-1)^2/q*((b/a+1)*(d/c+1)*a*c/q+(1+a*b/q)*(1+c*d/q))",
                "-(q+1)*(q-1)^2/q^2*((b/a+1)*(1+a*b/q)*a*c*d+(d/c+1)*(1+c*d/q)*a*b*c)",
            ),
            Space::Symmetric,
        ),
        // The printed D1 carries a stray factor (1 + cd/q); Z_V has no d
        // and it is read with d = 0.
        RepId::ZV => (
            aw_type(
                "(1-a*x)*(1-b*x)*(1-c*x)/((1-x^2)*(1-q*x^2))",
                "-x*(a-x)*(b-x)*(c-x)/((1-x^2)*(q-x^2))",
                "1",
            ),
            sym_k1(),
            None,
            ZhedanovParams::parse(
                "(q-1)^2/q*((1+a*b/q)*c+(b/a+1)*a)",
                c0,
                zero,
                pick("-(q+1)*(q-1)^2/q*((b/a+1)*a*c+(1+a*b/q))", "-(q+1)*(q-1)^2/q*((b/a+1)*a*c/q+(1+a*b/q))"),
                pick("-(q+1)*(q-1)^2/q*a*b*c", "-(q+1)*(q-1)^2/q^2*a*b*c"),
            ),
            Space::Symmetric,
        ),
        RepId::ZVGamma => (
            shifts(&[
                (
                    pick(
                        "q*(lam*c*x+a*(x*(1+b)-c*(1+q-lam*x)))/(lam^2*x^2)",
                        "q*(lam*c*x+a*(lam*x*(1+b)-c*(1+q-lam*x)))/(lam^2*x^2)",
                    ),
                    0,
                ),
                ("(lam*x-q*a)*(lam*x-q*c)/(lam^2*x^2)", -1),
                (pick("q*(lam*x-1)*a*(b*lam*x-c)/x^2", "q*(lam*x-1)*a*(b*lam*x-c)/(lam^2*x^2)"), 1),
            ]),
            x_k1(),
            None,
            ZhedanovParams::parse(
                "(q-1)^2*(c+a*(1+b+c))/lam",
                zero,
                "q*(q-1/q)^2*a*b",
                "-(q+1)*(q-1)^2*a*c/lam^2",
                "-(q-1)^2*(q+1)*a*(c+b*(1+a+c))/lam",
            ),
            Space::Polynomial,
        ),
        RepId::ZIV => (
            shifts(&[
                (
                    pick(
                        "q*(lam*c*x+a*(x-c*(1+q-lam*x)))/(lam^2*x^2)",
                        "q*(lam*c*x+a*(lam*x-c*(1+q-lam*x)))/(lam^2*x^2)",
                    ),
                    0,
                ),
                ("(lam*x-q*a)*(lam*x-q*c)/(lam^2*x^2)", -1),
                (pick("-q*(lam*x-1)*a*c/x^2", "-q*(lam*x-1)*a*c/(lam^2*x^2)"), 1),
            ]),
            x_k1(),
            None,
            ZhedanovParams::parse(
                "(q-1)^2*(c+a*(1+c))/lam",
                zero,
                zero,
                "-(q+1)*(q-1)^2*a*c/lam^2",
                "-(q-1)^2*(q+1)*a*c/lam",
            ),
            Space::Polynomial,
        ),
        RepId::ZIII => {
            let k0 = aw_type(
                "-x*(1-a*x)*(1-b*x)*c/((1-x^2)*(1-q*x^2))",
                "-x*(a-x)*(b-x)*c/((1-x^2)*(q-x^2))",
                pick("1", "0"),
            );
            let k1 = sym_k1();
            let kb = beta(&k0, &k1, pick("(a+b)*(q-1)/q", "-(a+b)*(q-1)/q"));
            (
                k0,
                k1,
                Some(kb),
                ZhedanovParams::parse("(q-1)^2/q*(1+a*b/q)*c", c0, zero, "-(q+1)*(q-1)^2/q^2*(a+b)*c", zero),
                Space::Symmetric,
            )
        }
        RepId::ZIIID7 => {
            let down = pick("-x^2*(a-x)/((1-x^2)*(q-x^2))", "x^2*(a-x)/((1-x^2)*(q-x^2))");
            let k0 = aw_type("-x*(1-a*x)/((1-x^2)*(1-q*x^2))", down, pick("1", "0"));
            let k1 = sym_k1();
            let kb = beta(&k0, &k1, pick("a*(q-1)/q", "-a*(q-1)/q"));
            (
                k0,
                k1,
                Some(kb),
                ZhedanovParams::parse("(q-1)^2/q", c0, zero, "-(q+1)*(q-1)^2/q^2*a", zero),
                Space::Symmetric,
            )
        }
        // The printed backward coefficient has z^3 for x^3.
        RepId::ZIIID8 => {
            let k0 = shifts(&[
                ("-q*x*(1+x^2)/((q-x^2)*(q*x^2-1))", 0),
                ("-x^3/((x^2-1)*(x^2-q))", -1),
                ("-x/((x^2-1)*(q*x^2-1))", 1),
            ]);
            let k1 = sym_k1();
            let kb = beta(&k0, &k1, "0");
            (k0, k1, Some(kb), ZhedanovParams::parse("(q-1)^2/q", c0, zero, zero, zero), Space::Symmetric)
        }
        RepId::ZII => (
            shifts(&[("(1+a)/x", 0), ("(x-1)/x", -1), ("-a/x", 1)]),
            x_k1(),
            None,
            ZhedanovParams::parse("(q-1)^2*(1+a)/q", zero, zero, zero, "-(q-1)^2*(1+q)/q*a"),
            Space::Polynomial,
        ),
        RepId::ZI => (
            shifts(&[("1/x", 0), ("(x-1)/x", -1)]),
            x_k1(),
            None,
            ZhedanovParams::parse("(q-1)^2/q", zero, zero, zero, zero),
            Space::Polynomial,
        ),
    };
    Representation { id, k0, k1, k0_beta, params, space }
}

/// The two Zhedanov relations beyond the definition of K2, and the Casimir.
pub const ZHE2: &str = "q^(1/2)*K1*K2-q^(-1/2)*K2*K1-B*K1-C0*K0-D0";
pub const ZHE3: &str = "q^(1/2)*K2*K0-q^(-1/2)*K0*K2-B*K0-C1*K1-D1";
pub const CASIMIR: &str = "q^(-1/2)*(1-q^2)*K0*K1*K2+q*K2^2+B*(K0*K1+K1*K0)+q*C0*K0^2+C1/q*K1^2\
                           +(1+q)*D0*K0+(1+1/q)*D1*K1";

#[derive(Clone, Debug, Serialize)]
pub struct OperatorCheck {
    pub id: String,
    pub verdict: Verdict,
    pub residual: String,
}

impl OperatorCheck {
    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }
}

impl Representation {
    /// K2 = q^{1/2}K0K1 − q^{−1/2}K1K0.
    pub fn k2(&self) -> QShiftOperator {
        let a = self.k0.times(&self.k1).scale(&crate::field::qh(1));
        a.minus(&self.k1.times(&self.k0).scale(&crate::field::qh(-1)))
    }

    fn env(&self) -> Env<'static, QShiftOperator> {
        Env::new(Box::new(|c: &RF| Ok(QShiftOperator::mult(c.clone()))))
            .with_gen("K0", self.k0.clone())
            .with_gen("K1", self.k1.clone())
            .with_gen("K2", self.k2())
    }

    pub fn eval(&self, text: &str, params: &ZhedanovParams) -> Result<QShiftOperator> {
        parse_expression(text, &params.context())?.eval(&self.env())
    }

    fn verdict(&self, id: &str, op: &QShiftOperator, n: i32) -> OperatorCheck {
        let verdict = operator_equal(op, &QShiftOperator::zero(), self.space, n);
        let residual = if verdict.holds() { String::new() } else { op.to_string() };
        OperatorCheck { id: format!("{} {}", self.id, id), verdict, residual }
    }

    /// zhe2, zhe3 with the given constants, and centrality of the Casimir.
    pub fn check_with(&self, params: &ZhedanovParams, n: i32) -> Result<Vec<OperatorCheck>> {
        let mut out = Vec::new();
        for (id, rel) in [("zhe2", ZHE2), ("zhe3", ZHE3)] {
            out.push(self.verdict(id, &self.eval(rel, params)?, n));
        }
        let c = self.eval(CASIMIR, params)?;
        out.push(self.verdict("[Casimir,K0]", &c.commutator(&self.k0), n));
        out.push(self.verdict("[Casimir,K1]", &c.commutator(&self.k1), n));
        Ok(out)
    }

    pub fn check(&self, n: i32) -> Result<Vec<OperatorCheck>> {
        self.check_with(&self.params, n)
    }

    /// Structure constants read off from the operators themselves: the
    /// unique B, C0, C1, D0, D1 (if any) for which zhe2 and zhe3 hold.
    pub fn derived_params(&self, n: i32) -> Option<ZhedanovParams> {
        derive_params(self, n)
    }
}

// zhe2: L2 = B K1 + C0 K0 + D0, zhe3: L3 = B K0 + C1 K1 + D1, with L2, L3
// the left sides. Applied to a basis these are linear equations in the five
// constants; solve by exact elimination.
fn derive_params(rep: &Representation, n: i32) -> Option<ZhedanovParams> {
    let zero = ZhedanovParams::parse("0", "0", "0", "0", "0");
    let l2 = rep.eval("q^(1/2)*K1*K2-q^(-1/2)*K2*K1", &zero).ok()?;
    let l3 = rep.eval("q^(1/2)*K2*K0-q^(-1/2)*K0*K2", &zero).ok()?;
    let one = QShiftOperator::one();
    // unknowns: B, C0, C1, D0, D1
    let mut rows: Vec<Vec<RF>> = Vec::new();
    for f in rep.space.basis(n) {
        let cols2 = [&rep.k1, &rep.k0, &QShiftOperator::zero(), &one, &QShiftOperator::zero()];
        let cols3 = [&rep.k0, &QShiftOperator::zero(), &rep.k1, &QShiftOperator::zero(), &one];
        for (l, cols) in [(&l2, cols2), (&l3, cols3)] {
            let rhs = l.apply(&f).ok()?;
            let images: Vec<XLaurent> = cols.iter().map(|c| c.apply(&f)).collect::<Result<_>>().ok()?;
            let mut keys: Vec<i32> = rhs.terms().keys().copied().collect();
            for im in &images {
                keys.extend(im.terms().keys().copied());
            }
            keys.sort_unstable();
            keys.dedup();
            for k in keys {
                let mut row: Vec<RF> = images.iter().map(|im| im.terms().get(&k).cloned().unwrap_or_else(RF::zero)).collect();
                row.push(rhs.terms().get(&k).cloned().unwrap_or_else(RF::zero));
                rows.push(row);
            }
        }
    }
    let sol = solve(rows, 5)?;
    Some(ZhedanovParams { b: sol[0].clone(), c0: sol[1].clone(), c1: sol[2].clone(), d0: sol[3].clone(), d1: sol[4].clone() })
}

/// Unique solution of an overdetermined consistent linear system given as
/// augmented rows, or None.
fn solve(mut rows: Vec<Vec<RF>>, n: usize) -> Option<Vec<RF>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let p = (r..rows.len()).find(|&i| !rows[i][col].is_zero())?;
        rows.swap(r, p);
        let inv = rows[r][col].inv().ok()?;
        let pivot: Vec<RF> = rows[r].iter().map(|v| v * &inv).collect();
        rows[r] = pivot.clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                rows[i] = rows[i].iter().zip(&pivot).map(|(a, b)| a - &(&f * b)).collect();
            }
        }
        pivots.push(r);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&i| rows[i][n].clone()).collect())
}

/// Substitutions relating the operator parameters a, b, c, d, λ to the
/// algebra parameters.
pub fn parameter_map(id: RepId) -> Vec<(Var, RF)> {
    let s = scalar;
    match id {
        RepId::AW => vec![
            (Var::A, s("-u1/k1")),
            (Var::B, s("k1*u1")),
            (Var::C, s("-q^(1/2)*k0/u0")),
            (Var::D, s("q^(1/2)*u0*k0")),
        ],
        RepId::ZV | RepId::ZIII => vec![(Var::A, s("-u1/k1")), (Var::B, s("k1*u1")), (Var::C, s("-q^(1/2)/u0"))],
        RepId::ZVGamma => vec![
            (Var::LAM, s("u1")),
            (Var::A, s("-k1*u1/(q^(1/2)*u0)")),
            (Var::B, s("-k1*u0*u1/q^(1/2)")),
            (Var::C, s("-u1^2/q")),
        ],
        RepId::ZIV => vec![(Var::LAM, s("u1")), (Var::A, s("-u1/(q^(1/2)*u0)")), (Var::C, s("-u1^2/q"))],
        _ => Vec::new(),
    }
}

/// The tables in terms of the algebra parameters u0, u1, k0, k1, where
/// printed.
pub fn algebra_table(id: RepId) -> Option<ZhedanovParams> {
    let z = "0";
    let c0 = "(q-1/q)^2";
    Some(match id {
        RepId::AW => ZhedanovParams::parse(
            "k0*u1*(q-1)^2/q*(ub0*(1/u1-u1/q)*q^(1/2)-kb0*kb1)",
            c0,
            "k0^2*u1^2*(q-1/q)^2",
            "k0*u1*(q+1)*(q-1)^2/q^(3/2)*(-kb1*ub0+kb0*(1/u1-u1/q)*q^(1/2))",
            "k0^2*u1^2*(q+1)*(q-1)^2/q^(3/2)*(-kb0*ub0+kb1*(1/u1-u1/q)*q^(1/2))",
        ),
        RepId::ZV => ZhedanovParams::parse(
            "u1*(q-1)^2/q*(kb1-1/u0*(q^(1/2)/u1-u1/q^(1/2)))",
            c0,
            z,
            "u1*(q+1)*(q-1)^2/q*(kb1/(q^(1/2)*u0)-(1/u1-u1/q))",
            "-u1^2*(q+1)*(q-1)^2/(q^(3/2)*u0)",
        ),
        RepId::ZVGamma => ZhedanovParams::parse(
            "-(q-1)^2/q^(3/2)/u0*(q*k1-k1*u1^2-q^(1/2)*(k1^2-1)*u0*u1)",
            z,
            "(q^2-1)^2*k1^2*u1^2/q^2",
            "-(q+1)*(q-1)^2/q^(3/2)*k1*u1/u0",
            "-u1*k1/u0*(q+1)*(q-1)^2/q^2*(k1*u0*(q-u1^2)-q^(1/2)*(k1^2-1)*u1)",
        ),
        RepId::ZIV => ZhedanovParams::parse(
            "u1*(q-1)^2/q*(-1-1/u0*(q^(1/2)/u1-u1/q^(1/2)))",
            z,
            z,
            "-(q+1)*(q-1)^2/q^(3/2)*u1/u0",
            "-u1^2/u0*(q+1)*(q-1)^2/q^(3/2)",
        ),
        RepId::ZIII => ZhedanovParams::parse(
            "-u1/u0*(q-1)^2/q*(q^(1/2)/u1-u1/q^(1/2))",
            c0,
            z,
            "u1*(q+1)*(q-1)^2/q^(3/2)*(kb1/u0)",
            z,
        ),
        _ => return None,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TableCheck {
    pub id: String,
    pub agrees: bool,
    pub difference: String,
}

/// Compare a representation's table, pushed through the parameter map,
/// with the algebra table field by field.
pub fn check_table_consistency(id: RepId, reading: OpReading) -> Result<Vec<TableCheck>> {
    let Some(alg) = algebra_table(id) else { return Ok(Vec::new()) };
    let rep = catalogue_with(id, reading).params.substitute(&parameter_map(id))?;
    Ok(rep
        .fields()
        .iter()
        .zip(alg.fields())
        .map(|((name, r), (_, a))| {
            let d = *r - a;
            TableCheck { id: format!("{} {}", id, name), agrees: d.is_zero(), difference: if d.is_zero() { String::new() } else { d.to_string() } }
        })
        .collect())
}

/// X, W = X⁻¹, T1, T0 of the basic representation on all Laurent
/// polynomials.
pub fn basic_representation() -> [(&'static str, QShiftOperator); 4] {
    let t1 = QShiftOperator::mult(scalar("((a+b)*x-(1+a*b))/(1-x^2)"))
        .plus(&QShiftOperator::term(scalar("(1-a*x)*(1-x*b)/(1-x^2)"), 0, -1));
    let t0 = QShiftOperator::mult(scalar("q^-1*x*((c*d+q)*x-(c+d)*q)/(q-x^2)"))
        .plus(&QShiftOperator::term(scalar("(c-x)*(d-x)/(q-x^2)"), 1, -1));
    [
        ("X", QShiftOperator::mult(scalar("x"))),
        ("W", QShiftOperator::mult(scalar("1/x"))),
        ("T1", t1),
        ("T0", t0),
    ]
}

/// The T0, T1, X presentation of H evaluated on the basic representation.
pub fn check_basic_representation(n: i32) -> Result<Vec<OperatorCheck>> {
    let p = presentation("sahi")?;
    let [x, w, t1, t0] = basic_representation();
    let env = Env::new(Box::new(|c: &RF| Ok(QShiftOperator::mult(c.clone()))))
        .with_gen(x.0, x.1.clone())
        .with_gen(w.0, w.1.clone())
        .with_gen(t1.0, t1.1)
        .with_gen(t0.0, t0.1)
        .with_inverse("X", w.1);
    let mut out = Vec::new();
    for r in &p.relations {
        let e: NCExpression = p.expression(r)?;
        let op = e.eval(&env)?;
        let verdict = operator_equal(&op, &QShiftOperator::zero(), Space::Laurent, n);
        let residual = if verdict.holds() { String::new() } else { op.to_string() };
        out.push(OperatorCheck { id: format!("basic {}", r.id), verdict, residual });
    }
    Ok(out)
}
