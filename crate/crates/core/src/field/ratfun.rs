use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use super::gaussian::GaussianRational;
use super::monomial::{Monomial, Var};
use super::poly::Poly;
use crate::error::{Error, Result};

/// A normalised denominator factor: monomial gcd 1 and leading coefficient
/// 1 under the registry lexicographic order. Units (constants times
/// monomials) are never stored as factors.
pub type Factor = Arc<Poly>;

/// Exact quotient of Laurent polynomials.
///
/// The denominator is kept as a product of normalised factors with
/// multiplicities. Sums use the factorwise least common multiple and every
/// operation cancels factors that divide the numerator exactly, so the
/// representation stays compact without a multivariate gcd.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: Vec<(Factor, u32)>,
}

/// Split a nonzero polynomial into a unit `c·m` and a normalised factor.
/// Returns `None` for the factor when the polynomial is itself a unit.
pub fn normalize_factor(p: &Poly) -> (GaussianRational, Monomial, Option<Poly>) {
    let base = p.min_monomial();
    if p.len() == 1 {
        let (m, c) = p.as_term().unwrap();
        return (c.clone(), *m, None);
    }
    let shifted = p.shift(&base.inv());
    let lc = shifted.leading().unwrap().1.clone();
    let f = shifted.scale(&lc.inv().unwrap());
    (lc, base, Some(f))
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn int(n: i64) -> Self {
        Self::from_poly(Poly::int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::constant(GaussianRational::from_frac(n, d))
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Poly::var(v))
    }

    /// `v^e` for any integer `e`.
    pub fn var_pow(v: Var, e: i16) -> Self {
        Self::from_poly(Poly::monomial(Monomial::var(v, e)))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_poly(Poly::monomial(m))
    }

    pub fn from_poly(num: Poly) -> Self {
        RationalFunction { num, den: Vec::new() }
    }

    /// `num / ∏ dens`, keeping the listed denominators as separate factors.
    pub fn from_factored(num: Poly, dens: &[Poly]) -> Result<Self> {
        let mut r = Self::from_poly(num);
        for d in dens {
            r = r.div_poly(d)?;
        }
        Ok(r)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den_factors(&self) -> &[(Factor, u32)] {
        &self.den
    }

    /// The expanded denominator polynomial (leading coefficient 1).
    pub fn den(&self) -> Poly {
        let mut acc = Poly::one();
        for (f, e) in &self.den {
            acc = &acc * &f.pow(*e);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    /// True when the denominator is 1, i.e. a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn involves(&self, v: Var) -> bool {
        self.num.involves(v) || self.den.iter().any(|(f, _)| f.involves(v))
    }

    pub fn den_involves(&self, v: Var) -> bool {
        self.den.iter().any(|(f, _)| f.involves(v))
    }

    /// Cancel any denominator factor that divides the numerator.
    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let mut kept = Vec::with_capacity(self.den.len());
        for (f, mut e) in std::mem::take(&mut self.den) {
            while e > 0 {
                match self.num.div_exact(&f) {
                    Some(q) => {
                        self.num = q;
                        e -= 1;
                    }
                    None => break,
                }
            }
            if e > 0 {
                kept.push((f, e));
            }
        }
        self.den = kept;
        self
    }

    fn insert_factor(den: &mut Vec<(Factor, u32)>, f: Factor, e: u32) {
        for slot in den.iter_mut() {
            if *slot.0 == *f {
                slot.1 += e;
                return;
            }
        }
        den.push((f, e));
        den.sort_by(|a, b| cmp_poly(&a.0, &b.0));
    }

    /// Divide by a polynomial, keeping it as one factor.
    pub fn div_poly(&self, p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (c, m, f) = normalize_factor(p);
        let mut num = self.num.mul_term(&m.inv(), &c.inv().unwrap());
        let mut den = self.den.clone();
        if let Some(f) = f {
            match num.div_exact(&f) {
                Some(q) => num = q,
                None => Self::insert_factor(&mut den, Arc::new(f), 1),
            }
        }
        Ok(RationalFunction { num, den })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let top = RationalFunction::from_poly(self.den());
        top.div_poly(&self.num)
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        RationalFunction { num: self.num.shift(m), den: self.den.clone() }
    }

    pub fn is_equal(&self, o: &Self) -> bool {
        (self - o).is_zero()
    }

    /// Cross-multiplication test `a.num·b.den − b.num·a.den = 0`, used as an
    /// independent check of `is_equal`.
    pub fn is_equal_cross(&self, o: &Self) -> bool {
        (&(&self.num * &o.den()) - &(&o.num * &self.den())).is_zero()
    }

    /// Apply a monomial map to every monomial of numerator and denominator,
    /// renormalising the denominator factors.
    pub fn map_monomials<F: Fn(&Monomial) -> (Monomial, GaussianRational)>(
        &self,
        f: F,
    ) -> Result<Self> {
        let mut out = RationalFunction::from_poly(self.num.map_monomials(&f));
        for (fac, e) in &self.den {
            let image = fac.map_monomials(&f);
            for _ in 0..*e {
                out = out.div_poly(&image)?;
            }
        }
        Ok(out.reduce())
    }

    /// Simultaneous substitution of parameters by rational functions.
    pub fn substitute(&self, bindings: &[(Var, RationalFunction)]) -> Result<Self> {
        let num = subst_poly(&self.num, bindings)?;
        let mut out = num;
        for (f, e) in &self.den {
            let d = subst_poly(f, bindings)?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            for _ in 0..*e {
                out = &out / &d;
            }
        }
        Ok(out)
    }

    /// Substitute Q → 1; fails with `PoleAtQ1` if a denominator vanishes.
    pub fn classical_limit(&self) -> Result<Self> {
        let one = GaussianRational::one();
        let mut out = RationalFunction::from_poly(self.num.eval_var_const(Var::Q, &one));
        for (f, e) in &self.den {
            let d = f.eval_var_const(Var::Q, &one);
            if d.is_zero() {
                return Err(Error::PoleAtQ1);
            }
            for _ in 0..*e {
                out = out.div_poly(&d)?;
            }
        }
        Ok(out.reduce())
    }

    /// Laurent expansion in `v`, available when the denominator does not
    /// involve `v`.
    pub fn collect_var(&self, v: Var) -> Option<Vec<(i16, RationalFunction)>> {
        if self.den_involves(v) {
            return None;
        }
        Some(
            self.num
                .collect_var(v)
                .into_iter()
                .map(|(e, p)| (e, RationalFunction { num: p, den: self.den.clone() }.reduce()))
                .collect(),
        )
    }

    fn add_impl(&self, o: &Self, negate: bool) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -o } else { o.clone() };
        }
        if self.den.is_empty() && o.den.is_empty() {
            let num = if negate { &self.num - &o.num } else { &self.num + &o.num };
            return RationalFunction { num, den: Vec::new() };
        }
        let mut lcm = self.den.clone();
        for (f, e) in &o.den {
            match lcm.iter_mut().find(|s| *s.0 == **f) {
                Some(slot) => slot.1 = slot.1.max(*e),
                None => lcm.push((f.clone(), *e)),
            }
        }
        lcm.sort_by(|a, b| cmp_poly(&a.0, &b.0));
        let cofactor = |den: &[(Factor, u32)]| {
            let mut acc = Poly::one();
            for (f, e) in &lcm {
                let have = den.iter().find(|s| *s.0 == **f).map(|s| s.1).unwrap_or(0);
                if *e > have {
                    acc = &acc * &f.pow(e - have);
                }
            }
            acc
        };
        let a = &self.num * &cofactor(&self.den);
        let b = &o.num * &cofactor(&o.den);
        let num = if negate { &a - &b } else { &a + &b };
        RationalFunction { num, den: lcm }.reduce()
    }

    fn mul_impl(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut num = &self.num * &o.num;
        if self.den.is_empty() && o.den.is_empty() {
            return RationalFunction { num, den: Vec::new() };
        }
        let mut den: Vec<(Factor, u32)> = Vec::new();
        let mut pending: Vec<(Factor, u32)> = self.den.clone();
        pending.extend(o.den.iter().cloned());
        // Try cancelling each incoming factor against the other side first.
        for (f, e) in pending {
            let mut e = e;
            while e > 0 {
                match num.div_exact(&f) {
                    Some(q) => {
                        num = q;
                        e -= 1;
                    }
                    None => break,
                }
            }
            if e > 0 {
                Self::insert_factor(&mut den, f, e);
            }
        }
        RationalFunction { num, den }
    }
}

fn cmp_poly(a: &Poly, b: &Poly) -> std::cmp::Ordering {
    let ka: Vec<_> = a.terms().iter().map(|(m, _)| *m).collect();
    let kb: Vec<_> = b.terms().iter().map(|(m, _)| *m).collect();
    ka.cmp(&kb).then_with(|| a.to_string().cmp(&b.to_string()))
}

fn subst_poly(p: &Poly, bindings: &[(Var, RationalFunction)]) -> Result<RationalFunction> {
    use std::collections::HashMap;
    let mut cache: HashMap<(Var, i16), RationalFunction> = HashMap::new();
    let mut acc = RationalFunction::zero();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut value = RationalFunction::constant(c.clone());
        for (v, val) in bindings {
            let e = m.exp(*v);
            if e == 0 {
                continue;
            }
            rest = rest.with(*v, 0);
            let pw = match cache.get(&(*v, e)) {
                Some(p) => p.clone(),
                None => {
                    if e < 0 && val.is_zero() {
                        return Err(Error::SubstituteZeroIntoNegativePower(v.name().to_string()));
                    }
                    let p = val.pow(e as i32)?;
                    cache.insert((*v, e), p.clone());
                    p
                }
            };
            value = &value * &pw;
        }
        acc = &acc + &value.mul_monomial(&rest);
    }
    Ok(acc)
}

impl PartialEq for RationalFunction {
    fn eq(&self, o: &Self) -> bool {
        self.is_equal(o)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        self.add_impl(o, false)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self.add_impl(o, true)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        self.mul_impl(o)
    }
}

/// Panics on division by zero; use [`RationalFunction::inv`] for a fallible
/// version.
impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: &RationalFunction) -> RationalFunction {
        self * &o.inv().expect("division by the zero function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
    };
}
owned_ops!(RationalFunction);

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/(")?;
        for (k, (fac, e)) in self.den.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "({})", fac)?;
            if *e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        write!(f, ")")
    }
}
