use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gaussian::GaussianRational;
use super::monomial::{Monomial, Var};

/// Sparse Laurent polynomial in the registry parameters, terms sorted by
/// decreasing monomial (lexicographic over the registry order).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Monomial, GaussianRational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn term(c: GaussianRational, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: Var) -> Self {
        Self::term(GaussianRational::one(), Monomial::var(v, 1))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(GaussianRational::one(), m)
    }

    /// Build from arbitrary terms, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, GaussianRational)>>(it: I) -> Self {
        let mut map: BTreeMap<Monomial, GaussianRational> = BTreeMap::new();
        for (m, c) in it {
            accumulate(&mut map, m, &c);
        }
        Self::from_map(map)
    }

    fn from_map(map: BTreeMap<Monomial, GaussianRational>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, GaussianRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Single term `c·m`.
    pub fn as_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        if self.terms.len() == 1 {
            Some((&self.terms[0].0, &self.terms[0].1))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        match self.as_term() {
            Some((m, c)) if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, GaussianRational)> {
        self.terms.first()
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) != 0)
    }

    /// Componentwise minimum of all exponents (the monomial gcd).
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(),
            Some((m0, _)) => it.fold(*m0, |acc, (m, _)| acc.gcd(m)),
        }
    }

    pub fn max_monomial(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(),
            Some((m0, _)) => it.fold(*m0, |acc, (m, _)| acc.lcm(m)),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly { terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect() }
    }

    /// Multiply by a monomial; order is preserved.
    pub fn shift(&self, s: &Monomial) -> Self {
        if s.is_one() {
            return self.clone();
        }
        Poly { terms: self.terms.iter().map(|(m, k)| (m.mul(s), k.clone())).collect() }
    }

    pub fn mul_term(&self, s: &Monomial, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, k)| (m.mul(s), k * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Apply a map on monomials, combining collisions.
    pub fn map_monomials<F: Fn(&Monomial) -> (Monomial, GaussianRational)>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let (m2, k) = f(m);
            (m2, c * &k)
        }))
    }

    /// Exact quotient `self / f` in the Laurent ring, or `None` when `f`
    /// does not divide `self`. `f` must have monomial gcd equal to 1.
    pub fn div_exact(&self, f: &Poly) -> Option<Poly> {
        if f.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some((fm, fc)) = f.as_term() {
            let inv = fc.inv()?;
            let fmi = fm.inv();
            return Some(self.mul_term(&fmi, &inv));
        }
        let base = self.min_monomial();
        let span_self = self.max_monomial().div(&base);
        let span_f = f.max_monomial().div(&f.min_monomial());
        if !span_self.divisible_by(&span_f) {
            return None;
        }
        let (lf, lc) = f.terms[0].clone();
        let lc_inv = lc.inv()?;
        let mut r: BTreeMap<Monomial, GaussianRational> =
            self.terms.iter().map(|(m, c)| (m.div(&base), c.clone())).collect();
        let mut quot: Vec<(Monomial, GaussianRational)> = Vec::new();
        while let Some((m, c)) = r.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            if !m.divisible_by(&lf) {
                return None;
            }
            let t = m.div(&lf);
            let k = &c * &lc_inv;
            for (fm, fc) in &f.terms {
                let key = fm.mul(&t);
                let delta = -(&k * fc);
                accumulate(&mut r, key, &delta);
            }
            quot.push((t.mul(&base), k));
        }
        Some(Poly::from_terms(quot))
    }

    /// Substitute Q → 1 style: evaluate variable `v` at a constant.
    pub fn eval_var_const(&self, v: Var, c: &GaussianRational) -> Poly {
        let inv = c.inv();
        Poly::from_terms(self.terms.iter().map(|(m, k)| {
            let e = m.exp(v);
            let factor = if e >= 0 {
                c.pow(e as u32)
            } else {
                inv.as_ref().expect("nonzero value for negative power").pow((-e) as u32)
            };
            (m.with(v, 0), k * &factor)
        }))
    }

    /// Collect by powers of `v`: returns map exponent → coefficient polynomial.
    pub fn collect_var(&self, v: Var) -> BTreeMap<i16, Poly> {
        let mut out: BTreeMap<i16, Vec<(Monomial, GaussianRational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exp(v)).or_default().push((m.with(v, 0), c.clone()));
        }
        out.into_iter().map(|(e, t)| (e, Poly::from_terms(t))).collect()
    }

    fn merge(&self, o: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            if j >= o.terms.len() || (i < self.terms.len() && self.terms[i].0 > o.terms[j].0) {
                out.push(self.terms[i].clone());
                i += 1;
            } else if i >= self.terms.len() || o.terms[j].0 > self.terms[i].0 {
                let c = if negate { -&o.terms[j].1 } else { o.terms[j].1.clone() };
                out.push((o.terms[j].0, c));
                j += 1;
            } else {
                let c = if negate {
                    &self.terms[i].1 - &o.terms[j].1
                } else {
                    &self.terms[i].1 + &o.terms[j].1
                };
                if !c.is_zero() {
                    out.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Poly { terms: out }
    }

    fn product(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        let mut acc: HashMap<Monomial, GaussianRational> =
            HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let p = c1 * c2;
                let m = m1.mul(m2);
                match acc.get_mut(&m) {
                    Some(slot) => *slot = &*slot + &p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, GaussianRational>, m: Monomial, c: &GaussianRational) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&m) {
        Some(slot) => {
            let s = &*slot + c;
            if s.is_zero() {
                map.remove(&m);
            } else {
                *slot = s;
            }
        }
        None => {
            map.insert(m, c.clone());
        }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.merge(o, false)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.merge(o, true)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.product(o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_display();
            let a = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", a, m)?;
            }
        }
        Ok(())
    }
}
