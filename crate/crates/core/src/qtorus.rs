//! The quantum torus: Laurent polynomials in e^{S1}, e^{S2}, e^{S3} with
//! [S1,S2] = [S2,S3] = [S3,S1] = iπħ and q = e^{−iπħ}, so that
//! e^{m·S} e^{m'·S} = Q^{−ω(m,m')} e^{(m+m')·S} with Q = q^{1/2}.

use std::collections::BTreeMap;
use std::fmt;

use crate::classical::CommLaurent;
use crate::error::Result;
use crate::field::{Monomial, Var, RF};
use crate::ring::Ring;

pub type Exp3 = [i32; 3];

/// ω(m, m') = (m1m2'−m2m1') + (m2m3'−m3m2') + (m3m1'−m1m3').
pub fn omega(m: &Exp3, n: &Exp3) -> i32 {
    (m[0] * n[1] - m[1] * n[0]) + (m[1] * n[2] - m[2] * n[1]) + (m[2] * n[0] - m[0] * n[2])
}

fn add3(a: &Exp3, b: &Exp3) -> Exp3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// Element of the quantum torus.
///
/// `phase` is +1 for the genuine torus; −1 flips the sign of the
/// commutation phase and exists only to test that relation checks are
/// sensitive to it.
#[derive(Clone, Debug)]
pub struct TorusElement {
    terms: BTreeMap<Exp3, RF>,
    phase: i8,
}

impl TorusElement {
    pub fn from_terms<I: IntoIterator<Item = (Exp3, RF)>>(it: I) -> Self {
        let mut t = TorusElement { terms: BTreeMap::new(), phase: 1 };
        for (m, c) in it {
            t.add_term(m, &c);
        }
        t
    }

    /// c·e^{m·S}.
    pub fn mono(c: RF, m: Exp3) -> Self {
        Self::from_terms([(m, c)])
    }

    /// e^{m·S}.
    pub fn e(m: Exp3) -> Self {
        Self::mono(RF::one(), m)
    }

    pub fn scalar(c: RF) -> Self {
        Self::mono(c, [0, 0, 0])
    }

    pub fn with_phase(mut self, phase: i8) -> Self {
        self.phase = phase;
        self
    }

    pub fn phase(&self) -> i8 {
        self.phase
    }

    pub fn terms(&self) -> &BTreeMap<Exp3, RF> {
        &self.terms
    }

    fn add_term(&mut self, m: Exp3, c: &RF) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                let s = &*slot + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn is_central(&self) -> bool {
        let basis = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        self.terms.keys().all(|m| basis.iter().all(|b| omega(m, b) == 0))
    }

    /// Inverse of a single-term element c·e^{m·S}.
    pub fn monomial_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let ci = c.inv().ok()?;
        Some(TorusElement::mono(ci, [-m[0], -m[1], -m[2]]).with_phase(self.phase))
    }

    /// Apply a coefficient map termwise.
    pub fn map_coeffs<F: Fn(&RF) -> Result<RF>>(&self, f: F) -> Result<Self> {
        let mut out = TorusElement { terms: BTreeMap::new(), phase: self.phase };
        for (m, c) in &self.terms {
            out.add_term(*m, &f(c)?);
        }
        Ok(out)
    }

    pub fn substitute(&self, bindings: &[(Var, RF)]) -> Result<Self> {
        self.map_coeffs(|c| c.substitute(bindings))
    }

    /// Q → 1: the commutative Laurent polynomial in e^{s_i}.
    pub fn classical_limit(&self) -> Result<CommLaurent> {
        let mut out = CommLaurent::zero();
        for (m, c) in &self.terms {
            let c1 = c.classical_limit()?;
            let e = [2 * m[0], 2 * m[1], 2 * m[2], 0, 0, 0];
            out = out.plus(&CommLaurent::mono(c1, e));
        }
        Ok(out)
    }

    pub fn coefficient(&self, m: &Exp3) -> RF {
        self.terms.get(m).cloned().unwrap_or_else(RF::zero)
    }
}

impl Ring for TorusElement {
    fn zero() -> Self {
        TorusElement { terms: BTreeMap::new(), phase: 1 }
    }
    fn one() -> Self {
        Self::scalar(RF::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.phase = self.phase.min(o.phase);
        for (m, c) in &o.terms {
            out.add_term(*m, c);
        }
        out
    }
    fn minus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.phase = self.phase.min(o.phase);
        for (m, c) in &o.terms {
            out.add_term(*m, &-c);
        }
        out
    }
    fn times(&self, o: &Self) -> Self {
        let phase = self.phase.min(o.phase);
        let mut out = TorusElement { terms: BTreeMap::new(), phase };
        for (m, c) in &self.terms {
            for (n, d) in &o.terms {
                let w = omega(m, n) * phase as i32;
                let mut p = c * d;
                if w != 0 {
                    p = p.mul_monomial(&Monomial::var(Var::Q, -w as i16));
                }
                out.add_term(add3(m, n), &p);
            }
        }
        out
    }
    fn negate(&self) -> Self {
        TorusElement {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
            phase: self.phase,
        }
    }
    fn scale(&self, c: &RF) -> Self {
        let mut out = TorusElement { terms: BTreeMap::new(), phase: self.phase };
        for (m, d) in &self.terms {
            out.add_term(*m, &(d * c));
        }
        out
    }
}

pub fn render_exp(m: &Exp3, sym: &str) -> String {
    let mut s = String::new();
    for (k, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = format!("{}{}", sym, k + 1);
        if s.is_empty() {
            if e < 0 {
                s.push('-');
            }
        } else if e < 0 {
            s.push_str(" - ");
        } else {
            s.push_str(" + ");
        }
        if e.abs() != 1 {
            s.push_str(&format!("{} ", e.abs()));
        }
        s.push_str(&name);
    }
    s
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *m == [0, 0, 0] {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})·e^{{{}}}", c, render_exp(m, "S"))?;
            }
        }
        Ok(())
    }
}

pub type TorusMatrix2 = crate::ring::Mat2<TorusElement>;
