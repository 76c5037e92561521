use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::field::{Var, RF};
use crate::ring::Ring;

/// Doubled exponents over (s1, s2, s3, p1, p2, p3): the integer 1 stands
/// for a half unit.
pub type Exp6 = [i32; 6];

/// Commutative Laurent polynomial in e^{s_i/2}, e^{p_i/2} with
/// rational-function coefficients.
#[derive(Clone, Debug, Default)]
pub struct CommLaurent {
    terms: BTreeMap<Exp6, RF>,
}

impl CommLaurent {
    pub fn mono(c: RF, e: Exp6) -> Self {
        let mut t = CommLaurent::default();
        t.add_term(e, &c);
        t
    }

    /// e^{(a·s + b·p)} with integer (not doubled) exponents.
    pub fn exp_int(s: [i32; 3], p: [i32; 3]) -> Self {
        Self::mono(RF::one(), [2 * s[0], 2 * s[1], 2 * s[2], 2 * p[0], 2 * p[1], 2 * p[2]])
    }

    /// e^{e·(·)/2} in doubled units.
    pub fn exp_half(e: Exp6) -> Self {
        Self::mono(RF::one(), e)
    }

    pub fn scalar(c: RF) -> Self {
        Self::mono(c, [0; 6])
    }

    pub fn terms(&self) -> &BTreeMap<Exp6, RF> {
        &self.terms
    }

    fn add_term(&mut self, e: Exp6, c: &RF) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                let s = &*slot + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    /// Move monomials in the parameters P1, P2, P3 (standing for e^{p_i/2})
    /// out of the coefficients and into the exponent lattice. Coefficients
    /// must be Laurent polynomials in the P's.
    pub fn absorb_p_params(&self) -> Option<Self> {
        let mut out = CommLaurent::default();
        for (e, c) in &self.terms {
            if !c.is_laurent() && [Var::P1, Var::P2, Var::P3].iter().any(|v| c.den_involves(*v)) {
                return None;
            }
            for (m, k) in c.num().terms() {
                let mut e2 = *e;
                let mut rest = *m;
                for (slot, v) in [Var::P1, Var::P2, Var::P3].iter().enumerate() {
                    e2[3 + slot] += m.exp(*v) as i32;
                    rest = rest.with(*v, 0);
                }
                let coeff = c.clone();
                let piece = RF::from_poly(crate::field::Poly::term(k.clone(), rest));
                let piece = if coeff.is_laurent() {
                    piece
                } else {
                    let den = RF::from_poly(coeff.den());
                    &piece / &den
                };
                out.add_term(e2, &piece);
            }
        }
        Some(out)
    }

    /// Substitute every exponential by 1 (all s_i = p_i = 0).
    pub fn at_origin(&self) -> RF {
        self.terms.values().fold(RF::zero(), |acc, c| &acc + c)
    }

    pub fn map_coeffs<F: Fn(&RF) -> Result<RF>>(&self, f: F) -> Result<Self> {
        let mut out = CommLaurent::default();
        for (e, c) in &self.terms {
            out.add_term(*e, &f(c)?);
        }
        Ok(out)
    }

    pub fn as_scalar(&self) -> Option<RF> {
        if self.terms.is_empty() {
            return Some(RF::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&[0; 6]) {
                return Some(c.clone());
            }
        }
        None
    }
}

impl Ring for CommLaurent {
    fn zero() -> Self {
        CommLaurent::default()
    }
    fn one() -> Self {
        Self::scalar(RF::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c);
        }
        out
    }
    fn minus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, &-c);
        }
        out
    }
    fn times(&self, o: &Self) -> Self {
        let mut out = CommLaurent::default();
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                let mut e = [0; 6];
                for k in 0..6 {
                    e[k] = a[k] + b[k];
                }
                out.add_term(e, &(c * d));
            }
        }
        out
    }
    fn negate(&self) -> Self {
        CommLaurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
    fn scale(&self, c: &RF) -> Self {
        let mut out = CommLaurent::default();
        for (e, d) in &self.terms {
            out.add_term(*e, &(d * c));
        }
        out
    }
}

fn render_half(e: &Exp6) -> String {
    let names = ["s1", "s2", "s3", "p1", "p2", "p3"];
    let mut s = String::new();
    for (k, &v) in e.iter().enumerate() {
        if v == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push_str(if v < 0 { " - " } else { " + " });
        } else if v < 0 {
            s.push('-');
        }
        let a = v.abs();
        if a % 2 == 0 {
            if a != 2 {
                s.push_str(&format!("{} ", a / 2));
            }
        } else {
            s.push_str(&format!("{}/2 ", a));
        }
        s.push_str(names[k]);
    }
    s
}

impl fmt::Display for CommLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *e == [0; 6] {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})·e^{{{}}}", c, render_half(e))?;
            }
        }
        Ok(())
    }
}
