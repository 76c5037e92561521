//! Noncommutative polynomial expressions in named generators with
//! rational-function coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::RF;
use crate::ring::Ring;

/// A generator occurrence, optionally a formal inverse.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub name: String,
    pub inv: bool,
}

impl Letter {
    pub fn new(name: &str) -> Self {
        Letter { name: name.to_string(), inv: false }
    }

    pub fn inverse(&self) -> Self {
        Letter { name: self.name.clone(), inv: !self.inv }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inv {
            write!(f, "{}^(-1)", self.name)
        } else {
            write!(f, "{}", self.name)
        }
    }
}

pub type Word = Vec<Letter>;

pub fn word(names: &[&str]) -> Word {
    names.iter().map(|n| Letter::new(n)).collect()
}

pub fn render_word(w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("*")
}

/// Sum of coefficient × word. Terms are kept in word order; zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default)]
pub struct NCExpression {
    terms: BTreeMap<Word, RF>,
}

impl NCExpression {
    pub fn zero() -> Self {
        NCExpression::default()
    }

    pub fn one() -> Self {
        Self::scalar(RF::one())
    }

    pub fn scalar(c: RF) -> Self {
        Self::term(c, Vec::new())
    }

    pub fn term(c: RF, w: Word) -> Self {
        let mut e = NCExpression::default();
        e.add_term(w, &c);
        e
    }

    pub fn gen(name: &str) -> Self {
        Self::term(RF::one(), vec![Letter::new(name)])
    }

    pub fn gen_inv(name: &str) -> Self {
        Self::term(RF::one(), vec![Letter { name: name.to_string(), inv: true }])
    }

    pub fn terms(&self) -> &BTreeMap<Word, RF> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: &RF) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                let s = &*slot + c;
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    /// The scalar value when no generator occurs.
    pub fn as_scalar(&self) -> Option<RF> {
        match self.terms.len() {
            0 => Some(RF::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// Formal inverse of a single term c·w: c⁻¹ · w⁻¹ with letters reversed
    /// and inverted.
    pub fn inverse_of_term(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::Other(format!("cannot invert the sum {}", self)));
        }
        let (w, c) = self.terms.iter().next().unwrap();
        let wi: Word = w.iter().rev().map(|l| l.inverse()).collect();
        Ok(Self::term(c.inv()?, wi))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }

    /// Generators occurring, with inverse flags.
    pub fn letters(&self) -> Vec<Letter> {
        let mut v: Vec<Letter> = self.terms.keys().flatten().cloned().collect();
        v.sort();
        v.dedup();
        v
    }

    /// Substitute each generator by an expression. Inverse letters use
    /// `inverses` when present, otherwise the term-inverse of the image.
    pub fn substitute(
        &self,
        images: &BTreeMap<String, NCExpression>,
        inverses: &BTreeMap<String, NCExpression>,
    ) -> Result<Self> {
        let mut cache: HashMap<Letter, NCExpression> = HashMap::new();
        let mut out = NCExpression::zero();
        for (w, c) in &self.terms {
            let mut acc = NCExpression::scalar(c.clone());
            for l in w {
                let img = match cache.get(l) {
                    Some(e) => e.clone(),
                    None => {
                        let e = if l.inv {
                            match inverses.get(&l.name) {
                                Some(e) => e.clone(),
                                None => match images.get(&l.name) {
                                    Some(img) => img.inverse_of_term().map_err(|_| {
                                        Error::NoInverseAvailable(l.name.clone())
                                    })?,
                                    None => NCExpression::term(RF::one(), vec![l.clone()]),
                                },
                            }
                        } else {
                            match images.get(&l.name) {
                                Some(e) => e.clone(),
                                None => NCExpression::term(RF::one(), vec![l.clone()]),
                            }
                        };
                        cache.insert(l.clone(), e.clone());
                        e
                    }
                };
                acc = acc.times(&img);
            }
            out = out.plus(&acc);
        }
        Ok(out)
    }

    /// Apply a map to every coefficient.
    pub fn map_coeffs<F: Fn(&RF) -> Result<RF>>(&self, f: F) -> Result<Self> {
        let mut out = NCExpression::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Evaluate in a ring.
    pub fn eval<R: Ring>(&self, env: &Env<'_, R>) -> Result<R> {
        let mut prefix: HashMap<Word, R> = HashMap::new();
        let mut acc = R::zero();
        for (w, c) in &self.terms {
            let mut value = R::one();
            let mut start = 0;
            for k in (1..=w.len()).rev() {
                if let Some(v) = prefix.get(&w[..k]) {
                    value = v.clone();
                    start = k;
                    break;
                }
            }
            for k in start..w.len() {
                value = value.times(&env.letter(&w[k])?);
                prefix.insert(w[..=k].to_vec(), value.clone());
            }
            let coeff = (env.coeff)(c)?;
            acc = acc.plus(&coeff.times(&value));
        }
        Ok(acc)
    }
}

/// Evaluation environment: generator values, available inverses and the
/// embedding of scalar coefficients into the target ring.
pub struct Env<'a, R: Ring> {
    pub gens: BTreeMap<String, R>,
    pub inverses: BTreeMap<String, R>,
    pub coeff: Box<dyn Fn(&RF) -> Result<R> + Send + Sync + 'a>,
}

impl<'a, R: Ring> Env<'a, R> {
    pub fn new(coeff: Box<dyn Fn(&RF) -> Result<R> + Send + Sync + 'a>) -> Self {
        Env { gens: BTreeMap::new(), inverses: BTreeMap::new(), coeff }
    }

    /// Plain scalar embedding `c ↦ c·1`.
    pub fn scalar() -> Self {
        Self::new(Box::new(|c| Ok(R::from_scalar(c))))
    }

    pub fn with_gen(mut self, name: &str, v: R) -> Self {
        self.gens.insert(name.to_string(), v);
        self
    }

    pub fn with_inverse(mut self, name: &str, v: R) -> Self {
        self.inverses.insert(name.to_string(), v);
        self
    }

    pub fn letter(&self, l: &Letter) -> Result<R> {
        if l.inv {
            match self.inverses.get(&l.name) {
                Some(v) => Ok(v.clone()),
                None if self.gens.contains_key(&l.name) => {
                    Err(Error::NoInverseAvailable(l.name.clone()))
                }
                None => Err(Error::UnboundGenerator(l.name.clone())),
            }
        } else {
            self.gens.get(&l.name).cloned().ok_or_else(|| Error::UnboundGenerator(l.name.clone()))
        }
    }
}

impl Ring for NCExpression {
    fn zero() -> Self {
        NCExpression::default()
    }
    fn one() -> Self {
        NCExpression::scalar(RF::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
    fn minus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }
    fn times(&self, o: &Self) -> Self {
        let mut out = NCExpression::default();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                out.add_term(w, &(c1 * c2));
            }
        }
        out
    }
    fn negate(&self) -> Self {
        NCExpression { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
    fn scale(&self, c: &RF) -> Self {
        let mut out = NCExpression::default();
        for (w, d) in &self.terms {
            out.add_term(w.clone(), &(d * c));
        }
        out
    }
}

impl fmt::Display for NCExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if w.is_empty() {
                write!(f, "({})", c)?;
            } else if c.is_one() {
                write!(f, "{}", render_word(w))?;
            } else {
                write!(f, "({})*{}", c, render_word(w))?;
            }
        }
        Ok(())
    }
}
