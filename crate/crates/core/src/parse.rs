//! Expression parser.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)?
//! exponent := int | '-' int | '(' '-'? int ('/' int)? ')'
//! atom   := int | ident | '(' expr ')'
//! ```
//!
//! Identifiers are generators of the context, named scalars (`q`, `Q`, `i`,
//! the barred parameters `kb0`, `kb1`, `ub0`, `ub1`, any registry
//! parameter, plus extra scalars supplied by the caller). Fractional
//! exponents are accepted only on scalar monomials with even exponents, so
//! `q^(-1/2)` is Q⁻¹. Division is by scalars only.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{self, GaussianRational, Monomial, Var, RF};
use crate::nc::NCExpression;
use crate::ring::Ring;

#[derive(Clone, Debug, Default)]
pub struct ParseContext {
    pub gens: Vec<String>,
    pub scalars: BTreeMap<String, RF>,
}

impl ParseContext {
    pub fn new(gens: &[&str]) -> Self {
        let mut scalars = BTreeMap::new();
        scalars.insert("q".to_string(), field::q());
        scalars.insert("i".to_string(), field::i_unit());
        scalars.insert("kb0".to_string(), field::bar(Var::K0));
        scalars.insert("kb1".to_string(), field::bar(Var::K1));
        scalars.insert("ub0".to_string(), field::bar(Var::U0));
        scalars.insert("ub1".to_string(), field::bar(Var::U1));
        ParseContext { gens: gens.iter().map(|s| s.to_string()).collect(), scalars }
    }

    pub fn with_scalar(mut self, name: &str, v: RF) -> Self {
        self.scalars.insert(name.to_string(), v);
        self
    }

    fn resolve(&self, name: &str, pos: usize) -> Result<NCExpression> {
        if self.gens.iter().any(|g| g == name) {
            return Ok(NCExpression::gen(name));
        }
        if let Some(v) = self.scalars.get(name) {
            return Ok(NCExpression::scalar(v.clone()));
        }
        if let Some(v) = Var::lookup(name) {
            return Ok(NCExpression::scalar(RF::var(v)));
        }
        let _ = pos;
        Err(Error::UnknownSymbol(name.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let text: String = chars[start..k].iter().collect();
            let n = text
                .parse::<i64>()
                .map_err(|_| Error::SyntaxError { pos: start, msg: "integer too large".into() })?;
            out.push((start, Tok::Int(n)));
        } else if c.is_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push((start, Tok::Ident(chars[start..k].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((k, Tok::Sym(c)));
            k += 1;
        } else {
            return Err(Error::SyntaxError { pos: k, msg: format!("unexpected character '{}'", c) });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a ParseContext,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::SyntaxError { pos: self.here(), msg: format!("expected '{}'", c) })
        }
    }

    fn expr(&mut self) -> Result<NCExpression> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.plus(&self.term()?);
            } else if self.eat('-') {
                acc = acc.minus(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NCExpression> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.times(&self.unary()?);
            } else if self.eat('/') {
                let pos = self.here();
                let d = self.unary()?;
                let s = d.as_scalar().ok_or_else(|| Error::SyntaxError {
                    pos,
                    msg: "division by a non-scalar".into(),
                })?;
                acc = acc.scale(&s.inv()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<NCExpression> {
        if self.eat('-') {
            Ok(self.unary()?.negate())
        } else {
            self.power()
        }
    }

    fn int(&mut self) -> Result<i64> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => Err(Error::SyntaxError { pos: self.here(), msg: "expected integer".into() }),
        }
    }

    /// Exponent as a fraction num/den with den ∈ {1, 2}.
    fn exponent(&mut self) -> Result<(i64, i64)> {
        if self.eat('(') {
            let neg = self.eat('-');
            let n = self.int()?;
            let d = if self.eat('/') { self.int()? } else { 1 };
            self.expect(')')?;
            Ok((if neg { -n } else { n }, d))
        } else {
            let neg = self.eat('-');
            let n = self.int()?;
            Ok((if neg { -n } else { n }, 1))
        }
    }

    fn power(&mut self) -> Result<NCExpression> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.here();
        let (n, d) = self.exponent()?;
        if d == 1 {
            if n >= 0 {
                Ok(base.pow(n as u32))
            } else {
                Ok(base.inverse_of_term()?.pow((-n) as u32))
            }
        } else {
            let err = || Error::SyntaxError { pos, msg: "fractional power of a non-monomial".into() };
            let s = base.as_scalar().ok_or_else(err)?;
            if !s.is_laurent() {
                return Err(err());
            }
            let (m, c) = s.num().as_term().ok_or_else(err)?;
            if !c.is_one() || m.0.iter().any(|e| (*e as i64 * n) % d != 0) {
                return Err(err());
            }
            let mut r = Monomial::one();
            for (k, e) in m.0.iter().enumerate() {
                r.0[k] = ((*e as i64 * n) / d) as i16;
            }
            Ok(NCExpression::scalar(RF::monomial(r)))
        }
    }

    fn atom(&mut self) -> Result<NCExpression> {
        let pos = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(NCExpression::scalar(RF::constant(GaussianRational::from_int(n))))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.ctx.resolve(&name, pos)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => Err(Error::SyntaxError { pos, msg: "expected operand".into() }),
        }
    }
}

/// Parse an expression in the given context.
pub fn parse_expression(text: &str, ctx: &ParseContext) -> Result<NCExpression> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.chars().count(), ctx };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::SyntaxError { pos: p.here(), msg: "trailing input".into() });
    }
    Ok(e)
}

/// Parse a scalar expression (no generators).
pub fn parse_scalar(text: &str) -> Result<RF> {
    parse_scalar_with(text, &ParseContext::new(&[]))
}

pub fn parse_scalar_with(text: &str, ctx: &ParseContext) -> Result<RF> {
    let e = parse_expression(text, ctx)?;
    e.as_scalar().ok_or_else(|| Error::Other(format!("not a scalar: {}", text)))
}
