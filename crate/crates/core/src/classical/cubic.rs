//! Semiclassical limits of the spherical cubics: the monodromy manifolds of
//! PVI and its confluences.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::nc::{Env, NCExpression};
use crate::parse::{parse_expression, ParseContext};
use crate::qmat::{embed_amended, AlgebraId};
use crate::ring::{Mat2, Ring};
use crate::spherical::{build_triple, cubic_spec};
use crate::{Var, RF};

use super::CommLaurent;

/// A classical monodromy cubic in commuting X1, X2, X3.
#[derive(Clone, Debug, Serialize)]
pub struct ClassicalCubic {
    pub algebra: AlgebraId,
    pub name: &'static str,
    pub text: &'static str,
}

pub fn classical_cubic(algebra: AlgebraId) -> ClassicalCubic {
    use AlgebraId::*;
    let (name, text) = match algebra {
        H => (
            "PVI",
            "X1*X2*X3-X1^2-X2^2-X3^2+(ub0*kb0+ub1*kb1)*X1+(kb1*ub0+kb0*ub1)*X2\
             +(kb0*kb1+ub0*ub1)*X3+kb0^2+kb1^2+ub0^2+ub1^2-kb0*kb1*ub0*ub1+4",
        ),
        V => (
            "PV",
            "X1*X2*X3-X2^2-X3^2+1/u0*X1-(ub1+kb1/u0)*X2-(ub1/u0+kb1)*X3+1+1/u0^2-kb1*ub1/u0",
        ),
        IV => ("PIV", "X1*X2*X3-X3^2+1/u0*X1+1/u0*X2+(1-ub1/u0)*X3+1/u0^2+ub1/u0"),
        III => ("PIII", "X1*X2*X3-X2^2-X3^2-kb1/u0*X2-ub1/u0*X3+1/u0^2"),
        II => ("PII", "X1*X2*X3+1/u0*X1+1/u0*X2+1/u0*X3+(1-u0)/u0^2"),
        I => ("PI", "X1*X2*X3+X2+X3+1"),
    };
    ClassicalCubic { algebra, name, text }
}

impl ClassicalCubic {
    pub fn expression(&self) -> Result<NCExpression> {
        parse_expression(self.text, &ParseContext::new(&["X1", "X2", "X3"]))
    }

    pub fn render(&self) -> String {
        format!("{} ({}): {} = 0", self.name, self.algebra, self.text)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassicalCubicCheck {
    pub algebra: AlgebraId,
    pub cubic: &'static str,
    /// Each classical X_i is a scalar matrix.
    pub scalar: [bool; 3],
    /// The classical X_i, when scalar.
    pub x: Vec<String>,
    /// The printed cubic evaluated on the classical X_i.
    pub residual: String,
    pub zero: bool,
    /// The quantum cubic at Q → 1 (operator coefficient replaced by its
    /// classical scalar) divided by the printed one, if proportional.
    pub limit_ratio: Option<String>,
}

fn limit_matrix(m: &crate::TorusMatrix2) -> Result<Mat2<CommLaurent>> {
    m.try_map(|x| x.classical_limit())
}

fn coeff_env(algebra: AlgebraId) -> Env<'static, CommLaurent> {
    Env::new(Box::new(move |c: &RF| {
        let c = if algebra == AlgebraId::I { c.substitute(&[(Var::U0, RF::one())])? } else { c.clone() };
        Ok(CommLaurent::scalar(c.classical_limit()?))
    }))
}

/// A polynomial in X1, X2, X3 as a commutative Laurent polynomial, X_i
/// standing for e^{s_i}.
fn commutative(e: &NCExpression, algebra: AlgebraId) -> Result<CommLaurent> {
    let env = coeff_env(algebra)
        .with_gen("X1", CommLaurent::exp_int([1, 0, 0], [0; 3]))
        .with_gen("X2", CommLaurent::exp_int([0, 1, 0], [0; 3]))
        .with_gen("X3", CommLaurent::exp_int([0, 0, 1], [0; 3]));
    e.eval(&env)
}

fn ratio(a: &CommLaurent, b: &CommLaurent) -> Option<RF> {
    let (k, cb) = b.terms().iter().next()?;
    let ca = a.terms().get(k)?;
    let r = ca * &cb.inv().ok()?;
    a.minus(&b.scale(&r)).is_zero().then_some(r)
}

/// Classical limit of the spherical triple against the printed cubic.
pub fn check_classical_cubic(algebra: AlgebraId) -> Result<ClassicalCubicCheck> {
    let cubic = classical_cubic(algebra);
    let t = build_triple(algebra)?;
    let mut scalars = Vec::new();
    let mut scalar = [false; 3];
    for (k, x) in t.x.iter().enumerate() {
        let m = limit_matrix(x)?;
        if let Some(s) = m.as_scalar() {
            scalar[k] = true;
            scalars.push(s);
        }
    }
    let (residual, zero, xs) = if scalars.len() == 3 {
        let env = coeff_env(algebra)
            .with_gen("X1", scalars[0].clone())
            .with_gen("X2", scalars[1].clone())
            .with_gen("X3", scalars[2].clone());
        let r = cubic.expression()?.eval(&env)?;
        (r.to_string(), r.is_zero(), scalars.iter().map(|s| s.to_string()).collect())
    } else {
        ("classical X_i not scalar".to_string(), false, Vec::new())
    };

    // The operator coefficient of the quantum cubic at Q → 1.
    let spec = cubic_spec(algebra);
    let a = embed_amended(algebra);
    let wv = limit_matrix(&a.eval(&parse_expression(spec.wv, &ParseContext::new(&["Vc1"]))?)?)?
        .as_scalar()
        .and_then(|c| c.as_scalar())
        .ok_or_else(|| Error::Other("operator coefficient is not scalar at Q = 1".into()))?;
    let ctx = spec.context()?.with_scalar("Wv", wv);
    let quantum = parse_expression(spec.cubic.lhs, &ctx)?.minus(&parse_expression(spec.cubic.rhs, &ctx)?);
    let limit_ratio = ratio(&commutative(&quantum, algebra)?, &commutative(&cubic.expression()?, algebra)?)
        .map(|r| r.to_string());

    Ok(ClassicalCubicCheck { algebra, cubic: cubic.name, scalar, x: xs, residual, zero, limit_ratio })
}
