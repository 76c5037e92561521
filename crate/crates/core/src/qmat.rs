//! Embeddings of the Cherednik algebra and its confluent degenerations into
//! 2×2 matrices over the quantum torus.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{bar, int, sq, var, Var, RF};
use crate::nc::{Env, NCExpression};
use crate::qtorus::{Exp3, TorusElement, TorusMatrix2};
use crate::ring::{Mat2, Ring};

/// Algebras with a matrix embedding.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum AlgebraId {
    H,
    V,
    IV,
    III,
    II,
    I,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 6] =
        [AlgebraId::H, AlgebraId::V, AlgebraId::IV, AlgebraId::III, AlgebraId::II, AlgebraId::I];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::H => "H",
            AlgebraId::V => "H_V",
            AlgebraId::IV => "H_IV",
            AlgebraId::III => "H_III",
            AlgebraId::II => "H_II",
            AlgebraId::I => "H_I",
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches("H_").trim_start_matches('H');
        Ok(match t {
            "" => AlgebraId::H,
            "V" => AlgebraId::V,
            "IV" => AlgebraId::IV,
            "III" => AlgebraId::III,
            "II" => AlgebraId::II,
            "I" => AlgebraId::I,
            _ => return Err(Error::UnknownAlgebra(s.to_string())),
        })
    }
}

/// The central torus monomial standing for u0 in the embedding of H.
pub fn central_u0() -> TorusElement {
    TorusElement::mono(-RF::i(), [-1, -1, -1])
}

/// Which form of the V̌0 matrices to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Reading {
    /// Entries exactly as printed, exponentials read in symmetric (Weyl)
    /// order.
    Printed,
    /// The lower row of V̌0 read with ordered exponentials
    /// e^{aS1+bS2+cS3} = e^{aS1}e^{bS2}e^{cS3}, which removes the factor
    /// q^{1/2}. In addition, for H the signs of the barred terms of s are
    /// reversed, for H_III the term e^{−S1−S2} of s is dropped and for H_I
    /// the corner entry is −1.
    Amended,
}

/// Generator matrices with their materialised inverses.
///
/// The central element e^{S1+S2+S3} is identified with −i/u0 (u0 = 1 for
/// H_I), so u0 stays a scalar parameter and every value is reduced to
/// exponents with vanishing third component.
#[derive(Clone, Debug)]
pub struct EmbeddingAssignment {
    pub algebra: AlgebraId,
    pub reading: Reading,
    pub generators: BTreeMap<String, TorusMatrix2>,
    pub inverses: BTreeMap<String, TorusMatrix2>,
    pub phase: i8,
}

fn t(c: RF, m: Exp3) -> TorusElement {
    TorusElement::mono(c, m)
}

fn i_e(m: Exp3) -> TorusElement {
    t(RF::i(), m)
}

fn sc(c: RF) -> TorusElement {
    TorusElement::scalar(c)
}

fn sum(parts: &[TorusElement]) -> TorusElement {
    parts.iter().fold(TorusElement::zero(), |a, b| a.plus(b))
}

fn mat(a: TorusElement, b: TorusElement, c: TorusElement, d: TorusElement) -> TorusMatrix2 {
    Mat2::new(a, b, c, d)
}

fn z() -> TorusElement {
    TorusElement::zero()
}

/// Value of u0 in the central identification.
pub fn u0_value(algebra: AlgebraId) -> RF {
    match algebra {
        AlgebraId::I => RF::one(),
        _ => var(Var::U0),
    }
}

/// Reduce modulo e^{S1+S2+S3} = −i/u0.
pub fn reduce_central(x: &TorusElement, u0: &RF) -> TorusElement {
    let c = &(-RF::i()) / u0;
    let mut out = TorusElement::zero().with_phase(x.phase());
    for (m, k) in x.terms() {
        let n = m[2];
        let f = c.pow(n).expect("u0 is nonzero");
        out = out.plus(&t(k * &f, [m[0] - n, m[1] - n, 0]).with_phase(x.phase()));
    }
    out
}

impl EmbeddingAssignment {
    pub fn reduce(&self, m: &TorusMatrix2) -> TorusMatrix2 {
        let u0 = u0_value(self.algebra);
        m.map(|x| reduce_central(x, &u0))
    }

    /// Scalar coefficients act as scalar matrices; for H_I the parameter u0
    /// is specialised to 1.
    pub fn env(&self) -> Env<'_, TorusMatrix2> {
        let algebra = self.algebra;
        let phase = self.phase;
        let mut env: Env<'_, TorusMatrix2> = Env::new(Box::new(move |c| {
            let c = if algebra == AlgebraId::I { c.substitute(&[(Var::U0, RF::one())])? } else { c.clone() };
            Ok(Mat2::diag(TorusElement::scalar(c).with_phase(phase)))
        }));
        env.gens = self.generators.clone();
        env.inverses = self.inverses.clone();
        env
    }

    /// Evaluate and reduce modulo the central identification.
    pub fn eval(&self, e: &NCExpression) -> Result<TorusMatrix2> {
        Ok(self.reduce(&e.eval(&self.env())?))
    }

    pub fn get(&self, name: &str) -> Result<&TorusMatrix2> {
        self.generators.get(name).ok_or_else(|| Error::UnboundGenerator(name.to_string()))
    }
}

/// Embedding of `algebra` exactly as printed.
pub fn embed(algebra: AlgebraId) -> EmbeddingAssignment {
    build(algebra, Reading::Printed, 1)
}

/// The amended embedding satisfying all defining relations.
pub fn embed_amended(algebra: AlgebraId) -> EmbeddingAssignment {
    build(algebra, Reading::Amended, 1)
}

/// Embedding with the commutation phase multiplied by `phase` (±1). The
/// value −1 is a deliberate corruption used by sensitivity tests.
pub fn build(algebra: AlgebraId, reading: Reading, phase: i8) -> EmbeddingAssignment {
    use AlgebraId::*;
    let amended = reading == Reading::Amended;
    // The factor in front of the lower-left entry of V̌0.
    let q = if amended { RF::one() } else { sq() };
    let kb0 = bar(Var::K0);
    let kb1 = bar(Var::K1);
    let ub1 = bar(Var::U1);
    let u0 = var(Var::U0);
    let one = || sc(int(1));
    let m1 = || sc(int(-1));

    // V1 for H, V, III and for IV, II, I.
    let v1_full = mat(
        sum(&[sc(kb1.clone()), i_e([0, 1, 0]).negate()]),
        sum(&[sc(kb1.clone()), i_e([0, -1, 0]).negate(), i_e([0, 1, 0]).negate()]),
        i_e([0, 1, 0]),
        i_e([0, 1, 0]),
    );
    let v1_deg = mat(
        sum(&[m1(), i_e([0, 1, 0]).negate()]),
        sum(&[m1(), i_e([0, 1, 0]).negate()]),
        i_e([0, 1, 0]),
        i_e([0, 1, 0]),
    );
    let vc1_full = mat(z(), i_e([1, 0, 0]).negate(), i_e([-1, 0, 0]), sc(ub1.clone()));
    let vc1_deg = mat(z(), i_e([1, 0, 0]).negate(), z(), m1());
    let v0_lim = mat(m1(), z(), sum(&[one(), i_e([0, 0, 1])]), z());
    let v0_nil = mat(z(), z(), i_e([0, 0, 1]), z());

    // s for V and III.
    let s_v = sum(&[
        t(int(1), [-1, -1, 0]),
        t(-&kb1, [-1, 0, 1]),
        t(-&ub1, [0, 1, 1]),
        i_e([-1, -1, 1]),
        i_e([-1, 1, 1]),
    ]);
    let u0_inv = u0.inv().expect("u0 is a parameter");
    let vc0_conf = |s: TorusElement| mat(z(), z(), s.scale(&q), sc(-&u0_inv));

    let (v0, v1, vc1, vc0) = match algebra {
        H => {
            let u0t = central_u0();
            let v0 = mat(
                sum(&[sc(kb0.clone()), i_e([0, 0, -1]).negate()]),
                i_e([0, 0, -1]).negate(),
                sum(&[sc(-&kb0), i_e([0, 0, -1]), i_e([0, 0, 1])]),
                i_e([0, 0, -1]),
            );
            let sign = if amended { int(-1) } else { int(1) };
            let s = sum(&[
                t(&sign * &kb0, [-1, -1, 0]),
                t(&sign * &kb1, [-1, 0, 1]),
                t(&sign * &ub1, [0, 1, 1]),
                i_e([-1, -1, 1]),
                i_e([-1, 1, 1]),
                u0t.negate(),
            ]);
            let u0inv = u0t.monomial_inverse().expect("monomial");
            let vc0 = mat(u0t, z(), s.scale(&q), u0inv.negate());
            (v0, v1_full, vc1_full, vc0)
        }
        V => (v0_lim, v1_full, vc1_full, vc0_conf(s_v)),
        IV => {
            let s = sum(&[t(int(1), [-1, 0, 1]), t(-&ub1, [0, 1, 1]), i_e([-1, 1, 1])]);
            (v0_lim, v1_deg, vc1_full, vc0_conf(s))
        }
        III => {
            // The amended s drops the term e^{−S1−S2}, which the printed
            // formula copies from H_V.
            let s = if amended {
                s_v.minus(&t(int(1), [-1, -1, 0]))
            } else {
                s_v
            };
            (v0_nil, v1_full, vc1_full, vc0_conf(s))
        }
        II => {
            let vc0 = mat(z(), z(), t(q.clone(), [0, 1, 1]), sc(-&(&q * &u0_inv)));
            (v0_lim, v1_deg, vc1_deg, vc0)
        }
        I => {
            let corner = if amended { int(-1) } else { -&sq() };
            let vc0 = mat(z(), z(), t(q.clone(), [0, 1, 1]), sc(corner));
            (v0_nil, v1_deg, vc1_deg, vc0)
        }
    };

    let ph = |m: TorusMatrix2| m.map(|x| x.clone().with_phase(phase));
    let mut generators = BTreeMap::new();
    generators.insert("V0".to_string(), ph(v0));
    generators.insert("V1".to_string(), ph(v1));
    generators.insert("Vc1".to_string(), ph(vc1));
    generators.insert("Vc0".to_string(), ph(vc0));

    let mut a = EmbeddingAssignment { algebra, reading, generators, inverses: BTreeMap::new(), phase };

    // A generator with (g − κ)(g + κ⁻¹) = 0 has g⁻¹ = g − (κ − κ⁻¹).
    let quadratic: Vec<(&str, RF)> = match algebra {
        H => vec![("V0", kb0), ("V1", kb1), ("Vc1", ub1), ("Vc0", bar(Var::U0))],
        V | III => vec![("V1", kb1), ("Vc1", ub1)],
        IV => vec![("Vc1", ub1)],
        II | I => vec![],
    };
    for (g, k) in quadratic {
        let m = a.generators[g].clone();
        let shift = Mat2::diag(TorusElement::scalar(k).with_phase(phase));
        a.inverses.insert(g.to_string(), m.minus(&shift));
    }
    a
}
