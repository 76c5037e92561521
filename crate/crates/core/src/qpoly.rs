//! Terminating basic hypergeometric series and the q-Askey families that
//! are eigenfunctions of the operator representations.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Var, RF};
use crate::parse::{parse_scalar_with, ParseContext};
use crate::qdiff::{catalogue_with, OpReading, QShiftOperator, RepId, XLaurent};

fn scalar(s: &str) -> RF {
    parse_scalar_with(s, &ParseContext::new(&[])).unwrap_or_else(|e| panic!("bad coefficient {}: {}", s, e))
}

/// 1 − αq^j.
fn poch_factor(alpha: &RF, j: i32) -> RF {
    &RF::one() - &(alpha * &RF::var_pow(Var::Q, 2 * j as i16))
}

/// (α; q)_k = ∏_{j<k} (1 − αq^j).
pub fn poch(alpha: &RF, k: i32) -> RF {
    (0..k).fold(RF::one(), |acc, j| &acc * &poch_factor(alpha, j))
}

/// A product x^e · ∏ num / ∏ den with the factors kept apart, so that equal
/// factors cancel before anything is multiplied out.
#[derive(Clone, Debug)]
pub struct Factored {
    num: Vec<RF>,
    den: Vec<RF>,
    x_pow: i32,
}

impl Factored {
    pub fn one() -> Self {
        Factored { num: Vec::new(), den: Vec::new(), x_pow: 0 }
    }

    pub fn times(mut self, r: RF) -> Self {
        self.num.push(r);
        self
    }

    pub fn over(mut self, r: RF) -> Self {
        self.den.push(r);
        self
    }

    pub fn times_x(mut self, e: i32) -> Self {
        self.x_pow += e;
        self
    }

    pub fn times_poch(mut self, alpha: &RF, k: i32) -> Self {
        self.num.extend((0..k).map(|j| poch_factor(alpha, j)));
        self
    }

    pub fn over_poch(mut self, alpha: &RF, k: i32) -> Self {
        self.den.extend((0..k).map(|j| poch_factor(alpha, j)));
        self
    }

    fn merge(mut self, o: &Factored) -> Self {
        self.num.extend(o.num.iter().cloned());
        self.den.extend(o.den.iter().cloned());
        self.x_pow += o.x_pow;
        self
    }

    pub fn involves_x(&self) -> bool {
        self.num.iter().chain(&self.den).any(|f| f.involves(Var::X))
    }

    /// The product without its power of x.
    fn eval_scalar(&self) -> Result<RF> {
        let mut num = self.num.clone();
        let mut den = Vec::new();
        for d in &self.den {
            match num.iter().position(|n| n.is_equal(d)) {
                Some(i) => {
                    num.swap_remove(i);
                }
                None => den.push(d.clone()),
            }
        }
        let mut out = num.iter().fold(RF::one(), |acc, f| &acc * f);
        for d in &den {
            if d.is_zero() {
                return Err(Error::ZeroDenominatorPochhammer);
            }
            out = if d.den_factors().is_empty() { out.div_poly(d.num())? } else { &out / d };
        }
        Ok(out)
    }

    pub fn eval(&self) -> Result<RF> {
        Ok(&self.eval_scalar()? * &RF::var_pow(Var::X, self.x_pow as i16))
    }
}

/// n such that r = q^{−n}, if any.
fn termination_degree(r: &RF) -> Option<u32> {
    if !r.den_factors().is_empty() {
        return None;
    }
    let (m, c) = r.num().as_term()?;
    if !c.is_one() || m.vars().any(|(v, _)| v != Var::Q) {
        return None;
    }
    let e = m.exp(Var::Q);
    (e <= 0 && e % 2 == 0).then_some((-e / 2) as u32)
}

/// c·x^e for a single-term Laurent polynomial in x.
fn split_x(r: &RF) -> Option<(RF, i32)> {
    let parts = r.collect_var(Var::X)?;
    match parts.as_slice() {
        [(e, c)] => Some((c.clone(), *e as i32)),
        [] => Some((RF::zero(), 0)),
        _ => None,
    }
}

/// r φ s (upper; lower; q, z) with one upper entry equal to q^{−n}.
/// Entries and the argument may involve x.
#[derive(Clone, Debug)]
pub struct PhiSeries {
    pub upper: Vec<RF>,
    pub lower: Vec<RF>,
    pub argument: RF,
    n: u32,
}

impl PhiSeries {
    pub fn new(upper: Vec<RF>, lower: Vec<RF>, argument: RF) -> Result<Self> {
        let n = upper
            .iter()
            .filter_map(termination_degree)
            .min()
            .ok_or_else(|| Error::Other("series does not terminate".into()))?;
        Ok(PhiSeries { upper, lower, argument, n })
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    fn check_lower(&self) -> Result<()> {
        let zero = self.lower.iter().any(|b| (0..self.n as i32).any(|j| poch_factor(b, j).is_zero()));
        if zero {
            Err(Error::ZeroDenominatorPochhammer)
        } else {
            Ok(())
        }
    }

    /// ((−1)^k q^{k(k−1)/2})^{1+s−r} / (q;q)_k times the Pochhammer symbols
    /// of the given upper entries over those of the lower ones.
    fn coefficient(&self, k: u32, upper: &[&RF]) -> Factored {
        let k = k as i32;
        let e = 1 + self.lower.len() as i32 - self.upper.len() as i32;
        let mut f = Factored::one().over_poch(&crate::field::q(), k);
        for a in upper {
            f = f.times_poch(a, k);
        }
        for b in &self.lower {
            f = f.over_poch(b, k);
        }
        if (k * e) % 2 != 0 {
            f = f.times(RF::int(-1));
        }
        f.times(RF::var_pow(Var::Q, (k * (k - 1) * e) as i16))
    }

    /// Σ_k (a;q)_k/(b;q)_k · ((−1)^k q^{k(k−1)/2})^{1+s−r} z^k/(q;q)_k.
    pub fn sum(&self) -> Result<RF> {
        self.sum_scaled(&Factored::one())
    }

    /// pre · sum, with pre multiplied into each term before adding.
    pub fn sum_scaled(&self, pre: &Factored) -> Result<RF> {
        self.check_lower()?;
        let upper: Vec<&RF> = self.upper.iter().collect();
        let mut total = RF::zero();
        for k in 0..=self.n {
            let t = pre.clone().merge(&self.coefficient(k, &upper)).times(self.argument.pow(k as i32)?);
            total = &total + &t.eval()?;
        }
        Ok(total)
    }

    /// pre · sum as Σ_k s_k φ_k with s_k free of x and φ_k the product of
    /// the x-dependent Pochhammer symbols and powers of x. None unless pre
    /// and the argument are monomials in x and no lower entry involves x.
    pub fn split_terms(&self, pre: &Factored) -> Result<Option<Vec<(RF, XLaurent)>>> {
        self.check_lower()?;
        let Some((z_s, z_e)) = split_x(&self.argument) else { return Ok(None) };
        if pre.involves_x() || self.lower.iter().any(|b| b.involves(Var::X)) {
            return Ok(None);
        }
        let (with_x, free): (Vec<&RF>, Vec<&RF>) = self.upper.iter().partition(|a| a.involves(Var::X));
        let mut out = Vec::new();
        for k in 0..=self.n {
            let s = pre.clone().merge(&self.coefficient(k, &free)).times(z_s.pow(k as i32)?).eval_scalar()?;
            let mut phi = XLaurent::x_pow(pre.x_pow + k as i32 * z_e);
            for a in &with_x {
                phi = phi.times(&XLaurent::from_rf(&poch(a, k as i32))?);
            }
            out.push((s, phi));
        }
        Ok(Some(out))
    }
}

/// The terminating series as a Laurent polynomial in x.
pub fn rphis(series: &PhiSeries) -> Result<XLaurent> {
    XLaurent::from_rf(&series.sum()?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FamilyId {
    AW,
    CDqHahn,
    BigQJacobi,
    BigQLaguerre,
    AlSalamChihara,
    ContBigQHermite,
    ContQHermite,
    LittleQLaguerre,
    LittleQLaguerreA0,
}

impl FamilyId {
    pub const ALL: [FamilyId; 9] = [
        FamilyId::AW,
        FamilyId::CDqHahn,
        FamilyId::BigQJacobi,
        FamilyId::BigQLaguerre,
        FamilyId::AlSalamChihara,
        FamilyId::ContBigQHermite,
        FamilyId::ContQHermite,
        FamilyId::LittleQLaguerre,
        FamilyId::LittleQLaguerreA0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::AW => "AW",
            FamilyId::CDqHahn => "CDqHahn",
            FamilyId::BigQJacobi => "BigQJacobi",
            FamilyId::BigQLaguerre => "BigQLaguerre",
            FamilyId::AlSalamChihara => "AlSalamChihara",
            FamilyId::ContBigQHermite => "ContBigQHermite",
            FamilyId::ContQHermite => "ContQHermite",
            FamilyId::LittleQLaguerre => "LittleQLaguerre",
            FamilyId::LittleQLaguerreA0 => "LittleQLaguerreA0",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Other(format!("unknown family {}", s)))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which operator of the representation has the family as eigenfunctions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EigenOperator {
    K0,
    K0Beta,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct FamilySpec {
    pub id: FamilyId,
    pub rep: RepId,
    pub operator: EigenOperator,
    /// The operator acts on P_n[λx] rather than P_n[x].
    pub dilated: bool,
    /// Invariant under x ↔ 1/x.
    pub symmetric: bool,
}

pub fn family(id: FamilyId) -> FamilySpec {
    use EigenOperator::*;
    let (rep, operator, dilated, symmetric) = match id {
        FamilyId::AW => (RepId::AW, K0, false, true),
        FamilyId::CDqHahn => (RepId::ZV, K0, false, true),
        FamilyId::BigQJacobi => (RepId::ZVGamma, K0, true, false),
        FamilyId::BigQLaguerre => (RepId::ZIV, K0, true, false),
        FamilyId::AlSalamChihara => (RepId::ZIII, K0Beta, false, true),
        FamilyId::ContBigQHermite => (RepId::ZIIID7, K0Beta, false, true),
        FamilyId::ContQHermite => (RepId::ZIIID8, K0Beta, false, true),
        FamilyId::LittleQLaguerre => (RepId::ZII, K0, false, false),
        FamilyId::LittleQLaguerreA0 => (RepId::ZI, K0, false, false),
    };
    FamilySpec { id, rep, operator, dilated, symmetric }
}

impl FamilySpec {
    /// The prefactor and series of P_n.
    pub fn series(&self, n: u32) -> Result<(Factored, PhiSeries)> {
        let s = scalar;
        let qn = RF::var_pow(Var::Q, -2 * n as i16);
        let n = n as i32;
        let qp = |e: i32| RF::var_pow(Var::Q, 2 * e as i16);
        let abcd = &qp(n - 1) * &s("a*b*c*d");
        let one = Factored::one;
        let (pre, upper, lower, arg) = match self.id {
            FamilyId::AW => (
                one()
                    .times_poch(&s("a*b"), n)
                    .times_poch(&s("a*c"), n)
                    .times_poch(&s("a*d"), n)
                    .over(s("a").pow(n)?)
                    .over_poch(&abcd, n),
                vec![qn, abcd.clone(), s("a*x"), s("a/x")],
                vec![s("a*b"), s("a*c"), s("a*d")],
                s("q"),
            ),
            FamilyId::CDqHahn => (
                one().times_poch(&s("a*b"), n).times_poch(&s("a*c"), n).over(s("a").pow(n)?),
                vec![qn, s("a*x"), s("a/x")],
                vec![s("a*b"), s("a*c")],
                s("q"),
            ),
            FamilyId::BigQJacobi => {
                (one(), vec![qn, &qp(n + 1) * &s("a*b"), s("x")], vec![s("a*q"), s("c*q")], s("q"))
            }
            FamilyId::BigQLaguerre => (one(), vec![qn, RF::zero(), s("x")], vec![s("a*q"), s("c*q")], s("q")),
            FamilyId::AlSalamChihara => (
                one().times_poch(&s("a*b"), n).over(s("a").pow(n)?),
                vec![qn, s("a*x"), s("a/x")],
                vec![s("a*b"), RF::zero()],
                s("q"),
            ),
            FamilyId::ContBigQHermite => (
                one().over(s("a").pow(n)?),
                vec![qn, s("a*x"), s("a/x")],
                vec![RF::zero(), RF::zero()],
                s("q"),
            ),
            FamilyId::ContQHermite => (one().times_x(n), vec![qn, RF::zero()], vec![], &qp(n) * &s("x^-2")),
            FamilyId::LittleQLaguerre => (one(), vec![qn, RF::zero()], vec![s("a*q")], s("q*x")),
            FamilyId::LittleQLaguerreA0 => (one(), vec![qn, RF::zero()], vec![RF::zero()], s("q*x")),
        };
        Ok((pre, PhiSeries::new(upper, lower, arg)?))
    }

    /// P_n[x].
    pub fn polynomial(&self, n: u32) -> Result<XLaurent> {
        let (pre, series) = self.series(n)?;
        XLaurent::from_rf(&series.sum_scaled(&pre)?)
    }

    pub fn eigenvalue(&self, n: u32) -> RF {
        let n = n as i32;
        let qp = |e: i32| RF::var_pow(Var::Q, 2 * e as i16);
        let s = scalar;
        match self.id {
            FamilyId::AW => &qp(-n) + &(&s("a*b*c*d") * &qp(n - 1)),
            FamilyId::BigQJacobi => &(&RF::one() + &(&qp(2 * n + 1) * &s("a*b"))) * &qp(-n),
            FamilyId::AlSalamChihara => &qp(-n) + &s("-1+(1+a+b-a*b)/(q+1)"),
            FamilyId::ContBigQHermite => &qp(-n) + &s("-1+(1+a)/(q+1)"),
            FamilyId::ContQHermite => &qp(-n) + &s("-1+1/(q+1)"),
            _ => qp(-n),
        }
    }

    /// Parameters of the operator that the polynomials leave free and that
    /// the eigen relation fixes. Only Al-Salam–Chihara has one: the
    /// polynomials do not involve c, the Z_III operator does, and c = 1 is
    /// the value reducing to D7 at b = 0.
    pub fn bindings(&self) -> Vec<(Var, RF)> {
        match self.id {
            FamilyId::AlSalamChihara => vec![(Var::C, RF::one())],
            _ => Vec::new(),
        }
    }

    pub fn eigen_operator(&self, reading: OpReading) -> Result<QShiftOperator> {
        let rep = catalogue_with(self.rep, reading);
        match self.operator {
            EigenOperator::K0 => Ok(rep.k0),
            EigenOperator::K0Beta => rep.k0_beta.ok_or_else(|| Error::Other(format!("{} has no K0 beta", self.rep))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenCheck {
    pub id: String,
    pub holds: bool,
    pub residual: String,
}

fn eigen_op(spec: &FamilySpec, reading: OpReading) -> Result<QShiftOperator> {
    let op = spec.eigen_operator(reading)?;
    if reading == OpReading::Amended {
        op.substitute(&spec.bindings())
    } else {
        Ok(op)
    }
}

/// (Op − λ_n) applied to P_n, or to P_n[λx] for the dilated families.
pub fn eigen_residual(spec: &FamilySpec, n: u32, reading: OpReading) -> Result<XLaurent> {
    let mut p = spec.polynomial(n)?;
    if spec.dilated {
        p = p.dilate(&RF::var(Var::LAM))?;
    }
    let op = eigen_op(spec, reading)?;
    Ok(op.apply(&p)?.minus(&p.scale(&spec.eigenvalue(n))))
}

/// Coordinates of f in a basis with pairwise distinct top degrees, by
/// eliminating the top term; None if f is not in the span.
fn coordinates(f: &XLaurent, basis: &[XLaurent]) -> Option<Vec<RF>> {
    let mut out = vec![RF::zero(); basis.len()];
    let mut rest = f.clone();
    while let Some((t, c)) = rest.top() {
        let j = basis.iter().position(|b| b.top().is_some_and(|(u, _)| u == t))?;
        let r = c / basis[j].top()?.1;
        rest = rest.minus(&basis[j].scale(&r));
        out[j] = &out[j] + &r;
    }
    Some(out)
}

/// Σ_k s_k (Op − λ)φ_k expanded in the φ basis, coordinate by coordinate.
/// None when the series does not split or a φ_k image leaves the span.
fn basis_residual(spec: &FamilySpec, n: u32, op: &QShiftOperator) -> Result<Option<Vec<RF>>> {
    let (pre, series) = spec.series(n)?;
    let Some(mut terms) = series.split_terms(&pre)? else { return Ok(None) };
    if spec.dilated {
        for (_, phi) in terms.iter_mut() {
            *phi = phi.dilate(&RF::var(Var::LAM))?;
        }
    }
    let lam = spec.eigenvalue(n);
    let basis: Vec<XLaurent> = terms.iter().map(|(_, p)| p.clone()).collect();
    let mut coords = vec![RF::zero(); basis.len()];
    for (s, phi) in &terms {
        let image = match op.apply(phi) {
            Ok(v) => v.minus(&phi.scale(&lam)),
            Err(Error::NonPolynomialResult) => return Ok(None),
            Err(e) => return Err(e),
        };
        let Some(m) = coordinates(&image, &basis) else { return Ok(None) };
        for (c, v) in coords.iter_mut().zip(&m) {
            if !v.is_zero() {
                *c = &*c + &(s * v);
            }
        }
    }
    Ok(Some(coords))
}

/// Eigen check: the basis method when the series splits, otherwise the
/// direct residual.
pub fn verify_eigen(spec: &FamilySpec, n: u32, reading: OpReading) -> Result<EigenCheck> {
    let id = format!("{} n={}", spec.id, n);
    let op = eigen_op(spec, reading)?;
    if let Some(coords) = basis_residual(spec, n, &op)? {
        let bad: Vec<String> =
            coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| format!("[phi_{}] {}", j, c)).collect();
        return Ok(EigenCheck { id, holds: bad.is_empty(), residual: bad.join("; ") });
    }
    let r = eigen_residual(spec, n, reading)?;
    Ok(EigenCheck { id, holds: r.is_zero(), residual: if r.is_zero() { String::new() } else { r.to_string() } })
}
