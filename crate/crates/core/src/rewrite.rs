//! Rewriting verifier for H_III^{D7} and H_III^{D8}, which have no matrix
//! embedding. Identities are checked by reducing lhs − rhs to a normal form
//! in the free algebra on X, W, T0, T1.
//!
//! Normal forms put X and W on the left: a word is reduced when it is a
//! power of X or of W followed by an alternating T0/T1 word. Rules are
//! tried in a fixed order (idempotents, sandwiches, moving X/W left,
//! cancelling XW) and always at the leftmost match, so traces are
//! reproducible.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::nc::{Letter, NCExpression, Word};
use crate::parse::{parse_expression, ParseContext};
use crate::ring::Ring;
use crate::RF;

pub const DEFAULT_BUDGET: usize = 100_000;

const GENS: [&str; 11] = ["X", "W", "T0", "T1", "X1", "X2", "X3", "Xh1", "Xh2", "Xh3", "E"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variant {
    D7,
    D8,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::D7 => "H_III^D7",
            Variant::D8 => "H_III^D8",
        }
    }

    fn ctx(self) -> ParseContext {
        let c = ParseContext::new(&GENS);
        match self {
            Variant::D7 => c,
            Variant::D8 => c.with_scalar("a", RF::zero()),
        }
    }
}

/// lhs → rhs, with the relations it follows from.
#[derive(Clone, Debug, Serialize)]
pub struct Rule {
    pub id: &'static str,
    #[serde(serialize_with = "ser_word")]
    pub lhs: Word,
    #[serde(serialize_with = "ser_expr")]
    pub rhs: NCExpression,
    pub derivation: &'static str,
}

fn ser_word<S: serde::Serializer>(w: &Word, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::nc::render_word(w))
}

fn ser_expr<S: serde::Serializer>(e: &NCExpression, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&e.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct RewriteSystem {
    pub variant: Variant,
    pub rules: Vec<Rule>,
}

// (id, lhs, rhs, derivation); `a` is 0 for D8.
const RULES: [(&str, &str, &str, &str); 12] = [
    ("T1T1", "T1*T1", "-T1", "T1(T1+1) = 0"),
    ("T0T0", "T0*T0", "0", "T0^2 = 0"),
    ("T1XT1", "T1*X*T1", "-a*T1", "right multiple of T1X + a = W(T1+1) by T1"),
    ("T1WT1", "T1*W*T1", "a*T1+a-T1*W-W*T1-W", "(T1+1)W(T1+1) = a(T1+1)"),
    ("T0WT0", "T0*W*T0", "-q^-1*T0", "right multiple of qT0W + 1 = XT0 by T0"),
    ("T0XT0", "T0*X*T0", "T0", "left multiple of qT0W + 1 = XT0 by T0"),
    ("T1X", "T1*X", "W*T1+W-a", "T1X + a = W(T1+1)"),
    ("T1W", "T1*W", "X*T1-W+a", "X(T1X + a - W(T1+1))W with XW = 1"),
    ("T0X", "T0*X", "q*W*T0+1", "W(qT0W + 1 - XT0)X with WX = 1"),
    ("T0W", "T0*W", "q^-1*X*T0-q^-1", "qT0W + 1 = XT0"),
    ("XW", "X*W", "1", "XW = 1"),
    ("WX", "W*X", "1", "WX = 1"),
];

pub fn system(variant: Variant) -> Result<RewriteSystem> {
    let ctx = variant.ctx();
    let rules = RULES
        .iter()
        .map(|(id, l, r, d)| {
            let lhs = parse_expression(l, &ctx)?.terms().keys().next().cloned().unwrap_or_default();
            Ok(Rule { id, lhs, rhs: parse_expression(r, &ctx)?, derivation: d })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RewriteSystem { variant, rules })
}

/// One rule application: the rule and the position of the match in the
/// rewritten word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub rule: &'static str,
    pub position: usize,
}

#[derive(Clone, Debug)]
pub struct NormalForm {
    pub expr: NCExpression,
    pub steps: usize,
    pub exhausted: bool,
    pub trace: Vec<TraceStep>,
}

fn find(word: &[Letter], pat: &[Letter]) -> Option<usize> {
    if pat.len() > word.len() {
        return None;
    }
    (0..=word.len() - pat.len()).find(|&i| word[i..i + pat.len()] == *pat)
}

impl RewriteSystem {
    /// First rule in order that applies, at its leftmost match.
    fn redex(&self, w: &[Letter]) -> Option<(&Rule, usize)> {
        self.rules.iter().find_map(|r| find(w, &r.lhs).map(|p| (r, p)))
    }

    pub fn normalize(&self, e: &NCExpression, budget: usize) -> NormalForm {
        let mut pending: BTreeMap<Word, RF> = e.terms().clone();
        let mut done = NCExpression::zero();
        let mut trace = Vec::new();
        while let Some((w, c)) = pending.pop_first() {
            let Some((rule, pos)) = self.redex(&w) else {
                done.add_term(w, &c);
                continue;
            };
            if trace.len() == budget {
                pending.insert(w, c);
                for (w, c) in pending {
                    done.add_term(w, &c);
                }
                return NormalForm { expr: done, steps: budget, exhausted: true, trace };
            }
            trace.push(TraceStep { step: trace.len(), rule: rule.id, position: pos });
            for (mid, d) in rule.rhs.terms() {
                let mut nw = w[..pos].to_vec();
                nw.extend(mid.iter().cloned());
                nw.extend(w[pos + rule.lhs.len()..].iter().cloned());
                let nc = &c * d;
                match pending.get_mut(&nw) {
                    Some(slot) => {
                        let s = &*slot + &nc;
                        if s.is_zero() {
                            pending.remove(&nw);
                        } else {
                            *slot = s;
                        }
                    }
                    None => {
                        pending.insert(nw, nc);
                    }
                }
            }
        }
        NormalForm { expr: done, steps: trace.len(), exhausted: false, trace }
    }

    /// Overlaps of rule left-hand sides whose two reductions disagree. An
    /// empty result together with termination makes normal forms unique,
    /// so a nonzero normal form then proves an identity false.
    pub fn unresolved_overlaps(&self) -> Vec<(String, String, NCExpression)> {
        let mut out = Vec::new();
        for r in &self.rules {
            for s in &self.rules {
                // suffix of r.lhs equals prefix of s.lhs, or s.lhs inside r.lhs
                for k in 1..=r.lhs.len().min(s.lhs.len()) {
                    let (a, b) = (&r.lhs[r.lhs.len() - k..], &s.lhs[..k]);
                    if a != b || (k == r.lhs.len() && k == s.lhs.len()) {
                        continue;
                    }
                    if k == s.lhs.len() && k < r.lhs.len() {
                        continue; // inclusion, handled below
                    }
                    let mut w = r.lhs.clone();
                    w.extend(s.lhs[k..].iter().cloned());
                    let one = replace_at(&w, 0, r);
                    let two = replace_at(&w, r.lhs.len() - k, s);
                    self.compare(&mut out, r, s, one, two);
                }
                if s.lhs.len() < r.lhs.len() {
                    if let Some(p) = find(&r.lhs, &s.lhs) {
                        let one = r.rhs.clone();
                        let two = replace_at(&r.lhs, p, s);
                        self.compare(&mut out, r, s, one, two);
                    }
                }
            }
        }
        out
    }

    fn compare(
        &self,
        out: &mut Vec<(String, String, NCExpression)>,
        r: &Rule,
        s: &Rule,
        one: NCExpression,
        two: NCExpression,
    ) {
        let d = self.normalize(&one.minus(&two), DEFAULT_BUDGET);
        if d.exhausted || !d.expr.is_zero() {
            out.push((r.id.to_string(), s.id.to_string(), d.expr));
        }
    }
}

fn replace_at(w: &[Letter], pos: usize, r: &Rule) -> NCExpression {
    let pre = NCExpression::term(RF::one(), w[..pos].to_vec());
    let post = NCExpression::term(RF::one(), w[pos + r.lhs.len()..].to_vec());
    pre.times(&r.rhs).times(&post)
}

/// An identity lhs = rhs in the generators of [`GENS`].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Identity {
    pub id: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

const I: fn(&'static str, &'static str, &'static str) -> Identity = |id, lhs, rhs| Identity { id, lhs, rhs };

/// Spherical elements in terms of X, W, T0, T1 (same for both variants).
pub const DEFINITIONS: [(&str, &str); 4] = [
    ("X1", "X+W"),
    ("X2", "T1*T0+T0*(T1+1)"),
    (
        "X3",
        "q/(q^2-1)*(q^(1/2)*X2*X1-q^(-1/2)*X1*X2)-1/(q+1)*((q^(1/2)-q^(-1/2))*T1+q^(1/2))",
    ),
    ("E", "1+T1"),
];

fn commutes() -> Vec<Identity> {
    vec![I("[e,X1]", "E*X1", "X1*E"), I("[e,X2]", "E*X2", "X2*E"), I("[e,X3]", "E*X3", "X3*E")]
}

/// Expansions of cubic words displayed along the way in the D7 proof.
pub fn expansions() -> Vec<Identity> {
    vec![
        I(
            "X2X1X2",
            "X2*X1*X2",
            "(1-1/q)*(T0+T0*T1+T1*T0+a*(q+1)*T0*T1*T0+2*T1*T0*T1)+1/q*(X+W)*T0*T1*T0\
             +(1/q*X+q*W)*T0*T1*T0*T1+(1/q*W+q*X)*T1*T0*T1*T0",
        ),
        I("X1X2^2", "X1*X2^2", "(X+W)*(T0*T1*T0+T0*T1*T0*T1+T1*T0*T1*T0)"),
        I(
            "X2^2X1",
            "X2^2*X1",
            "(1-1/q^2)*(T0+T0*T1+T1*T0+(q+1)*T1*T0*T1)+(a*(q^2-1/q^2)+1/q^2*(X+W))*T0*T1*T0\
             +(1/q^2*X+q^2*W)*T0*T1*T0*T1+(1/q^2*W+q^2*X)*T1*T0*T1*T0",
        ),
        I(
            "X2X1^2",
            "X2*X1^2",
            "(q^2-1)/q^2*((q-1)*a+(X+W)*((q+1)*T1+a*(1+q^2)*T0+1))+2*(T0*T1+T1*T0)\
             +1/q^2*(X^2+W^2)*T0+(1/q^2*X^2+q^2*W^2)*T0*T1+(q^2*X^2+1/q^2*W^2)*T1*T0\
             +(q^2-1/q^2-2)*T0",
        ),
        I("X1^2X2", "X1^2*X2", "(X^2+W^2)*(T0+T0*T1+T1*T0)+2*T0*T1+2*T1*T0+2*T0"),
    ]
}

/// The two commutation relations in the expanded form used by the proof.
pub fn expanded_skein() -> Vec<Identity> {
    vec![
        I(
            "skein-expanded1",
            "(q+1/q)*X2*X1*X2-X1*X2^2-X2^2*X1-(q-1)/q*((q-1)*T1+q)*X2\
             +(q-1)/q*X2*(T1-1/q*T1+1)*X2",
            "0",
        ),
        I(
            "skein-expanded2",
            "(q^2+1)/(q^2-1)*X1*X2*X1-q/(q^2-1)*X1^2*X2-q/(q^2-1)*X2*X1^2-1/(q+1)*X1*((q-1)*T1+q)\
             +1/(q+1)*((1-1/q)*T1+1)*X1",
            "(q-1/q)*X2-(q-1)/q*a",
        ),
    ]
}

pub fn skein(variant: Variant) -> Vec<Identity> {
    match variant {
        Variant::D7 => vec![
            I("skein-PIIID7.1", "q^(1/2)*X3*X2-q^(-1/2)*X2*X3", "0"),
            I("skein-PIIID7.2", "q^(1/2)*X1*X3-q^(-1/2)*X3*X1", "(q-1/q)*X2-(q-1)/q*a"),
            I(
                "cubic-IIID7",
                "q^(1/2)*X2*X1*X3-q*X2^2-q*X3^2+a*X2+(q^(-1/2)*T1-q^(1/2)*(T1+1))*X3",
                "0",
            ),
        ],
        Variant::D8 => vec![
            I("skein-PIIID8.1", "q^(1/2)*X3*X2-q^(-1/2)*X2*X3", "0"),
            I("skein-PIIID8.2", "q^(1/2)*X1*X3-q^(-1/2)*X3*X1", "(q-1/q)*X2"),
            I("cubic-IIID8", "q^(1/2)*X2*X1*X3-q*X2^2-q*X3^2+(q^(-1/2)*T1-q^(1/2)*(T1+1))*X3", "0"),
        ],
    }
}

pub fn hatted(variant: Variant) -> Vec<Identity> {
    match variant {
        Variant::D7 => vec![
            I("D7-skein1", "q^(1/2)*Xh2*Xh1-q^(-1/2)*Xh1*Xh2", "(q-1/q)*Xh3-(q^(1/2)-q^(-1/2))*E"),
            I("D7-skein2", "q^(1/2)*Xh3*Xh2-q^(-1/2)*Xh2*Xh3", "0"),
            I(
                "D7-skein3",
                "q^(1/2)*Xh1*Xh3-q^(-1/2)*Xh3*Xh1",
                "(q-1/q)*Xh2-(q^(1/2)-q^(-1/2))*a/q^(1/2)*E",
            ),
            I("D7cubic", "q^(1/2)*Xh2*Xh1*Xh3-q*Xh2^2-q*Xh3^2+a*Xh2-1/q^(1/2)*Xh3", "0"),
        ],
        Variant::D8 => vec![
            I("D8-skein1", "q^(1/2)*Xh2*Xh1-q^(-1/2)*Xh1*Xh2", "(q-1/q)*Xh3-(q-1)/q^(1/2)*E"),
            I("D8-skein2", "q^(1/2)*Xh3*Xh2-q^(-1/2)*Xh2*Xh3", "0"),
            I("D8-skein3", "q^(1/2)*Xh1*Xh3-q^(-1/2)*Xh3*Xh1", "(q-1/q)*Xh2"),
            I("D8cubic", "q^(1/2)*Xh2*Xh1*Xh3-q*Xh2^2-q*Xh3^2-1/q^(1/2)*Xh3", "0"),
        ],
    }
}

/// Every identity checked for `variant`: commutation with e, the D7
/// expansions, the expanded commutation relations, skein and cubic, hatted
/// forms.
pub fn identities(variant: Variant) -> Vec<Identity> {
    let mut v = commutes();
    if variant == Variant::D7 {
        v.extend(expansions());
        v.extend(expanded_skein());
    }
    v.extend(skein(variant));
    v.extend(hatted(variant));
    v
}

/// Printed identities that fail, each with the corrected form (same id)
/// and the reason.
pub fn amendments() -> Vec<(Variant, Identity, &'static str)> {
    use Variant::*;
    vec![
        (
            D7,
            I(
                "X2X1^2",
                "X2*X1^2",
                "(q^2-1)/q^2*((q-1)*a+(X+W)*((q+1)*T1+a*(1+q^2)*T0+1))+2*(T0*T1+T1*T0)\
                 +1/q^2*(X^2+W^2)*T0+(1/q^2*X^2+q^2*W^2)*T0*T1+(q^2*X^2+1/q^2*W^2)*T1*T0\
                 -(q^2-1/q^2-2)*T0",
            ),
            "the last T0 coefficient has the opposite sign",
        ),
        (
            D7,
            I(
                "skein-expanded1",
                "(q+1/q)*X2*X1*X2-X1*X2^2-X2^2*X1-(q-1)/q*((q-1)*T1+q)*X2\
                 +(q-1)/q*X2*(T1-1/q*T1+1)",
                "0",
            ),
            "the constant part of X3 contributes X2*(T1-T1/q+1) with no trailing X2",
        ),
        (
            D7,
            I("D7-skein1", "q^(1/2)*Xh2*Xh1-q^(-1/2)*Xh1*Xh2", "(q-1/q)*Xh3+(q^(1/2)-q^(-1/2))*E"),
            "e times the constant part of X3 is sqrt(q)/(q+1) e, so the e term enters with +",
        ),
        (
            D7,
            I("D7cubic", "q^(1/2)*Xh2*Xh1*Xh3-q*Xh2^2-q*Xh3^2+a*Xh2-q^(1/2)*Xh3", "0"),
            "e T1 = 0, so e(q^(-1/2) T1 - q^(1/2)(T1+1)) X3 = -q^(1/2) Xh3",
        ),
        (
            D8,
            I("D8-skein1", "q^(1/2)*Xh2*Xh1-q^(-1/2)*Xh1*Xh2", "(q-1/q)*Xh3+(q-1)/q^(1/2)*E"),
            "as for D7: the e term enters with +",
        ),
        (
            D8,
            I("D8cubic", "q^(1/2)*Xh2*Xh1*Xh3-q*Xh2^2-q*Xh3^2-q^(1/2)*Xh3", "0"),
            "as for D7: e T1 = 0 leaves -q^(1/2) Xh3",
        ),
    ]
}

/// [`identities`] with the amended forms in place of the printed ones.
pub fn identities_amended(variant: Variant) -> Vec<Identity> {
    let am = amendments();
    identities(variant)
        .into_iter()
        .map(|id| {
            am.iter()
                .find(|(v, a, _)| *v == variant && a.id == id.id)
                .map(|(_, a, _)| *a)
                .unwrap_or(id)
        })
        .collect()
}

/// Generator images X1, X2, X3, E and the hatted Xhi = E Xi E, all in X, W,
/// T0, T1.
pub fn definitions(variant: Variant) -> Result<BTreeMap<String, NCExpression>> {
    let ctx = variant.ctx();
    let mut m: BTreeMap<String, NCExpression> = BTreeMap::new();
    let none = BTreeMap::new();
    for (name, text) in DEFINITIONS {
        let e = parse_expression(text, &ctx)?.substitute(&m, &none)?;
        m.insert(name.to_string(), e);
    }
    let e = m["E"].clone();
    for k in 1..=3 {
        let h = e.times(&m[&format!("X{k}")]).times(&e);
        m.insert(format!("Xh{k}"), h);
    }
    Ok(m)
}

/// lhs − rhs with the spherical elements expanded.
pub fn expand(variant: Variant, id: &Identity) -> Result<NCExpression> {
    let ctx = variant.ctx();
    let d = definitions(variant)?;
    let e = parse_expression(id.lhs, &ctx)?.minus(&parse_expression(id.rhs, &ctx)?);
    e.substitute(&d, &BTreeMap::new())
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub id: String,
    pub holds: bool,
    pub exhausted: bool,
    pub steps: usize,
    /// Normal form of lhs − rhs, empty when it holds.
    pub residual: String,
    pub trace: Vec<TraceStep>,
}

pub fn verify_identity(
    system: &RewriteSystem,
    lhs: &NCExpression,
    rhs: &NCExpression,
    budget: usize,
) -> (bool, NormalForm) {
    let nf = system.normalize(&lhs.minus(rhs), budget);
    (!nf.exhausted && nf.expr.is_zero(), nf)
}

fn check_one(system: &RewriteSystem, id: &Identity, budget: usize) -> IdentityCheck {
    let expr = match expand(system.variant, id) {
        Ok(e) => e,
        Err(err) => {
            return IdentityCheck {
                id: id.id.into(),
                holds: false,
                exhausted: false,
                steps: 0,
                residual: err.to_string(),
                trace: Vec::new(),
            }
        }
    };
    let (holds, nf) = verify_identity(system, &expr, &NCExpression::zero(), budget);
    IdentityCheck {
        id: id.id.into(),
        holds,
        exhausted: nf.exhausted,
        steps: nf.steps,
        residual: if holds { String::new() } else { nf.expr.to_string() },
        trace: nf.trace,
    }
}

/// Check a list of identities in parallel; output order follows input.
pub fn check_identities(variant: Variant, ids: &[Identity], budget: usize) -> Result<Vec<IdentityCheck>> {
    let sys = system(variant)?;
    Ok(ids.par_iter().map(|id| check_one(&sys, id, budget)).collect())
}

/// All identities in amended form.
pub fn check_all(variant: Variant) -> Result<Vec<IdentityCheck>> {
    check_identities(variant, &identities_amended(variant), DEFAULT_BUDGET)
}

/// All identities as printed.
pub fn check_printed(variant: Variant) -> Result<Vec<IdentityCheck>> {
    check_identities(variant, &identities(variant), DEFAULT_BUDGET)
}

/// Budget exhaustion as an error, for callers that need a hard failure.
pub fn normalize_strict(system: &RewriteSystem, e: &NCExpression, budget: usize) -> Result<NCExpression> {
    let nf = system.normalize(e, budget);
    if nf.exhausted {
        return Err(Error::BudgetExhausted(nf.steps));
    }
    Ok(nf.expr)
}

/// B, C0, D0, D1 of the confluent Zhedanov algebra attached to `variant`.
pub fn zhedanov_params(variant: Variant) -> [(&'static str, &'static str); 4] {
    match variant {
        Variant::D7 => [
            ("B", "(q-1)^2/q"),
            ("C0", "(q-q^-1)^2"),
            ("D0", "-(q+1)*(q-1)^2/q^2*a"),
            ("D1", "0"),
        ],
        Variant::D8 => [("B", "(q-1)^2/q"), ("C0", "(q-q^-1)^2"), ("D0", "0"), ("D1", "0")],
    }
}

/// The Zhedanov relations on the images K0 = X̂2, K1 = X̂1,
/// K2 = (q − 1/q)X̂3 + (√q − 1/√q) q/(q−1)² B e (u1 = 1 here).
pub fn check_zhedanov(variant: Variant) -> Result<Vec<IdentityCheck>> {
    let mut ctx = variant.ctx();
    for (n, v) in zhedanov_params(variant) {
        let val = crate::parse::parse_scalar_with(v, &ctx)?;
        ctx = ctx.with_scalar(n, val);
    }
    let mut k = ctx.clone();
    k.gens.extend(["K0", "K1", "K2"].map(String::from));
    let mut images = BTreeMap::new();
    for (n, t) in [
        ("K0", "Xh2"),
        ("K1", "Xh1"),
        ("K2", "(q-q^-1)*Xh3+(q^(1/2)-q^(-1/2))*q/(q-1)^2*B*E"),
    ] {
        images.insert(n.to_string(), parse_expression(t, &ctx)?);
    }
    let defs = definitions(variant)?;
    let sys = system(variant)?;
    let none = BTreeMap::new();
    crate::spherical::zhedanov_relations()
        .par_iter()
        .map(|r| {
            let e = parse_expression(r.lhs, &k)?.minus(&parse_expression(r.rhs, &k)?);
            let e = e.substitute(&images, &none)?.substitute(&defs, &none)?;
            let (holds, nf) = verify_identity(&sys, &e, &NCExpression::zero(), DEFAULT_BUDGET);
            Ok(IdentityCheck {
                id: r.id.into(),
                holds,
                exhausted: nf.exhausted,
                steps: nf.steps,
                residual: if holds { String::new() } else { nf.expr.to_string() },
                trace: nf.trace,
            })
        })
        .collect()
}
