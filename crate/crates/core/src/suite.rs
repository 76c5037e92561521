//! Check suites and their reports.
//!
//! A suite is a list of batches, each tagged with the algebras,
//! representations and families it touches. Batches run in parallel; the
//! report is sorted by check id, so its serialisation does not depend on
//! scheduling. Checks whose printed form fails but whose amended form
//! holds are reported as `pass-amended` with the printed residual.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::classical::{self, MonReading};
use crate::error::{Error, Result};
use crate::presentations::{self as pres, ResidualReport};
use crate::qdiff::{self, OpReading, RepId, Verdict};
use crate::qmat::{build, embed, embed_amended, AlgebraId, Reading};
use crate::qpoly::{self, FamilyId};
use crate::rewrite::{self, Variant};
use crate::spherical;
use crate::Ring;

/// Residuals longer than this are cut, with the number of dropped
/// characters noted.
pub const MAX_RESIDUAL: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuiteId {
    Presentations,
    Spherical,
    Rewrite,
    Classical,
    Zhedanov,
    Eigen,
}

impl SuiteId {
    pub const ALL: [SuiteId; 6] = [
        SuiteId::Presentations,
        SuiteId::Spherical,
        SuiteId::Rewrite,
        SuiteId::Classical,
        SuiteId::Zhedanov,
        SuiteId::Eigen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Presentations => "presentations",
            SuiteId::Spherical => "spherical",
            SuiteId::Rewrite => "rewrite",
            SuiteId::Classical => "classical",
            SuiteId::Zhedanov => "zhedanov",
            SuiteId::Eigen => "eigen",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        SuiteId::ALL
            .into_iter()
            .find(|x| x.name() == key)
            .ok_or_else(|| Error::Config(format!("unknown suite {:?}", s)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Config(format!("unknown format {:?}", s))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suites: Vec<SuiteId>,
    /// Keep only batches carrying one of these tags (algebra, representation,
    /// family or rewrite variant; case-insensitive). Empty keeps everything.
    pub algebras: Vec<String>,
    /// Eigenfunction checks run for n = 0..=max_n.
    pub max_n: u32,
    /// Degree of the symmetric basis used when canonical operator equality
    /// is inconclusive.
    pub basis_degree: i32,
    pub budget: usize,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Count basis-only operator verdicts as passes.
    pub allow_basis: bool,
    /// Record wall time per batch. Off by default so that reports are
    /// byte-identical between runs.
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: SuiteId::ALL.to_vec(),
            algebras: Vec::new(),
            max_n: 8,
            basis_degree: qdiff::DEFAULT_BASIS_DEGREE,
            budget: rewrite::DEFAULT_BUDGET,
            jobs: 0,
            allow_basis: true,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The printed statement fails; the amended one holds.
    PassAmended,
    /// Operators agree on the symmetric basis up to this degree only.
    PassBasis(i32),
    Fail,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass => f.write_str("pass"),
            Outcome::PassAmended => f.write_str("pass-amended"),
            Outcome::PassBasis(n) => write!(f, "pass-basis-{}", n),
            Outcome::Fail => f.write_str("fail"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub check_id: String,
    pub anchor: String,
    pub verdict: Outcome,
    /// Empty for a plain pass; the failing residual for `fail`; the printed
    /// residual for `pass-amended`.
    pub residual: String,
    pub ms: Option<u64>,
}

impl CheckRecord {
    pub fn passes(&self, allow_basis: bool) -> bool {
        match self.verdict {
            Outcome::Pass | Outcome::PassAmended => true,
            Outcome::PassBasis(_) => allow_basis,
            Outcome::Fail => false,
        }
    }
}

impl Serialize for CheckRecord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CheckRecord", 5)?;
        st.serialize_field("check_id", &self.check_id)?;
        st.serialize_field("anchor", &self.anchor)?;
        st.serialize_field("verdict", &self.verdict.to_string())?;
        st.serialize_field("residual", &self.residual)?;
        st.serialize_field("ms", &self.ms)?;
        st.end()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub records: Vec<CheckRecord>,
    pub allow_basis: bool,
}

impl Report {
    pub fn new(mut records: Vec<CheckRecord>, allow_basis: bool) -> Self {
        records.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        Report { records, allow_basis }
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.passes(self.allow_basis))
    }

    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.records.iter().filter(|r| !r.passes(self.allow_basis)).collect()
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.check_id == id)
    }

    pub fn merge(mut self, other: Report) -> Report {
        self.records.extend(other.records);
        Report::new(self.records, self.allow_basis)
    }
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.records).expect("records serialise");
            s.push('\n');
            s
        }
        Format::Text => text(report),
    }
}

fn text(report: &Report) -> String {
    if report.records.is_empty() {
        return "0 checks\n".to_string();
    }
    let w = report.records.iter().map(|r| r.check_id.len()).max().unwrap_or(0).max(5);
    let timed = report.records.iter().any(|r| r.ms.is_some());
    let mut out = String::new();
    let row = |id: &str, verdict: &str, ms: &str, anchor: &str| {
        if timed {
            format!("{:<w$}  {:<14}  {:>8}  {}\n", id, verdict, ms, anchor, w = w)
        } else {
            format!("{:<w$}  {:<14}  {}\n", id, verdict, anchor, w = w)
        }
    };
    out.push_str(&row("CHECK", "VERDICT", "MS", "ANCHOR"));
    for r in &report.records {
        let ms = r.ms.map(|m| m.to_string()).unwrap_or_default();
        out.push_str(&row(&r.check_id, &r.verdict.to_string(), &ms, &r.anchor));
        if !r.residual.is_empty() {
            let label = if r.verdict == Outcome::PassAmended { "printed" } else { "residual" };
            out.push_str(&format!("    {}: {}\n", label, r.residual));
        }
    }
    let failed = report.failures().len();
    out.push_str(&format!(
        "{} checks, {} passed, {} failed\n",
        report.records.len(),
        report.records.len() - failed,
        failed
    ));
    out
}

fn truncate(s: &str) -> String {
    if s.chars().count() <= MAX_RESIDUAL {
        return s.to_string();
    }
    let kept: String = s.chars().take(MAX_RESIDUAL).collect();
    format!("{} ... [{} more chars]", kept, s.chars().count() - MAX_RESIDUAL)
}

/// Outcome of one statement: zero residual or the residual's rendering.
type Res = (bool, String);

fn record(id: String, anchor: &str, amended: Res, printed: Option<&Res>) -> CheckRecord {
    let (verdict, residual) = match (amended.0, printed) {
        (false, _) => (Outcome::Fail, amended.1),
        (true, Some((false, p))) => (Outcome::PassAmended, p.clone()),
        (true, _) => (Outcome::Pass, String::new()),
    };
    CheckRecord { check_id: id, anchor: anchor.to_string(), verdict, residual: truncate(&residual), ms: None }
}

fn plain(id: String, anchor: &str, ok: bool, residual: &str) -> CheckRecord {
    record(id, anchor, (ok, residual.to_string()), None)
}

fn residuals(r: &ResidualReport) -> Vec<(String, Res)> {
    r.checks.iter().map(|c| (c.id.clone(), (c.zero, c.residual.clone()))).collect()
}

/// Pair amended results with printed ones by id.
fn dual(prefix: &str, anchor: &str, amended: Vec<(String, Res)>, printed: Vec<(String, Res)>) -> Vec<CheckRecord> {
    let printed: BTreeMap<String, Res> = printed.into_iter().collect();
    amended.into_iter().map(|(id, a)| record(format!("{}/{}", prefix, id), anchor, a, printed.get(&id))).collect()
}

fn single(prefix: &str, anchor: &str, rows: Vec<(String, Res)>) -> Vec<CheckRecord> {
    dual(prefix, anchor, rows, Vec::new())
}

type Run = Box<dyn Fn(&SuiteConfig) -> Result<Vec<CheckRecord>> + Send + Sync>;

struct Batch {
    suite: SuiteId,
    /// Id used for the failure record if the batch errors.
    name: String,
    tags: Vec<String>,
    run: Run,
}

fn batch<F>(suite: SuiteId, name: impl Into<String>, tags: &[&str], f: F) -> Batch
where
    F: Fn(&SuiteConfig) -> Result<Vec<CheckRecord>> + Send + Sync + 'static,
{
    Batch { suite, name: name.into(), tags: tags.iter().map(|t| t.to_string()).collect(), run: Box::new(f) }
}

/// Algebra in which each representation lives.
fn rep_algebra(r: RepId) -> AlgebraId {
    match r {
        RepId::AW => AlgebraId::H,
        RepId::ZV | RepId::ZVGamma => AlgebraId::V,
        RepId::ZIV => AlgebraId::IV,
        RepId::ZIII | RepId::ZIIID7 | RepId::ZIIID8 => AlgebraId::III,
        RepId::ZII => AlgebraId::II,
        RepId::ZI => AlgebraId::I,
    }
}

fn variant_tag(v: Variant) -> &'static str {
    match v {
        Variant::D7 => "D7",
        Variant::D8 => "D8",
    }
}

const MAP_CASES: [(&str, AlgebraId); 9] = [
    ("SO", AlgebraId::H),
    ("SO1-V", AlgebraId::V),
    ("SO1-IV", AlgebraId::IV),
    ("SO1-III", AlgebraId::III),
    ("LD-H", AlgebraId::H),
    ("LDPV-V", AlgebraId::V),
    ("LDPV-IV", AlgebraId::IV),
    ("LDPV-III", AlgebraId::III),
    ("gamma-V", AlgebraId::V),
];

const ROUND_TRIPS: [(&str, &str, AlgebraId); 6] = [
    ("SO1-V", "SO3-V", AlgebraId::V),
    ("SO1-IV", "SO3-IV", AlgebraId::IV),
    ("SO1-III", "SO3-III", AlgebraId::III),
    ("LDPV-V", "LDPVinv-V", AlgebraId::V),
    ("LDPV-IV", "LDPVinv-IV", AlgebraId::IV),
    ("LDPV-III", "LDPVinv-III", AlgebraId::III),
];

/// Mutations of the product relation of H. Each must leave a nonzero
/// residual on the amended embedding.
pub fn daha5_mutations() -> Result<Vec<(String, Res)>> {
    let h = pres::presentation("H")?;
    let r = h.relation("daha5")?;
    let ctx = h.context();
    let eval = |text: String, on: &crate::EmbeddingAssignment| -> Res {
        match crate::parse_expression(&text, &ctx).and_then(|e| on.eval(&e)) {
            Ok(m) => (!m.is_zero(), m.to_string()),
            Err(e) => (false, format!("error: {}", e)),
        }
    };
    let amended = embed_amended(AlgebraId::H);
    let flipped = build(AlgebraId::H, Reading::Amended, -1);
    let plain = format!("{}-({})", r.lhs, r.rhs);
    Ok(vec![
        ("daha5 phase sign".into(), eval(plain, &flipped)),
        ("daha5 right side sign".into(), eval(format!("{}+({})", r.lhs, r.rhs), &amended)),
        ("daha5 exponent sign".into(), eval(format!("{}-({})", r.lhs, r.rhs.replace("(-1/2)", "(1/2)")), &amended)),
    ])
}

/// Each nonzero ω entry negated in turn; the hatted cubic must then fail.
pub fn omega_mutations(a: AlgebraId) -> Result<Vec<(String, Res)>> {
    let spec = spherical::cubic_spec_amended(a);
    let t = spherical::build_triple(a)?;
    let mut out = Vec::new();
    for (w, text) in &spec.omega {
        if crate::parse::parse_scalar_with(text, &spec.context()?)?.is_zero() {
            continue;
        }
        let r = spherical::check_cubic(&t, &spec.with_negated_omega(w), true);
        let c = r.check(spec.hat_cubic.id).ok_or_else(|| Error::Other("hatted cubic missing".into()))?;
        out.push((format!("-{}", w), (!c.zero, c.residual.clone())));
    }
    Ok(out)
}

fn presentation_batches(out: &mut Vec<Batch>) {
    use SuiteId::Presentations as S;
    for a in AlgebraId::ALL {
        out.push(batch(S, format!("presentations/{}", a), &[a.name()], move |_| {
            let p = pres::presentation(a.name())?;
            let am = pres::check_presentation(&p, &embed_amended(a));
            let pr = pres::check_presentation(&p, &embed(a));
            let anchor = format!("defining relations of {} on the quantum torus matrices", a);
            Ok(dual(&format!("presentations/{}", a), &anchor, residuals(&am), residuals(&pr)))
        }));
    }
    for (m, a) in MAP_CASES {
        out.push(batch(S, format!("presentations/{}", m), &[a.name()], move |_| {
            let map = pres::generator_map(m)?;
            let assign = embed_amended(a);
            let am = pres::check_via_map(&map, &assign)?;
            let mapped = pres::apply_generator_map(&map, &assign)?;
            let pr = pres::check_presentation_with(&pres::presentation(map.target)?, &mapped, &map.bindings()?);
            let anchor = format!("{} presentation through the map {} from {}", map.target, m, a);
            Ok(dual(&format!("presentations/{}", m), &anchor, residuals(&am), residuals(&pr)))
        }));
    }
    for (f, b, a) in ROUND_TRIPS {
        out.push(batch(S, format!("presentations/{}+{}", f, b), &[a.name()], move |_| {
            let orig = embed_amended(a);
            let there = pres::apply_generator_map(&pres::generator_map(f)?, &orig)?;
            let back = pres::apply_generator_map(&pres::generator_map(b)?, &there)?;
            let anchor = format!("{} then {} returns the {} matrices", f, b, a);
            Ok(pres::same_generators(&orig, &back)
                .into_iter()
                .map(|(g, ok)| plain(format!("presentations/{}+{}/{}", f, b, g), &anchor, ok, "generator image differs"))
                .collect())
        }));
    }
    out.push(batch(S, "presentations/beta", &["H"], |_| {
        let h = embed_amended(AlgebraId::H);
        let mut v = single("presentations/beta", "beta is an automorphism of H", residuals(&pres::check_automorphism_beta(&h)?));
        v.extend(single("presentations/beta^2", "square of beta", residuals(&pres::check_beta_squared(&h)?)));
        Ok(v)
    }));
    out.push(batch(S, "presentations/mutation", &["H"], |_| {
        Ok(single("presentations/mutation", "a sign flip in daha5 must be detected", daha5_mutations()?))
    }));
}

fn spherical_batches(out: &mut Vec<Batch>) {
    use SuiteId::Spherical as S;
    for a in AlgebraId::ALL {
        out.push(batch(S, format!("spherical/{}", a), &[a.name()], move |_| {
            let kind = |r: &ResidualReport| r.presentation.rsplit(' ').next().unwrap_or("").to_string();
            let am = spherical::check_all(a)?;
            let pr = spherical::check_all_with(&spherical::cubic_spec(a))?;
            let mut v = Vec::new();
            for (x, y) in am.iter().zip(&pr) {
                let k = kind(x);
                let anchor = format!("{} relations of the spherical subalgebra of {}", k, a);
                v.extend(dual(&format!("spherical/{}/{}", a, k), &anchor, residuals(x), residuals(y)));
            }
            let anchor = format!("negated omega entries break the hatted cubic of {}", a);
            v.extend(single(&format!("spherical/{}/mutation", a), &anchor, omega_mutations(a)?));
            Ok(v)
        }));
    }
    out.push(batch(S, "spherical/gamma", &["H_V"], |_| {
        let id = spherical::check_gamma_spherical(true)?;
        let g = spherical::check_gamma_spherical(false)?;
        let mut v = single("spherical/gamma-identity", "hatted PV-type relations, identity map", residuals(&id.report));
        v.extend(single("spherical/gamma", "hatted PV-type relations after gamma", residuals(&g.report)));
        let w = |c: &spherical::GammaCheck, n: &str| c.omega.iter().find(|(m, _)| m == n).map(|x| x.1.clone());
        let swapped = w(&g, "w1") == w(&id, "w2")
            && w(&g, "w2") == w(&id, "w1")
            && w(&g, "w3") == w(&id, "w3")
            && w(&g, "w4") == w(&id, "w4");
        v.push(plain("spherical/gamma/omega-swap".into(), "gamma exchanges w1 and w2", swapped, "omega values not exchanged"));
        Ok(v)
    }));
}

fn identity_rows(c: Vec<rewrite::IdentityCheck>) -> Vec<(String, Res)> {
    c.into_iter()
        .map(|c| {
            let r = if c.exhausted {
                format!("budget exhausted after {} steps: {}", c.steps, c.residual)
            } else {
                c.residual
            };
            (c.id, (c.holds, r))
        })
        .collect()
}

fn rewrite_batches(out: &mut Vec<Batch>) {
    for v in [Variant::D7, Variant::D8] {
        let tag = variant_tag(v);
        out.push(batch(SuiteId::Rewrite, format!("rewrite/{}", tag), &[tag, v.name(), "H_III"], move |cfg| {
            let am = rewrite::check_identities(v, &rewrite::identities_amended(v), cfg.budget)?;
            let pr = rewrite::check_identities(v, &rewrite::identities(v), cfg.budget)?;
            let anchor = format!("identities of the spherical subalgebra of {} by rewriting", v.name());
            let mut out = dual(&format!("rewrite/{}", tag), &anchor, identity_rows(am), identity_rows(pr));
            let open = rewrite::system(v)?.unresolved_overlaps();
            let shown: Vec<String> = open.iter().map(|(a, b, _)| format!("{} / {}", a, b)).collect();
            out.push(plain(
                format!("rewrite/{}/confluence", tag),
                "all overlaps of the rewriting rules resolve",
                open.is_empty(),
                &shown.join(", "),
            ));
            Ok(out)
        }));
    }
}

fn operator_rows(c: Vec<qdiff::OperatorCheck>, rep: RepId) -> Vec<(String, (Verdict, String))> {
    let prefix = format!("{} ", rep);
    c.into_iter().map(|c| (c.id.trim_start_matches(&prefix).to_string(), (c.verdict, c.residual))).collect()
}

fn zhedanov_batches(out: &mut Vec<Batch>) {
    use SuiteId::Zhedanov as S;
    for a in [AlgebraId::V, AlgebraId::IV, AlgebraId::III] {
        out.push(batch(S, format!("zhedanov/{}", a), &[a.name()], move |_| {
            let am = spherical::check_zhedanov_iso(a)?;
            let pr = spherical::check_zhedanov_iso_with(a, &spherical::ISO_IMAGES)?;
            let anchor = format!("confluent Zhedanov relations on the spherical subalgebra of {}", a);
            Ok(dual(&format!("zhedanov/{}", a), &anchor, residuals(&am), residuals(&pr)))
        }));
    }
    for v in [Variant::D7, Variant::D8] {
        let tag = variant_tag(v);
        out.push(batch(S, format!("zhedanov/{}", tag), &[tag, v.name(), "H_III"], move |_| {
            let anchor = format!("confluent Zhedanov relations on the spherical subalgebra of {}", v.name());
            Ok(single(&format!("zhedanov/{}", tag), &anchor, identity_rows(rewrite::check_zhedanov(v)?)))
        }));
    }
    for rep in RepId::ALL {
        let alg = rep_algebra(rep);
        out.push(batch(S, format!("zhedanov/{}", rep), &[rep.name(), alg.name()], move |cfg| {
            let am = operator_rows(qdiff::catalogue(rep).check(cfg.basis_degree)?, rep);
            let pr = qdiff::catalogue_with(rep, OpReading::Printed).check(cfg.basis_degree);
            let pr: BTreeMap<String, (Verdict, String)> = match pr {
                Ok(p) => operator_rows(p, rep).into_iter().collect(),
                Err(e) => am.iter().map(|(id, _)| (id.clone(), (Verdict::NotEqual, format!("error: {}", e)))).collect(),
            };
            let anchor = format!("q-difference operators {} satisfy the confluent Zhedanov relations", rep);
            let mut v: Vec<CheckRecord> = am
                .into_iter()
                .map(|(id, (verdict, res))| {
                    let p = pr.get(&id).map(|(v, r)| (v.holds(), r.clone()));
                    let mut r = record(format!("zhedanov/{}/{}", rep, id), &anchor, (verdict.holds(), res), p.as_ref());
                    if let Verdict::EqualOnSymmetricBasisUpTo(n) = verdict {
                        if r.verdict == Outcome::Pass {
                            r.verdict = Outcome::PassBasis(n);
                        }
                    }
                    r
                })
                .collect();
            let tables = |reading| -> Result<Vec<(String, Res)>> {
                Ok(qdiff::check_table_consistency(rep, reading)?
                    .into_iter()
                    .map(|t| (t.id.trim_start_matches(&format!("{} ", rep)).to_string(), (t.agrees, t.difference)))
                    .collect())
            };
            let anchor = format!("structure constants of {} against the parameter tables", rep);
            v.extend(dual(&format!("zhedanov/{}/table", rep), &anchor, tables(OpReading::Amended)?, tables(OpReading::Printed)?));
            Ok(v)
        }));
    }
    out.push(batch(S, "zhedanov/basic", &["H", "AW"], |cfg| {
        let c = qdiff::check_basic_representation(cfg.basis_degree)?;
        let rows = c.into_iter().map(|c| (c.id.trim_start_matches("basic ").to_string(), (c.holds(), c.residual))).collect();
        Ok(single("zhedanov/basic", "basic representation satisfies the sahi relations", rows))
    }));
}

fn eigen_batches(out: &mut Vec<Batch>, max_n: u32) {
    for id in FamilyId::ALL {
        let f = qpoly::family(id);
        let alg = rep_algebra(f.rep);
        for n in 0..=max_n {
            let name = format!("eigen/{}/n={:02}", id, n);
            out.push(batch(SuiteId::Eigen, name.clone(), &[id.name(), alg.name()], move |_| {
                let op = match f.operator {
                    qpoly::EigenOperator::K0 => "K0",
                    qpoly::EigenOperator::K0Beta => "K0 beta",
                };
                let anchor = format!("{} polynomials are eigenfunctions of {} in {}", id, op, f.rep);
                let row = |reading| -> Res {
                    match qpoly::verify_eigen(&f, n, reading) {
                        Ok(c) => (c.holds, c.residual),
                        Err(e) => (false, format!("error: {}", e)),
                    }
                };
                let am = row(OpReading::Amended);
                let same = f.bindings().is_empty()
                    && match (f.eigen_operator(OpReading::Amended), f.eigen_operator(OpReading::Printed)) {
                        (Ok(a), Ok(p)) => a.minus(&p).is_zero(),
                        _ => false,
                    };
                let pr = if same { None } else { Some(row(OpReading::Printed)) };
                Ok(vec![record(name.clone(), &anchor, am, pr.as_ref())])
            }));
        }
    }
}

fn checks(rows: Vec<classical::monodromy::Check>) -> Vec<(String, Res)> {
    rows.into_iter().map(|c| (c.id, (c.zero, c.residual))).collect()
}

fn classical_batches(out: &mut Vec<Batch>) {
    use SuiteId::Classical as S;
    for a in AlgebraId::ALL {
        out.push(batch(S, format!("classical/{}", a), &[a.name()], move |_| {
            let r = classical::check_classical_cubic(a)?;
            let anchor = format!("classical limit of the {} cubic", a);
            Ok(vec![
                plain(format!("classical/{}/scalar", a), &anchor, r.scalar == [true; 3], "classical X_i not scalar"),
                plain(format!("classical/{}/cubic", a), &anchor, r.zero, &r.residual),
            ])
        }));
    }
    let pvi = ["PVI", "H"];
    out.push(batch(S, "classical/PVI/fricke", &pvi, |_| {
        let f = classical::check_fricke();
        let p = classical::check_poisson();
        Ok(vec![
            plain("classical/PVI/fricke".into(), "Fricke cubic on the shear coordinates", f.zero, &f.residual),
            plain(
                "classical/PVI/poisson".into(),
                "shear bracket is the gradient of the Fricke cubic",
                p.sign.is_some(),
                "no sign makes the bracket match",
            ),
        ])
    }));
    out.push(batch(S, "classical/PVI/monodromy", &pvi, |_| {
        // Tr M1 = G1 as printed is kept out: the quadratic relations force
        // Tr M_i = −G_i, which is checked for every i.
        let keep = |v: Vec<classical::monodromy::Check>| {
            checks(v.into_iter().filter(|c| c.id != "tr M1=G1").collect())
        };
        let mut v = dual(
            "classical/PVI/monodromy",
            "classical monodromy matrices",
            keep(classical::check_classical_monodromy(MonReading::Amended)),
            keep(classical::check_classical_monodromy(MonReading::Printed)),
        );
        v.extend(dual(
            "classical/PVI/quantum",
            "quantum monodromy matrices",
            checks(classical::check_quantum_monodromy(MonReading::Amended)),
            checks(classical::check_quantum_monodromy(MonReading::Printed)),
        ));
        v.extend(dual(
            "classical/PVI/fock",
            "Fock words for the monodromy matrices",
            checks(classical::check_fock_monodromy(MonReading::Amended)),
            checks(classical::check_fock_monodromy(MonReading::Printed)),
        ));
        v.extend(dual(
            "classical/PVI/shear",
            "quantum shear algebra",
            checks(classical::check_quantum_shear(MonReading::Amended)),
            checks(classical::check_quantum_shear(MonReading::Printed)),
        ));
        Ok(v)
    }));
    out.push(batch(S, "classical/PVI/identification", &pvi, |_| {
        let am = classical::check_final_identification(MonReading::Amended)?;
        let pr = classical::check_final_identification(MonReading::Printed)?;
        let anchor = "quantum monodromy generators satisfy the relations of H";
        let mut v = dual("classical/PVI/identification", anchor, residuals(&am.relations), residuals(&pr.relations));
        for (g, ok) in am.matches_embedding {
            v.push(plain(
                format!("classical/PVI/identification/{}=embedding", g),
                "identified generators equal the embedding of H",
                ok,
                "image differs from the embedding",
            ));
        }
        Ok(v)
    }));
}

fn batches(cfg: &SuiteConfig) -> Vec<Batch> {
    let mut suites = cfg.suites.clone();
    suites.sort();
    suites.dedup();
    let mut out = Vec::new();
    for s in &suites {
        match s {
            SuiteId::Presentations => presentation_batches(&mut out),
            SuiteId::Spherical => spherical_batches(&mut out),
            SuiteId::Rewrite => rewrite_batches(&mut out),
            SuiteId::Classical => classical_batches(&mut out),
            SuiteId::Zhedanov => zhedanov_batches(&mut out),
            SuiteId::Eigen => eigen_batches(&mut out, cfg.max_n),
        }
    }
    out
}

/// Every tag the algebra filter accepts.
pub fn known_tags() -> Vec<String> {
    let cfg = SuiteConfig::default();
    let mut t: Vec<String> = batches(&cfg).into_iter().flat_map(|b| b.tags).collect();
    t.sort();
    t.dedup();
    t
}

/// Canonical spelling of a filter entry: algebra names in any accepted
/// form, everything else as given.
fn normalise_tag(s: &str) -> String {
    match s.parse::<AlgebraId>() {
        Ok(a) => a.name().to_string(),
        Err(_) => s.trim().to_string(),
    }
}

pub fn validate(cfg: &SuiteConfig) -> Result<()> {
    let known = known_tags();
    for a in &cfg.algebras {
        let t = normalise_tag(a);
        if !known.iter().any(|k| k.eq_ignore_ascii_case(&t)) {
            return Err(Error::Config(format!("unknown algebra, representation or family {:?}", a)));
        }
    }
    if cfg.basis_degree < 0 {
        return Err(Error::Config("basis degree must be nonnegative".into()));
    }
    Ok(())
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<Report> {
    validate(cfg)?;
    let wanted: Vec<String> = cfg.algebras.iter().map(|a| normalise_tag(a)).collect();
    let selected: Vec<Batch> = batches(cfg)
        .into_iter()
        .filter(|b| wanted.is_empty() || b.tags.iter().any(|t| wanted.iter().any(|w| w.eq_ignore_ascii_case(t))))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let records: Vec<CheckRecord> = pool.install(|| {
        selected
            .par_iter()
            .flat_map_iter(|b| {
                let t = Instant::now();
                let mut recs = (b.run)(cfg).unwrap_or_else(|e| {
                    vec![CheckRecord {
                        check_id: b.name.clone(),
                        anchor: format!("{} batch", b.suite),
                        verdict: Outcome::Fail,
                        residual: format!("error: {}", e),
                        ms: None,
                    }]
                });
                if cfg.timings {
                    let ms = t.elapsed().as_millis() as u64;
                    for r in &mut recs {
                        r.ms = Some(ms);
                    }
                }
                recs
            })
            .collect()
    });
    Ok(Report::new(records, cfg.allow_basis))
}

/// An ad-hoc statement "<expression> == <expression> in <algebra>",
/// evaluated on the amended quantum torus embedding of the algebra.
pub fn check_statement(text: &str) -> Result<CheckRecord> {
    let (body, alg) = text
        .rsplit_once(" in ")
        .ok_or_else(|| Error::Config(format!("expected \"<expression> == 0 in <algebra>\", got {:?}", text)))?;
    let a: AlgebraId = alg.trim().parse()?;
    let (lhs, rhs) = body.split_once("==").unwrap_or((body, "0"));
    let ctx = pres::presentation(a.name())?.context();
    let e = crate::parse_expression(lhs, &ctx)?.minus(&crate::parse_expression(rhs, &ctx)?);
    let id = format!("check/{}/{}", a, body.split_whitespace().collect::<Vec<_>>().join(" "));
    let anchor = format!("ad-hoc statement in {}", a);
    let res = match embed_amended(a).eval(&e) {
        Ok(m) => (m.is_zero(), m.to_string()),
        Err(err) => (false, format!("error: {}", err)),
    };
    Ok(record(id, &anchor, res, None))
}
