//! Shear coordinates on the 4-holed sphere: Fock matrices, the geodesic
//! length functions G_ij, the Fricke cubic and the Poisson bracket of the
//! s_i.

use serde::Serialize;

use crate::qtorus::omega;
use crate::ring::{Mat2, Ring};
use crate::RF;

use super::{CommLaurent, Exp6};

pub type LMat = Mat2<CommLaurent>;

fn c(n: i64) -> CommLaurent {
    CommLaurent::scalar(RF::int(n))
}

/// e^{a·s + b·p} with integer exponents.
pub fn ex(s: [i32; 3], p: [i32; 3]) -> CommLaurent {
    CommLaurent::exp_int(s, p)
}

/// G_i = e^{p_i/2} + e^{−p_i/2}, i = 1, 2, 3.
pub fn g(i: usize) -> CommLaurent {
    let mut up: Exp6 = [0; 6];
    let mut down: Exp6 = [0; 6];
    up[2 + i] = 1;
    down[2 + i] = -1;
    CommLaurent::exp_half(up).plus(&CommLaurent::exp_half(down))
}

/// G_∞ = e^{s1+s2+s3} + e^{−s1−s2−s3}.
pub fn g_inf() -> CommLaurent {
    ex([1, 1, 1], [0; 3]).plus(&ex([-1, -1, -1], [0; 3]))
}

pub fn right() -> LMat {
    Mat2::new(c(1), c(1), c(-1), c(0))
}

pub fn left() -> LMat {
    Mat2::new(c(0), c(1), c(-1), c(-1))
}

/// Edge matrix for the coordinate in slot `slot` (0..3 for s_i, 3..6 for
/// p_i).
pub fn edge(slot: usize) -> LMat {
    let mut up: Exp6 = [0; 6];
    let mut down: Exp6 = [0; 6];
    up[slot] = 1;
    down[slot] = -1;
    Mat2::new(c(0), CommLaurent::exp_half(up).negate(), CommLaurent::exp_half(down), c(0))
}

/// Letters of a Fock word.
#[derive(Clone, Copy, Debug)]
pub enum F {
    R,
    L,
    S(usize),
    P(usize),
}

pub fn fock_word(w: &[F]) -> LMat {
    w.iter().fold(LMat::one(), |acc, l| {
        let m = match l {
            F::R => right(),
            F::L => left(),
            F::S(i) => edge(i - 1),
            F::P(i) => edge(2 + i),
        };
        acc.times(&m)
    })
}

use F::{L, P, R, S};

/// The words whose negated traces give G23, G31, G12. The last letter of
/// the G31 word is printed as X_{s1}; it is read as E_{s1}.
pub fn trace_words() -> [(&'static str, Vec<F>); 3] {
    [
        ("G23", vec![R, S(2), R, P(2), R, S(2), R, S(3), R, P(3), R, S(3), R]),
        ("G31", vec![L, S(3), R, P(3), R, S(3), R, S(1), R, P(1), R, S(1)]),
        ("G12", vec![S(1), R, P(1), R, S(1), R, S(2), R, P(2), R, S(2), L]),
    ]
}

/// G23, G31, G12 in closed form, in the shifted coordinates.
pub fn g_closed() -> [CommLaurent; 3] {
    let z = [0; 3];
    let g23 = [ex([0, 1, 1], z), ex([0, -1, -1], z), ex([0, -1, 1], z)]
        .iter()
        .fold(CommLaurent::zero(), |a, b| a.minus(b))
        .minus(&g(2).times(&ex([0, 0, 1], z)))
        .minus(&g(3).times(&ex([0, -1, 0], z)));
    let g31 = [ex([1, 0, 1], z), ex([-1, 0, -1], z), ex([1, 0, -1], z)]
        .iter()
        .fold(CommLaurent::zero(), |a, b| a.minus(b))
        .minus(&g(3).times(&ex([1, 0, 0], z)))
        .minus(&g(1).times(&ex([0, 0, -1], z)));
    let g12 = [ex([1, 1, 0], z), ex([-1, -1, 0], z), ex([-1, 1, 0], z)]
        .iter()
        .fold(CommLaurent::zero(), |a, b| a.minus(b))
        .minus(&g(1).times(&ex([0, 1, 0], z)))
        .minus(&g(2).times(&ex([-1, 0, 0], z)));
    [g23, g31, g12]
}

/// ω1, ω2, ω3 with ω_k = G_i G_j + G_k G_∞ ({i, j, k} = {1, 2, 3}), and
/// ω_∞ = G1² + G2² + G3² + G∞² + G1G2G3G∞ − 4.
pub fn omegas() -> [CommLaurent; 4] {
    let gi = g_inf();
    let w = |i: usize, j: usize, k: usize| g(i).times(&g(j)).plus(&g(k).times(&gi));
    let winf = (1..=3)
        .map(|i| g(i).times(&g(i)))
        .fold(gi.times(&gi), |a, b| a.plus(&b))
        .plus(&g(1).times(&g(2)).times(&g(3)).times(&gi))
        .minus(&c(4));
    [w(2, 3, 1), w(3, 1, 2), w(1, 2, 3), winf]
}

/// φ(x1, x2, x3) = x1² + x2² + x3² + x1x2x3 − ω1x1 − ω2x2 − ω3x3 + ω∞.
pub fn fricke(x: &[CommLaurent; 3]) -> CommLaurent {
    let [w1, w2, w3, wi] = omegas();
    x.iter()
        .map(|v| v.times(v))
        .fold(x[0].times(&x[1]).times(&x[2]), |a, b| a.plus(&b))
        .minus(&w1.times(&x[0]))
        .minus(&w2.times(&x[1]))
        .minus(&w3.times(&x[2]))
        .plus(&wi)
}

/// Shift s_i → s_i + t·p_i/2 with t = ±1. Needs every s-exponent to be an
/// integer.
pub fn shift(f: &CommLaurent, t: i32) -> Option<CommLaurent> {
    let mut out = CommLaurent::zero();
    for (e, k) in f.terms() {
        let mut n = *e;
        for i in 0..3 {
            if e[i] % 2 != 0 {
                return None;
            }
            n[3 + i] += t * e[i] / 2;
        }
        out = out.plus(&CommLaurent::mono(k.clone(), n));
    }
    Some(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct FrickeReport {
    /// Fricke cubic on the closed forms.
    pub residual: String,
    pub zero: bool,
    /// Per G_ij: whether −tr(word) matches the closed form unshifted, and
    /// after s_i → s_i + p_i/2 or s_i → s_i − p_i/2.
    pub traces: Vec<TraceMatch>,
    /// The Fricke cubic at s_i = p_i = 0.
    pub origin: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceMatch {
    pub id: &'static str,
    pub unshifted: bool,
    pub plus_half_p: bool,
    pub minus_half_p: bool,
}

pub fn check_fricke() -> FrickeReport {
    let x = g_closed();
    let r = fricke(&x);
    let traces = trace_words()
        .into_iter()
        .zip(x.iter())
        .map(|((id, w), closed)| {
            let tr = fock_word(&w).trace().negate();
            let same = |t: i32| shift(&tr, t).is_some_and(|s| s.minus(closed).is_zero());
            TraceMatch { id, unshifted: tr.minus(closed).is_zero(), plus_half_p: same(1), minus_half_p: same(-1) }
        })
        .collect();
    FrickeReport { residual: r.to_string(), zero: r.is_zero(), traces, origin: r.at_origin().to_string() }
}

/// {e^{a·s}, e^{b·s}} = ω(a, b) e^{(a+b)·s}, p inert, extended bilinearly.
pub fn poisson_bracket(f: &CommLaurent, h: &CommLaurent) -> CommLaurent {
    let mut out = CommLaurent::zero();
    for (a, x) in f.terms() {
        for (b, y) in h.terms() {
            // doubled exponents: ω scales by 4
            let w = omega(&[a[0], a[1], a[2]], &[b[0], b[1], b[2]]);
            if w == 0 {
                continue;
            }
            let mut e = [0; 6];
            for k in 0..6 {
                e[k] = a[k] + b[k];
            }
            let coeff = &(x * y) * &RF::frac(w as i64, 4);
            out = out.plus(&CommLaurent::mono(coeff, e));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct PoissonReport {
    /// ε such that {x_i, x_{i+1}} = ε ∂φ/∂x_{i+2} for all cyclic i, if it
    /// exists.
    pub sign: Option<i64>,
    pub checks: Vec<(String, bool)>,
}

/// Compare the bracket of x1 = G23, x2 = G31, x3 = G12 with the gradient of
/// the Fricke cubic.
pub fn check_poisson() -> PoissonReport {
    let x = g_closed();
    let [w1, w2, w3, _] = omegas();
    let w = [w1, w2, w3];
    // ∂φ/∂x_k = 2x_k + x_i x_j − ω_k
    let grad = |k: usize| {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        x[k].scale(&RF::int(2)).plus(&x[i].times(&x[j])).minus(&w[k])
    };
    let mut checks = Vec::new();
    let mut sign = None;
    for eps in [1i64, -1] {
        let ok: Vec<(String, bool)> = (0..3)
            .map(|i| {
                let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                let lhs = poisson_bracket(&x[i], &x[j]);
                let holds = lhs.minus(&grad(k).scale(&RF::int(eps))).is_zero();
                (format!("{{x{},x{}}} = {}dphi/dx{}", i + 1, j + 1, if eps < 0 { "-" } else { "" }, k + 1), holds)
            })
            .collect();
        if ok.iter().all(|(_, h)| *h) {
            sign = Some(eps);
            checks = ok;
            break;
        }
        if eps == 1 {
            checks = ok;
        }
    }
    PoissonReport { sign, checks }
}
