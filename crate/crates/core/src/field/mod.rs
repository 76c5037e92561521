//! Exact coefficient field: Gaussian rationals extended by Laurent
//! polynomials in a fixed registry of commuting parameters.

mod gaussian;
mod monomial;
mod poly;
mod ratfun;

pub use gaussian::GaussianRational;
pub use monomial::{Monomial, Var, NVARS, REGISTRY};
pub use poly::Poly;
pub use ratfun::{normalize_factor, Factor, RationalFunction};

pub type RF = RationalFunction;

/// q^{1/2}.
pub fn sq() -> RF {
    RF::var(Var::Q)
}

/// q = Q².
pub fn q() -> RF {
    RF::var_pow(Var::Q, 2)
}

/// Q^e, i.e. q^{e/2}.
pub fn qh(e: i16) -> RF {
    RF::var_pow(Var::Q, e)
}

pub fn var(v: Var) -> RF {
    RF::var(v)
}

pub fn inv_var(v: Var) -> RF {
    RF::var_pow(v, -1)
}

/// The barred parameter v − v⁻¹.
pub fn bar(v: Var) -> RF {
    &RF::var(v) - &RF::var_pow(v, -1)
}

pub fn int(n: i64) -> RF {
    RF::int(n)
}

pub fn frac(n: i64, d: i64) -> RF {
    RF::frac(n, d)
}

pub fn i_unit() -> RF {
    RF::i()
}
