use std::fmt;

/// Number of slots in the parameter registry.
pub const NVARS: usize = 16;

/// Fixed parameter registry. The position in this list defines the
/// lexicographic monomial order. `Q` stands for q^{1/2}; `P1..P3` stand for
/// e^{p_i/2}.
pub const REGISTRY: [&str; NVARS] = [
    "Q", "k0", "k1", "u0", "u1", "a", "b", "c", "d", "lam", "x", "P1", "P2", "P3", "eps_s1",
    "eps_p1",
];

/// Index of a registry parameter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(pub u8);

impl Var {
    pub const Q: Var = Var(0);
    pub const K0: Var = Var(1);
    pub const K1: Var = Var(2);
    pub const U0: Var = Var(3);
    pub const U1: Var = Var(4);
    pub const A: Var = Var(5);
    pub const B: Var = Var(6);
    pub const C: Var = Var(7);
    pub const D: Var = Var(8);
    pub const LAM: Var = Var(9);
    pub const X: Var = Var(10);
    pub const P1: Var = Var(11);
    pub const P2: Var = Var(12);
    pub const P3: Var = Var(13);

    pub fn lookup(name: &str) -> Option<Var> {
        REGISTRY.iter().position(|n| *n == name).map(|i| Var(i as u8))
    }

    pub fn name(self) -> &'static str {
        REGISTRY[self.0 as usize]
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A Laurent monomial in the registry parameters.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(pub [i16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, e: i16) -> Self {
        let mut m = Self::one();
        m.0[v.index()] = e;
        m
    }

    pub fn exp(&self, v: Var) -> i16 {
        self.0[v.index()]
    }

    pub fn with(mut self, v: Var, e: i16) -> Self {
        self.0[v.index()] = e;
        self
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = [0i16; NVARS];
        for (k, slot) in r.iter_mut().enumerate() {
            *slot = self.0[k] + o.0[k];
        }
        Monomial(r)
    }

    pub fn div(&self, o: &Self) -> Self {
        let mut r = [0i16; NVARS];
        for (k, slot) in r.iter_mut().enumerate() {
            *slot = self.0[k] - o.0[k];
        }
        Monomial(r)
    }

    pub fn inv(&self) -> Self {
        let mut r = self.0;
        for e in r.iter_mut() {
            *e = -*e;
        }
        Monomial(r)
    }

    pub fn pow(&self, k: i16) -> Self {
        let mut r = self.0;
        for e in r.iter_mut() {
            *e *= k;
        }
        Monomial(r)
    }

    /// Componentwise `self >= o`.
    pub fn divisible_by(&self, o: &Self) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a >= b)
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut r = [0i16; NVARS];
        for (k, slot) in r.iter_mut().enumerate() {
            *slot = self.0[k].min(o.0[k]);
        }
        Monomial(r)
    }

    pub fn lcm(&self, o: &Self) -> Self {
        let mut r = [0i16; NVARS];
        for (k, slot) in r.iter_mut().enumerate() {
            *slot = self.0[k].max(o.0[k]);
        }
        Monomial(r)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, i16)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(k, &e)| (Var(k as u8), e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in self.vars() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}
