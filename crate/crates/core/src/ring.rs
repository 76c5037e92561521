//! Minimal ring interface shared by the coefficient field, the quantum
//! torus, 2×2 matrices, commutative Laurent polynomials and q-shift
//! operators, so that noncommutative expressions can be evaluated in any of
//! them.

use std::fmt;

use crate::field::RF;

pub trait Ring: Clone + Send + Sync + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Multiplication by a scalar of the coefficient field.
    fn scale(&self, c: &RF) -> Self;

    fn from_scalar(c: &RF) -> Self {
        Self::one().scale(c)
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }

    fn commutator(&self, o: &Self) -> Self {
        self.times(o).minus(&o.times(self))
    }
}

impl Ring for RF {
    fn zero() -> Self {
        RF::zero()
    }
    fn one() -> Self {
        RF::one()
    }
    fn is_zero(&self) -> bool {
        RF::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, c: &RF) -> Self {
        self * c
    }
}

/// 2×2 matrix over a ring, entries in row-major order.
#[derive(Clone, Debug)]
pub struct Mat2<R: Ring> {
    pub e: [[R; 2]; 2],
}

impl<R: Ring> Mat2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Mat2 { e: [[a, b], [c, d]] }
    }

    pub fn map<S: Ring, F: Fn(&R) -> S>(&self, f: F) -> Mat2<S> {
        Mat2::new(f(&self.e[0][0]), f(&self.e[0][1]), f(&self.e[1][0]), f(&self.e[1][1]))
    }

    pub fn try_map<S: Ring, E, F: Fn(&R) -> Result<S, E>>(&self, f: F) -> Result<Mat2<S>, E> {
        Ok(Mat2::new(f(&self.e[0][0])?, f(&self.e[0][1])?, f(&self.e[1][0])?, f(&self.e[1][1])?))
    }

    pub fn entry(&self, r: usize, c: usize) -> &R {
        &self.e[r][c]
    }

    /// Left-scalar matrix `r·𝟙` for a ring element `r`.
    pub fn diag(r: R) -> Self {
        Mat2::new(r.clone(), R::zero(), R::zero(), r)
    }

    /// The scalar `s` when the matrix equals `s·𝟙`.
    pub fn as_scalar(&self) -> Option<R> {
        if self.e[0][1].is_zero()
            && self.e[1][0].is_zero()
            && self.e[0][0].minus(&self.e[1][1]).is_zero()
        {
            Some(self.e[0][0].clone())
        } else {
            None
        }
    }

    /// `a·d − b·c` with the entries' order preserved (meaningful for
    /// commutative entries).
    pub fn det(&self) -> R {
        self.e[0][0].times(&self.e[1][1]).minus(&self.e[0][1].times(&self.e[1][0]))
    }

    pub fn trace(&self) -> R {
        self.e[0][0].plus(&self.e[1][1])
    }
}

impl<R: Ring> Ring for Mat2<R> {
    fn zero() -> Self {
        Mat2::new(R::zero(), R::zero(), R::zero(), R::zero())
    }
    fn one() -> Self {
        Mat2::new(R::one(), R::zero(), R::zero(), R::one())
    }
    fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(|x| x.is_zero())
    }
    fn plus(&self, o: &Self) -> Self {
        Mat2::new(
            self.e[0][0].plus(&o.e[0][0]),
            self.e[0][1].plus(&o.e[0][1]),
            self.e[1][0].plus(&o.e[1][0]),
            self.e[1][1].plus(&o.e[1][1]),
        )
    }
    fn minus(&self, o: &Self) -> Self {
        Mat2::new(
            self.e[0][0].minus(&o.e[0][0]),
            self.e[0][1].minus(&o.e[0][1]),
            self.e[1][0].minus(&o.e[1][0]),
            self.e[1][1].minus(&o.e[1][1]),
        )
    }
    fn times(&self, o: &Self) -> Self {
        let m = |i: usize, j: usize| {
            self.e[i][0].times(&o.e[0][j]).plus(&self.e[i][1].times(&o.e[1][j]))
        };
        Mat2::new(m(0, 0), m(0, 1), m(1, 0), m(1, 1))
    }
    fn negate(&self) -> Self {
        self.map(|x| x.negate())
    }
    fn scale(&self, c: &RF) -> Self {
        self.map(|x| x.scale(c))
    }
}

impl<R: Ring> fmt::Display for Mat2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1]
        )
    }
}
