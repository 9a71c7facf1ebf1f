use alloc::vec::Vec;
use core::fmt::Debug;

use num_traits::{One, Zero};

use super::Rat;

/// A commutative field with exact operations.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn from_rat(r: &Rat) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rat(&super::rat(n))
    }
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }
    fn sub_assign(&mut self, other: &Self) {
        *self = self.sub(other);
    }
    fn mul_assign(&mut self, other: &Self) {
        *self = self.mul(other);
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul_assign(&mut self, other: &Self) {
        *self *= other;
    }
}

/// A field together with a distinguished invertible element `q`.
#[derive(Clone, Debug)]
pub struct QParam<F> {
    q: F,
    pos: Vec<F>,
    neg: Vec<F>,
}

const CACHED_POWERS: usize = 48;

impl<F: Field> QParam<F> {
    pub fn new(q: F) -> Self {
        assert!(!q.is_zero(), "q must be invertible");
        let qi = q.inv();
        let mut pos = Vec::with_capacity(CACHED_POWERS);
        let mut neg = Vec::with_capacity(CACHED_POWERS);
        let (mut a, mut b) = (F::one(), F::one());
        for _ in 0..CACHED_POWERS {
            pos.push(a.clone());
            neg.push(b.clone());
            a = a.mul(&q);
            b = b.mul(&qi);
        }
        QParam { q, pos, neg }
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    /// `q^n`.
    pub fn pow(&self, n: i64) -> F {
        let m = n.unsigned_abs() as usize;
        let table = if n >= 0 { &self.pos } else { &self.neg };
        if m < CACHED_POWERS {
            return table[m].clone();
        }
        let mut r = table[CACHED_POWERS - 1].clone();
        for _ in (CACHED_POWERS - 1)..m {
            r = r.mul(&table[1]);
        }
        r
    }

    /// Quantum integer `[n]_{q^d}`.
    pub fn qint(&self, n: u32, d: i64) -> F {
        let n = n as i64;
        let mut s = F::zero();
        for k in 0..n {
            s.add_assign(&self.pow(d * (n - 1 - 2 * k)));
        }
        s
    }

    /// Quantum factorial `[n]_{q^d}!`.
    pub fn qfact(&self, n: u32, d: i64) -> F {
        let mut p = F::one();
        for k in 1..=n {
            p.mul_assign(&self.qint(k, d));
        }
        p
    }
}
