use num_bigint::{BigInt, Sign};
use num_integer::Integer;

use super::{Field, Rat};

/// Integers modulo the Mersenne prime `2^61 - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp(u64);

pub const FP_MODULUS: u64 = (1u64 << 61) - 1;

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp(v % FP_MODULUS)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn reduce(x: u128) -> u64 {
        let p = FP_MODULUS as u128;
        let lo = x & p;
        let hi = x >> 61;
        let mut s = lo + hi;
        while s >= p {
            s -= p;
        }
        s as u64
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut b = self;
        let mut r = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                r = Field::mul(&r, &b);
            }
            b = Field::mul(&b, &b);
            e >>= 1;
        }
        r
    }

    fn from_bigint(n: &BigInt) -> Self {
        let m = BigInt::from(FP_MODULUS);
        let r = n.mod_floor(&m);
        let (_, digits) = r.to_u64_digits();
        Fp(digits.first().copied().unwrap_or(0))
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= FP_MODULUS { s - FP_MODULUS } else { s })
    }
    fn sub(&self, o: &Self) -> Self {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + FP_MODULUS - o.0 })
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(Self::reduce(self.0 as u128 * o.0 as u128))
    }
    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { FP_MODULUS - self.0 })
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(FP_MODULUS - 2)
    }
    fn from_rat(r: &Rat) -> Self {
        let n = Self::from_bigint(r.numer());
        let d = Self::from_bigint(r.denom());
        debug_assert!(r.denom().sign() == Sign::Plus);
        n.div(&d)
    }
}
