use alloc::format;
use core::fmt;

use num_traits::{One, Zero};

use super::laurent::pow_rat;
use super::{Field, LaurentQ, Poly, Rat};

/// A rational function in `q`, stored as `q^shift * num / den` with `num` and
/// `den` coprime, not divisible by `q`, and `den` monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    shift: i64,
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn q() -> Self {
        RatFunc { shift: 1, num: Poly::one(), den: Poly::one() }
    }

    pub fn q_pow(e: i64) -> Self {
        RatFunc { shift: e, num: Poly::one(), den: Poly::one() }
    }

    pub fn from_laurent(l: &LaurentQ) -> Self {
        match l.min_exp() {
            None => Self::zero(),
            Some(lo) => {
                let hi = l.max_exp().unwrap();
                let c = (lo..=hi).map(|e| l.coeff(e)).collect();
                Self::normalized(lo, Poly::from_coeffs(c), Poly::one())
            }
        }
    }

    /// Back to a Laurent polynomial when the denominator is trivial.
    pub fn to_laurent(&self) -> Option<LaurentQ> {
        if !self.den.is_one() {
            return None;
        }
        Some(LaurentQ::from_terms(
            self.num.coeffs().iter().enumerate().map(|(k, c)| (self.shift + k as i64, c.clone())),
        ))
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        assert!(!Zero::is_zero(x), "evaluation at zero");
        let d = self.den.eval(x);
        if Zero::is_zero(&d) {
            return None;
        }
        Some(pow_rat(x, self.shift) * self.num.eval(x) / d)
    }

    fn normalized(shift: i64, num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        assert!(!den.is_zero(), "zero denominator");
        let vn = num.valuation();
        let vd = den.valuation();
        let mut num = num.unshift(vn);
        let mut den = den.unshift(vd);
        let shift = shift + vn as i64 - vd as i64;
        if den.degree() != Some(0) {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.divrem(&g).0;
                den = den.divrem(&g).0;
            }
        }
        let l = den.lead().unwrap().clone();
        if !One::is_one(&l) {
            let li = l.recip();
            num = num.scale(&li);
            den = den.scale(&li);
        }
        RatFunc { shift, num, den }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc { shift: 0, num: Poly::zero(), den: Poly::one() }
    }
    fn one() -> Self {
        RatFunc { shift: 0, num: Poly::one(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let m = self.shift.min(o.shift);
        let a = (self.shift - m) as usize;
        let b = (o.shift - m) as usize;
        if self.den == o.den {
            let n = self.num.shift(a).add(&o.num.shift(b));
            return Self::normalized(m, n, self.den.clone());
        }
        let n = self.num.mul(&o.den).shift(a).add(&o.num.mul(&self.den).shift(b));
        Self::normalized(m, n, self.den.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let shift = self.shift + o.shift;
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { shift, num: self.num.mul(&o.num), den: Poly::one() };
        }
        Self::normalized(shift, self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn neg(&self) -> Self {
        RatFunc { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::normalized(-self.shift, self.den.clone(), self.num.clone())
    }
    fn from_rat(r: &Rat) -> Self {
        Self::normalized(0, Poly::constant(r.clone()), Poly::one())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.to_laurent() {
            return write!(f, "{l}");
        }
        let n = RatFunc { shift: self.shift, num: self.num.clone(), den: Poly::one() };
        let d = RatFunc { shift: 0, num: self.den.clone(), den: Poly::one() };
        let l = |x: &RatFunc| format!("{}", x.to_laurent().unwrap());
        write!(f, "({})/({})", l(&n), l(&d))
    }
}

impl RatFunc {
    pub fn numerator_is_one(&self) -> bool {
        self.num.is_one()
    }

    pub fn constant_term_value(&self) -> Option<Rat> {
        if self.shift == 0 && self.den.is_one() && self.num.degree() == Some(0) {
            Some(self.num.coeffs()[0].clone())
        } else if self.is_zero() {
            Some(<Rat as Zero>::zero())
        } else {
            None
        }
    }

    pub fn is_one_value(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qint, rat, ratio, QParam};
    use alloc::string::ToString;

    #[test]
    fn field_laws_on_samples() {
        let q = RatFunc::q();
        let one = RatFunc::one();
        let a = q.sub(&q.inv()); // q - q^-1
        let b = q.add(&one);
        let c = a.div(&b);
        assert_eq!(c.mul(&b), a);
        assert_eq!(c.to_string(), "1 - q^-1");
        assert_eq!(a.div(&a), one);
        let x = one.div(&a);
        assert!(!x.is_laurent());
        assert_eq!(x.mul(&a), one);
        assert_eq!(x.eval(&rat(2)), Some(ratio(2, 3)));
    }

    #[test]
    fn powers_and_qints() {
        let qp = QParam::new(RatFunc::q());
        assert_eq!(qp.pow(-3), RatFunc::q_pow(-3));
        assert_eq!(qp.qint(3, 2), RatFunc::from_laurent(&qint(3, 2).unwrap()));
        let f = qp.qfact(3, 1);
        assert_eq!(f.to_laurent().unwrap().to_string(), "q^3 + 2*q + 2*q^-1 + q^-3");
    }
}
