use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::{rat, Rat};
use crate::{Error, Result};

/// A Laurent polynomial in `q` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentQ {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rat::one(), 0)
    }

    pub fn monomial(c: Rat, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentQ { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(Rat::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(it: I) -> Self {
        let mut r = LaurentQ::zero();
        for (e, c) in it {
            r.add_term(e, &c);
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Rat {
        self.terms.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((c, e))` if this is the single term `c q^e`.
    pub fn as_monomial(&self) -> Option<(Rat, i64)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, e: i64, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        LaurentQ { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = LaurentQ::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(e1 + e2, &(c1 * c2));
            }
        }
        r
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return LaurentQ::zero();
        }
        LaurentQ { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentQ { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Substitute `q -> q^d`.
    pub fn substitute_power(&self, d: i64) -> Self {
        LaurentQ::from_terms(self.terms.iter().map(|(e, c)| (e * d, c.clone())))
    }

    /// Value at a nonzero rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        assert!(!x.is_zero(), "evaluation at zero");
        let mut s = Rat::zero();
        for (e, c) in &self.terms {
            s += c * pow_rat(x, *e);
        }
        s
    }
}

pub(crate) fn pow_rat(x: &Rat, e: i64) -> Rat {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut r = Rat::one();
    for _ in 0..e.unsigned_abs() {
        r *= &base;
    }
    r
}

/// Quantum integer `[n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})`.
pub fn qint(n: i64, d: i64) -> Result<LaurentQ> {
    if n < 0 {
        return Err(Error::InvalidArgument(alloc::format!("qint: n = {n} is negative")));
    }
    if d <= 0 {
        return Err(Error::InvalidArgument(alloc::format!("qint: d = {d} is not positive")));
    }
    Ok(LaurentQ::from_terms((0..n).map(|k| (d * (n - 1 - 2 * k), rat(1)))))
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = a.is_one();
            if !unit || *e == 0 {
                out.push_str(&alloc::format!("{a}"));
            }
            if *e != 0 {
                if !unit {
                    out.push('*');
                }
                if *e == 1 {
                    out.push('q');
                } else {
                    out.push_str(&alloc::format!("q^{e}"));
                }
            }
        }
        f.write_str(&out)
    }
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::exact::ratio;
    use proptest::prelude::*;

    fn laurent() -> impl Strategy<Value = LaurentQ> {
        proptest::collection::vec((-4i64..=4, -5i64..=5), 0..5)
            .prop_map(|v| LaurentQ::from_terms(v.into_iter().map(|(e, c)| (e, rat(c)))))
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_homomorphism(a in laurent(), b in laurent(), n in 1i64..20, d in 1i64..20, neg in any::<bool>()) {
            let x = ratio(if neg { -n } else { n }, d);
            prop_assert_eq!(a.mul(&b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!(a.add(&b).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
