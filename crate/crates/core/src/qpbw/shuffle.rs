//! The quantum shuffle embedding of the negative half. Words are mapped to
//! iterated twisted shuffles of their letters; the kernel of this map on
//! free words is exactly the ideal generated by the quantum Serre relations.

use alloc::vec::Vec;

use hashbrown::HashMap;

use super::algebra::{QElem, Word};
use crate::exact::{Field, QParam};
use crate::roots::RootSystem;

/// A word of at most 16 letters (each `< 15`) packed into nibbles, first
/// letter lowest.
pub type Packed = u64;

pub fn pack(w: &[u8]) -> Packed {
    assert!(w.len() <= 16, "word too long to pack");
    w.iter().enumerate().fold(0u64, |acc, (k, &l)| acc | ((l as u64 + 1) << (4 * k)))
}

pub fn unpack(mut p: Packed) -> Word {
    let mut w = Word::new();
    while p != 0 {
        w.push(((p & 15) - 1) as u8);
        p >>= 4;
    }
    w
}

/// Element of the shuffle algebra: packed word -> coefficient.
#[derive(Clone, Debug, Default)]
pub struct ShVec<F> {
    pub terms: HashMap<Packed, F>,
}

impl<F: Field> ShVec<F> {
    pub fn zero() -> Self {
        ShVec { terms: HashMap::new() }
    }

    pub fn unit() -> Self {
        let mut t = HashMap::new();
        t.insert(0, F::one());
        ShVec { terms: t }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Packed, c: F) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_insert_with(F::zero);
        slot.add_assign(&c);
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, o: &Self, c: &F) {
        for (w, a) in &o.terms {
            self.add_term(*w, a.mul(c));
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut r = Self::zero();
        r.add_scaled(self, c);
        r
    }

    /// Coefficients in a sorted word order.
    pub fn sorted(&self) -> Vec<(Packed, F)> {
        let mut v: Vec<(Packed, F)> = self.terms.iter().map(|(w, c)| (*w, c.clone())).collect();
        v.sort_by_key(|(w, _)| *w);
        v
    }
}

impl<F: Field> PartialEq for ShVec<F> {
    fn eq(&self, o: &Self) -> bool {
        self.terms.len() == o.terms.len() && self.terms.iter().all(|(w, c)| o.terms.get(w) == Some(c))
    }
}

/// Twisted shuffle product `u * v = u_1 (u' * v) + q^{-(|u|, alpha_{v_1})} v_1 (u * v')`.
pub struct Shuffler<'a, F> {
    gram: Vec<Vec<i64>>,
    qp: &'a QParam<F>,
}

impl<'a, F: Field> Shuffler<'a, F> {
    pub fn new(rs: &RootSystem, qp: &'a QParam<F>) -> Self {
        Shuffler { gram: rs.gram.clone(), qp }
    }

    /// All shuffles of `u` and `v` with their `q`-exponents.
    pub fn shuffles(&self, u: &[u8], v: &[u8]) -> Vec<(Packed, i64)> {
        let a = u.len();
        let r = self.gram.len();
        // suffix pairings: suf[i][y] = sum_{x in u[i..]} (alpha_x, alpha_y)
        let mut suf = alloc::vec![alloc::vec![0i64; r]; a + 1];
        for i in (0..a).rev() {
            for y in 0..r {
                suf[i][y] = suf[i + 1][y] + self.gram[u[i] as usize][y];
            }
        }
        let mut out = Vec::new();
        self.rec(u, v, 0, 0, 0, 0, &suf, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(&self, u: &[u8], v: &[u8], i: usize, j: usize, word: Packed, e: i64, suf: &[Vec<i64>], out: &mut Vec<(Packed, i64)>) {
        let pos = 4 * (i + j);
        if i == u.len() && j == v.len() {
            out.push((word, e));
            return;
        }
        if i < u.len() {
            self.rec(u, v, i + 1, j, word | ((u[i] as u64 + 1) << pos), e, suf, out);
        }
        if j < v.len() {
            let y = v[j] as usize;
            self.rec(u, v, i, j + 1, word | ((y as u64 + 1) << pos), e - suf[i][y], suf, out);
        }
    }

    pub fn star(&self, x: &ShVec<F>, y: &ShVec<F>) -> ShVec<F> {
        let mut out = ShVec::zero();
        for (u, cu) in &x.terms {
            let uw = unpack(*u);
            for (v, cv) in &y.terms {
                let vw = unpack(*v);
                let c = cu.mul(cv);
                for (w, e) in self.shuffles(&uw, &vw) {
                    out.add_term(w, c.mul(&self.qp.pow(e)));
                }
            }
        }
        out
    }

    /// `Phi(F_{w_1} ... F_{w_h}) = [w_1] * ... * [w_h]`.
    pub fn phi_word(&self, w: &[u8]) -> ShVec<F> {
        let mut acc = ShVec::<F>::unit();
        for &l in w {
            let mut next = ShVec::zero();
            for (u, c) in &acc.terms {
                let uw = unpack(*u);
                for (p, e) in self.shuffles(&uw, &[l]) {
                    next.add_term(p, c.mul(&self.qp.pow(e)));
                }
            }
            acc = next;
        }
        acc
    }

    /// Image of the F-part of `x`.
    pub fn phi(&self, x: &QElem<F>) -> ShVec<F> {
        let mut out = ShVec::zero();
        for (w, c) in x.f_words() {
            out.add_scaled(&self.phi_word(w), c);
        }
        out
    }
}
