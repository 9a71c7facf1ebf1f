use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::exact::{Field, QParam};
use crate::roots::RootSystem;

/// A word in the `F_i` (or `E_i`) generators, 0-based letters.
pub type Word = Vec<u8>;

/// A letter of a word in the generators of the quantum group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    F(u8),
    E(u8),
    /// `K_i^{+1}` or `K_i^{-1}`.
    K(u8, bool),
}

/// A word in `F_i`, `E_i`, `K_i^{±1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QWord {
    pub letters: Vec<Letter>,
}

impl QWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        QWord { letters }
    }

    /// Weight in the simple-root basis.
    pub fn weight(&self, n: usize) -> Vec<i64> {
        let mut w = vec![0; n];
        for l in &self.letters {
            match *l {
                Letter::F(i) => w[i as usize] -= 1,
                Letter::E(i) => w[i as usize] += 1,
                Letter::K(..) => {}
            }
        }
        w
    }
}

/// A normal-ordered monomial `F_f E_e K^k` with `k` in the root lattice
/// (`K^{alpha_i} = K_i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub f: Word,
    pub e: Word,
    pub k: Vec<i32>,
}

impl Term {
    pub fn unit(n: usize) -> Self {
        Term { f: Vec::new(), e: Vec::new(), k: vec![0; n] }
    }

    pub fn f_word(f: Word, n: usize) -> Self {
        Term { f, e: Vec::new(), k: vec![0; n] }
    }

    pub fn is_pure_f(&self) -> bool {
        self.e.is_empty() && self.k.iter().all(|&x| x == 0)
    }

    pub fn weight(&self, n: usize) -> Vec<i64> {
        let mut w = vec![0; n];
        for &i in &self.f {
            w[i as usize] -= 1;
        }
        for &i in &self.e {
            w[i as usize] += 1;
        }
        w
    }
}

/// A finite linear combination of normal-ordered monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct QElem<F> {
    n: usize,
    terms: BTreeMap<Term, F>,
}

impl<F: Field> QElem<F> {
    pub fn zero(n: usize) -> Self {
        QElem { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::from_term(Term::unit(n), F::one())
    }

    pub fn from_term(t: Term, c: F) -> Self {
        let n = t.k.len();
        let mut e = Self::zero(n);
        e.add_term(t, c);
        e
    }

    /// An element of the negative half given by free F-words.
    pub fn from_f_words<I: IntoIterator<Item = (Word, F)>>(n: usize, it: I) -> Self {
        let mut e = Self::zero(n);
        for (w, c) in it {
            e.add_term(Term::f_word(w, n), c);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Term) -> F {
        self.terms.get(t).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, t: Term, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&t) {
            Some(v) => {
                v.add_assign(&c);
                if v.is_zero() {
                    self.terms.remove(&t);
                }
            }
            None => {
                self.terms.insert(t, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (t, c) in &o.terms {
            r.add_term(t.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        QElem { n: self.n, terms: self.terms.iter().map(|(t, a)| (t.clone(), a.mul(c))).collect() }
    }

    /// The common weight of all terms, if homogeneous.
    pub fn weight(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys().map(|t| t.weight(self.n));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.weight().is_some()
    }

    /// True if every term is a pure F-word.
    pub fn is_pure_f(&self) -> bool {
        self.terms.keys().all(Term::is_pure_f)
    }

    /// The component with no E-letters and trivial K-part.
    pub fn f_part(&self) -> Self {
        QElem { n: self.n, terms: self.terms.iter().filter(|(t, _)| t.is_pure_f()).map(|(t, c)| (t.clone(), c.clone())).collect() }
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> QElem<G> {
        let mut r = QElem::zero(self.n);
        for (t, c) in &self.terms {
            r.add_term(t.clone(), f(c));
        }
        r
    }

    /// F-word part as a map word -> coefficient.
    pub fn f_words(&self) -> impl Iterator<Item = (&Word, &F)> {
        self.terms.iter().filter(|(t, _)| t.is_pure_f()).map(|(t, c)| (&t.f, c))
    }
}

/// Normal ordering in the algebra generated by `E_i, F_i, K_i^{±1}` subject
/// only to the K-commutation and E-F commutation relations.
pub struct QAlgebra<'a, F> {
    rs: &'a RootSystem,
    qp: &'a QParam<F>,
    /// `1 / (q_i - q_i^{-1})`.
    inv_bracket: Vec<F>,
}

impl<'a, F: Field> QAlgebra<'a, F> {
    pub fn new(rs: &'a RootSystem, qp: &'a QParam<F>) -> Self {
        let inv_bracket = rs.sym.iter().map(|&d| qp.pow(d).sub(&qp.pow(-d)).inv()).collect();
        QAlgebra { rs, qp, inv_bracket }
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn qparam(&self) -> &QParam<F> {
        self.qp
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    fn pair(&self, k: &[i32], w: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for a in 0..n {
            if k[a] == 0 {
                continue;
            }
            for b in 0..n {
                s += k[a] as i64 * self.rs.gram[a][b] * w[b];
            }
        }
        s
    }

    fn content(&self, w: &[u8]) -> Vec<i64> {
        let mut c = vec![0; self.rank()];
        for &i in w {
            c[i as usize] += 1;
        }
        c
    }

    pub fn f(&self, i: usize) -> QElem<F> {
        QElem::from_term(Term::f_word(vec![i as u8], self.rank()), F::one())
    }

    pub fn e(&self, i: usize) -> QElem<F> {
        let mut t = Term::unit(self.rank());
        t.e.push(i as u8);
        QElem::from_term(t, F::one())
    }

    /// `K^mu` for `mu` in the simple-root basis.
    pub fn k(&self, mu: &[i32]) -> QElem<F> {
        let mut t = Term::unit(self.rank());
        t.k = mu.to_vec();
        QElem::from_term(t, F::one())
    }

    pub fn k_i(&self, i: usize, sign: i32) -> QElem<F> {
        let mut mu = vec![0; self.rank()];
        mu[i] = sign;
        self.k(&mu)
    }

    pub fn letter(&self, l: Letter) -> QElem<F> {
        match l {
            Letter::F(i) => self.f(i as usize),
            Letter::E(i) => self.e(i as usize),
            Letter::K(i, pos) => self.k_i(i as usize, if pos { 1 } else { -1 }),
        }
    }

    /// Normal form of a word in the generators.
    pub fn from_word(&self, w: &QWord) -> QElem<F> {
        let mut r = QElem::one(self.rank());
        for &l in &w.letters {
            r = self.mul(&r, &self.letter(l));
        }
        r
    }

    /// Normal form of `E_e F_f`.
    fn ef(&self, e: &[u8], f: &[u8]) -> Vec<(Term, F)> {
        let n = self.rank();
        if e.is_empty() || f.is_empty() {
            return vec![(Term { f: f.to_vec(), e: e.to_vec(), k: vec![0; n] }, F::one())];
        }
        let (a, prefix) = (e[e.len() - 1], &e[..e.len() - 1]);
        // E_a F_f
        let mut first: Vec<(Term, F)> = Vec::new();
        first.push((Term { f: f.to_vec(), e: vec![a], k: vec![0; n] }, F::one()));
        let ai = a as usize;
        for p in 0..f.len() {
            if f[p] != a {
                continue;
            }
            let rest = self.content(&f[p + 1..]);
            let x: i64 = (0..n).map(|b| self.rs.gram[ai][b] * rest[b]).sum();
            let mut fw = f[..p].to_vec();
            fw.extend_from_slice(&f[p + 1..]);
            let mut kp = vec![0; n];
            kp[ai] = 1;
            let mut km = vec![0; n];
            km[ai] = -1;
            let c = &self.inv_bracket[ai];
            first.push((Term { f: fw.clone(), e: Vec::new(), k: kp }, self.qp.pow(-x).mul(c)));
            first.push((Term { f: fw, e: Vec::new(), k: km }, self.qp.pow(x).mul(c).neg()));
        }
        if prefix.is_empty() {
            return first;
        }
        let mut out: BTreeMap<Term, F> = BTreeMap::new();
        for (t1, c1) in first {
            // E_prefix F_{t1.f} E_{t1.e} K^{t1.k}
            let e1 = self.content(&t1.e);
            for (t2, c2) in self.ef(prefix, &t1.f) {
                let s = self.pair(&t2.k, &e1);
                let mut e = t2.e.clone();
                e.extend_from_slice(&t1.e);
                let k: Vec<i32> = t2.k.iter().zip(&t1.k).map(|(a, b)| a + b).collect();
                let c = c1.mul(&c2).mul(&self.qp.pow(s));
                add_to(&mut out, Term { f: t2.f, e, k }, c);
            }
        }
        out.into_iter().collect()
    }

    fn mul_terms(&self, a: &Term, b: &Term, out: &mut BTreeMap<Term, F>, scale: &F) {
        // F_{a.f} E_{a.e} K^{a.k} F_{b.f} E_{b.e} K^{b.k}
        let mut wb = self.content(&b.e);
        for (x, y) in wb.iter_mut().zip(self.content(&b.f)) {
            *x -= y;
        }
        let s0 = self.pair(&a.k, &wb);
        let eb = self.content(&b.e);
        for (t, c) in self.ef(&a.e, &b.f) {
            let s = s0 + self.pair(&t.k, &eb);
            let mut f = a.f.clone();
            f.extend_from_slice(&t.f);
            let mut e = t.e;
            e.extend_from_slice(&b.e);
            let k: Vec<i32> = (0..self.rank()).map(|i| t.k[i] + a.k[i] + b.k[i]).collect();
            add_to(out, Term { f, e, k }, scale.mul(&c).mul(&self.qp.pow(s)));
        }
    }

    pub fn mul(&self, a: &QElem<F>, b: &QElem<F>) -> QElem<F> {
        let mut out = BTreeMap::new();
        for (ta, ca) in &a.terms {
            for (tb, cb) in &b.terms {
                self.mul_terms(ta, tb, &mut out, &ca.mul(cb));
            }
        }
        QElem { n: self.rank(), terms: out }
    }

    /// `x^m`.
    pub fn pow(&self, x: &QElem<F>, m: u32) -> QElem<F> {
        let mut r = QElem::one(self.rank());
        for _ in 0..m {
            r = self.mul(&r, x);
        }
        r
    }
}

pub(crate) fn add_to<F: Field>(m: &mut BTreeMap<Term, F>, t: Term, c: F) {
    if c.is_zero() {
        return;
    }
    match m.get_mut(&t) {
        Some(v) => {
            v.add_assign(&c);
            if v.is_zero() {
                m.remove(&t);
            }
        }
        None => {
            m.insert(t, c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RatFunc;
    use crate::roots::{CartanType, RootSystem};

    fn setup(t: &str) -> (RootSystem, QParam<RatFunc>) {
        (RootSystem::new(CartanType::parse(t).unwrap()), QParam::new(RatFunc::q()))
    }

    #[test]
    fn e_f_commutator() {
        let (rs, qp) = setup("A2");
        let alg = QAlgebra::new(&rs, &qp);
        let ef = alg.mul(&alg.e(0), &alg.f(0));
        let c = qp.pow(1).sub(&qp.pow(-1)).inv();
        let want = alg.mul(&alg.f(0), &alg.e(0)).add(&alg.k_i(0, 1).scale(&c)).sub(&alg.k_i(0, -1).scale(&c));
        assert_eq!(ef, want);
        // different indices commute
        assert_eq!(alg.mul(&alg.e(0), &alg.f(1)), alg.mul(&alg.f(1), &alg.e(0)));
    }

    #[test]
    fn k_commutation() {
        let (rs, qp) = setup("A2");
        let alg = QAlgebra::new(&rs, &qp);
        let kf = alg.mul(&alg.k_i(0, 1), &alg.f(0));
        assert_eq!(kf, alg.mul(&alg.f(0), &alg.k_i(0, 1)).scale(&qp.pow(-2)));
        let ke = alg.mul(&alg.k_i(0, 1), &alg.e(1));
        assert_eq!(ke, alg.mul(&alg.e(1), &alg.k_i(0, 1)).scale(&qp.pow(-1)));
        let w = alg.from_word(&QWord::new(alloc::vec![Letter::F(0), Letter::F(1)]));
        assert_eq!(w.len(), 1);
        assert!(w.is_pure_f());
    }

    #[test]
    fn associativity_on_samples() {
        let (rs, qp) = setup("B2");
        let alg = QAlgebra::new(&rs, &qp);
        let x = alg.mul(&alg.e(1), &alg.e(0)).add(&alg.k_i(1, -1));
        let y = alg.mul(&alg.f(0), &alg.f(1)).add(&alg.mul(&alg.f(1), &alg.f(0)));
        let z = alg.mul(&alg.e(0), &alg.f(0)).add(&alg.f(1));
        let l = alg.mul(&alg.mul(&x, &y), &z);
        let r = alg.mul(&x, &alg.mul(&y, &z));
        assert_eq!(l, r);
        assert!(l.is_homogeneous() || l.weight().is_none());
    }

    #[test]
    fn weights_are_preserved() {
        let (rs, qp) = setup("G2");
        let alg = QAlgebra::new(&rs, &qp);
        let x = alg.mul(&alg.e(0), &alg.mul(&alg.f(0), &alg.f(1)));
        assert_eq!(x.weight(), Some(alloc::vec![0, -1]));
    }
}
