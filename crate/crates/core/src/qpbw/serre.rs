//! Quantum Serre relations and, for small weights, explicit weight components
//! of the two-sided ideal they generate in the free algebra on the `F_i`.

use alloc::vec::Vec;

use super::algebra::{QAlgebra, QElem, Word};
use crate::exact::Field;

/// `sum_r (-1)^r F_i^{(1 - c_ij - r)} F_j F_i^{(r)}` for `i != j`.
pub fn serre_relation<F: Field>(alg: &QAlgebra<'_, F>, i: usize, j: usize) -> QElem<F> {
    let rs = alg.root_system();
    let qp = alg.qparam();
    let di = rs.sym[i];
    let m = (1 - rs.cartan[i][j]) as u32;
    let fi = alg.f(i);
    let divided = |p: u32| alg.pow(&fi, p).scale(&qp.qfact(p, di).inv());
    let mut out = QElem::zero(alg.rank());
    for r in 0..=m {
        let sign = if r % 2 == 0 { F::one() } else { F::one().neg() };
        let t = alg.mul(&alg.mul(&divided(m - r), &alg.f(j)), &divided(r));
        out = out.add(&t.scale(&sign));
    }
    out
}

/// All words with the given letter content, in lexicographic order.
pub fn free_words(content: &[i64]) -> Vec<Word> {
    fn rec(rem: &mut Vec<i64>, cur: &mut Word, out: &mut Vec<Word>) {
        if rem.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        for i in 0..rem.len() {
            if rem[i] > 0 {
                rem[i] -= 1;
                cur.push(i as u8);
                rec(rem, cur, out);
                cur.pop();
                rem[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut content.to_vec(), &mut Word::new(), &mut out);
    out
}

/// A spanning set of the weight-`content` component of the Serre ideal:
/// all products `u S_ij v` with `u`, `v` words.
pub fn serre_component<F: Field>(alg: &QAlgebra<'_, F>, content: &[i64]) -> Vec<QElem<F>> {
    let rs = alg.root_system();
    let n = rs.rank();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || rs.cartan[i][j] == 0 && rs.cartan[j][i] == 0 && i > j {
                continue;
            }
            let s = serre_relation(alg, i, j);
            let mut sc = alloc::vec![0i64; n];
            sc[i] = 1 - rs.cartan[i][j];
            sc[j] += 1;
            let rest: Vec<i64> = content.iter().zip(&sc).map(|(a, b)| a - b).collect();
            if rest.iter().any(|&x| x < 0) {
                continue;
            }
            // split rest between a left and a right word
            for left in sub_contents(&rest) {
                let right: Vec<i64> = rest.iter().zip(&left).map(|(a, b)| a - b).collect();
                for u in free_words(&left) {
                    let lu = QElem::from_f_words(n, [(u, F::one())]);
                    let us = alg.mul(&lu, &s);
                    for v in free_words(&right) {
                        let rv = QElem::from_f_words(n, [(v, F::one())]);
                        out.push(alg.mul(&us, &rv));
                    }
                }
            }
        }
    }
    out
}

fn sub_contents(c: &[i64]) -> Vec<Vec<i64>> {
    let mut out = alloc::vec![Vec::new()];
    for &x in c {
        let mut next = Vec::new();
        for p in &out {
            for k in 0..=x {
                let mut q = p.clone();
                q.push(k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rank, ratio, ExactMatrix, QParam, Rat};
    use crate::qpbw::shuffle::{pack, Shuffler};
    use crate::roots::{kostant_count, CartanType, RootSystem};

    fn dense(words: &[Word], x: &QElem<Rat>) -> Vec<Rat> {
        words.iter().map(|w| x.coeff(&super::super::algebra::Term::f_word(w.clone(), x.rank()))).collect()
    }

    #[test]
    fn shuffle_map_kills_serre_relations() {
        for ty in ["A2", "B2", "C3", "G2", "D4"] {
            let rs = RootSystem::new(CartanType::parse(ty).unwrap());
            let qp = QParam::new(ratio(5, 3));
            let alg = QAlgebra::new(&rs, &qp);
            let sh = Shuffler::new(&rs, &qp);
            for i in 0..rs.rank() {
                for j in 0..rs.rank() {
                    if i != j {
                        assert!(sh.phi(&serre_relation(&alg, i, j)).is_zero(), "{ty} S_{i}{j}");
                    }
                }
            }
        }
    }

    /// Free words minus the Serre component have the Kostant partition count
    /// as dimension, and the shuffle image has the same rank.
    #[test]
    fn quotient_dimensions_match_kostant_counts() {
        for (ty, contents) in [
            ("A2", alloc::vec![alloc::vec![1, 1], alloc::vec![2, 1], alloc::vec![2, 2]]),
            ("B2", alloc::vec![alloc::vec![1, 2], alloc::vec![2, 2], alloc::vec![1, 3]]),
            ("G2", alloc::vec![alloc::vec![3, 1], alloc::vec![4, 1], alloc::vec![3, 2]]),
            ("A3", alloc::vec![alloc::vec![1, 2, 1], alloc::vec![1, 1, 1]]),
        ] {
            let rs = RootSystem::new(CartanType::parse(ty).unwrap());
            let qp = QParam::new(ratio(7, 2));
            let alg = QAlgebra::new(&rs, &qp);
            let sh = Shuffler::new(&rs, &qp);
            for c in contents {
                let words = free_words(&c);
                let comp = serre_component(&alg, &c);
                let m = ExactMatrix::new(words.len(), comp.iter().map(|x| dense(&words, x)).collect());
                let quotient = words.len() - rank(&m);
                let kc = kostant_count(&rs.roots, &c) as usize;
                assert_eq!(quotient, kc, "{ty} {c:?}");
                let images: Vec<Vec<Rat>> = words
                    .iter()
                    .map(|w| {
                        let p = sh.phi_word(w);
                        words.iter().map(|u| p.terms.get(&pack(u)).cloned().unwrap_or_else(<Rat as Field>::zero)).collect()
                    })
                    .collect();
                assert_eq!(rank(&ExactMatrix::new(words.len(), images)), kc, "{ty} {c:?} shuffle rank");
            }
        }
    }
}
