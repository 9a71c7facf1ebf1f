//! Exact two-phase simplex method over the rationals with Bland's rule.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::exact::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

/// Constraints `a . x (<=|>=|=) b` over variables `x >= 0`.
#[derive(Clone, Debug, Default)]
pub struct Lp {
    pub n: usize,
    pub rows: Vec<(Vec<Rat>, Sense, Rat)>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpResult {
    Optimal { x: Vec<Rat>, value: Rat },
    Infeasible,
    Unbounded,
}

impl Lp {
    pub fn new(n: usize) -> Self {
        Lp { n, rows: Vec::new() }
    }

    pub fn push(&mut self, a: Vec<Rat>, s: Sense, b: Rat) {
        assert_eq!(a.len(), self.n, "constraint length");
        self.rows.push((a, s, b));
    }

    pub fn push_i64(&mut self, a: &[i64], s: Sense, b: i64) {
        self.push(a.iter().map(|&x| Rat::from_integer(x.into())).collect(), s, Rat::from_integer(b.into()));
    }

    /// Minimizes `c . x`.
    pub fn minimize(&self, c: &[Rat]) -> LpResult {
        Simplex::build(self).run(c)
    }

    pub fn maximize(&self, c: &[Rat]) -> LpResult {
        let neg: Vec<Rat> = c.iter().map(|x| -x).collect();
        match self.minimize(&neg) {
            LpResult::Optimal { x, value } => LpResult::Optimal { x, value: -value },
            r => r,
        }
    }

    /// Some feasible point, if any.
    pub fn feasible_point(&self) -> Option<Vec<Rat>> {
        match self.minimize(&vec![Rat::zero(); self.n]) {
            LpResult::Optimal { x, .. } => Some(x),
            _ => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.feasible_point().is_some()
    }
}

struct Simplex {
    n: usize,
    /// Number of structural + slack columns (artificials come after).
    n_real: usize,
    n_cols: usize,
    /// Rows of `[A | b]`.
    t: Vec<Vec<Rat>>,
    basis: Vec<usize>,
}

impl Simplex {
    fn build(lp: &Lp) -> Self {
        let n = lp.n;
        let m = lp.rows.len();
        let n_slack = lp.rows.iter().filter(|r| r.1 != Sense::Eq).count();
        let n_real = n + n_slack;
        let n_cols = n_real + m;
        let mut t = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut slack = n;
        for (r, (a, s, b)) in lp.rows.iter().enumerate() {
            let mut row = vec![Rat::zero(); n_cols + 1];
            let flip = b.is_negative();
            let sign = if flip { -Rat::one() } else { Rat::one() };
            for k in 0..n {
                row[k] = &a[k] * &sign;
            }
            row[n_cols] = b * &sign;
            let sense = match (s, flip) {
                (Sense::Le, true) => Sense::Ge,
                (Sense::Ge, true) => Sense::Le,
                (s, _) => *s,
            };
            match sense {
                Sense::Le => {
                    row[slack] = Rat::one();
                    slack += 1;
                }
                Sense::Ge => {
                    row[slack] = -Rat::one();
                    slack += 1;
                }
                Sense::Eq => {}
            }
            // every row gets an artificial; rows with a usable slack use it instead
            row[n_real + r] = Rat::one();
            basis.push(n_real + r);
            if sense == Sense::Le {
                basis[r] = slack - 1;
                row[n_real + r] = Rat::zero();
            }
            t.push(row);
        }
        Simplex { n, n_real, n_cols, t, basis }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.t[r][c].recip();
        for x in self.t[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let prow = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimizes `cost . x` over the allowed columns; returns false if unbounded.
    fn optimize(&mut self, cost: &[Rat], allowed: usize) -> bool {
        loop {
            // reduced costs
            let mut entering = None;
            for j in 0..allowed {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut z = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.t[i][j].is_zero() {
                        z -= &cost[b] * &self.t[i][j];
                    }
                }
                if z.is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(c) = entering else { return true };
            let mut best: Option<(usize, Rat)> = None;
            for i in 0..self.t.len() {
                let a = &self.t[i][c];
                if a.is_positive() {
                    let ratio = &self.t[i][self.n_cols] / a;
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }

    fn run(mut self, c: &[Rat]) -> LpResult {
        let m = self.t.len();
        // phase one
        let mut cost1 = vec![Rat::zero(); self.n_cols];
        for r in 0..m {
            if self.basis[r] >= self.n_real {
                cost1[self.n_real + r] = Rat::one();
            }
        }
        if cost1.iter().any(|x| !x.is_zero()) {
            self.optimize(&cost1, self.n_cols);
            let infeas: Rat = (0..m).filter(|&r| self.basis[r] >= self.n_real).map(|r| self.t[r][self.n_cols].clone()).sum();
            if infeas.is_positive() {
                return LpResult::Infeasible;
            }
            // drive artificials out of the basis
            let mut r = 0;
            while r < self.t.len() {
                if self.basis[r] >= self.n_real {
                    match (0..self.n_real).find(|&j| !self.t[r][j].is_zero()) {
                        Some(j) => self.pivot(r, j),
                        None => {
                            self.t.remove(r);
                            self.basis.remove(r);
                            continue;
                        }
                    }
                }
                r += 1;
            }
        }
        // phase two
        let mut cost2 = vec![Rat::zero(); self.n_cols];
        cost2[..self.n].clone_from_slice(c);
        if !self.optimize(&cost2, self.n_real) {
            return LpResult::Unbounded;
        }
        let mut x = vec![Rat::zero(); self.n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n {
                x[b] = self.t[i][self.n_cols].clone();
            }
        }
        let value = x.iter().zip(c).map(|(a, b)| a * b).sum();
        LpResult::Optimal { x, value }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    #[test]
    fn small_programs() {
        // max x + y, x + 2y <= 4, 3x + y <= 6
        let mut lp = Lp::new(2);
        lp.push_i64(&[1, 2], Sense::Le, 4);
        lp.push_i64(&[3, 1], Sense::Le, 6);
        match lp.maximize(&[rat(1), rat(1)]) {
            LpResult::Optimal { x, value } => {
                assert_eq!(value, ratio(14, 5));
                assert_eq!(x, vec![ratio(8, 5), ratio(6, 5)]);
            }
            r => panic!("{r:?}"),
        }
        // infeasible: x >= 2, x <= 1
        let mut lp = Lp::new(1);
        lp.push_i64(&[1], Sense::Ge, 2);
        lp.push_i64(&[1], Sense::Le, 1);
        assert_eq!(lp.minimize(&[rat(0)]), LpResult::Infeasible);
        // unbounded
        let mut lp = Lp::new(2);
        lp.push_i64(&[1, -1], Sense::Le, 1);
        assert_eq!(lp.maximize(&[rat(1), rat(0)]), LpResult::Unbounded);
        // equality with redundant rows
        let mut lp = Lp::new(3);
        lp.push_i64(&[1, 1, 1], Sense::Eq, 3);
        lp.push_i64(&[2, 2, 2], Sense::Eq, 6);
        lp.push_i64(&[1, 0, 0], Sense::Ge, 1);
        match lp.minimize(&[rat(0), rat(1), rat(1)]) {
            LpResult::Optimal { value, .. } => assert_eq!(value, rat(0)),
            r => panic!("{r:?}"),
        }
        // negative right-hand sides
        let mut lp = Lp::new(2);
        lp.push_i64(&[-1, -1], Sense::Le, -2);
        match lp.minimize(&[rat(1), rat(2)]) {
            LpResult::Optimal { value, .. } => assert_eq!(value, rat(2)),
            r => panic!("{r:?}"),
        }
    }
}
