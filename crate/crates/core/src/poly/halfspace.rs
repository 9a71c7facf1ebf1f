use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::LatticeSet;
use crate::cone::lp::{Lp, LpResult, Sense};
use crate::exact::{rat, Rat};
use crate::{Error, Result};

/// One inequality `a . x <= b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfspace {
    pub a: Vec<i64>,
    pub b: i64,
}

/// `{x >= 0 : a . x <= b for every row}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfspaceSystem {
    pub dim: usize,
    pub rows: Vec<Halfspace>,
}

impl HalfspaceSystem {
    pub fn new(dim: usize) -> Self {
        HalfspaceSystem { dim, rows: Vec::new() }
    }

    pub fn push(&mut self, a: Vec<i64>, b: i64) -> Result<()> {
        if a.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: a.len() });
        }
        self.rows.push(Halfspace { a, b });
        Ok(())
    }

    /// `x_k <= b`.
    pub fn push_upper(&mut self, k: usize, b: i64) {
        let mut a = vec![0; self.dim];
        a[k] = 1;
        self.rows.push(Halfspace { a, b });
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        x.len() == self.dim && x.iter().all(|&v| v >= 0) && self.rows.iter().all(|r| dot(&r.a, x) <= r.b)
    }

    fn lp(&self) -> Lp {
        let mut lp = Lp::new(self.dim);
        for r in &self.rows {
            lp.push_i64(&r.a, Sense::Le, r.b);
        }
        lp
    }

    /// Nonempty and bounded, checked by exact LP per coordinate.
    pub fn check_bounded(&self) -> Result<()> {
        let lp = self.lp();
        if !lp.is_feasible() {
            return Err(Error::Unbounded("system is infeasible".into()));
        }
        for k in 0..self.dim {
            let mut c = vec![Rat::zero(); self.dim];
            c[k] = rat(1);
            if let LpResult::Unbounded = lp.maximize(&c) {
                return Err(Error::Unbounded(format!("coordinate {k} is unbounded")));
            }
        }
        Ok(())
    }

    /// All coefficients nonnegative: the polytope is down-closed, so the
    /// exact prefix bound is the residual bound with later coordinates at 0.
    fn down_closed(&self) -> bool {
        self.rows.iter().all(|r| r.a.iter().all(|&c| c >= 0))
    }
}

fn dot(a: &[i64], x: &[i64]) -> i64 {
    a.iter().zip(x).map(|(p, q)| p * q).sum()
}

/// Calls `f` on every lattice point, in lexicographic order.
pub fn visit_lattice_points(h: &HalfspaceSystem, f: &mut dyn FnMut(&[i64])) -> Result<()> {
    h.check_bounded()?;
    let mut x = vec![0i64; h.dim];
    if h.down_closed() {
        let resid: Vec<i64> = h.rows.iter().map(|r| r.b).collect();
        // columns: rows touching coordinate k
        let cols: Vec<Vec<(usize, i64)>> =
            (0..h.dim).map(|k| h.rows.iter().enumerate().filter(|(_, r)| r.a[k] > 0).map(|(i, r)| (i, r.a[k])).collect()).collect();
        down_closed_rec(&cols, 0, &mut resid.clone(), &mut x, f);
    } else {
        general_rec(h, 0, &mut x, f);
    }
    Ok(())
}

fn down_closed_rec(cols: &[Vec<(usize, i64)>], k: usize, resid: &mut [i64], x: &mut [i64], f: &mut dyn FnMut(&[i64])) {
    if k == x.len() {
        f(x);
        return;
    }
    if resid.iter().any(|&r| r < 0) {
        return;
    }
    let hi = cols[k].iter().map(|&(i, a)| resid[i].div_euclid(a)).min().expect("bounded coordinate");
    for v in 0..=hi {
        x[k] = v;
        down_closed_rec(cols, k + 1, resid, x, f);
        for &(i, a) in &cols[k] {
            resid[i] -= a;
        }
    }
    for &(i, a) in &cols[k] {
        resid[i] += a * (hi + 1);
    }
    x[k] = 0;
}

fn general_rec(h: &HalfspaceSystem, k: usize, x: &mut [i64], f: &mut dyn FnMut(&[i64])) {
    if k == h.dim {
        if h.contains(x) {
            f(x);
        }
        return;
    }
    let mut lp = h.lp();
    for (t, &v) in x[..k].iter().enumerate() {
        let mut a = vec![0; h.dim];
        a[t] = 1;
        lp.push_i64(&a, Sense::Eq, v);
    }
    let mut c = vec![Rat::zero(); h.dim];
    c[k] = rat(1);
    let (lo, hi) = match (lp.minimize(&c), lp.maximize(&c)) {
        (LpResult::Optimal { value: a, .. }, LpResult::Optimal { value: b, .. }) => (a.ceil().to_integer(), b.floor().to_integer()),
        _ => return,
    };
    let (lo, hi): (i64, i64) = (lo.try_into().unwrap_or(i64::MAX), hi.try_into().unwrap_or(i64::MIN));
    for v in lo..=hi {
        x[k] = v;
        general_rec(h, k + 1, x, f);
    }
    x[k] = 0;
}

/// The lattice points of a bounded system.
pub fn lattice_points(h: &HalfspaceSystem) -> Result<LatticeSet> {
    let mut out = LatticeSet::new(h.dim);
    visit_lattice_points(h, &mut |x| {
        out.points.insert(x.to_vec());
    })?;
    Ok(out)
}

/// Number of lattice points, without storing them.
pub fn count_lattice_points(h: &HalfspaceSystem) -> Result<u128> {
    let mut n = 0u128;
    visit_lattice_points(h, &mut |_| n += 1)?;
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_unbounded() {
        let mut h = HalfspaceSystem::new(1);
        h.push(vec![1], -1).unwrap();
        assert!(matches!(lattice_points(&h), Err(Error::Unbounded(_))));
        let mut h = HalfspaceSystem::new(2);
        h.push(vec![1, 0], 3).unwrap();
        assert!(matches!(lattice_points(&h), Err(Error::Unbounded(_))));
    }

    #[test]
    fn general_path_matches_down_closed() {
        // x + y <= 4, x - y <= 1, y - x <= 2
        let mut h = HalfspaceSystem::new(2);
        h.push(vec![1, 1], 4).unwrap();
        h.push(vec![1, -1], 1).unwrap();
        h.push(vec![-1, 1], 2).unwrap();
        let pts = lattice_points(&h).unwrap();
        let mut brute = LatticeSet::new(2);
        for x in 0..5 {
            for y in 0..5 {
                if h.contains(&[x, y]) {
                    brute.points.insert(vec![x, y]);
                }
            }
        }
        assert_eq!(pts, brute);
    }
}
