use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A finite set of integer vectors of a fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LatticeSet {
    pub dim: usize,
    pub points: BTreeSet<Vec<i64>>,
}

impl LatticeSet {
    pub fn new(dim: usize) -> Self {
        LatticeSet { dim, points: BTreeSet::new() }
    }

    /// `{0}`, the unit for Minkowski sums.
    pub fn origin(dim: usize) -> Self {
        let mut s = Self::new(dim);
        s.points.insert(vec![0; dim]);
        s
    }

    pub fn from_points<I: IntoIterator<Item = Vec<i64>>>(dim: usize, pts: I) -> Result<Self> {
        let mut s = Self::new(dim);
        for p in pts {
            if p.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: p.len() });
            }
            s.points.insert(p);
        }
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.contains(p)
    }

    pub fn is_subset(&self, o: &LatticeSet) -> bool {
        self.points.is_subset(&o.points)
    }

    /// Coordinates permuted: `out[k] = p[perm[k]]`.
    pub fn permuted(&self, perm: &[usize]) -> LatticeSet {
        LatticeSet { dim: perm.len(), points: self.points.iter().map(|p| perm.iter().map(|&k| p[k]).collect()).collect() }
    }
}

/// `{x + y : x in a, y in b}`.
pub fn minkowski_sum(a: &LatticeSet, b: &LatticeSet) -> Result<LatticeSet> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch { expected: a.dim, got: b.dim });
    }
    let mut out = LatticeSet::new(a.dim);
    for x in &a.points {
        for y in &b.points {
            out.points.insert(x.iter().zip(y).map(|(p, q)| p + q).collect());
        }
    }
    Ok(out)
}

/// The `m`-fold Minkowski sum of `a` with itself (`{0}` for `m = 0`).
pub fn minkowski_power(a: &LatticeSet, m: u32) -> LatticeSet {
    let mut acc = LatticeSet::origin(a.dim);
    for _ in 0..m {
        acc = minkowski_sum(&acc, a).expect("same dimension");
    }
    acc
}
