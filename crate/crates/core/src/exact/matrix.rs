use alloc::vec;
use alloc::vec::Vec;

use super::Field;

/// Dense matrix over a field, stored by rows.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<F> {
    pub ncols: usize,
    pub rows: Vec<Vec<F>>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn new(ncols: usize, rows: Vec<Vec<F>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        ExactMatrix { ncols, rows }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        Self::new(ncols, rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
            .collect();
        ExactMatrix { ncols: n, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }
}

/// Reduced row echelon form.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F> {
    pub rank: usize,
    /// The nonzero rows of the reduced echelon form, pivots normalized to one.
    pub rows: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
}

fn axpy<F: Field>(y: &mut [F], a: &F, x: &[F]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            yi.sub_assign(&a.mul(xi));
        }
    }
}

/// Exact reduced row echelon form with deterministic pivoting: columns are
/// scanned left to right and the first remaining row with a nonzero entry is
/// taken as pivot row.
pub fn rref<F: Field>(m: &ExactMatrix<F>) -> Rref<F> {
    let mut rows = m.rows.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..m.ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].inv();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let a = row[col].clone();
                axpy(row, &a, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    Rref { rank: r, rows, pivots }
}

pub fn rank<F: Field>(m: &ExactMatrix<F>) -> usize {
    let mut b = IncrementalBasis::new(m.ncols);
    for row in &m.rows {
        b.insert(row.clone());
    }
    b.rank()
}

/// Row space built one vector at a time, supporting membership tests and
/// coordinates with respect to the accepted (independent) vectors.
#[derive(Clone, Debug)]
pub struct IncrementalBasis<F> {
    dim: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<F>>,
    /// `rows[k]` as a combination of the accepted vectors.
    combos: Vec<Vec<F>>,
}

impl<F: Field> IncrementalBasis<F> {
    pub fn new(dim: usize) -> Self {
        IncrementalBasis { dim, pivots: Vec::new(), rows: Vec::new(), combos: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Returns `(residual, coords)` with `v = residual + sum coords[k] * accepted[k]`.
    /// The residual vanishes iff `v` lies in the span.
    pub fn reduce(&self, v: &[F]) -> (Vec<F>, Vec<F>) {
        assert_eq!(v.len(), self.dim, "vector length");
        let mut v = v.to_vec();
        let mut coords = vec![F::zero(); self.rows.len()];
        for (k, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            axpy(&mut v, &c, &self.rows[k]);
            for (x, y) in coords.iter_mut().zip(&self.combos[k]) {
                if !y.is_zero() {
                    x.add_assign(&c.mul(y));
                }
            }
        }
        (v, coords)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).0.iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in terms of the accepted vectors, if it is in the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let (res, c) = self.reduce(v);
        res.iter().all(|x| x.is_zero()).then_some(c)
    }

    /// Adds `v` if it is independent of the current span. Returns its index
    /// among the accepted vectors.
    pub fn insert(&mut self, v: Vec<F>) -> Option<usize> {
        let (res, coords) = self.reduce(&v);
        let p = res.iter().position(|x| !x.is_zero())?;
        let idx = self.rows.len();
        let inv = res[p].inv();
        let row: Vec<F> = res.iter().map(|x| if x.is_zero() { F::zero() } else { x.mul(&inv) }).collect();
        // row = (v - sum coords[k] accepted[k]) / res[p]
        let mut combo: Vec<F> = coords.iter().map(|c| c.neg().mul(&inv)).collect();
        combo.push(inv);
        for c in self.combos.iter_mut() {
            c.push(F::zero());
        }
        self.pivots.push(p);
        self.rows.push(row);
        self.combos.push(combo);
        Some(idx)
    }
}

/// Solves `sum x_j vectors[j] = target`. Vectors dependent on earlier ones
/// get coordinate zero. `None` if `target` is outside the span.
pub fn solve<F: Field>(vectors: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let mut basis = IncrementalBasis::new(target.len());
    let mut slot = Vec::with_capacity(vectors.len());
    for v in vectors {
        slot.push(basis.insert(v.clone()));
    }
    let c = basis.coordinates(target)?;
    Some(slot.iter().map(|s| s.map_or_else(F::zero, |k| c[k].clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Rat};
    use proptest::prelude::*;

    type M = ExactMatrix<Rat>;

    #[test]
    fn small_cases() {
        assert_eq!(rref(&M::identity(3)).rank, 3);
        let z = M::new(3, vec![vec![rat(0); 3]; 3]);
        assert_eq!(rref(&z).rank, 0);
        let m = M::from_i64(&[&[1, 2], &[2, 4]]);
        let r = rref(&m);
        assert_eq!((r.rank, r.pivots.clone()), (1, vec![0]));
        assert_eq!(r.rows[0], vec![rat(1), rat(2)]);
    }

    #[test]
    fn solve_recovers_coordinates() {
        let vs = vec![vec![rat(1), rat(0), rat(1)], vec![rat(0), rat(1), rat(1)], vec![rat(1), rat(1), rat(2)]];
        let t = vec![rat(2), rat(3), rat(5)];
        let x = solve(&vs, &t).unwrap();
        assert_eq!(x, vec![rat(2), rat(3), rat(0)]);
        assert!(solve(&vs, &[rat(0), rat(0), rat(1)]).is_none());
    }

    fn det(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        let mut s = 0i128;
        for j in 0..n {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            s += sign * m[0][j] as i128 * det(&minor);
        }
        s
    }

    /// Rank as the largest size of a nonvanishing minor.
    fn minor_rank(m: &[Vec<i64>]) -> usize {
        let r = m.len();
        let c = m[0].len();
        let subsets = |n: usize, k: usize| -> Vec<Vec<usize>> {
            (0u32..(1 << n)).filter(|b| b.count_ones() as usize == k).map(|b| (0..n).filter(|i| b >> i & 1 == 1).collect()).collect()
        };
        for k in (1..=r.min(c)).rev() {
            for rs in subsets(r, k) {
                for cs in subsets(c, k) {
                    let sub: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                    if det(&sub) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    proptest! {
        #[test]
        fn rank_matches_minor_oracle(rows in 1usize..=5, cols in 1usize..=5, seed in proptest::collection::vec(-3i64..=3, 25)) {
            let m: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 5 + j]).collect()).collect();
            let em = M::new(cols, m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect());
            prop_assert_eq!(rref(&em).rank, minor_rank(&m));
            prop_assert_eq!(rank(&em), minor_rank(&m));
        }
    }
}
