use alloc::vec;
use alloc::vec::Vec;

use super::LatticeSet;
use crate::cone::lp::{Lp, Sense};
use crate::exact::rat;

/// Whether `x` is a convex combination of `pts`.
pub fn in_hull(pts: &[Vec<i64>], x: &[i64]) -> bool {
    let m = pts.len();
    let mut lp = Lp::new(m);
    for (k, &xk) in x.iter().enumerate() {
        lp.push(pts.iter().map(|p| rat(p[k])).collect(), Sense::Eq, rat(xk));
    }
    lp.push(vec![rat(1); m], Sense::Eq, rat(1));
    lp.is_feasible()
}

/// The points of `pts` that are not convex combinations of the others.
pub fn extreme_points(pts: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut keep: Vec<Vec<i64>> = pts.to_vec();
    let mut k = 0;
    while k < keep.len() {
        let others: Vec<Vec<i64>> = keep.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, p)| p.clone()).collect();
        if !others.is_empty() && in_hull(&others, &keep[k]) {
            keep.remove(k);
        } else {
            k += 1;
        }
    }
    keep
}

/// Functionals `+-e_i`, `+-e_i +- e_j` and `+-(1, ..., 1)` used to prune
/// candidates before the exact membership test.
fn support_directions(dim: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..dim {
        for s in [1, -1] {
            let mut c = vec![0; dim];
            c[i] = s;
            out.push(c);
        }
        for j in i + 1..dim {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut c = vec![0; dim];
                c[i] = a;
                c[j] = b;
                out.push(c);
            }
        }
    }
    out.push(vec![1; dim]);
    out.push(vec![-1; dim]);
    out
}

/// All integer points of `conv(s)`: bounding-box candidates filtered by
/// exact LP membership.
pub fn hull_lattice_points(s: &LatticeSet) -> LatticeSet {
    let pts: Vec<Vec<i64>> = s.points.iter().cloned().collect();
    let mut out = LatticeSet::new(s.dim);
    if pts.is_empty() {
        return out;
    }
    let verts = extreme_points(&pts);
    let dirs = support_directions(s.dim);
    let dot = |c: &[i64], x: &[i64]| -> i64 { c.iter().zip(x).map(|(a, b)| a * b).sum() };
    let support: Vec<i64> = dirs.iter().map(|c| verts.iter().map(|v| dot(c, v)).max().unwrap()).collect();
    let lo: Vec<i64> = (0..s.dim).map(|k| pts.iter().map(|p| p[k]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..s.dim).map(|k| pts.iter().map(|p| p[k]).max().unwrap()).collect();
    let mut x = lo.clone();
    loop {
        let inside = s.contains(&x) || (dirs.iter().zip(&support).all(|(c, &h)| dot(c, &x) <= h) && in_hull(&verts, &x));
        if inside {
            out.points.insert(x.clone());
        }
        let mut k = 0;
        loop {
            if k == s.dim {
                return out;
            }
            if x[k] < hi[k] {
                x[k] += 1;
                break;
            }
            x[k] = lo[k];
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_and_simplex() {
        let s = LatticeSet::from_points(2, [vec![0, 0], vec![2, 0]]).unwrap();
        let h = hull_lattice_points(&s);
        assert_eq!(h.points.into_iter().collect::<Vec<_>>(), [vec![0, 0], vec![1, 0], vec![2, 0]]);
        let t = LatticeSet::from_points(3, [vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(hull_lattice_points(&t), t);
    }
}
