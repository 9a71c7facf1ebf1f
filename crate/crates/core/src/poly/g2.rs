use alloc::vec;
use alloc::vec::Vec;

use super::{extreme_points, hull_lattice_points, lattice_points, minkowski_power, minkowski_sum, HalfspaceSystem, LatticeSet};
use crate::roots::{weyl_dim, CartanType, Family, RootSystem, Weight};
use crate::Result;

/// `G2^{varpi_1}(m)` over `(a1, a1112, a112, a11122, a12, a2)`; `x6 <= 0` is kept.
pub fn g2_box_1(m: i64) -> HalfspaceSystem {
    let mut h = HalfspaceSystem::new(6);
    h.push_upper(0, m);
    h.push_upper(5, 0);
    h.push(vec![2, 2, 1, 2, 2, 0], 2 * m).expect("dim 6");
    h
}

/// `G2^{varpi_2}(m)`; `x1 <= 0` is kept.
pub fn g2_box_2(m: i64) -> HalfspaceSystem {
    let mut h = HalfspaceSystem::new(6);
    h.push_upper(0, 0);
    h.push(vec![0, 2, 1, 1, 1, 2], 2 * m).expect("dim 6");
    h
}

/// One row of the experiment table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G2Row {
    pub m1: u32,
    pub m2: u32,
    /// Lattice points of the m-fold set sums.
    pub set_sum: usize,
    /// Lattice points of the dilated polytope sum (hull of the set sum).
    pub dilated: usize,
    pub dim: u128,
}

impl G2Row {
    pub fn set_sum_agrees(&self) -> bool {
        self.set_sum as u128 == self.dim
    }

    pub fn dilated_agrees(&self) -> bool {
        self.dilated as u128 == self.dim
    }
}

/// Counts both readings of the G2 Minkowski statement for `m1, m2 <= bound`.
pub fn g2_conjecture_experiment(bound: u32) -> Result<Vec<G2Row>> {
    let rs = RootSystem::new(CartanType::new(Family::G, 2)?);
    let p1 = lattice_points(&g2_box_1(1))?;
    let mut p2 = lattice_points(&g2_box_2(1))?;
    p2.points.insert(vec![0, 0, 3, 0, 0, 0]);
    p2.points.insert(vec![0, 0, 0, 0, 3, 0]);
    let mut rows = Vec::new();
    for m1 in 0..=bound {
        for m2 in 0..=bound {
            rows.push(g2_row(&rs, &p1, &p2, m1, m2)?);
        }
    }
    Ok(rows)
}

fn g2_row(rs: &RootSystem, p1: &LatticeSet, p2: &LatticeSet, m1: u32, m2: u32) -> Result<G2Row> {
    let sum = minkowski_sum(&minkowski_power(p1, m1), &minkowski_power(p2, m2))?;
    // conv(m P) = m conv(P), so the dilated sum is the hull of scaled vertices
    let scaled = |p: &LatticeSet, m: u32| -> Result<LatticeSet> {
        let v = extreme_points(&p.points.iter().cloned().collect::<Vec<_>>());
        LatticeSet::from_points(6, v.into_iter().map(|x| x.into_iter().map(|c| c * m as i64).collect()))
    };
    let gens = minkowski_sum(&scaled(p1, m1)?, &scaled(p2, m2)?)?;
    let dilated = hull_lattice_points(&gens).len();
    let dim = weyl_dim(rs, &Weight::new(vec![m1 as i64, m2 as i64]))?;
    Ok(G2Row { m1, m2, set_sum: sum.len(), dilated, dim })
}
