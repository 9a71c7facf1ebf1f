use alloc::vec;

use super::dyck::{dyck_paths, DyckEnd, DyckKind};
use super::HalfspaceSystem;
use crate::roots::{RootSystem, Weight};
use crate::{Error, Result};

/// The FFLV polytope `P(lambda)` over canonical root coordinates: one
/// inequality per (symplectic) Dyck path.
pub fn fflv_polytope(rs: &RootSystem, kind: DyckKind, lambda: &Weight) -> Result<HalfspaceSystem> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    let n = rs.rank();
    if lambda.coords.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: lambda.coords.len() });
    }
    let lam = &lambda.coords;
    let mut h = HalfspaceSystem::new(rs.n_pos());
    for p in dyck_paths(rs, kind)? {
        let mut a = vec![0; rs.n_pos()];
        for &r in &p.roots {
            a[r] += 1;
        }
        let i = p.start;
        let b = match p.end() {
            DyckEnd::Simple(j) => lam[i - 1..j].iter().sum(),
            DyckEnd::Bar(_) => lam[i - 1..n].iter().sum(),
        };
        h.push(a, b)?;
    }
    Ok(h)
}
