use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::roots::{Family, RootSystem};
use crate::{Error, Result};

/// Which family of Dyck paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DyckKind {
    A,
    C,
}

/// Where a path ends, which fixes the right-hand side of its inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DyckEnd {
    /// `alpha_{j,j}`: bound `lambda_i + ... + lambda_j`.
    Simple(usize),
    /// `alpha_{j,jbar}`: bound `lambda_i + ... + lambda_n`.
    Bar(usize),
}

/// A Dyck path: canonical root indices `delta_1, ..., delta_r`, starting at
/// `alpha_{i,i}` (`start = i`, 1-based).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DyckPath {
    pub roots: Vec<usize>,
    pub start: usize,
    pub end: DyckEndKey,
}

/// Orderable form of [`DyckEnd`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DyckEndKey {
    pub j: usize,
    pub bar: bool,
}

impl DyckPath {
    pub fn end(&self) -> DyckEnd {
        if self.end.bar {
            DyckEnd::Bar(self.end.j)
        } else {
            DyckEnd::Simple(self.end.j)
        }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// Grid coordinates `(r, q)` with `q` a position in the alphabet
/// `1 < ... < n < (n-1)bar < ... < 1bar` (positions `1..=2n-1`).
fn grid_root(n: usize, kind: DyckKind, r: usize, q: usize) -> Option<Vec<i64>> {
    if r == 0 || q == 0 || r > n || r > q {
        return None;
    }
    let mut v = vec![0i64; n];
    if q <= n {
        for c in &mut v[r - 1..q] {
            *c = 1;
        }
        return Some(v);
    }
    if kind == DyckKind::A || q > 2 * n - 1 {
        return None;
    }
    let j = 2 * n - q;
    if r > j {
        return None;
    }
    for c in &mut v[r - 1..j - 1] {
        *c = 1;
    }
    for c in &mut v[j - 1..n - 1] {
        *c = 2;
    }
    v[n - 1] = 1;
    Some(v)
}

/// All Dyck paths of the given kind.
pub fn dyck_paths(rs: &RootSystem, kind: DyckKind) -> Result<Vec<DyckPath>> {
    let want = match kind {
        DyckKind::A => Family::A,
        DyckKind::C => Family::C,
    };
    if rs.ty.family != want {
        return Err(Error::InadmissibleType(format!("{} paths need type {:?}, got {}", dyck_name(kind), want, rs.ty)));
    }
    let n = rs.rank();
    let mut out = Vec::new();
    for i in 1..=n {
        let mut path = Vec::new();
        walk(rs, kind, n, i, (i, i), &mut path, &mut out)?;
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn dyck_name(k: DyckKind) -> &'static str {
    match k {
        DyckKind::A => "Dyck",
        DyckKind::C => "symplectic Dyck",
    }
}

fn walk(
    rs: &RootSystem,
    kind: DyckKind,
    n: usize,
    start: usize,
    (r, q): (usize, usize),
    path: &mut Vec<usize>,
    out: &mut Vec<DyckPath>,
) -> Result<()> {
    let Some(v) = grid_root(n, kind, r, q) else { return Ok(()) };
    let idx = rs.index_of(&v).ok_or_else(|| Error::Internal(format!("grid point ({r},{q}) is not a root")))?;
    path.push(idx);
    if r == q {
        out.push(DyckPath { roots: path.clone(), start, end: DyckEndKey { j: r, bar: false } });
    } else if kind == DyckKind::C && q > n && r == 2 * n - q {
        out.push(DyckPath { roots: path.clone(), start, end: DyckEndKey { j: r, bar: true } });
    }
    walk(rs, kind, n, start, (r, q + 1), path, out)?;
    walk(rs, kind, n, start, (r + 1, q), path, out)?;
    path.pop();
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::CartanType;

    fn rs(t: &str) -> RootSystem {
        RootSystem::new(CartanType::parse(t).unwrap())
    }

    #[test]
    fn a2_paths() {
        let r = rs("A2");
        let p = dyck_paths(&r, DyckKind::A).unwrap();
        let a11 = r.index_of(&[1, 0]).unwrap();
        let a12 = r.index_of(&[1, 1]).unwrap();
        let a22 = r.index_of(&[0, 1]).unwrap();
        let from1: Vec<&Vec<usize>> = p.iter().filter(|x| x.start == 1).map(|x| &x.roots).collect();
        assert_eq!(from1, [&vec![a11], &vec![a11, a12, a22]]);
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn c2_end_points() {
        let r = rs("C2");
        let p = dyck_paths(&r, DyckKind::C).unwrap();
        // alpha_11 -> alpha_12 -> alpha_{1,1b}, and alpha_11 -> alpha_12 -> alpha_22
        assert_eq!(p.len(), 4);
        assert!(dyck_paths(&r, DyckKind::A).is_err());
    }
}
