use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use super::mat::Mat;
use super::module::{Depth, RepModule};
use super::ops::RootOperators;
use crate::exact::{rat_to_i64, Rat};
use crate::roots::{RootSystem, Weight};
use crate::{Error, Result};

/// Structure constants of a Chevalley basis `{e_alpha, f_alpha, h_i}`.
///
/// Signed roots are indexed `0..N` for `e_{beta_k}` (weight `+beta_k`) and
/// `N..2N` for `f_{beta_k}` (weight `-beta_k`), canonical order.
#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    pub n_pos: usize,
    /// `[x_a, x_b] = n[(a, b)] x_{a+b}` whenever `a + b` is a root.
    pub n: BTreeMap<(usize, usize), i64>,
}

fn full_matrix(m: &RepModule, maps: &BTreeMap<Depth, Mat>, offs: &BTreeMap<Depth, usize>, dim: usize, shift: &[i64]) -> Mat {
    let mut out = Mat::zero(dim, dim);
    for (nu, x) in maps {
        let tgt: Depth = nu.iter().zip(shift).map(|(a, b)| a + b).collect();
        if m.weight_dim(&tgt) == 0 {
            continue;
        }
        let (r0, c0) = (offs[&tgt], offs[nu]);
        for r in 0..x.rows {
            for c in 0..x.cols {
                out.data[r0 + r][c0 + c] = x.data[r][c].clone();
            }
        }
    }
    out
}

/// Proportionality factor `a = s b`, if any.
fn ratio_of(a: &Mat, b: &Mat) -> Option<Rat> {
    let mut s: Option<Rat> = None;
    for r in 0..a.rows {
        for c in 0..a.cols {
            let (x, y) = (&a.data[r][c], &b.data[r][c]);
            match (Zero::is_zero(x), Zero::is_zero(y)) {
                (true, true) => {}
                (false, true) | (true, false) => return None,
                (false, false) => {
                    let q = x / y;
                    if s.as_ref().is_some_and(|s| *s != q) {
                        return None;
                    }
                    s = Some(q);
                }
            }
        }
    }
    s
}

impl ChevalleyBasis {
    /// Reads the structure constants off the adjoint module `V(theta)`.
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let np = rs.n_pos();
        let theta = Weight::new(rs.root_to_weight(rs.root(rs.highest_root())));
        let m = RepModule::build(rs, &theta)?;
        let ops = RootOperators::new(rs, &m);
        let mut offs = BTreeMap::new();
        let mut dim = 0;
        for (nu, d) in m.depths() {
            offs.insert(nu.clone(), dim);
            dim += d;
        }
        let signed = |k: usize| -> Vec<i64> {
            if k < np {
                rs.root(k).to_vec()
            } else {
                rs.root(k - np).iter().map(|x| -x).collect()
            }
        };
        let mats: Vec<Mat> = (0..2 * np)
            .map(|k| {
                if k < np {
                    let s: Vec<i64> = rs.root(k).iter().map(|x| -x).collect();
                    full_matrix(&m, &ops.e[k], &offs, dim, &s)
                } else {
                    full_matrix(&m, &ops.f[k - np], &offs, dim, rs.root(k - np))
                }
            })
            .collect();
        let index_of_signed = |v: &[i64]| -> Option<usize> {
            if let Some(k) = rs.index_of(v) {
                return Some(k);
            }
            let neg: Vec<i64> = v.iter().map(|x| -x).collect();
            rs.index_of(&neg).map(|k| k + np)
        };
        for a in 0..np {
            let br = mats[a].mul(&mats[a + np]).sub(&mats[a + np].mul(&mats[a]));
            let alpha = rs.root(a);
            let aa = rs.inner(alpha, alpha);
            for (nu, &o) in &offs {
                let mut h = Rat::zero();
                for i in 0..rs.rank() {
                    let mut ei = alloc::vec![0; rs.rank()];
                    ei[i] = 1;
                    let gi = rs.inner(&ei, &ei);
                    h += Rat::new((alpha[i] * gi * m.pairing(rs, nu, i)).into(), aa.into());
                }
                for k in o..o + m.weight_dim(nu) {
                    for c in 0..dim {
                        let want = if c == k { h.clone() } else { Rat::zero() };
                        if br.data[k][c] != want {
                            return Err(Error::Internal(format!("[e, f] is not the coroot for root {a}")));
                        }
                    }
                }
            }
        }
        let mut n = BTreeMap::new();
        for a in 0..2 * np {
            for b in 0..2 * np {
                let s: Vec<i64> = signed(a).iter().zip(signed(b)).map(|(x, y)| x + y).collect();
                let Some(c) = index_of_signed(&s) else { continue };
                let br = mats[a].mul(&mats[b]).sub(&mats[b].mul(&mats[a]));
                let k = ratio_of(&br, &mats[c])
                    .and_then(|r| rat_to_i64(&r))
                    .ok_or_else(|| Error::Internal(format!("bracket of signed roots {a}, {b} is not an integer multiple")))?;
                n.insert((a, b), k);
            }
        }
        Ok(ChevalleyBasis { n_pos: np, n })
    }

    /// `N_{a,b}`, zero when `a + b` is not a root.
    pub fn constant(&self, a: usize, b: usize) -> i64 {
        self.n.get(&(a, b)).copied().unwrap_or(0)
    }
}
