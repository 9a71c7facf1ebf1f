use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::mat::Mat;
use super::module::{Depth, RepModule};
use crate::exact::{rat, Rat};
use crate::roots::RootSystem;

/// How a non-simple positive root vector is obtained from smaller ones:
/// `alpha = alpha_i + beta` with `i` the smallest admissible index, and `p`
/// the largest integer with `beta - p alpha_i` a root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub i: usize,
    pub beta: usize,
    pub p: i64,
}

pub(crate) fn steps(rs: &RootSystem) -> Vec<Option<Step>> {
    (0..rs.n_pos())
        .map(|a| {
            let v = rs.root(a);
            if rs.height(a) == 1 {
                return None;
            }
            for i in 0..rs.rank() {
                let mut b = v.to_vec();
                b[i] -= 1;
                if let Some(beta) = rs.index_of(&b) {
                    let mut p = 0;
                    loop {
                        let mut c = b.clone();
                        c[i] -= p + 1;
                        if rs.index_of(&c).is_some() {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    return Some(Step { i, beta, p });
                }
            }
            unreachable!("every non-simple positive root has a simple predecessor")
        })
        .collect()
}

/// Matrices of `e_alpha` and `f_alpha` for every positive root on a module,
/// from the simple generators via `e_alpha = [e_i, e_beta]/(p+1)` and
/// `f_alpha = [f_beta, f_i]/(p+1)`. This is a Chevalley basis.
#[derive(Clone, Debug)]
pub struct RootOperators {
    /// `f[a][nu]`: `V_nu -> V_{nu + alpha_a}`.
    pub f: Vec<BTreeMap<Depth, Mat>>,
    /// `e[a][nu]`: `V_nu -> V_{nu - alpha_a}`.
    pub e: Vec<BTreeMap<Depth, Mat>>,
}

fn add(nu: &[i64], v: &[i64], s: i64) -> Depth {
    nu.iter().zip(v).map(|(a, b)| a + s * b).collect()
}

fn compose(outer: Option<&Mat>, inner: Option<&Mat>) -> Option<Mat> {
    Some(outer?.mul(inner?))
}

impl RootOperators {
    pub fn new(rs: &RootSystem, m: &RepModule) -> Self {
        let np = rs.n_pos();
        let mut f: Vec<BTreeMap<Depth, Mat>> = (0..np).map(|_| BTreeMap::new()).collect();
        let mut e: Vec<BTreeMap<Depth, Mat>> = (0..np).map(|_| BTreeMap::new()).collect();
        let st = steps(rs);
        let depths: Vec<(Depth, usize)> = m.depths().map(|(k, d)| (k.clone(), d)).collect();
        // canonical order is by height, so beta is done before alpha
        for a in 0..np {
            let alpha = rs.root(a).to_vec();
            match st[a] {
                None => {
                    let i = alpha.iter().position(|&c| c == 1).unwrap();
                    for (nu, _) in &depths {
                        if let Some(x) = m.f_simple(i, nu) {
                            f[a].insert(nu.clone(), x.clone());
                        }
                        if let Some(x) = m.e_simple(i, nu) {
                            e[a].insert(nu.clone(), x.clone());
                        }
                    }
                }
                Some(Step { i, beta, p }) => {
                    let si = simple(rs, i);
                    let ib = simple_index(rs, i);
                    let bv = rs.root(beta).to_vec();
                    let inv = Rat::new(1.into(), (p + 1).into());
                    for (nu, d) in &depths {
                        let up = add(nu, &alpha, 1);
                        let du = m.weight_dim(&up);
                        if du > 0 {
                            let t1 = compose(f[beta].get(&add(nu, &si, 1)), f[ib].get(nu));
                            let t2 = compose(f[ib].get(&add(nu, &bv, 1)), f[beta].get(nu));
                            let x = diff(t1, t2, du, *d).scale(&inv);
                            f[a].insert(nu.clone(), x);
                        }
                        let down = add(nu, &alpha, -1);
                        let dd = m.weight_dim(&down);
                        if dd > 0 {
                            let t1 = compose(e[ib].get(&add(nu, &bv, -1)), e[beta].get(nu));
                            let t2 = compose(e[beta].get(&add(nu, &si, -1)), e[ib].get(nu));
                            let x = diff(t1, t2, dd, *d).scale(&inv);
                            e[a].insert(nu.clone(), x);
                        }
                    }
                }
            }
        }
        RootOperators { f, e }
    }

    /// `f_alpha v` for `v` at depth `nu`, or `None` when the target space is zero.
    pub fn apply_f(&self, a: usize, nu: &[i64], v: &[Rat]) -> Option<Vec<Rat>> {
        self.f[a].get(nu).map(|m| m.apply(v))
    }
}

fn simple(rs: &RootSystem, i: usize) -> Vec<i64> {
    let mut v = alloc::vec![0; rs.rank()];
    v[i] = 1;
    v
}

fn simple_index(rs: &RootSystem, i: usize) -> usize {
    rs.index_of(&simple(rs, i)).unwrap()
}

fn diff(a: Option<Mat>, b: Option<Mat>, rows: usize, cols: usize) -> Mat {
    match (a, b) {
        (Some(a), Some(b)) => a.sub(&b),
        (Some(a), None) => a,
        (None, Some(b)) => b.scale(&rat(-1)),
        (None, None) => Mat::zero(rows, cols),
    }
}
