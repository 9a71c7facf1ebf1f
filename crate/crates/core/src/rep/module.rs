use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::mat::Mat;
use crate::exact::{rat, IncrementalBasis, Rat};
use crate::roots::{weyl_dim, RootSystem, Weight};
use crate::{Error, Result};

/// Depth `nu = lambda - mu` of a weight, in simple-root coordinates.
pub type Depth = Vec<i64>;

/// A finite-dimensional simple module `V(lambda)` given by the matrices of
/// the simple generators between weight spaces.
#[derive(Clone, Debug)]
pub struct RepModule {
    pub lambda: Weight,
    rank: usize,
    dims: BTreeMap<Depth, usize>,
    /// `f[i][nu]`: `V_nu -> V_{nu + alpha_i}`.
    f: Vec<BTreeMap<Depth, Mat>>,
    /// `e[i][nu]`: `V_nu -> V_{nu - alpha_i}`.
    e: Vec<BTreeMap<Depth, Mat>>,
}

fn shifted(nu: &[i64], i: usize, by: i64) -> Depth {
    let mut v = nu.to_vec();
    v[i] += by;
    v
}

impl RepModule {
    /// Builds `V(lambda)` one weight space at a time. A vector of weight
    /// `mu != lambda` vanishes iff every `e_i` kills it, so `V_mu` is
    /// identified with the span of the `e`-images of the vectors `f_j b`.
    pub fn build(rs: &RootSystem, lambda: &Weight) -> Result<Self> {
        let n = rs.rank();
        if lambda.coords.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: lambda.coords.len() });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant);
        }
        let mut m = RepModule { lambda: lambda.clone(), rank: n, dims: BTreeMap::new(), f: vec![BTreeMap::new(); n], e: vec![BTreeMap::new(); n] };
        m.dims.insert(vec![0; n], 1);
        let mut level: Vec<Depth> = vec![vec![0; n]];
        while !level.is_empty() {
            let mut next: Vec<Depth> = Vec::new();
            for nu in &level {
                for j in 0..n {
                    let t = shifted(nu, j, 1);
                    if !next.contains(&t) {
                        next.push(t);
                    }
                }
            }
            next.sort();
            let mut kept = Vec::new();
            for nu in next {
                if m.add_weight_space(rs, &nu) {
                    kept.push(nu);
                }
            }
            level = kept;
        }
        let want = weyl_dim(rs, lambda)?;
        if m.dim() as u128 != want {
            return Err(Error::Internal(format!("V({:?}) has dimension {} but the Weyl formula gives {want}", lambda.coords, m.dim())));
        }
        Ok(m)
    }

    /// `<mu, alpha_i^vee>` for `mu = lambda - nu`.
    pub fn pairing(&self, rs: &RootSystem, nu: &[i64], i: usize) -> i64 {
        self.lambda.coords[i] - rs.coroot_pairing(nu, i)
    }

    fn add_weight_space(&mut self, rs: &RootSystem, nu: &Depth) -> bool {
        let n = self.rank;
        // blocks of the e-image: one per i with V_{nu - alpha_i} != 0
        let mut offs = vec![usize::MAX; n];
        let mut total = 0;
        for i in 0..n {
            if nu[i] > 0 {
                if let Some(&d) = self.dims.get(&shifted(nu, i, -1)) {
                    offs[i] = total;
                    total += d;
                }
            }
        }
        if total == 0 {
            return false;
        }
        let mut basis = IncrementalBasis::<Rat>::new(total);
        let mut images: Vec<Vec<Rat>> = Vec::new();
        // candidate (j, b) -> Some(basis index) or coordinates
        let mut cand: Vec<(usize, usize, core::result::Result<usize, Vec<Rat>>)> = Vec::new();
        for j in 0..n {
            if offs[j] == usize::MAX {
                continue;
            }
            let src = shifted(nu, j, -1);
            let dsrc = self.dims[&src];
            for b in 0..dsrc {
                let mut img = vec![Rat::zero(); total];
                for i in 0..n {
                    if offs[i] == usize::MAX {
                        continue;
                    }
                    // e_i f_j b = f_j e_i b + delta_ij h_i b
                    if let Some(ei) = self.e[i].get(&src) {
                        let col: Vec<Rat> = ei.data.iter().map(|r| r[b].clone()).collect();
                        let mid = shifted(&src, i, -1);
                        if let Some(fj) = self.f[j].get(&mid) {
                            for (k, x) in fj.apply(&col).into_iter().enumerate() {
                                img[offs[i] + k] += x;
                            }
                        }
                    }
                    if i == j {
                        img[offs[i] + b] += rat(self.pairing(rs, &src, i));
                    }
                }
                match basis.insert(img.clone()) {
                    Some(k) => {
                        images.push(img);
                        cand.push((j, b, Ok(k)));
                    }
                    None => cand.push((j, b, Err(basis.coordinates(&img).expect("in span")))),
                }
            }
        }
        let dim = images.len();
        if dim == 0 {
            return false;
        }
        self.dims.insert(nu.clone(), dim);
        for j in 0..n {
            if offs[j] == usize::MAX {
                continue;
            }
            let src = shifted(nu, j, -1);
            let mut mat = Mat::zero(dim, self.dims[&src]);
            for (cj, b, r) in &cand {
                if *cj != j {
                    continue;
                }
                match r {
                    Ok(k) => mat.data[*k][*b] = Rat::one(),
                    Err(c) => {
                        // dependent candidates are combinations of the earlier basis vectors only
                        for (k, x) in c.iter().enumerate() {
                            mat.data[k][*b] = x.clone();
                        }
                    }
                }
            }
            self.f[j].insert(src, mat);
        }
        for i in 0..n {
            if offs[i] == usize::MAX {
                continue;
            }
            let d = self.dims[&shifted(nu, i, -1)];
            let mut mat = Mat::zero(d, dim);
            for (k, img) in images.iter().enumerate() {
                for r in 0..d {
                    mat.data[r][k] = img[offs[i] + r].clone();
                }
            }
            self.e[i].insert(nu.clone(), mat);
        }
        true
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dims.values().sum()
    }

    /// Dimension `r_mu` of the weight space at depth `nu`.
    pub fn weight_dim(&self, nu: &[i64]) -> usize {
        self.dims.get(nu).copied().unwrap_or(0)
    }

    /// Depths with nonzero weight spaces, in increasing order.
    pub fn depths(&self) -> impl Iterator<Item = (&Depth, usize)> {
        self.dims.iter().map(|(k, v)| (k, *v))
    }

    /// The weight `lambda - nu` in fundamental-weight coordinates.
    pub fn weight_at(&self, rs: &RootSystem, nu: &[i64]) -> Weight {
        Weight::new((0..self.rank).map(|i| self.pairing(rs, nu, i)).collect())
    }

    pub fn f_simple(&self, i: usize, nu: &[i64]) -> Option<&Mat> {
        self.f[i].get(nu)
    }

    pub fn e_simple(&self, i: usize, nu: &[i64]) -> Option<&Mat> {
        self.e[i].get(nu)
    }
}

