use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

impl Family {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::InadmissibleType(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::G => rank == 2,
        };
        if !ok {
            let why = match family {
                Family::A => "type A needs rank >= 1",
                Family::B | Family::C => "types B and C need rank >= 2",
                Family::D => "type D needs rank >= 4",
                Family::G => "type G only exists in rank 2",
            };
            return Err(Error::InadmissibleType(format!("{family}{rank}: {why}")));
        }
        Ok(CartanType { family, rank })
    }

    /// Parses names like `C3` or `G2`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() < 2 {
            return Err(Error::InadmissibleType(format!("cannot parse {s:?}")));
        }
        let family = Family::parse(&s[..1])?;
        let rank = s[1..].parse::<usize>().map_err(|_| Error::InadmissibleType(format!("cannot parse {s:?}")))?;
        Self::new(family, rank)
    }

    /// `(alpha_i, alpha_j)` with short roots of squared length 2.
    pub fn gram_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..n {
                    g[i][i] = 2;
                    if i + 1 < n {
                        link(&mut g, i, i + 1, -1);
                    }
                }
            }
            Family::B => {
                for i in 0..n {
                    g[i][i] = if i + 1 < n { 4 } else { 2 };
                    if i + 1 < n {
                        link(&mut g, i, i + 1, -2);
                    }
                }
            }
            Family::C => {
                for i in 0..n {
                    g[i][i] = if i + 1 < n { 2 } else { 4 };
                    if i + 2 < n {
                        link(&mut g, i, i + 1, -1);
                    } else if i + 1 < n {
                        link(&mut g, i, i + 1, -2);
                    }
                }
            }
            Family::D => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 0..n - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, n - 3, n - 1, -1);
            }
            Family::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Cartan data and positive roots. Roots are integer vectors in the basis of
/// simple roots, stored by height and then in decreasing lexicographic order
/// of coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub ty: CartanType,
    /// `c_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`.
    pub cartan: Vec<Vec<i64>>,
    /// `d_i = (alpha_i, alpha_i) / 2`.
    pub sym: Vec<i64>,
    pub gram: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
    pub simple: Vec<usize>,
    index: BTreeMap<Vec<i64>, usize>,
}

pub fn build_root_system(ty: CartanType) -> RootSystem {
    RootSystem::new(ty)
}

impl RootSystem {
    pub fn new(ty: CartanType) -> Self {
        let n = ty.rank;
        let gram = ty.gram_matrix();
        let sym: Vec<i64> = (0..n).map(|i| gram[i][i] / 2).collect();
        let cartan: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect()).collect();

        // Grow positive roots by height using root strings.
        let mut known: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
        let mut layer: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut all = Vec::new();
        while !layer.is_empty() {
            for r in &layer {
                known.insert(r.clone(), ());
            }
            all.extend(layer.iter().cloned());
            let mut next: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
            for beta in &layer {
                for i in 0..n {
                    let mut p = 0;
                    let mut v = beta.clone();
                    loop {
                        v[i] -= 1;
                        if known.contains_key(&v) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                    let is_simple_i = beta.iter().enumerate().all(|(k, &c)| c == if k == i { 1 } else { 0 });
                    if !is_simple_i && p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        next.insert(up, ());
                    }
                }
            }
            layer = next.into_keys().collect();
        }
        all.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let index: BTreeMap<Vec<i64>, usize> = all.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        let simple = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                index[&v]
            })
            .collect();
        RootSystem { ty, cartan, sym, gram, roots: all, simple, index }
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// Number of positive roots.
    pub fn n_pos(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, k: usize) -> &[i64] {
        &self.roots[k]
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    pub fn height(&self, k: usize) -> i64 {
        self.roots[k].iter().sum()
    }

    /// Symmetric bilinear form on coordinate vectors in the simple-root basis.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// `<v, alpha_i^vee>`.
    pub fn coroot_pairing(&self, v: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|j| v[j] * self.cartan[i][j]).sum()
    }

    pub fn reflect(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let c = self.coroot_pairing(v, i);
        let mut w = v.to_vec();
        w[i] -= c;
        w
    }

    /// Fundamental-weight coordinates of a vector in the root basis.
    pub fn root_to_weight(&self, v: &[i64]) -> Vec<i64> {
        (0..self.rank()).map(|i| self.coroot_pairing(v, i)).collect()
    }

    /// Index of the highest root.
    pub fn highest_root(&self) -> usize {
        self.roots.len() - 1
    }

    /// Human readable label in the usual notation (`1,2`, `1,3̄`, `1211`, `11122`).
    pub fn label(&self, k: usize) -> String {
        super::labels::label(self, k, false)
    }

    /// Like [`RootSystem::label`] but with a trailing `b` instead of a macron.
    pub fn ascii_label(&self, k: usize) -> String {
        super::labels::label(self, k, true)
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.n_pos()).map(|k| self.label(k)).collect()
    }
}
