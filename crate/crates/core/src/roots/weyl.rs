use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::ToPrimitive;

use super::RootSystem;
use crate::exact::{rat, Rat};
use crate::{Error, Result};

/// A weight in the basis of fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(n: usize) -> Self {
        Weight { coords: alloc::vec![0; n] }
    }

    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        w.coords[i] = 1;
        w
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// `|lambda| = sum of coefficients`.
    pub fn size(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }
}

/// A reduced expression of the longest element, letters are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
}

impl ReducedWord {
    /// Validates that `letters` is a reduced expression of `w0`.
    pub fn new(rs: &RootSystem, letters: Vec<usize>) -> Result<Self> {
        let w = ReducedWord { letters };
        w.betas(rs)?;
        Ok(w)
    }

    /// Parses a digit string of 1-based letters such as `1212`, optionally
    /// comma or space separated.
    pub fn parse(rs: &RootSystem, s: &str) -> Result<Self> {
        let s = s.trim();
        let parts: Vec<&str> = if s.contains(',') || s.contains(' ') {
            s.split([',', ' ']).filter(|p| !p.is_empty()).collect()
        } else {
            s.split("").filter(|p| !p.is_empty()).collect()
        };
        let mut letters = Vec::with_capacity(parts.len());
        for p in parts {
            let p = p.trim_start_matches('s');
            let k: usize = p.parse().map_err(|_| Error::InvalidArgument(format!("bad letter {p:?} in word {s:?}")))?;
            if k == 0 || k > rs.rank() {
                return Err(Error::InvalidArgument(format!("letter {k} out of range in word {s:?}")));
            }
            letters.push(k - 1);
        }
        Self::new(rs, letters)
    }

    /// Positive roots `beta_t = s_{i_1} ... s_{i_{t-1}} (alpha_{i_t})` as indices.
    fn betas(&self, rs: &RootSystem) -> Result<Vec<usize>> {
        let n = rs.n_pos();
        if self.letters.len() != n {
            return Err(Error::NotReduced(format!("length {} but N = {}", self.letters.len(), n)));
        }
        let perms = Perms::new(rs);
        let mut w: Vec<usize> = (0..2 * n).collect();
        let mut betas = Vec::with_capacity(n);
        for (t, &i) in self.letters.iter().enumerate() {
            if i >= rs.rank() {
                return Err(Error::NotReduced(format!("letter {} out of range", i + 1)));
            }
            let b = w[rs.simple[i]];
            if b >= n {
                return Err(Error::NotReduced(format!("{} is not reduced at position {}", self, t + 1)));
            }
            betas.push(b);
            w = perms.right_multiply(&w, i);
        }
        Ok(betas)
    }

    /// 1-based digit string.
    pub fn digits(&self) -> String {
        let sep = self.letters.iter().any(|&i| i >= 9);
        let mut s = String::new();
        for (k, &i) in self.letters.iter().enumerate() {
            if sep && k > 0 {
                s.push(',');
            }
            s.push_str(&format!("{}", i + 1));
        }
        s
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits())
    }
}

/// Simple reflections as permutations of the roots: index `k < N` is the
/// positive root `k`, index `N + k` is its negative.
#[derive(Clone, Debug)]
pub(crate) struct Perms {
    n: usize,
    s: Vec<Vec<usize>>,
}

impl Perms {
    pub(crate) fn new(rs: &RootSystem) -> Self {
        let n = rs.n_pos();
        let mut s = Vec::with_capacity(rs.rank());
        for i in 0..rs.rank() {
            let mut p = alloc::vec![0; 2 * n];
            for k in 0..n {
                let v = rs.reflect(i, rs.root(k));
                let img = match rs.index_of(&v) {
                    Some(j) => j,
                    None => {
                        let m: Vec<i64> = v.iter().map(|x| -x).collect();
                        n + rs.index_of(&m).expect("reflection of a root is a root")
                    }
                };
                p[k] = img;
                let neg = if img >= n { img - n } else { img + n };
                p[n + k] = neg;
            }
            s.push(p);
        }
        Perms { n, s }
    }

    /// `w s_i` as a permutation.
    pub(crate) fn right_multiply(&self, w: &[usize], i: usize) -> Vec<usize> {
        self.s[i].iter().map(|&x| w[x]).collect()
    }

    pub(crate) fn is_positive(&self, x: usize) -> bool {
        x < self.n
    }
}

pub fn convex_order(rs: &RootSystem, w: &ReducedWord) -> Result<ConvexOrder> {
    ConvexOrder::new(rs, w)
}

/// The total order `beta_1 < ... < beta_N` on positive roots induced by a
/// reduced word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexOrder {
    pub word: ReducedWord,
    /// `betas[t]` is the index of `beta_{t+1}` among the canonical roots.
    pub betas: Vec<usize>,
    /// Inverse of `betas`.
    pub position: Vec<usize>,
}

impl ConvexOrder {
    pub fn new(rs: &RootSystem, w: &ReducedWord) -> Result<Self> {
        let betas = w.betas(rs)?;
        let mut position = alloc::vec![usize::MAX; betas.len()];
        for (t, &b) in betas.iter().enumerate() {
            if position[b] != usize::MAX {
                return Err(Error::NotReduced(format!("{w}: root repeated")));
            }
            position[b] = t;
        }
        Ok(ConvexOrder { word: w.clone(), betas, position })
    }

    pub fn len(&self) -> usize {
        self.betas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.betas.is_empty()
    }

    /// Coordinates of `beta_{t+1}`.
    pub fn beta<'a>(&self, rs: &'a RootSystem, t: usize) -> &'a [i64] {
        rs.root(self.betas[t])
    }

    /// Checks that every root sum lies strictly between its summands.
    pub fn is_convex(&self, rs: &RootSystem) -> bool {
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                let s: Vec<i64> = self.beta(rs, i).iter().zip(self.beta(rs, j)).map(|(a, b)| a + b).collect();
                if let Some(g) = rs.index_of(&s) {
                    let p = self.position[g];
                    if !(i < p && p < j) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Depth-first enumeration of reduced words of `w0`, in lexicographic order
/// of letters.
pub struct ReducedWords<'a> {
    rs: &'a RootSystem,
    perms: Perms,
    stack: Vec<(Vec<usize>, usize)>,
    word: Vec<usize>,
    remaining: Option<usize>,
}

pub fn reduced_words_of_w0(rs: &RootSystem, limit: Option<usize>) -> ReducedWords<'_> {
    let n = rs.n_pos();
    ReducedWords { rs, perms: Perms::new(rs), stack: alloc::vec![((0..2 * n).collect(), 0)], word: Vec::new(), remaining: limit }
}

impl Iterator for ReducedWords<'_> {
    type Item = ReducedWord;

    fn next(&mut self) -> Option<ReducedWord> {
        if self.remaining == Some(0) {
            return None;
        }
        let n = self.rs.n_pos();
        let rank = self.rs.rank();
        loop {
            let depth = self.word.len();
            let top = self.stack.last_mut()?;
            if depth == n {
                let out = ReducedWord { letters: self.word.clone() };
                self.stack.pop();
                self.word.pop();
                if let Some(r) = self.remaining.as_mut() {
                    *r -= 1;
                }
                return Some(out);
            }
            let w = &top.0;
            let found = (top.1..rank).find(|&i| self.perms.is_positive(w[self.rs.simple[i]]));
            match found {
                Some(i) => {
                    top.1 = i + 1;
                    let next = self.perms.right_multiply(w, i);
                    self.stack.push((next, 0));
                    self.word.push(i);
                }
                None => {
                    self.stack.pop();
                    if self.stack.is_empty() {
                        return None;
                    }
                    self.word.pop();
                }
            }
        }
    }
}

/// Weyl dimension formula.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<u128> {
    if lambda.coords.len() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: lambda.coords.len() });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    let mut num = rat(1);
    for a in &rs.roots {
        // (lambda, alpha) = sum_k c_k lambda_k d_k
        let lr: i64 = (0..rs.rank()).map(|k| a[k] * (lambda.coords[k] + 1) * rs.sym[k]).sum();
        let r: i64 = (0..rs.rank()).map(|k| a[k] * rs.sym[k]).sum();
        num *= Rat::new(lr.into(), r.into());
    }
    if !num.is_integer() {
        return Err(Error::Internal("Weyl dimension is not an integer".into()));
    }
    num.to_integer().to_u128().ok_or_else(|| Error::Internal("Weyl dimension overflow".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{CartanType, Family};
    use alloc::collections::BTreeSet;
    use alloc::vec;
    use alloc::string::ToString;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(CartanType::new(f, n).unwrap())
    }

    fn words(r: &RootSystem) -> BTreeSet<String> {
        reduced_words_of_w0(r, None).map(|w| w.digits()).collect()
    }

    /// Oracle: all words of length N over the alphabet, kept when every
    /// prefix step is a length increase (checked by the sign of w(alpha_i)).
    fn brute_words(r: &RootSystem) -> BTreeSet<String> {
        let n = r.n_pos();
        let rank = r.rank();
        let mut out = BTreeSet::new();
        let total = rank.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let letters: Vec<usize> = (0..n).map(|_| {
                let l = c % rank;
                c /= rank;
                l
            }).collect();
            if ReducedWord::new(r, letters.clone()).is_ok() {
                out.insert(ReducedWord { letters }.digits());
            }
        }
        out
    }

    #[test]
    fn rank_two_words() {
        let a2 = rs(Family::A, 2);
        assert_eq!(words(&a2), ["121", "212"].iter().map(|s| s.to_string()).collect());
        let g2 = rs(Family::G, 2);
        assert_eq!(words(&g2), ["121212", "212121"].iter().map(|s| s.to_string()).collect());
        assert_eq!(words(&g2), brute_words(&g2));
    }

    #[test]
    fn a3_has_sixteen_words() {
        let a3 = rs(Family::A, 3);
        let w = words(&a3);
        assert_eq!(w.len(), 16);
        assert_eq!(w, brute_words(&a3));
    }

    #[test]
    fn limit_is_respected() {
        let d4 = rs(Family::D, 4);
        assert_eq!(reduced_words_of_w0(&d4, Some(5)).count(), 5);
    }

    #[test]
    fn convex_orders_of_examples() {
        let a3 = rs(Family::A, 3);
        assert!(ReducedWord::parse(&a3, "121321").is_ok());
        let w = ReducedWord::parse(&a3, "123212").unwrap();
        let o = convex_order(&a3, &w).unwrap();
        let labels: Vec<String> = o.betas.iter().map(|&b| a3.label(b)).collect();
        assert_eq!(labels, ["1,1", "1,2", "1,3", "3,3", "2,3", "2,2"]);

        let a2 = rs(Family::A, 2);
        let o = convex_order(&a2, &ReducedWord::parse(&a2, "121").unwrap()).unwrap();
        let v: Vec<Vec<i64>> = o.betas.iter().map(|&b| a2.root(b).to_vec()).collect();
        assert_eq!(v, [vec![1, 0], vec![1, 1], vec![0, 1]]);

        let c2 = rs(Family::C, 2);
        let o = convex_order(&c2, &ReducedWord::parse(&c2, "1212").unwrap()).unwrap();
        let labels: Vec<String> = o.betas.iter().map(|&b| c2.ascii_label(b)).collect();
        assert_eq!(labels, ["1,1", "1,1b", "1,2", "2,2"]);
    }

    #[test]
    fn non_reduced_rejected() {
        let a2 = rs(Family::A, 2);
        assert!(ReducedWord::parse(&a2, "112").is_err());
        assert!(ReducedWord::parse(&a2, "12").is_err());
        assert!(ReducedWord::parse(&a2, "131").is_err());
    }

    #[test]
    fn orders_sum_to_two_rho_and_are_convex() {
        for t in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::G, 2), (Family::D, 4)] {
            let r = rs(t.0, t.1);
            let two_rho: Vec<i64> = (0..r.rank()).map(|i| r.roots.iter().map(|v| v[i]).sum()).collect();
            for w in reduced_words_of_w0(&r, Some(200)) {
                let o = convex_order(&r, &w).unwrap();
                let s: Vec<i64> = (0..r.rank()).map(|i| o.betas.iter().map(|&b| r.root(b)[i]).sum()).collect();
                assert_eq!(s, two_rho);
                assert!(o.is_convex(&r));
                let mut seen: Vec<usize> = o.betas.clone();
                seen.sort();
                assert_eq!(seen, (0..r.n_pos()).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn weyl_dimensions() {
        let c2 = rs(Family::C, 2);
        assert_eq!(weyl_dim(&c2, &Weight::new(alloc::vec![1, 1])).unwrap(), 16);
        let g2 = rs(Family::G, 2);
        assert_eq!(weyl_dim(&g2, &Weight::new(alloc::vec![0, 1])).unwrap(), 14);
        assert_eq!(weyl_dim(&g2, &Weight::new(alloc::vec![1, 0])).unwrap(), 7);
        let a1 = rs(Family::A, 1);
        assert_eq!(weyl_dim(&a1, &Weight::new(alloc::vec![1])).unwrap(), 2);
        let d4 = rs(Family::D, 4);
        let dims: Vec<u128> = (0..4).map(|i| weyl_dim(&d4, &Weight::fundamental(4, i)).unwrap()).collect();
        assert_eq!(dims, [8, 28, 8, 8]);
        assert!(weyl_dim(&d4, &Weight::new(alloc::vec![1, -1, 0, 0])).is_err());
        let b3 = rs(Family::B, 3);
        let dims: Vec<u128> = (0..3).map(|i| weyl_dim(&b3, &Weight::fundamental(3, i)).unwrap()).collect();
        assert_eq!(dims, [7, 21, 8]);
        let c3 = rs(Family::C, 3);
        let dims: Vec<u128> = (0..3).map(|i| weyl_dim(&c3, &Weight::fundamental(3, i)).unwrap()).collect();
        assert_eq!(dims, [6, 14, 14]);
    }
}
