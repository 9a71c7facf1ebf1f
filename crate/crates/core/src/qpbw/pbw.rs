use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::algebra::{QAlgebra, QElem};
use super::lusztig::lusztig_t;
use super::shuffle::{Packed, ShVec, Shuffler};
use crate::exact::{Field, IncrementalBasis, QParam, RatFunc};
use crate::roots::{kostant_partitions, ConvexOrder, RootSystem};
use crate::{Error, Result};

/// Exponents of a PBW monomial `F_{beta_1}^{s_1} ... F_{beta_N}^{s_N}`,
/// indexed by position in the convex order.
pub type PbwMonomial = Vec<u32>;

/// Exact PBW root vectors of a convex order.
#[derive(Clone, Debug)]
pub struct RootVectors {
    pub vectors: Vec<QElem<RatFunc>>,
}

/// `F_{beta_t} = T_{i_1} ... T_{i_{t-1}} (F_{i_t})`, computed exactly.
///
/// Every partial product `T_{i_k} ... T_{i_{t-1}}(F_{i_t})` lies in the
/// negative half; an E- or K-letter surviving normal ordering is an error.
pub fn pbw_root_vectors(rs: &RootSystem, order: &ConvexOrder) -> Result<RootVectors> {
    let qp = QParam::new(RatFunc::q());
    let alg = QAlgebra::new(rs, &qp);
    let letters = &order.word.letters;
    let mut vectors = Vec::with_capacity(letters.len());
    for t in 0..letters.len() {
        let mut y = alg.f(letters[t]);
        for k in (0..t).rev() {
            y = lusztig_t(&alg, letters[k], &y);
            if !y.is_pure_f() {
                return Err(Error::Internal(format!("root vector {} retains E or K letters", t + 1)));
            }
        }
        let want: Vec<i64> = order.beta(rs, t).iter().map(|x| -x).collect();
        if y.is_zero() || y.weight().as_deref() != Some(want.as_slice()) {
            return Err(Error::Internal(format!("root vector {} has wrong weight", t + 1)));
        }
        vectors.push(y);
    }
    Ok(RootVectors { vectors })
}

/// A Levendorskii-Soibelman relation
/// `F_{beta_j} F_{beta_i} - q^{qpow} F_{beta_i} F_{beta_j} = sum_s c_s F^{(s)}`
/// with divided-power monomials `F^{(s)}` supported strictly between `i` and `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct LSRelation<F> {
    /// 0-based positions in the convex order, `i < j`.
    pub i: usize,
    pub j: usize,
    pub qpow: i64,
    pub terms: BTreeMap<PbwMonomial, F>,
}

impl<F> LSRelation<F> {
    /// The exponent string `(n_{i+1}, ..., n_{j-1})` of a support vector.
    pub fn middle(&self, s: &PbwMonomial) -> Vec<u32> {
        s[self.i + 1..self.j].to_vec()
    }

    pub fn support(&self) -> BTreeSet<PbwMonomial> {
        self.terms.keys().cloned().collect()
    }
}

/// PBW machinery for a fixed convex order over a chosen scalar field.
pub struct PbwEngine<F: Field> {
    rs: RootSystem,
    order: ConvexOrder,
    qp: QParam<F>,
    betas: Vec<Vec<i64>>,
    vectors: Vec<QElem<F>>,
    phi: Vec<ShVec<F>>,
}

impl<F: Field> PbwEngine<F> {
    /// `convert` maps exact coefficients into `F` compatibly with `q -> q`.
    pub fn new(rs: &RootSystem, order: &ConvexOrder, q: F, roots: &RootVectors, convert: impl Fn(&RatFunc) -> F) -> Self {
        let qp = QParam::new(q);
        let vectors: Vec<QElem<F>> = roots.vectors.iter().map(|v| v.map_coeffs(&convert)).collect();
        let sh = Shuffler::new(rs, &qp);
        let phi = vectors.iter().map(|v| sh.phi(v)).collect();
        let betas = (0..order.len()).map(|t| order.beta(rs, t).to_vec()).collect();
        PbwEngine { rs: rs.clone(), order: order.clone(), qp, betas, vectors, phi }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn order(&self) -> &ConvexOrder {
        &self.order
    }

    pub fn qparam(&self) -> &QParam<F> {
        &self.qp
    }

    pub fn root_vectors(&self) -> &[QElem<F>] {
        &self.vectors
    }

    fn shuffler(&self) -> Shuffler<'_, F> {
        Shuffler::new(&self.rs, &self.qp)
    }

    /// `[n]_{q_beta}!` with `q_beta = q^{(beta, beta)/2}`.
    pub fn root_qfact(&self, t: usize, n: u32) -> F {
        let b = &self.betas[t];
        self.qp.qfact(n, self.rs.inner(b, b) / 2)
    }

    /// Scale converting a coefficient of `F^s` into one of `F^{(s)}`.
    pub fn divided_scale(&self, s: &[u32]) -> F {
        let mut c = F::one();
        for (t, &m) in s.iter().enumerate() {
            if m > 1 {
                c.mul_assign(&self.root_qfact(t, m));
            }
        }
        c
    }

    fn monomial_image(&self, s: &[u32], memo: &mut HashMap<Vec<u32>, ShVec<F>>) -> ShVec<F> {
        if let Some(v) = memo.get(s) {
            return v.clone();
        }
        let out = match s.iter().position(|&m| m > 0) {
            None => ShVec::unit(),
            Some(k) => {
                let mut rest = s.to_vec();
                rest[k] -= 1;
                let tail = self.monomial_image(&rest, memo);
                self.shuffler().star(&self.phi[k], &tail)
            }
        };
        memo.insert(s.to_vec(), out.clone());
        out
    }

    /// Shuffle image of the (non-divided) PBW monomial `F^s`.
    pub fn phi_monomial(&self, s: &[u32]) -> ShVec<F> {
        self.monomial_image(s, &mut HashMap::new())
    }

    /// Shuffle image of an element of the negative half.
    pub fn phi(&self, x: &QElem<F>) -> ShVec<F> {
        self.shuffler().phi(x)
    }

    fn solve(&self, target: &ShVec<F>, candidates: &[PbwMonomial]) -> Result<Option<Vec<F>>> {
        let mut memo = HashMap::new();
        let images: Vec<ShVec<F>> = candidates.iter().map(|s| self.monomial_image(s, &mut memo)).collect();
        let mut words: BTreeSet<Packed> = target.terms.keys().copied().collect();
        for im in &images {
            words.extend(im.terms.keys().copied());
        }
        let index: BTreeMap<Packed, usize> = words.iter().enumerate().map(|(k, w)| (*w, k)).collect();
        let dense = |v: &ShVec<F>| {
            let mut d = vec![F::zero(); index.len()];
            for (w, c) in &v.terms {
                d[index[w]] = c.clone();
            }
            d
        };
        let mut basis = IncrementalBasis::new(index.len());
        for im in &images {
            if basis.insert(dense(im)).is_none() {
                return Err(Error::Internal("PBW monomials are linearly dependent".into()));
            }
        }
        Ok(basis.coordinates(&dense(target)))
    }

    /// All PBW monomials of weight `nu` (simple-root coordinates).
    pub fn monomials_of_weight(&self, nu: &[i64]) -> Vec<PbwMonomial> {
        kostant_partitions(&self.betas, nu)
    }

    /// Coefficients `c_s` with `x = sum_s c_s F^s` (non-divided monomials).
    pub fn pbw_expand(&self, x: &QElem<F>) -> Result<BTreeMap<PbwMonomial, F>> {
        if x.is_zero() {
            return Ok(BTreeMap::new());
        }
        if !x.is_pure_f() {
            return Err(Error::InvalidArgument("pbw_expand needs an element of the negative half".into()));
        }
        let w = x.weight().ok_or_else(|| Error::InvalidArgument("element is not homogeneous".into()))?;
        let nu: Vec<i64> = w.iter().map(|a| -a).collect();
        let cands = self.monomials_of_weight(&nu);
        let c = self
            .solve(&self.phi(x), &cands)?
            .ok_or_else(|| Error::Internal("PBW expansion is inconsistent".into()))?;
        Ok(cands.into_iter().zip(c).filter(|(_, v)| !v.is_zero()).collect())
    }

    /// The straightening relation for `F_{beta_j} F_{beta_i}`, `i < j` (0-based).
    pub fn ls_relation(&self, i: usize, j: usize) -> Result<LSRelation<F>> {
        let n = self.order.len();
        if !(i < j && j < n) {
            return Err(Error::InvalidArgument(format!("need i < j < {n}, got ({i}, {j})")));
        }
        let nu: Vec<i64> = self.betas[i].iter().zip(&self.betas[j]).map(|(a, b)| a + b).collect();
        let mut lead = vec![0u32; n];
        lead[i] = 1;
        lead[j] = 1;
        let mut cands = vec![lead.clone()];
        let inner: Vec<Vec<i64>> = self.betas[i + 1..j].to_vec();
        for p in kostant_partitions(&inner, &nu) {
            let mut s = vec![0u32; n];
            s[i + 1..j].copy_from_slice(&p);
            cands.push(s);
        }
        let target = self.shuffler().star(&self.phi[j], &self.phi[i]);
        let coords = self.solve(&target, &cands)?.ok_or_else(|| {
            Error::Internal(format!("relation ({}, {}) has support outside the positions between them", i + 1, j + 1))
        })?;
        let qpow = (-40..=40)
            .find(|&e| self.qp.pow(e) == coords[0])
            .ok_or_else(|| Error::Internal(format!("leading coefficient of relation ({}, {}) is not a power of q", i + 1, j + 1)))?;
        let mut terms = BTreeMap::new();
        for (s, c) in cands.into_iter().zip(coords).skip(1) {
            if !c.is_zero() {
                let d = c.mul(&self.divided_scale(&s));
                terms.insert(s, d);
            }
        }
        Ok(LSRelation { i, j, qpow, terms })
    }

    /// Relations for all pairs `i < j`.
    pub fn all_relations(&self) -> Result<Vec<LSRelation<F>>> {
        let n = self.order.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                out.push(self.ls_relation(i, j)?);
            }
        }
        Ok(out)
    }
}
