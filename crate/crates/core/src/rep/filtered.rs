use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_traits::Zero;

use super::module::{Depth, RepModule};
use super::ops::RootOperators;
use crate::cone::{classical_cone, contains, DegreeFunction};
use crate::exact::{IncrementalBasis, Rat};
use crate::roots::{kostant_partitions, ConvexOrder, RootSystem, Weight};
use crate::{Error, Result};

/// Exponent vector of a monomial `f^s`, indexed by canonical root order.
pub type Exponent = Vec<u32>;

/// One monomial of a weight space with its filtration data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialEntry {
    pub s: Exponent,
    pub degree: i64,
    /// `f^s v_lambda != 0` in `V(lambda)`.
    pub nonzero: bool,
    /// Image of `f^s` is nonzero in the associated graded module.
    pub survives: bool,
}

#[derive(Clone, Debug)]
pub struct WeightReport {
    pub depth: Depth,
    pub dim: usize,
    /// Sorted by `(degree, s)`.
    pub entries: Vec<MonomialEntry>,
}

impl WeightReport {
    pub fn survivors(&self) -> usize {
        self.entries.iter().filter(|e| e.survives).count()
    }
}

/// `V(lambda)` with the filtration induced by a degree function.
#[derive(Clone, Debug)]
pub struct FilteredModule {
    pub lambda: Weight,
    pub d: DegreeFunction,
    pub weights: Vec<WeightReport>,
}

/// Outcome of the monomiality test.
#[derive(Clone, Debug)]
pub struct MonomialReport {
    pub monomial: bool,
    /// Hypothesis of the sufficient criterion on `T_mu` held for every weight.
    pub lemma: bool,
    /// Hypotheses of the distinct-degree corollary held for every weight.
    pub corollary: bool,
    pub module: FilteredModule,
}

impl MonomialReport {
    /// `S(lambda)`: all survivors.
    pub fn basis(&self) -> Vec<Exponent> {
        self.module.weights.iter().flat_map(|w| w.entries.iter().filter(|e| e.survives).map(|e| e.s.clone())).collect()
    }
}

impl FilteredModule {
    pub fn entry(&self, s: &[u32]) -> Option<&MonomialEntry> {
        self.weights.iter().flat_map(|w| &w.entries).find(|e| e.s == s)
    }

    /// Whether `f^s` acts nontrivially on the associated graded highest weight vector.
    pub fn survives(&self, s: &[u32]) -> bool {
        self.entry(s).is_some_and(|e| e.survives)
    }
}

pub(crate) fn check_degree(rs: &RootSystem, d: &DegreeFunction) -> Result<()> {
    if d.values.len() != rs.n_pos() {
        return Err(Error::DimensionMismatch { expected: rs.n_pos(), got: d.values.len() });
    }
    if d.values.iter().any(|&x| x <= 0) || !contains(&classical_cone(rs), d)? {
        return Err(Error::OutsideClassicalCone);
    }
    Ok(())
}

/// Evaluates `f^s v_lambda` with factors in the convex order: the factor of
/// the first root in the order is applied last.
struct Evaluator<'a> {
    ops: &'a RootOperators,
    positions: Vec<usize>,
    rs: &'a RootSystem,
    memo: HashMap<Exponent, Option<Vec<Rat>>>,
}

impl Evaluator<'_> {
    fn eval(&mut self, s: &[u32]) -> Option<Vec<Rat>> {
        if let Some(v) = self.memo.get(s) {
            return v.clone();
        }
        let first = self.positions.iter().copied().find(|&a| s[a] > 0);
        let out = match first {
            None => Some(vec![Rat::from_integer(1.into())]),
            Some(a) => {
                let mut rest = s.to_vec();
                rest[a] -= 1;
                let v = self.eval(&rest);
                v.and_then(|v| {
                    let nu = depth_of(self.rs, &rest);
                    let w = self.ops.apply_f(a, &nu, &v)?;
                    (!w.iter().all(Zero::is_zero)).then_some(w)
                })
            }
        };
        self.memo.insert(s.to_vec(), out.clone());
        out
    }
}

fn depth_of(rs: &RootSystem, s: &[u32]) -> Depth {
    let mut nu = vec![0i64; rs.rank()];
    for (a, &m) in s.iter().enumerate() {
        for (x, r) in nu.iter_mut().zip(rs.root(a)) {
            *x += m as i64 * r;
        }
    }
    nu
}

/// Decides whether `I^d(lambda)` is a monomial ideal. For every weight and
/// every exponent `s` of that weight, `s` survives iff `f^s v_lambda` is not in
/// the span of the `f^t v_lambda` with smaller degree; monomial iff the
/// survivors of every weight number `r_mu`.
pub fn is_monomial_ideal(rs: &RootSystem, lambda: &Weight, d: &DegreeFunction, order: Option<&ConvexOrder>) -> Result<MonomialReport> {
    check_degree(rs, d)?;
    let m = RepModule::build(rs, lambda)?;
    let ops = RootOperators::new(rs, &m);
    monomial_on(rs, &m, &ops, d, order)
}

pub(crate) fn monomial_on(
    rs: &RootSystem,
    m: &RepModule,
    ops: &RootOperators,
    d: &DegreeFunction,
    order: Option<&ConvexOrder>,
) -> Result<MonomialReport> {
    let positions: Vec<usize> = match order {
        Some(o) => o.betas.clone(),
        None => (0..rs.n_pos()).collect(),
    };
    let roots: Vec<Vec<i64>> = (0..rs.n_pos()).map(|a| rs.root(a).to_vec()).collect();
    let mut ev = Evaluator { ops, positions, rs, memo: HashMap::new() };
    let mut weights = Vec::new();
    let (mut monomial, mut lemma, mut corollary) = (true, true, true);
    let depths: Vec<(Depth, usize)> = m.depths().map(|(k, v)| (k.clone(), v)).collect();
    for (nu, r) in depths {
        let mut items: Vec<(i64, Exponent, Option<Vec<Rat>>)> = kostant_partitions(&roots, &nu)
            .into_iter()
            .map(|s| {
                let v = ev.eval(&s);
                (d.degree(&s), s, v)
            })
            .collect();
        items.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let mut lower = IncrementalBasis::<Rat>::new(r);
        let mut entries = Vec::with_capacity(items.len());
        let mut k = 0;
        while k < items.len() {
            let deg = items[k].0;
            let mut end = k;
            while end < items.len() && items[end].0 == deg {
                end += 1;
            }
            for (dg, s, v) in &items[k..end] {
                let survives = v.as_ref().is_some_and(|v| !lower.contains(v));
                entries.push(MonomialEntry { s: s.clone(), degree: *dg, nonzero: v.is_some(), survives });
            }
            for (_, _, v) in &items[k..end] {
                if let Some(v) = v {
                    lower.insert(v.clone());
                }
            }
            k = end;
        }
        // T_mu along the sorted nonzero list, and the two sufficient criteria
        let nz: Vec<&(i64, Exponent, Option<Vec<Rat>>)> = items.iter().filter(|x| x.2.is_some()).collect();
        let mut t = IncrementalBasis::<Rat>::new(r);
        let mut t_degs: Vec<i64> = Vec::new();
        for (dg, _, v) in &nz {
            let v = v.as_ref().unwrap();
            if t.insert(v.clone()).is_some() {
                t_degs.push(*dg);
            } else if t_degs.iter().any(|x| x >= dg) {
                lemma = false;
            }
        }
        let degs: Vec<i64> = nz.iter().map(|x| x.0).collect();
        let ok = if r == 1 {
            degs.len() < 2 || degs[0] < degs[1]
        } else {
            let mut u = degs.clone();
            u.dedup();
            u.len() == degs.len()
        };
        corollary &= ok;
        let w = WeightReport { depth: nu, dim: r, entries };
        if w.survivors() != r {
            monomial = false;
        }
        weights.push(w);
    }
    let module = FilteredModule { lambda: m.lambda.clone(), d: d.clone(), weights };
    Ok(MonomialReport { monomial, lemma, corollary, module })
}

/// Survivor counts per depth, for reports.
pub fn survivor_table(rep: &MonomialReport) -> BTreeMap<Depth, (usize, usize)> {
    rep.module.weights.iter().map(|w| (w.depth.clone(), (w.survivors(), w.dim))).collect()
}
