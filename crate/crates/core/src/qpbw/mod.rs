//! Quantum group engine: normal-ordered words in `E_i, F_i, K^mu`, Lusztig
//! automorphisms, PBW root vectors, straightening relations and the quantum
//! degree cone of a reduced word.

mod algebra;
mod lusztig;
mod pbw;
mod serre;
mod shuffle;

pub use algebra::{Letter, QAlgebra, QElem, QWord, Term, Word};
pub use lusztig::{lusztig_t, lusztig_t_inv};
pub use pbw::{pbw_root_vectors, LSRelation, PbwEngine, PbwMonomial, RootVectors};
pub use serre::{free_words, serre_component, serre_relation};
pub use shuffle::{pack, unpack, Packed, ShVec, Shuffler};

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::{LinearForm, RelationSupport, StrictCone};
use crate::exact::{ratio, Rat, RatFunc};
use crate::roots::{ConvexOrder, RootSystem};
use crate::{Error, Result};

/// Scalars used for relation coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Coefficients in `Q(q)`.
    Exact,
    /// Coefficients evaluated at two seeded rationals `q0`; supports must agree.
    Specialized { seed: u64 },
}

impl Mode {
    pub const DEFAULT_SEED: u64 = 20240917;

    /// Exact for rank at most 2, specialized otherwise.
    pub fn default_for(rs: &RootSystem) -> Self {
        if rs.rank() <= 2 {
            Mode::Exact
        } else {
            Mode::Specialized { seed: Self::DEFAULT_SEED }
        }
    }
}

/// Two distinct evaluation points `a/b` with `a, b` in `[2, 97]`, `a != b`.
pub fn specialization_points(seed: u64) -> (Rat, Rat) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pick = |avoid: Option<&Rat>| loop {
        let a: i64 = rng.gen_range(2..=97);
        let b: i64 = rng.gen_range(2..=97);
        if a == b {
            continue;
        }
        let r = ratio(a, b);
        if Some(&r) != avoid && Some(&r.recip()) != avoid {
            return r;
        }
    };
    let x = pick(None);
    let y = pick(Some(&x));
    (x, y)
}

/// One relation with rendered coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationEntry {
    /// 0-based positions, `i < j`.
    pub i: usize,
    pub j: usize,
    pub qpow: i64,
    pub support: Vec<PbwMonomial>,
    /// Divided-power coefficients, or `nonzero@q0=...` in specialized mode.
    pub coeffs: Vec<String>,
}

/// All straightening relations of a convex order.
#[derive(Clone, Debug)]
pub struct RelationSet {
    pub order: ConvexOrder,
    pub mode: Mode,
    pub q0: Option<(Rat, Rat)>,
    pub entries: Vec<RelationEntry>,
}

impl RelationSet {
    pub fn supports(&self) -> Vec<RelationSupport> {
        self.entries.iter().map(|e| RelationSupport { i: e.i, j: e.j, support: e.support.clone() }).collect()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&RelationEntry> {
        self.entries.iter().find(|e| e.i == i && e.j == j)
    }
}

/// Exact relation engine for an order.
pub fn exact_engine(rs: &RootSystem, order: &ConvexOrder) -> Result<PbwEngine<RatFunc>> {
    let rv = pbw_root_vectors(rs, order)?;
    Ok(PbwEngine::new(rs, order, RatFunc::q(), &rv, |c| c.clone()))
}

/// Relation engine over `Q` at `q = q0`.
pub fn specialized_engine(rs: &RootSystem, order: &ConvexOrder, rv: &RootVectors, q0: &Rat) -> Result<PbwEngine<Rat>> {
    for v in &rv.vectors {
        for (_, c) in v.terms() {
            if c.eval(q0).is_none() {
                return Err(Error::InvalidArgument(format!("q0 = {q0} is a pole of a root vector coefficient")));
            }
        }
    }
    Ok(PbwEngine::new(rs, order, q0.clone(), rv, |c| c.eval(q0).expect("checked above")))
}

fn entries_of<F: crate::exact::Field>(rels: &[LSRelation<F>], show: impl Fn(&F) -> String) -> Vec<RelationEntry> {
    rels.iter()
        .map(|r| RelationEntry {
            i: r.i,
            j: r.j,
            qpow: r.qpow,
            support: r.terms.keys().cloned().collect(),
            coeffs: r.terms.values().map(&show).collect(),
        })
        .collect()
}

/// The relations for the pairs selected by `pairs` (all pairs if `None`).
pub fn compute_relations(
    rs: &RootSystem,
    order: &ConvexOrder,
    mode: Mode,
    pairs: Option<&[(usize, usize)]>,
) -> Result<RelationSet> {
    let n = order.len();
    let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let pairs = pairs.unwrap_or(&all);
    match mode {
        Mode::Exact => {
            let eng = exact_engine(rs, order)?;
            let rels = pairs.iter().map(|&(i, j)| eng.ls_relation(i, j)).collect::<Result<Vec<_>>>()?;
            Ok(RelationSet { order: order.clone(), mode, q0: None, entries: entries_of(&rels, |c| c.to_string()) })
        }
        Mode::Specialized { seed } => {
            let rv = pbw_root_vectors(rs, order)?;
            let (x, y) = specialization_points(seed);
            let ex = specialized_engine(rs, order, &rv, &x)?;
            let ey = specialized_engine(rs, order, &rv, &y)?;
            let mut entries = Vec::with_capacity(pairs.len());
            for &(i, j) in pairs {
                let a = ex.ls_relation(i, j)?;
                let b = ey.ls_relation(i, j)?;
                if a.qpow != b.qpow || a.support() != b.support() {
                    return Err(Error::SpecializationMismatch(
                        format!("relation ({}, {}) at q0 = {x}", i + 1, j + 1),
                        format!("q0 = {y}"),
                    ));
                }
                let tag = format!("nonzero@q0={x}");
                entries.extend(entries_of(&[a], |_| tag.clone()));
            }
            Ok(RelationSet { order: order.clone(), mode, q0: Some((x, y)), entries })
        }
    }
}

/// Forms `d_{beta_i} + d_{beta_j} > sum_k n_k d_{beta_k}` in canonical coordinates.
pub fn cone_from_relations(rs: &RootSystem, rels: &RelationSet) -> StrictCone {
    let betas = &rels.order.betas;
    let dim = rs.n_pos();
    let mut forms = Vec::new();
    for e in &rels.entries {
        for s in &e.support {
            let mut c = vec![0i64; dim];
            c[betas[e.i]] += 1;
            c[betas[e.j]] += 1;
            for (t, &m) in s.iter().enumerate() {
                c[betas[t]] -= m as i64;
            }
            forms.push(LinearForm::new(c).expect("support differs from the leading monomial"));
        }
    }
    StrictCone { labels: rs.labels(), forms }
}

/// The quantum degree cone of a convex order.
pub fn quantum_degree_cone(rs: &RootSystem, order: &ConvexOrder, mode: Mode) -> Result<StrictCone> {
    Ok(cone_from_relations(rs, &compute_relations(rs, order, mode, None)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::{classical_cone, cone_equal};
    use crate::roots::{CartanType, ReducedWord};
    use alloc::vec::Vec;

    fn setup(t: &str, w: &str) -> (RootSystem, ConvexOrder) {
        let rs = RootSystem::new(CartanType::parse(t).unwrap());
        let w = ReducedWord::parse(&rs, w).unwrap();
        let o = ConvexOrder::new(&rs, &w).unwrap();
        (rs, o)
    }

    #[test]
    fn points_are_distinct_and_deterministic() {
        let (a, b) = specialization_points(7);
        assert_ne!(a, b);
        assert_eq!(specialization_points(7), (a, b));
    }

    #[test]
    fn a2_quantum_is_classical() {
        for w in ["121", "212"] {
            let (rs, o) = setup("A2", w);
            let c = quantum_degree_cone(&rs, &o, Mode::Exact).unwrap();
            assert!(cone_equal(&c, &classical_cone(&rs)).unwrap());
        }
    }

    #[test]
    fn c2_relation_and_cone() {
        let (rs, o) = setup("C2", "1212");
        let rels = compute_relations(&rs, &o, Mode::Exact, None).unwrap();
        let c = cone_from_relations(&rs, &rels).normalized();
        let mut r: Vec<_> = c.render();
        r.sort();
        assert_eq!(r.len(), 3, "{r:?}");
    }
}
