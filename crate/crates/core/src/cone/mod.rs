//! Strict polyhedral cones of degree functions: membership, emptiness with
//! Farkas certificates, semantic equality, interior and minimal lattice points.

mod fm;
mod form;
pub mod lp;
mod parse;

pub use fm::{fm_feasible, Ineq};
pub use form::{contains, DegreeFunction, LinearForm, StrictCone};
pub use parse::parse_inequality;

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{rat, Rat};
use crate::roots::RootSystem;
use crate::{Error, Result};
use lp::{Lp, LpResult, Sense};

/// `d_alpha + d_beta > d_{alpha+beta}` for every pair of positive roots whose
/// sum is a root.
pub fn classical_cone(rs: &RootSystem) -> StrictCone {
    let n = rs.n_pos();
    let mut forms = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let s: Vec<i64> = rs.root(a).iter().zip(rs.root(b)).map(|(x, y)| x + y).collect();
            if let Some(g) = rs.index_of(&s) {
                forms.push(LinearForm::from_relation(n, &[a, b], &[(g, 1)]).expect("nonzero form"));
            }
        }
    }
    StrictCone { labels: rs.labels(), forms }.normalized()
}

/// Outcome of an emptiness test.
#[derive(Clone, Debug, PartialEq)]
pub enum Emptiness {
    /// `y >= 0`, not all zero, with `sum_f y_f a_f <= 0` coordinatewise.
    Empty { certificate: Vec<Rat> },
    /// A rational point with `d >= 0` and every form `>= 1`.
    NonEmpty { witness: Vec<Rat> },
}

impl Emptiness {
    pub fn is_empty(&self) -> bool {
        matches!(self, Emptiness::Empty { .. })
    }
}

fn form_rows(c: &StrictCone) -> Lp {
    let mut lp = Lp::new(c.dim());
    for f in &c.forms {
        lp.push_i64(&f.coeffs, Sense::Ge, 1);
    }
    lp
}

fn certificate_lp(c: &StrictCone, forced_zero: &[usize]) -> Lp {
    let m = c.forms.len();
    let mut lp = Lp::new(m);
    lp.push(vec![Rat::one(); m], Sense::Eq, Rat::one());
    for k in 0..c.dim() {
        let row: Vec<Rat> = c.forms.iter().map(|f| rat(f.coeffs[k])).collect();
        lp.push(row, Sense::Le, Rat::zero());
    }
    for &z in forced_zero {
        let mut row = vec![Rat::zero(); m];
        row[z] = Rat::one();
        lp.push(row, Sense::Le, Rat::zero());
    }
    lp
}

/// Decides emptiness of `{d >= 0 : a_f . d > 0 for all f}`. Certificates have
/// minimal support among those found by greedy support reduction.
pub fn is_empty(c: &StrictCone) -> Emptiness {
    if let Some(w) = form_rows(c).feasible_point() {
        return Emptiness::NonEmpty { witness: w };
    }
    let mut zero = Vec::new();
    let mut y = certificate_lp(c, &zero).feasible_point().expect("alternative system is feasible");
    for f in 0..c.forms.len() {
        if y[f].is_zero() {
            continue;
        }
        zero.push(f);
        match certificate_lp(c, &zero).feasible_point() {
            Some(y2) => y = y2,
            None => {
                zero.pop();
            }
        }
    }
    Emptiness::Empty { certificate: integral(&y) }
}

fn integral(y: &[Rat]) -> Vec<Rat> {
    let l = y.iter().fold(num_bigint::BigInt::one(), |l, x| l.lcm(x.denom()));
    y.iter().map(|x| x * Rat::from_integer(l.clone())).collect()
}

/// Re-checks a certificate: nonnegative, nonzero, combination `<= 0`.
pub fn verify_certificate(c: &StrictCone, y: &[Rat]) -> bool {
    if y.len() != c.forms.len() || y.iter().any(|x| x.is_negative()) || y.iter().all(|x| x.is_zero()) {
        return false;
    }
    (0..c.dim()).all(|k| {
        let s: Rat = c.forms.iter().zip(y).map(|(f, yy)| yy * rat(f.coeffs[k])).sum();
        !s.is_positive()
    })
}

/// Re-checks a witness: `d >= 0` and every form strictly positive.
pub fn verify_witness(c: &StrictCone, w: &[Rat]) -> bool {
    w.len() == c.dim()
        && w.iter().all(|x| !x.is_negative())
        && c.forms.iter().all(|f| f.coeffs.iter().zip(w).map(|(a, x)| rat(*a) * x).sum::<Rat>().is_positive())
}

/// True iff `b . d > 0` holds on the whole cone.
pub fn implies(c: &StrictCone, b: &LinearForm) -> bool {
    let mut lp = form_rows(c);
    lp.push_i64(&b.coeffs, Sense::Le, 0);
    !lp.is_feasible()
}

/// Indices of forms of `a` not implied by the system of `b`.
pub fn not_implied(a: &StrictCone, b: &StrictCone) -> Vec<usize> {
    (0..a.forms.len()).filter(|&k| !implies(b, &a.forms[k])).collect()
}

/// Semantic equality of two cones over the same ambient coordinates.
pub fn cone_equal(a: &StrictCone, b: &StrictCone) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: b.dim() });
    }
    Ok(not_implied(a, b).is_empty() && not_implied(b, a).is_empty())
}

/// Support of a straightening relation between positions `i < j` of a
/// convex order: exponent vectors indexed by position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSupport {
    pub i: usize,
    pub j: usize,
    pub support: Vec<Vec<u32>>,
}

/// Inductive construction along the convex order: `d_{beta_1} = 1` and
/// `d_{beta_k}` is one more than the largest value forced by relations whose
/// upper index is `k`. `betas[t]` is the canonical index of `beta_{t+1}`.
pub fn interior_lattice_point(betas: &[usize], relations: &[RelationSupport]) -> DegreeFunction {
    let n = betas.len();
    let mut d = vec![0i64; n];
    for k in 0..n {
        let mut v = 1i64;
        for r in relations.iter().filter(|r| r.j == k) {
            for s in &r.support {
                let rhs: i64 = (0..n).filter(|&t| s[t] > 0).map(|t| s[t] as i64 * d[t]).sum();
                v = v.max(rhs - d[r.i] + 1);
            }
        }
        d[k] = v;
    }
    let mut out = vec![0i64; n];
    for t in 0..n {
        out[betas[t]] = d[t];
    }
    DegreeFunction { values: out }
}

/// All positive lattice points of the cone with the smallest coordinate sum,
/// by iterative deepening on the sum with exact LP bounds on each coordinate.
pub fn minimal_lattice_points(c: &StrictCone, bound: i64) -> Result<(i64, Vec<DegreeFunction>)> {
    let n = c.dim();
    let mut base = form_rows(c);
    for k in 0..n {
        let mut row = vec![0i64; n];
        row[k] = 1;
        base.push_i64(&row, Sense::Ge, 1);
    }
    let ones = vec![Rat::one(); n];
    let start = match base.minimize(&ones) {
        LpResult::Optimal { value, .. } => ceil(&value),
        LpResult::Infeasible => return Err(Error::InvalidArgument("cone is empty".into())),
        LpResult::Unbounded => unreachable!("sum is bounded below by zero"),
    };
    for s in start.max(0)..=bound {
        let mut lp = base.clone();
        lp.push(ones.clone(), Sense::Eq, rat(s));
        let mut found = Vec::new();
        let mut prefix = Vec::new();
        enumerate(&lp, &mut prefix, &mut found);
        if !found.is_empty() {
            found.sort();
            return Ok((s, found.into_iter().map(|values| DegreeFunction { values }).collect()));
        }
    }
    Err(Error::BoundReached(bound as u64))
}

fn ceil(r: &Rat) -> i64 {
    r.ceil().to_integer().to_i64().expect("small bound")
}

fn floor(r: &Rat) -> i64 {
    r.floor().to_integer().to_i64().expect("small bound")
}

/// Integer points of a bounded LP by coordinatewise exact bounds.
pub(crate) fn enumerate(lp: &Lp, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let n = lp.n;
    let k = prefix.len();
    if k == n {
        out.push(prefix.clone());
        return;
    }
    let mut fixed = lp.clone();
    for (t, &v) in prefix.iter().enumerate() {
        let mut row = vec![Rat::zero(); n];
        row[t] = Rat::one();
        fixed.push(row, Sense::Eq, rat(v));
    }
    let mut e = vec![Rat::zero(); n];
    e[k] = Rat::one();
    let lo = match fixed.minimize(&e) {
        LpResult::Optimal { value, .. } => ceil(&value),
        _ => return,
    };
    let hi = match fixed.maximize(&e) {
        LpResult::Optimal { value, .. } => floor(&value),
        _ => panic!("enumeration over an unbounded system"),
    };
    for v in lo..=hi {
        prefix.push(v);
        enumerate(lp, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{CartanType, RootSystem};

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(CartanType::parse(s).unwrap())
    }

    #[test]
    fn classical_cones() {
        let a2 = rs("A2");
        let c = classical_cone(&a2);
        assert_eq!(c.render(), ["d_{1,1} + d_{2,2} > d_{1,2}"]);
        for t in ["A3", "B3", "C3", "D4", "G2"] {
            let r = rs(t);
            let c = classical_cone(&r);
            assert!(contains(&c, &DegreeFunction::ones(r.n_pos())).unwrap());
        }
        assert_eq!(classical_cone(&rs("G2")).forms.len(), 5);
        assert_eq!(classical_cone(&rs("B3")).forms.len(), 10);
    }

    #[test]
    fn emptiness_and_certificates() {
        let c = classical_cone(&rs("C3"));
        match is_empty(&c) {
            Emptiness::NonEmpty { witness } => assert!(verify_witness(&c, &witness)),
            e => panic!("{e:?}"),
        }
        let a = StrictCone::new(
            alloc::vec!["x".into(), "y".into()],
            alloc::vec![LinearForm::new(alloc::vec![1, -1]).unwrap(), LinearForm::new(alloc::vec![-2, 2]).unwrap()],
        )
        .unwrap();
        match is_empty(&a) {
            Emptiness::Empty { certificate } => assert!(verify_certificate(&a, &certificate)),
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn minimal_points_a2() {
        let c = classical_cone(&rs("A2"));
        let (s, pts) = minimal_lattice_points(&c, 10).unwrap();
        assert_eq!(s, 3);
        assert_eq!(pts.iter().map(|p| p.values.clone()).collect::<Vec<_>>(), [[1, 1, 1]]);
    }

    #[test]
    fn interior_point_procedure() {
        // order alpha1 < alpha1+alpha2 < alpha2 in A2 with relation (1,3) -> (0,1,0)
        let rel = RelationSupport { i: 0, j: 2, support: alloc::vec![alloc::vec![0, 1, 0]] };
        let d = interior_lattice_point(&[0, 2, 1], &[rel]);
        assert_eq!(d.values, [1, 1, 1]);
    }
}
