use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::filtered::{check_degree, is_monomial_ideal, Exponent};
use crate::cone::DegreeFunction;
use crate::poly::{minkowski_power, minkowski_sum, LatticeSet};
use crate::roots::{parse_label, reference_order, weyl_dim, Family, RootSystem, Weight};
use crate::{Error, Result};

/// Which printed degree function to return.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeVariant {
    Global,
    Local,
}

fn from_reference(rs: &RootSystem, vals: &[i64]) -> DegreeFunction {
    let mut v = vec![0; rs.n_pos()];
    for (k, &a) in reference_order(rs).iter().enumerate() {
        v[a] = vals[k];
    }
    DegreeFunction { values: v }
}

/// The degree functions of the A_n, C_n, B3, D4 and G2 constructions.
pub fn canonical_degree(rs: &RootSystem, variant: DegreeVariant) -> Result<DegreeFunction> {
    let n = rs.rank() as i64;
    let fam = rs.ty.family;
    let unsupported = || Error::InvalidArgument(format!("no printed {variant:?} degree for {}", rs.ty));
    match (fam, variant) {
        (Family::A, DegreeVariant::Global) => {
            let values = (0..rs.n_pos())
                .map(|a| {
                    let r = rs.root(a);
                    let i = r.iter().position(|&c| c > 0).unwrap() as i64 + 1;
                    let j = r.iter().rposition(|&c| c > 0).unwrap() as i64 + 1;
                    (j - i + 1) * (n - j + 1)
                })
                .collect();
            Ok(DegreeFunction { values })
        }
        (Family::C, DegreeVariant::Global) => {
            let values = (0..rs.n_pos())
                .map(|a| {
                    let r = rs.root(a);
                    let i = r.iter().position(|&c| c > 0).unwrap() as i64 + 1;
                    match r.iter().position(|&c| c == 2) {
                        Some(p) => {
                            let j = p as i64 + 1;
                            j * (2 * n - i - j + 1)
                        }
                        None => {
                            let j = r.iter().rposition(|&c| c > 0).unwrap() as i64 + 1;
                            (2 * n - j) * (j - i + 1)
                        }
                    }
                })
                .collect();
            Ok(DegreeFunction { values })
        }
        (Family::B, DegreeVariant::Global) if n == 3 => Ok(from_reference(rs, &[4, 3, 3, 3, 1, 1, 4, 3, 2])),
        (Family::D, DegreeVariant::Global) if n == 4 => Ok(from_reference(rs, &[5, 5, 1, 2, 4, 1, 1, 2, 6, 10, 12, 20])),
        (Family::G, DegreeVariant::Global) => Ok(from_reference(rs, &[2, 1, 3, 1, 3, 2])),
        (Family::G, DegreeVariant::Local) => Ok(from_reference(rs, &[2, 2, 1, 2, 2, 5])),
        _ => Err(unsupported()),
    }
}

/// Degree `d_{i,j} = 2^{(n-1)-(j-i)}` in type A_n.
pub fn power_of_two_degree(rs: &RootSystem) -> Result<DegreeFunction> {
    if rs.ty.family != Family::A {
        return Err(Error::InadmissibleType(format!("{} is not of type A", rs.ty)));
    }
    let n = rs.rank() as i64;
    let values = (0..rs.n_pos()).map(|a| 1i64 << ((n - 1) - (rs.height(a) - 1))).collect();
    Ok(DegreeFunction { values })
}

/// Type A test: `d_a + d_b != d_c + d_e` for any four distinct positive
/// roots with `a + b = c + e`, where the common sum is not itself a root.
pub fn an_local_criterion(rs: &RootSystem, d: &DegreeFunction) -> Result<bool> {
    if rs.ty.family != Family::A {
        return Err(Error::InadmissibleType(format!("{} is not of type A", rs.ty)));
    }
    check_degree(rs, d)?;
    let np = rs.n_pos();
    let mut pairs: Vec<(Vec<i64>, usize, usize)> = Vec::new();
    for a in 0..np {
        for b in a + 1..np {
            let s: Vec<i64> = rs.root(a).iter().zip(rs.root(b)).map(|(x, y)| x + y).collect();
            if !rs.is_root(&s) {
                pairs.push((s, a, b));
            }
        }
    }
    for (k, (s, a, b)) in pairs.iter().enumerate() {
        for (t, c, e) in &pairs[k + 1..] {
            if s == t && a != c && a != e && b != c && b != e && d.values[*a] + d.values[*b] == d.values[*c] + d.values[*e] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Result of the Minkowski promotion test for one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalCheck {
    pub lambda: Weight,
    pub count: usize,
    pub dim: u128,
    pub equal: bool,
    /// Direct monomiality of `I^d(lambda)`, when `dim <= direct_bound`.
    pub direct: Option<bool>,
}

/// `S^d(varpi_i)` for every fundamental weight; fails unless all are monomial.
pub fn fundamental_sets(rs: &RootSystem, d: &DegreeFunction) -> Result<Vec<LatticeSet>> {
    (0..rs.rank())
        .map(|i| {
            let rep = is_monomial_ideal(rs, &Weight::fundamental(rs.rank(), i), d, None)?;
            if !rep.monomial {
                return Err(Error::InvalidArgument(format!("I^d(varpi_{}) is not monomial", i + 1)));
            }
            LatticeSet::from_points(rs.n_pos(), rep.basis().into_iter().map(to_i64))
        })
        .collect()
}

fn to_i64(s: Exponent) -> Vec<i64> {
    s.into_iter().map(|x| x as i64).collect()
}

/// Compares `#(S(varpi_1)^{+m_1} + ... + S(varpi_n)^{+m_n})` with `dim V(lambda)`.
pub fn minkowski_global_check(rs: &RootSystem, d: &DegreeFunction, lambda: &Weight, direct_bound: u128) -> Result<GlobalCheck> {
    let sets = fundamental_sets(rs, d)?;
    minkowski_check_with(rs, d, &sets, lambda, direct_bound)
}

/// Same as [`minkowski_global_check`] with precomputed fundamental sets.
pub fn minkowski_check_with(rs: &RootSystem, d: &DegreeFunction, sets: &[LatticeSet], lambda: &Weight, direct_bound: u128) -> Result<GlobalCheck> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    let mut acc = LatticeSet::origin(rs.n_pos());
    for (i, &m) in lambda.coords.iter().enumerate() {
        acc = minkowski_sum(&acc, &minkowski_power(&sets[i], m as u32))?;
    }
    let dim = weyl_dim(rs, lambda)?;
    let direct = if dim <= direct_bound { Some(is_monomial_ideal(rs, lambda, d, None)?.monomial) } else { None };
    Ok(GlobalCheck { lambda: lambda.clone(), count: acc.len(), dim, equal: acc.len() as u128 == dim, direct })
}

/// Canonical index of a root given by its printed label.
pub fn root_by_label(rs: &RootSystem, label: &str) -> Result<usize> {
    parse_label(rs, label)
}
