//! Classical side: Chevalley bases, simple modules, degree filtrations and
//! monomiality of the defining ideals.

mod chevalley;
mod degrees;
mod filtered;
mod mat;
mod module;
mod ops;

pub use chevalley::ChevalleyBasis;
pub use degrees::{
    an_local_criterion, canonical_degree, fundamental_sets, minkowski_check_with, minkowski_global_check, power_of_two_degree,
    root_by_label, DegreeVariant, GlobalCheck,
};
pub use filtered::{is_monomial_ideal, survivor_table, Exponent, FilteredModule, MonomialEntry, MonomialReport, WeightReport};
pub use mat::Mat;
pub use module::{Depth, RepModule};
pub use ops::{RootOperators, Step};

use crate::roots::{RootSystem, Weight};
use crate::Result;

/// `V(lambda)` from its highest weight.
pub fn build_irrep(rs: &RootSystem, lambda: &Weight) -> Result<RepModule> {
    RepModule::build(rs, lambda)
}

/// Structure constants of a Chevalley basis of the Lie algebra.
pub fn chevalley_basis(rs: &RootSystem) -> Result<ChevalleyBasis> {
    ChevalleyBasis::new(rs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{weyl_dim, CartanType, RootSystem, Weight};
    use alloc::vec;
    use alloc::vec::Vec;

    fn rs(t: &str) -> RootSystem {
        RootSystem::new(CartanType::parse(t).unwrap())
    }

    #[test]
    fn module_dimensions() {
        for (t, lam, want) in [
            ("C2", vec![1, 0], 4),
            ("G2", vec![0, 1], 14),
            ("G2", vec![1, 0], 7),
            ("D4", vec![1, 0, 0, 0], 8),
            ("D4", vec![0, 1, 0, 0], 28),
            ("D4", vec![0, 0, 1, 0], 8),
            ("D4", vec![0, 0, 0, 1], 8),
            ("B3", vec![0, 0, 1], 8),
            ("A2", vec![2, 1], 15),
        ] {
            let r = rs(t);
            let m = build_irrep(&r, &Weight::new(lam.clone())).unwrap();
            assert_eq!(m.dim(), want, "{t} {lam:?}");
        }
    }

    #[test]
    fn highest_weight_vector_is_killed_and_weights_are_w_invariant() {
        let r = rs("B3");
        let lam = Weight::new(vec![1, 1, 0]);
        let m = build_irrep(&r, &lam).unwrap();
        assert_eq!(m.dim() as u128, weyl_dim(&r, &lam).unwrap());
        for i in 0..3 {
            assert!(m.e_simple(i, &[0, 0, 0]).is_none());
        }
        // weight multiplicities are invariant under every simple reflection
        let mult: Vec<(Vec<i64>, usize)> = m.depths().map(|(nu, d)| (m.weight_at(&r, nu).coords, d)).collect();
        for i in 0..3 {
            for (mu, d) in &mult {
                let mut s = mu.clone();
                let c = mu[i];
                let col = r.root_to_weight(&{
                    let mut e = vec![0; 3];
                    e[i] = 1;
                    e
                });
                for (x, y) in s.iter_mut().zip(&col) {
                    *x -= c * y;
                }
                let found = mult.iter().find(|(w, _)| *w == s).map(|x| x.1);
                assert_eq!(found, Some(*d));
            }
        }
    }

    #[test]
    fn chevalley_constants() {
        let a1 = chevalley_basis(&rs("A1")).unwrap();
        assert!(a1.n.is_empty());
        let a2r = rs("A2");
        let a2 = chevalley_basis(&a2r).unwrap();
        let np = a2r.n_pos();
        assert_eq!(a2.constant(np, np + 1).abs(), 1);
        let g = rs("G2");
        let cb = chevalley_basis(&g).unwrap();
        let np = g.n_pos();
        let a1 = g.index_of(&[1, 0]).unwrap();
        let a12 = g.index_of(&[1, 1]).unwrap();
        assert_eq!(cb.constant(np + a1, np + a12).abs(), 2);
        for t in ["A3", "B3", "C3", "G2", "D4"] {
            let r = rs(t);
            let cb = chevalley_basis(&r).unwrap();
            check_constants(&r, &cb);
        }
    }

    fn signed(r: &RootSystem, k: usize) -> Vec<i64> {
        let np = r.n_pos();
        if k < np {
            r.root(k).to_vec()
        } else {
            r.root(k - np).iter().map(|x| -x).collect()
        }
    }

    fn index(r: &RootSystem, v: &[i64]) -> Option<usize> {
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        r.index_of(v).or_else(|| r.index_of(&neg).map(|k| k + r.n_pos()))
    }

    /// |N| = p + 1 from root strings, antisymmetry, and Jacobi on all triples
    /// with no pair summing to zero.
    fn check_constants(r: &RootSystem, cb: &ChevalleyBasis) {
        let m = 2 * r.n_pos();
        for a in 0..m {
            for b in 0..m {
                let (x, y) = (signed(r, a), signed(r, b));
                let s: Vec<i64> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
                if index(r, &s).is_none() {
                    assert_eq!(cb.constant(a, b), 0);
                    continue;
                }
                let mut p = 0;
                loop {
                    let t: Vec<i64> = y.iter().zip(&x).map(|(q, u)| q - (p + 1) * u).collect();
                    if index(r, &t).is_some() {
                        p += 1;
                    } else {
                        break;
                    }
                }
                assert_eq!(cb.constant(a, b).abs(), p + 1);
                assert_eq!(cb.constant(a, b), -cb.constant(b, a));
            }
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let (x, y, z) = (signed(r, a), signed(r, b), signed(r, c));
                    let add = |u: &[i64], v: &[i64]| u.iter().zip(v).map(|(p, q)| p + q).collect::<Vec<i64>>();
                    if add(&x, &y).iter().all(|&t| t == 0) || add(&y, &z).iter().all(|&t| t == 0) || add(&z, &x).iter().all(|&t| t == 0) {
                        continue;
                    }
                    // [[a,b],c] + [[b,c],a] + [[c,a],b], all land on x+y+z
                    let term = |a: usize, b: usize, c: usize| -> i64 {
                        let s = add(&signed(r, a), &signed(r, b));
                        match index(r, &s) {
                            Some(ab) => cb.constant(a, b) * cb.constant(ab, c),
                            None => 0,
                        }
                    };
                    assert_eq!(term(a, b, c) + term(b, c, a) + term(c, a, b), 0);
                }
            }
        }
    }
}
