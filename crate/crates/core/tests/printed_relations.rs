//! The explicit straightening relations printed for A2, A3 and C2.

use degcone_core::exact::{Field, RatFunc};
use degcone_core::qpbw::exact_engine;
use degcone_core::roots::*;

fn rel(t: &str, w: &str, bi: &[i64], bj: &[i64]) -> (Vec<[i64; 0]>, Vec<(Vec<Vec<i64>>, RatFunc)>, i64) {
    let r = RootSystem::new(CartanType::parse(t).unwrap());
    let o = ConvexOrder::new(&r, &ReducedWord::parse(&r, w).unwrap()).unwrap();
    let pos = |v: &[i64]| o.position[r.index_of(v).unwrap()];
    let (i, j) = (pos(bi), pos(bj));
    assert!(i < j);
    let e = exact_engine(&r, &o).unwrap();
    let l = e.ls_relation(i, j).unwrap();
    let terms = l
        .terms
        .iter()
        .map(|(s, c)| {
            let mut roots = Vec::new();
            for (t, &m) in s.iter().enumerate() {
                for _ in 0..m {
                    roots.push(r.root(o.betas[t]).to_vec());
                }
            }
            (roots, c.clone())
        })
        .collect();
    (Vec::new(), terms, l.qpow)
}

fn q_minus_qinv() -> RatFunc {
    RatFunc::q().sub(&RatFunc::q_pow(-1))
}

#[test]
fn a2_relation() {
    // F_{1,1} F_{2,2} = q^{-1} F_{2,2} F_{1,1} - q^{-1} F_{1,2}, i.e.
    // F_{2,2} F_{1,1} = q F_{1,1} F_{2,2} + F_{1,2}
    let (_, t, qpow) = rel("A2", "121", &[1, 0], &[0, 1]);
    assert_eq!(qpow, 1);
    assert_eq!(t, [(vec![vec![1, 1]], RatFunc::one())]);
}

#[test]
fn a3_first_word() {
    // F_{23} F_{12} = F_{12} F_{23} - (q - q^{-1}) F_2 F_{123}
    let (_, t, qpow) = rel("A3", "121321", &[1, 1, 0], &[0, 1, 1]);
    assert_eq!(qpow, 0);
    assert_eq!(t.len(), 1);
    let mut roots = t[0].0.clone();
    roots.sort();
    assert_eq!(roots, [vec![0, 1, 0], vec![1, 1, 1]]);
    assert_eq!(t[0].1, q_minus_qinv().neg());
}

#[test]
fn a3_second_word() {
    // F'_{13} F'_{22} = F'_{22} F'_{13} + (q - q^{-1}) F'_{12} F'_{23}, where
    // alpha_{1,3} comes first in this order
    let (_, t, qpow) = rel("A3", "132312", &[1, 1, 1], &[0, 1, 0]);
    assert_eq!(qpow, 0);
    assert_eq!(t.len(), 1);
    let mut roots = t[0].0.clone();
    roots.sort();
    assert_eq!(roots, [vec![0, 1, 1], vec![1, 1, 0]]);
    assert_eq!(t[0].1, q_minus_qinv().neg());
}

#[test]
fn c2_relation() {
    // F_{1,1b} F_{2,2} = F_{2,2} F_{1,1b} + (1 - q^{-2}) F_{1,2}^{(2)}
    let (_, t, qpow) = rel("C2", "1212", &[2, 1], &[0, 1]);
    assert_eq!(qpow, 0);
    assert_eq!(t, [(vec![vec![1, 1], vec![1, 1]], RatFunc::q_pow(-2).sub(&RatFunc::one()))]);
}
