use degcone_core::cone::{classical_cone, contains, DegreeFunction};
use degcone_core::poly::{fflv_polytope, hull_lattice_points, lattice_points, minkowski_sum, sp4_polytope, DyckKind, LatticeSet};
use degcone_core::qpbw::{quantum_degree_cone, Mode};
use degcone_core::rep::*;
use degcone_core::roots::*;
use degcone_core::Error;
use proptest::prelude::*;

fn rs(t: &str) -> RootSystem {
    RootSystem::new(CartanType::parse(t).unwrap())
}

fn by_reference(r: &RootSystem, vals: &[i64]) -> DegreeFunction {
    let mut v = vec![0; r.n_pos()];
    for (k, &a) in reference_order(r).iter().enumerate() {
        v[a] = vals[k];
    }
    DegreeFunction::new(v).unwrap()
}

fn by_word(r: &RootSystem, word: &str, vals: &[i64]) -> DegreeFunction {
    let o = ConvexOrder::new(r, &ReducedWord::parse(r, word).unwrap()).unwrap();
    let mut v = vec![0; r.n_pos()];
    for (t, &a) in o.betas.iter().enumerate() {
        v[a] = vals[t];
    }
    DegreeFunction::new(v).unwrap()
}

fn fundamentals_monomial(r: &RootSystem, d: &DegreeFunction) -> Vec<bool> {
    (0..r.rank()).map(|i| is_monomial_ideal(r, &Weight::fundamental(r.rank(), i), d, None).unwrap().monomial).collect()
}

fn set_of(r: &RootSystem, rep: &MonomialReport) -> LatticeSet {
    LatticeSet::from_points(r.n_pos(), rep.basis().into_iter().map(|s| s.into_iter().map(|x| x as i64).collect())).unwrap()
}

fn exponent(r: &RootSystem, parts: &[(&str, u32)]) -> Vec<u32> {
    let mut s = vec![0; r.n_pos()];
    for (l, m) in parts {
        s[parse_label(r, l).unwrap()] += m;
    }
    s
}

#[test]
fn c2_small_degree_is_locally_monomial_with_sp4_bases() {
    let c2 = rs("C2");
    let d = by_reference(&c2, &[1, 1, 1, 2]);
    // x1..x4 of SP4 are alpha_11, alpha_12, alpha_{1,1b}, alpha_22
    let perm: Vec<usize> = ["1,1", "1,2", "1,1b", "2,2"].iter().map(|l| parse_label(&c2, l).unwrap()).collect();
    for (i, (m1, m2)) in [(1, 0), (0, 1)].into_iter().enumerate() {
        let rep = is_monomial_ideal(&c2, &Weight::fundamental(2, i), &d, None).unwrap();
        assert!(rep.monomial && rep.lemma);
        assert_eq!(set_of(&c2, &rep).permuted(&perm), lattice_points(&sp4_polytope(m1, m2)).unwrap());
    }
}

#[test]
fn a3_examples() {
    let a3 = rs("A3");
    let ones = DegreeFunction::ones(6);
    assert_eq!(fundamentals_monomial(&a3, &ones), [true, false, true]);
    assert!(!an_local_criterion(&a3, &ones).unwrap());
    for v in [[2, 2, 1, 1, 1, 1], [1, 1, 1, 1, 1, 2]] {
        let d = by_word(&a3, "123212", &v);
        assert_eq!(fundamentals_monomial(&a3, &d), [true, true, true]);
        assert!(an_local_criterion(&a3, &d).unwrap());
    }
    for n in 2..=4 {
        let r = rs(&format!("A{n}"));
        assert!(an_local_criterion(&r, &power_of_two_degree(&r).unwrap()).unwrap());
    }
    assert!(matches!(an_local_criterion(&rs("C2"), &DegreeFunction::ones(4)), Err(Error::InadmissibleType(_))));
}

#[test]
fn degree_outside_classical_cone_is_refused() {
    let a2 = rs("A2");
    let mut d = DegreeFunction::ones(3);
    d.values[a2.index_of(&[1, 1]).unwrap()] = 5;
    assert_eq!(is_monomial_ideal(&a2, &Weight::fundamental(2, 0), &d, None).unwrap_err(), Error::OutsideClassicalCone);
    let zero = DegreeFunction { values: vec![1, 0, 1] };
    assert!(is_monomial_ideal(&a2, &Weight::fundamental(2, 0), &zero, None).is_err());
}

#[test]
fn b3_printed_degree() {
    let b3 = rs("B3");
    let d = canonical_degree(&b3, DegreeVariant::Global).unwrap();
    assert_eq!(d, by_reference(&b3, &[4, 3, 3, 3, 1, 1, 4, 3, 2]));
    assert_eq!(fundamentals_monomial(&b3, &d), [true, true, true]);
    let rep = is_monomial_ideal(&b3, &Weight::fundamental(3, 1), &d, None).unwrap();
    assert!(rep.module.survives(&exponent(&b3, &[("1,2", 1), ("1,3b", 1)])));
    assert!(!rep.module.survives(&exponent(&b3, &[("1,3", 2)])));
}

#[test]
fn canonical_degrees() {
    let a3 = rs("A3");
    let d = canonical_degree(&a3, DegreeVariant::Global).unwrap();
    let at = |r: &RootSystem, d: &DegreeFunction, l: &str| d.values[parse_label(r, l).unwrap()];
    for (l, v) in [("1,1", 3), ("1,2", 4), ("1,3", 3), ("2,2", 2), ("2,3", 2), ("3,3", 1)] {
        assert_eq!(at(&a3, &d, l), v, "{l}");
    }
    let o = ConvexOrder::new(&a3, &ReducedWord::parse(&a3, "321323").unwrap()).unwrap();
    assert!(contains(&quantum_degree_cone(&a3, &o, Mode::Exact).unwrap(), &d).unwrap());
    let c2 = rs("C2");
    let d = canonical_degree(&c2, DegreeVariant::Global).unwrap();
    for (l, v) in [("1,1", 3), ("1,2", 4), ("1,1b", 3), ("2,2", 2)] {
        assert_eq!(at(&c2, &d, l), v, "{l}");
    }
    let g2 = rs("G2");
    assert_eq!(canonical_degree(&g2, DegreeVariant::Local).unwrap(), by_reference(&g2, &[2, 2, 1, 2, 2, 5]));
    assert_eq!(canonical_degree(&g2, DegreeVariant::Global).unwrap(), by_reference(&g2, &[2, 1, 3, 1, 3, 2]));
    assert!(canonical_degree(&rs("B4"), DegreeVariant::Global).is_err());
    assert!(canonical_degree(&a3, DegreeVariant::Local).is_err());
    for t in ["A2", "A3", "A4", "C2", "C3", "D4", "G2"] {
        let r = rs(t);
        let d = canonical_degree(&r, DegreeVariant::Global).unwrap();
        assert!(fundamentals_monomial(&r, &d).iter().all(|&m| m), "{t}");
    }
}

#[test]
fn canonical_bases_are_fflv() {
    for (t, k) in [("A2", DyckKind::A), ("A3", DyckKind::A), ("C2", DyckKind::C), ("C3", DyckKind::C)] {
        let r = rs(t);
        let d = canonical_degree(&r, DegreeVariant::Global).unwrap();
        for i in 0..r.rank() {
            let w = Weight::fundamental(r.rank(), i);
            let rep = is_monomial_ideal(&r, &w, &d, None).unwrap();
            assert_eq!(set_of(&r, &rep), lattice_points(&fflv_polytope(&r, k, &w).unwrap()).unwrap(), "{t} varpi_{}", i + 1);
        }
    }
}

#[test]
fn cn_obstruction() {
    for n in [2, 3] {
        let r = rs(&format!("C{n}"));
        let d = canonical_degree(&r, DegreeVariant::Global).unwrap();
        let at = |l: String| d.values[parse_label(&r, &l).unwrap()];
        let m = n - 1;
        assert!(at(format!("{m},{m}b")) + at(format!("{n},{n}")) < 2 * at(format!("{m},{n}")));
    }
}

#[test]
fn g2_local_basis_is_not_saturated() {
    let g2 = rs("G2");
    let d = canonical_degree(&g2, DegreeVariant::Local).unwrap();
    let r1 = is_monomial_ideal(&g2, &Weight::fundamental(2, 0), &d, None).unwrap();
    let r2 = is_monomial_ideal(&g2, &Weight::fundamental(2, 1), &d, None).unwrap();
    assert!(r1.monomial && r2.monomial);
    let s = set_of(&g2, &r2);
    assert_eq!(s.len(), 14);
    assert_eq!(hull_lattice_points(&s).len(), 16);
}

#[test]
fn d4_printed_degree() {
    let d4 = rs("D4");
    let d = canonical_degree(&d4, DegreeVariant::Global).unwrap();
    assert_eq!(fundamentals_monomial(&d4, &d), [true; 4]);
    let g = minkowski_global_check(&d4, &d, &Weight::new(vec![0, 2, 0, 0]), 1000).unwrap();
    assert_eq!((g.count, g.dim, g.equal, g.direct), (300, 300, true, Some(true)));
}

#[test]
fn a4_powers_of_two_fail_globally() {
    let a4 = rs("A4");
    let d = power_of_two_degree(&a4).unwrap();
    let g = minkowski_global_check(&a4, &d, &Weight::new(vec![1, 1, 1, 1]), 0).unwrap();
    assert_eq!((g.count, g.dim, g.equal), (1023, 1024, false));
}

#[test]
fn c2_global_promotion() {
    let c2 = rs("C2");
    let d = by_reference(&c2, &[1, 1, 1, 2]);
    let sets = fundamental_sets(&c2, &d).unwrap();
    for m1 in 0..=3 {
        for m2 in 0..=3 {
            let g = minkowski_check_with(&c2, &d, &sets, &Weight::new(vec![m1, m2]), 40).unwrap();
            assert!(g.equal, "({m1},{m2})");
            assert_ne!(g.direct, Some(false));
        }
    }
}

// Random degree functions restricted to the classical cone.
fn cone_point(r: &RootSystem, vals: &[i64]) -> Option<DegreeFunction> {
    let d = DegreeFunction::new(vals[..r.n_pos()].to_vec()).ok()?;
    contains(&classical_cone(r), &d).unwrap().then_some(d)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, max_global_rejects: 100_000, ..ProptestConfig::default() })]

    #[test]
    fn an_criterion_matches_direct_test(vals in proptest::collection::vec(1i64..7, 6), rank in 2usize..4) {
        let r = rs(&format!("A{rank}"));
        let d = cone_point(&r, &vals);
        prop_assume!(d.is_some());
        let d = d.unwrap();
        let direct = fundamentals_monomial(&r, &d).iter().all(|&m| m);
        prop_assert_eq!(an_local_criterion(&r, &d).unwrap(), direct);
    }

    #[test]
    fn corollary_implies_monomial(vals in proptest::collection::vec(1i64..9, 9), which in 0usize..3) {
        let t = ["A3", "C3", "B3"][which];
        let r = rs(t);
        let d = cone_point(&r, &vals);
        prop_assume!(d.is_some());
        let d = d.unwrap();
        for i in 0..r.rank() {
            let rep = is_monomial_ideal(&r, &Weight::fundamental(r.rank(), i), &d, None).unwrap();
            if rep.corollary || rep.lemma {
                prop_assert!(rep.monomial);
            }
            for w in &rep.module.weights {
                prop_assert!(w.survivors() >= w.dim);
                prop_assert_eq!(rep.monomial && w.survivors() != w.dim, false);
            }
        }
    }

    #[test]
    fn minkowski_promotion(vals in proptest::collection::vec(1i64..7, 6), i in 0usize..3, j in 0usize..3) {
        let r = rs("A3");
        let d = cone_point(&r, &vals);
        prop_assume!(d.is_some());
        let d = d.unwrap();
        let a = is_monomial_ideal(&r, &Weight::fundamental(3, i), &d, None).unwrap();
        let b = is_monomial_ideal(&r, &Weight::fundamental(3, j), &d, None).unwrap();
        prop_assume!(a.monomial && b.monomial);
        let lam = Weight::fundamental(3, i).add(&Weight::fundamental(3, j));
        let sum = minkowski_sum(&set_of(&r, &a), &set_of(&r, &b)).unwrap();
        if sum.len() as u128 == weyl_dim(&r, &lam).unwrap() {
            prop_assert!(is_monomial_ideal(&r, &lam, &d, None).unwrap().monomial);
        }
    }

    #[test]
    fn survivors_do_not_depend_on_the_convex_order(vals in proptest::collection::vec(1i64..7, 9), which in 0usize..2, i in 0usize..3) {
        let (t, w1, w2) = [("A3", "123121", "321323"), ("C3", "123123123", "321321321")][which];
        let r = rs(t);
        let d = cone_point(&r, &vals);
        prop_assume!(d.is_some());
        let d = d.unwrap();
        let o1 = ConvexOrder::new(&r, &ReducedWord::parse(&r, w1).unwrap()).unwrap();
        let o2 = ConvexOrder::new(&r, &ReducedWord::parse(&r, w2).unwrap()).unwrap();
        let lam = Weight::fundamental(3, i);
        let a = is_monomial_ideal(&r, &lam, &d, Some(&o1)).unwrap();
        let b = is_monomial_ideal(&r, &lam, &d, Some(&o2)).unwrap();
        prop_assert_eq!(a.basis(), b.basis());
        prop_assert_eq!(a.monomial, b.monomial);
    }
}
