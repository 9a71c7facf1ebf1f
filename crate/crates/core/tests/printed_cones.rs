//! Computed quantum degree cones against the printed inequality tables.

use degcone_core::cone::*;
use degcone_core::qpbw::{quantum_degree_cone, Mode};
use degcone_core::roots::*;

fn rs(t: &str) -> RootSystem {
    RootSystem::new(CartanType::parse(t).unwrap())
}

fn order(rs: &RootSystem, w: &str) -> ConvexOrder {
    ConvexOrder::new(rs, &ReducedWord::parse(rs, w).unwrap()).unwrap()
}

fn by_label(rs: &RootSystem) -> impl Fn(&str) -> Option<usize> + '_ {
    move |s| parse_label(rs, s).ok()
}

fn printed(rs: &RootSystem, forms: &[&str], resolve: &dyn Fn(&str) -> Option<usize>) -> StrictCone {
    let forms = forms.iter().map(|f| parse_inequality(f, rs.n_pos(), resolve).unwrap()).collect();
    StrictCone::new(rs.labels(), forms).unwrap()
}

fn with_classical(rs: &RootSystem, c: StrictCone) -> StrictCone {
    c.intersect(&classical_cone(rs)).unwrap()
}

const G2_QUANTUM: &[&str] = &[
    "d_1+d_{11122}>2d_{112}",
    "d_{1112} + d_{11122} > 3d_{112}",
    "d_{1112} + d_{12} > 2d_{112}",
    "d_{1112} + d_{2} > d_{112} + d_{12}",
    "d_{112} + d_{2} > 2d_{12}",
    "d_{11122} + d_{2} > 3 d_{12}",
];

#[test]
fn g2_cones_match_table() {
    let g = rs("G2");
    let want = with_classical(&g, printed(&g, G2_QUANTUM, &by_label(&g)));
    for w in ["121212", "212121"] {
        let c = quantum_degree_cone(&g, &order(&g, w), Mode::Exact).unwrap();
        assert!(cone_equal(&c, &want).unwrap(), "{w}: {:?}", c.normalized().render());
        assert_eq!(c.normalized(), want.normalized(), "syntactic match for {w}");
    }
}

#[test]
fn a3_pair_is_contradictory() {
    let a = rs("A3");
    let c1 = quantum_degree_cone(&a, &order(&a, "121321"), Mode::Exact).unwrap();
    let c2 = quantum_degree_cone(&a, &order(&a, "132312"), Mode::Exact).unwrap();
    let r = by_label(&a);
    let f1 = parse_inequality("d_{1,2} + d_{2,3} > d_{2,2} + d_{1,3}", 6, &r).unwrap();
    let f2 = parse_inequality("d_{1,3} + d_{2,2} > d_{1,2} + d_{2,3}", 6, &r).unwrap();
    assert!(c1.forms.contains(&f1));
    assert!(c2.forms.contains(&f2));
    let both = c1.intersect(&c2).unwrap();
    match is_empty(&both) {
        Emptiness::Empty { certificate } => {
            assert!(verify_certificate(&both, &certificate));
            let used: Vec<&LinearForm> =
                both.forms.iter().zip(&certificate).filter(|(_, y)| **y != degcone_core::exact::rat(0)).map(|(f, _)| f).collect();
            assert_eq!(used, [&f1, &f2]);
        }
        e => panic!("{e:?}"),
    }
}

const B3_W1: &[&str] = &[
    "d_{1,1} + d_{1,\\overline{2}} > 2d_{1,3}",
    "d_{1,2} + d_{1,\\overline{2}} > d_{2,2} + 2d_{1,3}",
    "d_{1,2} + d_{1,\\overline{3}} > 2d_{1,3}",
    "d_{1,2} + d_{2,\\overline{3}} > d_{2,2} + d_{1,\\overline{3}}",
    "d_{1,2} + d_{2,\\overline{3}} > d_{1,3} + d_{1,2}",
    "d_{2,2} + d_{2,\\overline{3}} > 2 d_{2,3}",
    "d_{1,3} + d_{2,\\overline{3}} > d_{1,\\overline{3}} + d_{2,3}",
    "d_{1,\\overline{2}} + d_{2,\\overline{3}} > d_{1,\\overline{3}} + 2d_{2,3}",
    "d_{1,\\overline{2}} + d_{3,3} > d_{1,\\overline{3}} + d_{2,3}",
    "d_{1,2} + d_{2,3} > d_{1,3} + d_{2,2}",
];

const B3_W2: &[&str] = &[
    "d_{1,1} + d_{1,\\overline{2}} > 2d_{1,3}",
    "d_{1,1} + d_{1,\\overline{2}} > d_{1,2} + d_{1,\\overline{3}}",
    "d_{1,2} + d_{1,\\overline{3}} > 2d_{1,3}",
    "d_{1,\\overline{3}} + d_{2,3} > d_{1,3} + d_{2,\\overline{3}}",
    "d_{1,\\overline{3}} + d_{2,2} > d_{1,3} + d_{2,3}",
    "d_{1,\\overline{3}} + d_{2,2} > d_{1,2} + d_{2,\\overline{3}}",
    "d_{1,3} + d_{2,3} > d_{1,2} + d_{2,\\overline{3}}",
    "d_{2,\\overline{3}} + d_{2,2} > 2d_{2,3}",
    "d_{1,3} + d_{2,2} > d_{1,2} + d_{2,3}",
];

fn report(label: &str, computed: &StrictCone, want: &StrictCone) {
    let extra: Vec<String> = not_implied(computed, want).iter().map(|&k| computed.forms[k].render(&|i| computed.labels[i].clone())).collect();
    let missing: Vec<String> = not_implied(want, computed).iter().map(|&k| want.forms[k].render(&|i| want.labels[i].clone())).collect();
    println!("{label}: computed-not-implied {extra:?}; printed-not-implied {missing:?}");
}

#[test]
fn b3_cones() {
    let b = rs("B3");
    let r = by_label(&b);
    let c1 = quantum_degree_cone(&b, &order(&b, "121321323"), Mode::Exact).unwrap();
    let c2 = quantum_degree_cone(&b, &order(&b, "132321232"), Mode::Exact).unwrap();
    let p1 = with_classical(&b, printed(&b, B3_W1, &r));
    let p2 = with_classical(&b, printed(&b, B3_W2, &r));
    report("B3 w1", &c1, &p1);
    report("B3 w2", &c2, &p2);
    assert!(cone_equal(&c2, &p2).unwrap());
    assert!(is_empty(&c1.intersect(&c2).unwrap()).is_empty());
}

#[test]
fn b3_misprint_has_balanced_counterpart() {
    let b = rs("B3");
    let r = by_label(&b);
    let c1 = quantum_degree_cone(&b, &order(&b, "121321323"), Mode::Exact).unwrap();
    let fixed = parse_inequality("d_{1,2} + d_{2,\\overline{3}} > d_{1,3} + d_{2,3}", 9, &r).unwrap();
    assert!(c1.forms.contains(&fixed));
}

const C3_W1: &[&str] = &[
    "d_1 + d_5 > d_2 + d_4", "d_3+d_9 > 2d_4", "d_7 + d_9 > 2d_8", "d_3 + d_7 > 2d_5",
    "d_1 + d_7 > d_4 + d_6", "d_2+d_7 > d_5 + d_6", "d_2 + d_7 > d_4 + 2d_6", "d_3+d_7 > d_4+d_5+d_6",
    "d_3+d_7> 2d_4+2d_6", "d_3+d_8 > d_4 + d_5", "d_3+d_8 >2d_4 + d_6", "d_2 + d_8 > d_4 + d_6",
];

const C3_W2: &[&str] = &[
    "d_1 + d_5 > d_2 + d_4", "d_3 + d_9 > 2d_4", "d_7 + d_9 > 2d_8", "d_3 + d_7 > 2d_5",
    "d_1 + d_7 > d_2 + d_8", "d_4 + d_7 > d_5 + d_8", "d_3 + d_7 > d_2 + d_5 + d_8", "d_3 + d_7 > 2d_2 + 2d_8",
    "d_3 + d_6 > d_2 + d_5", "d_3 + d_6 > 2d_2 + d_8", "d_4 + d_7 > d_2 + d_8", "d_4 + d_6 > d_2 + d_8",
];

/// `d_k` is the k-th root of the reference order.
fn positional<'a>(pos: &'a [usize]) -> impl Fn(&str) -> Option<usize> + 'a {
    move |s| s.parse::<usize>().ok().filter(|&k| k >= 1 && k <= pos.len()).map(|k| pos[k - 1])
}

#[test]
fn c3_cones_and_minimal_points() {
    let c = rs("C3");
    let refo = reference_order(&c);
    let r = positional(&refo);
    let c1 = quantum_degree_cone(&c, &order(&c, "123212323"), Mode::Exact).unwrap();
    let c2 = quantum_degree_cone(&c, &order(&c, "132321232"), Mode::Exact).unwrap();
    let p1 = with_classical(&c, printed(&c, C3_W1, &r));
    let p2 = with_classical(&c, printed(&c, C3_W2, &r));
    report("C3 w1", &c1, &p1);
    report("C3 w2", &c2, &p2);
    assert!(cone_equal(&c1, &p1).unwrap());
    assert!(cone_equal(&c2, &p2).unwrap());
    assert!(is_empty(&c1.intersect(&c2).unwrap()).is_empty());
    let (_, pts) = minimal_lattice_points(&c1, 64).unwrap();
    let mut got: Vec<Vec<i64>> = pts.iter().map(|p| refo.iter().map(|&k| p.values[k]).collect()).collect();
    got.sort();
    let mut want = vec![
        vec![2, 1, 1, 1, 1, 1, 4, 4, 5],
        vec![3, 2, 2, 1, 1, 1, 3, 3, 4],
        vec![5, 4, 4, 1, 1, 1, 1, 1, 2],
        vec![4, 3, 3, 1, 1, 1, 2, 2, 3],
    ];
    want.sort();
    assert_eq!(got, want);
}

const D4_FORMS: &[&str] = &[
    "d_1 + d_3 > d_2", "d_1 + d_8 > d_5 + d_7", "d_1 + d_8 > d_6", "d_1 + d_9 > d_5", "d_1 + d_{12} > d_{11}",
    "d_2 + d_8 > d_3+d_5+d_7", "d_2 + d_8 > d_3 + d_6", "d_2 + d_8 > d_4 + d_7", "d_2 + d_9 > d_3 + d_5",
    "d_2 + d_9 > d_4", "d_2 + d_{10} > d_6", "d_2 + d_{12} > d_3 + d_{11}", "d_2 + d_{12} > d_7",
    "d_3 + d_5 > d_4", "d_3 + d_{10} > d_7 + d_9", "d_3 + d_{10} > d_8", "d_3 + d_{11} > d_7",
    "d_4 + d_{10} > d_5 + d_7 +d_9", "d_4 + d_{10} > d_5 + d_8", "d_4 + d_{10} > d_6 + d_9",
    "d_4 + d_{11} > d_5 + d_7", "d_4 + d_{11} > d_6", "d_4 + d_{12} > d_8", "d_5 + d_7 > d_6",
    "d_5 + d_{12} > d_9 + d_{11}", "d_5 + d_{12} > d_{10}", "d_6 + d_{12} > d_7 + d_9 + d_{11}", "d_6 + d_{12} > d_7 + d_{10}",
    "d_6 + d_{12} > d_8 + d_{11}", "d_7 + d_9 > d_8", "d_9 + d_{11} > d_{10}",
];

#[test]
fn d4_cone_matches_table() {
    let d = rs("D4");
    let o = order(&d, "212324212324");
    let r = positional(&o.betas);
    let want = printed(&d, D4_FORMS, &r);
    for mode in [Mode::Exact, Mode::Specialized { seed: 3 }] {
        let c = quantum_degree_cone(&d, &o, mode).unwrap();
        report("D4", &c, &want);
        assert_eq!(c.normalized(), want.normalized());
        let pt = [5, 5, 1, 2, 4, 1, 1, 2, 6, 10, 12, 20];
        let mut v = vec![0; 12];
        for t in 0..12 {
            v[o.betas[t]] = pt[t];
        }
        assert!(contains(&c, &DegreeFunction::new(v).unwrap()).unwrap());
    }
}
