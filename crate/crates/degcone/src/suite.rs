//! Ground-truth checks behind `reproduce-paper`, grouped by acceptance
//! criterion and by section key.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use degcone_core::cone::*;
use degcone_core::exact::{rat, Field, RatFunc};
use degcone_core::poly::*;
use degcone_core::qpbw::{compute_relations, cone_from_relations, exact_engine, Mode, RelationSet};
use degcone_core::rep::*;
use degcone_core::roots::*;
use degcone_core::{Error, Result};

use crate::cache;
use crate::config::{in_order, order_of, weights_up_to, RunConfig};
use crate::tables::*;

/// Outcome of one check.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: &'static str,
    pub pass: bool,
    pub detail: String,
    pub data: Value,
}

impl Check {
    pub fn json(&self) -> Value {
        json!({ "id": self.id, "pass": self.pass, "detail": self.detail, "data": self.data })
    }
}

/// A group of checks with one verdict.
#[derive(Clone, Debug)]
pub struct Group {
    pub key: String,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl Group {
    pub fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn json(&self) -> Value {
        json!({
            "key": self.key,
            "title": self.title,
            "pass": self.pass(),
            "checks": self.checks.iter().map(Check::json).collect::<Vec<_>>(),
        })
    }
}

type Outcome = Result<(bool, String, Value)>;
type CheckFn = fn(&Suite) -> Outcome;

pub const CRITERIA: [(u32, &str, &[&str]); 12] = [
    (1, "rank-2 quantum cones", &["a2-cones", "c2-cones", "g2-classical", "g2-cones"]),
    (2, "A3 relations and empty intersection", &["a3-relation-1", "a3-relation-2", "a3-empty"]),
    (3, "B3 and C3 cones", &["b3-cone-1", "b3-cone-2", "b3-empty", "c3-cone-1", "c3-cone-2", "c3-empty", "c3-minimal"]),
    (4, "D4 cone", &["d4-cone"]),
    (5, "quantum cones inside the classical cone, interior points", &["inside-classical"]),
    (6, "rank-3 empty intersections and commuting swaps", &["a3-empty", "b3-empty", "c3-empty", "commuting-swaps"]),
    (7, "monomiality ground truth", &["c2-local", "b3-local", "g2-global-local", "g2-local", "d4-local", "a3-ones"]),
    (8, "global promotion", &["c2-global", "d4-global", "a-global", "c-global"]),
    (9, "counting formulas", &["count-n", "sp4-count", "a4-1023"]),
    (10, "C_n obstruction and B3 facts", &["c-obstruction", "b3-facts"]),
    (11, "G2 non-saturation", &["g2-hull", "g2-experiment"]),
    (12, "property suites", &["fflv-counts", "fflv-additivity", "swap-lemma", "exact-vs-specialized"]),
];

pub const SECTIONS: [(&str, &str, &[&str]); 17] = [
    ("4.1", "rank-2 examples", &["a2-cones", "a2-relation", "c2-relation", "c2-cones"]),
    ("4.2", "properties of quantum cones", &["a3-empty", "b3-empty", "c3-empty", "commuting-swaps", "swap-lemma"]),
    ("5.1", "A_n local monomial set", &["a3-ones", "a3-examples", "a-power-of-two", "a4-1023"]),
    ("5.2", "A_n global monomial set", &["a-canonical", "a-global"]),
    ("5.3", "C_n global monomial set", &["c-canonical", "c-global", "c-obstruction"]),
    ("5.4", "C2 global monomial set", &["c2-local", "c2-global", "count-n", "sp4-count"]),
    ("5.5", "D4 global monomial set", &["d4-local", "d4-global"]),
    ("5.6", "B3 global monomial set", &["b3-local", "b3-facts"]),
    ("5.7", "G2 global monomial set", &["g2-global-local", "g2-global-outside"]),
    ("5.8", "G2 local monomial set", &["g2-local", "g2-hull", "g2-experiment"]),
    ("6.1", "G2 cones", &["g2-classical", "g2-cones"]),
    ("6.2", "A3 cones", &["a3-relation-1", "a3-relation-2", "a3-empty"]),
    ("6.3", "B3 cones", &["b3-cone-1", "b3-cone-2", "b3-empty"]),
    ("6.4", "C3 cones", &["c3-cone-1", "c3-cone-2", "c3-empty", "c3-minimal"]),
    ("6.5", "D4 cone", &["d4-cone"]),
    ("props", "bounded property suites", &["fflv-counts", "fflv-additivity", "exact-vs-specialized"]),
    ("all", "every check", &[]),
];

const CHECKS: &[(&str, CheckFn)] = &[
    ("a2-cones", a2_cones),
    ("c2-cones", c2_cones),
    ("g2-classical", g2_classical),
    ("g2-cones", g2_cones),
    ("a2-relation", a2_relation),
    ("c2-relation", c2_relation),
    ("a3-relation-1", a3_relation_1),
    ("a3-relation-2", a3_relation_2),
    ("a3-empty", a3_empty),
    ("b3-cone-1", b3_cone_1),
    ("b3-cone-2", b3_cone_2),
    ("b3-empty", b3_empty),
    ("c3-cone-1", c3_cone_1),
    ("c3-cone-2", c3_cone_2),
    ("c3-empty", c3_empty),
    ("c3-minimal", c3_minimal),
    ("d4-cone", d4_cone),
    ("inside-classical", inside_classical),
    ("commuting-swaps", commuting_swaps),
    ("swap-lemma", swap_lemma),
    ("c2-local", c2_local),
    ("b3-local", b3_local),
    ("b3-facts", b3_facts),
    ("g2-global-local", g2_global_local),
    ("g2-global-outside", g2_global_outside),
    ("g2-local", g2_local),
    ("d4-local", d4_local),
    ("a3-ones", a3_ones),
    ("a3-examples", a3_examples),
    ("a-power-of-two", a_power_of_two),
    ("a4-1023", a4_1023),
    ("a-canonical", a_canonical),
    ("c-canonical", c_canonical),
    ("a-global", a_global),
    ("c-global", c_global),
    ("c2-global", c2_global),
    ("d4-global", d4_global),
    ("count-n", count_n_check),
    ("sp4-count", sp4_count_check),
    ("c-obstruction", c_obstruction),
    ("g2-hull", g2_hull),
    ("g2-experiment", g2_experiment),
    ("fflv-counts", fflv_counts),
    ("fflv-additivity", fflv_additivity),
    ("exact-vs-specialized", exact_vs_specialized),
];

pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.0).collect()
}

/// A computed quantum cone with its relations.
pub struct Computed {
    pub rels: RelationSet,
    pub cone: StrictCone,
}

/// Shared state: configuration plus memoized cones and check results.
pub struct Suite {
    pub cfg: RunConfig,
    cones: Mutex<BTreeMap<(String, String), Arc<Computed>>>,
    done: Mutex<BTreeMap<&'static str, Check>>,
    start: Instant,
}

fn rs(t: &str) -> RootSystem {
    RootSystem::new(CartanType::parse(t).expect("fixed type"))
}

fn by_label(r: &RootSystem) -> impl Fn(&str) -> Option<usize> + '_ {
    move |s| parse_label(r, s).ok()
}

/// `d_k` names the k-th entry of `pos`.
fn positional(pos: &[usize]) -> impl Fn(&str) -> Option<usize> + '_ {
    move |s| s.parse::<usize>().ok().filter(|&k| k >= 1 && k <= pos.len()).map(|k| pos[k - 1])
}

fn printed(r: &RootSystem, forms: &[&str], resolve: &dyn Fn(&str) -> Option<usize>) -> Result<StrictCone> {
    let forms = forms.iter().map(|f| parse_inequality(f, r.n_pos(), resolve)).collect::<Result<Vec<_>>>()?;
    StrictCone::new(r.labels(), forms)
}

fn with_classical(r: &RootSystem, c: StrictCone) -> Result<StrictCone> {
    c.intersect(&classical_cone(r))
}

fn render(c: &StrictCone, ks: &[usize]) -> Vec<String> {
    ks.iter().map(|&k| c.forms[k].render(&|i| c.labels[i].clone())).collect()
}

fn values_in(r: &RootSystem, order: &[usize], vals: &[i64]) -> DegreeFunction {
    let mut v = vec![0; r.n_pos()];
    for (t, &a) in order.iter().enumerate() {
        v[a] = vals[t];
    }
    DegreeFunction { values: v }
}

fn by_reference(r: &RootSystem, vals: &[i64]) -> DegreeFunction {
    values_in(r, &reference_order(r), vals)
}

fn fundamentals(r: &RootSystem, d: &DegreeFunction) -> Result<Vec<MonomialReport>> {
    (0..r.rank()).map(|i| is_monomial_ideal(r, &Weight::fundamental(r.rank(), i), d, None)).collect()
}

fn basis_set(r: &RootSystem, rep: &MonomialReport) -> Result<LatticeSet> {
    LatticeSet::from_points(r.n_pos(), rep.basis().into_iter().map(|s| s.into_iter().map(i64::from).collect()))
}

fn exponent(r: &RootSystem, parts: &[(&str, u32)]) -> Result<Vec<u32>> {
    let mut s = vec![0; r.n_pos()];
    for (l, m) in parts {
        s[parse_label(r, l)?] += m;
    }
    Ok(s)
}

impl Suite {
    pub fn new(cfg: RunConfig) -> Self {
        Suite { cfg, cones: Mutex::new(BTreeMap::new()), done: Mutex::new(BTreeMap::new()), start: Instant::now() }
    }

    fn mode(&self, r: &RootSystem) -> Mode {
        self.cfg.mode_for(r)
    }

    /// Relations and cone of `(t, w)` in the configured mode.
    pub fn quantum(&self, t: &str, w: &str) -> Result<Arc<Computed>> {
        let key = (t.to_string(), w.to_string());
        if let Some(c) = self.cones.lock().expect("poisoned").get(&key) {
            return Ok(c.clone());
        }
        let r = rs(t);
        let o = order_of(&r, w)?;
        let rels = cache::relations(&r, &o, self.mode(&r), self.cfg.jobs, self.cfg.cache.as_deref(), self.cfg.progress)?;
        let cone = cone_from_relations(&r, &rels);
        let c = Arc::new(Computed { rels, cone });
        self.cones.lock().expect("poisoned").insert(key, c.clone());
        Ok(c)
    }

    pub fn check(&self, id: &'static str) -> Check {
        if let Some(c) = self.done.lock().expect("poisoned").get(id) {
            return c.clone();
        }
        if let Some(b) = self.cfg.bounds.time_budget {
            if self.start.elapsed().as_secs() >= b {
                return Check { id, pass: false, detail: format!("skipped: time budget of {b}s spent"), data: Value::Null };
            }
        }
        let f = CHECKS.iter().find(|c| c.0 == id).expect("registered check").1;
        let c = match f(self) {
            Ok((pass, detail, data)) => Check { id, pass, detail, data },
            Err(e) => Check { id, pass: false, detail: format!("error: {e}"), data: Value::Null },
        };
        self.done.lock().expect("poisoned").insert(id, c.clone());
        c
    }

    pub fn criterion(&self, n: u32) -> Result<Group> {
        let (_, title, ids) = CRITERIA.iter().find(|c| c.0 == n).ok_or_else(|| Error::InvalidArgument(format!("no criterion {n}")))?;
        Ok(Group { key: n.to_string(), title, checks: ids.iter().map(|id| self.check(id)).collect() })
    }

    pub fn section(&self, key: &str) -> Result<Group> {
        let (k, title, ids) = SECTIONS.iter().find(|s| s.0 == key).ok_or_else(|| {
            let keys: Vec<&str> = SECTIONS.iter().map(|s| s.0).collect();
            Error::InvalidArgument(format!("unknown section {key:?}; expected one of {}", keys.join(", ")))
        })?;
        let ids: Vec<&'static str> = if *k == "all" { check_ids() } else { ids.to_vec() };
        Ok(Group { key: k.to_string(), title, checks: ids.iter().map(|id| self.check(id)).collect() })
    }
}

// ---------------------------------------------------------------- cones

fn equal_report(computed: &StrictCone, want: &StrictCone) -> Result<(bool, String, Value)> {
    let eq = cone_equal(computed, want)?;
    let extra = render(computed, &not_implied(computed, want));
    let missing = render(want, &not_implied(want, computed));
    let detail = if eq { format!("{} forms, equal", computed.normalized().forms.len()) } else { format!("differs: computed-only [{}], printed-only [{}]", extra.join("; "), missing.join("; ")) };
    Ok((eq, detail, json!({ "computed": computed.normalized().render(), "computed_only": extra, "printed_only": missing })))
}

fn pair_equal(s: &Suite, t: &str, words: &[&str], want: &StrictCone) -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    let mut data = serde_json::Map::new();
    for w in words {
        let c = s.quantum(t, w)?;
        let (ok, d, v) = equal_report(&c.cone, want)?;
        pass &= ok;
        details.push(format!("{w}: {d}"));
        data.insert(w.to_string(), v);
    }
    Ok((pass, details.join("; "), Value::Object(data)))
}

fn a2_cones(s: &Suite) -> Outcome {
    let r = rs("A2");
    pair_equal(s, "A2", &A2_WORDS, &classical_cone(&r))
}

fn c2_cones(s: &Suite) -> Outcome {
    let r = rs("C2");
    let out = pair_equal(s, "C2", &C2_WORDS, &printed(&r, C2_QUANTUM, &by_label(&r))?);
    out
}

fn g2_classical(_: &Suite) -> Outcome {
    let r = rs("G2");
    let out = equal_report(&classical_cone(&r), &printed(&r, G2_CLASSICAL, &by_label(&r))?);
    out
}

fn g2_cones(s: &Suite) -> Outcome {
    let r = rs("G2");
    let out = pair_equal(s, "G2", &G2_WORDS, &with_classical(&r, printed(&r, G2_QUANTUM, &by_label(&r))?)?);
    out
}

fn empty_pair(s: &Suite, t: &str, words: &[&str]) -> Result<(bool, String, Value, StrictCone, Vec<exact_rat::Rat>)> {
    let a = s.quantum(t, words[0])?;
    let b = s.quantum(t, words[1])?;
    let both = a.cone.intersect(&b.cone)?;
    match is_empty(&both) {
        Emptiness::Empty { certificate } => {
            let ok = verify_certificate(&both, &certificate);
            let used: Vec<usize> = (0..certificate.len()).filter(|&k| certificate[k] != rat(0)).collect();
            let forms = render(&both, &used);
            let detail = format!("empty, certificate {} over {} forms", if ok { "verified" } else { "REJECTED" }, used.len());
            let data = json!({ "certificate_forms": forms, "multipliers": used.iter().map(|&k| certificate[k].to_string()).collect::<Vec<_>>() });
            Ok((ok, detail, data, both, certificate))
        }
        Emptiness::NonEmpty { witness } => {
            let w: Vec<String> = witness.iter().map(|x| x.to_string()).collect();
            Ok((false, format!("nonempty, witness {w:?}"), json!({ "witness": w }), both, Vec::new()))
        }
    }
}

mod exact_rat {
    pub use degcone_core::exact::Rat;
}

fn a3_empty(s: &Suite) -> Outcome {
    let r = rs("A3");
    let (ok, detail, data, both, cert) = empty_pair(s, "A3", &A3_WORDS)?;
    let want: Vec<LinearForm> = A3_CONTRADICTION.iter().map(|f| parse_inequality(f, 6, &by_label(&r))).collect::<Result<_>>()?;
    let used: Vec<&LinearForm> = both.forms.iter().zip(&cert).filter(|(_, y)| **y != rat(0)).map(|(f, _)| f).collect();
    let exact = used.len() == 2 && want.iter().all(|f| used.contains(&f));
    Ok((ok && exact, format!("{detail}; uses the two printed forms: {exact}"), data))
}

fn b3_empty(s: &Suite) -> Outcome {
    let (ok, d, v, _, _) = empty_pair(s, "B3", &B3_WORDS)?;
    Ok((ok, d, v))
}

fn c3_empty(s: &Suite) -> Outcome {
    let (ok, d, v, _, _) = empty_pair(s, "C3", &C3_WORDS)?;
    Ok((ok, d, v))
}

/// Sum of `c_k * beta_k` over a form; zero for the forms a relation can produce.
fn weight_of(r: &RootSystem, f: &LinearForm) -> Vec<i64> {
    let mut w = vec![0; r.rank()];
    for (k, &c) in f.coeffs.iter().enumerate() {
        for (x, y) in w.iter_mut().zip(r.root(k)) {
            *x += c * y;
        }
    }
    w
}

fn b3_cone_1(s: &Suite) -> Outcome {
    let r = rs("B3");
    let c = s.quantum("B3", B3_WORDS[0])?;
    let want = with_classical(&r, printed(&r, B3_W1, &by_label(&r))?)?;
    let (eq, detail, data) = equal_report(&c.cone, &want)?;
    if eq {
        return Ok((true, detail, data));
    }
    // Divergences are acceptable only when the printed side is a form no
    // relation can produce and the computed side implies everything else.
    let printed_only = not_implied(&want, &c.cone);
    let unbalanced = printed_only.iter().all(|&k| weight_of(&r, &want.forms[k]).iter().any(|&x| x != 0));
    let rest: Vec<LinearForm> = (0..want.forms.len()).filter(|k| !printed_only.contains(k)).map(|k| want.forms[k].clone()).collect();
    let reduced = StrictCone::new(want.labels.clone(), rest)?;
    let agree = not_implied(&reduced, &c.cone).is_empty();
    let computed_only = render(&c.cone, &not_implied(&c.cone, &want));
    let flagged = render(&want, &printed_only);
    let ok = !printed_only.is_empty() && unbalanced && agree;
    let detail = format!(
        "flagged printed forms [{}] (not weight balanced: {unbalanced}); computed system authoritative, implies the other printed forms: {agree}; computed-only [{}]",
        flagged.join("; "),
        computed_only.join("; ")
    );
    Ok((ok, detail, data))
}

fn b3_cone_2(s: &Suite) -> Outcome {
    let r = rs("B3");
    let c = s.quantum("B3", B3_WORDS[1])?;
    let out = equal_report(&c.cone, &with_classical(&r, printed(&r, B3_W2, &by_label(&r))?)?);
    out
}

fn c3_cone(s: &Suite, w: &str, table: &[&str]) -> Outcome {
    let r = rs("C3");
    let refo = reference_order(&r);
    let c = s.quantum("C3", w)?;
    let out = equal_report(&c.cone, &with_classical(&r, printed(&r, table, &positional(&refo))?)?);
    out
}

fn c3_cone_1(s: &Suite) -> Outcome {
    c3_cone(s, C3_WORDS[0], C3_W1)
}

fn c3_cone_2(s: &Suite) -> Outcome {
    c3_cone(s, C3_WORDS[1], C3_W2)
}

fn c3_minimal(s: &Suite) -> Outcome {
    let r = rs("C3");
    let refo = reference_order(&r);
    let c = s.quantum("C3", C3_WORDS[0])?;
    let (sum, pts) = minimal_lattice_points(&c.cone, s.cfg.bounds.search_sum)?;
    let got: BTreeSet<Vec<i64>> = pts.iter().map(|p| in_order(p, &refo)).collect();
    let want: BTreeSet<Vec<i64>> = C3_MINIMAL.iter().map(|p| p.to_vec()).collect();
    let rows: Vec<String> = got.iter().map(|p| format!("({})", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
    Ok((got == want, format!("minimal sum {sum}: {}", rows.join(" ")), json!({ "sum": sum, "points": got })))
}

fn d4_cone(s: &Suite) -> Outcome {
    let r = rs("D4");
    let c = s.quantum("D4", D4_WORD)?;
    let o = &c.rels.order;
    let want = printed(&r, D4_FORMS, &positional(&o.betas))?;
    let (eq, detail, mut data) = equal_report(&c.cone, &want)?;
    let p = values_in(&r, &o.betas, &D4_POINT);
    let inside = contains(&c.cone, &p)?;
    data["point_contained"] = json!(inside);
    data["q0"] = json!(c.rels.q0.as_ref().map(|(a, b)| vec![a.to_string(), b.to_string()]));
    Ok((eq && inside, format!("{detail}; printed point contained: {inside}"), data))
}

fn all_cones() -> Vec<(&'static str, &'static str)> {
    let mut v = Vec::new();
    for (t, ws) in [("A2", &A2_WORDS[..]), ("C2", &C2_WORDS), ("G2", &G2_WORDS), ("A3", &A3_WORDS), ("B3", &B3_WORDS), ("C3", &C3_WORDS)] {
        v.extend(ws.iter().map(|w| (t, *w)));
    }
    v.push(("D4", D4_WORD));
    v
}

fn inside_classical(s: &Suite) -> Outcome {
    let mut bad = Vec::new();
    let mut rows = Vec::new();
    for (t, w) in all_cones() {
        let r = rs(t);
        let c = s.quantum(t, w)?;
        let sub = classical_cone(&r).forms.iter().all(|f| implies(&c.cone, f));
        let p = interior_lattice_point(&c.rels.order.betas, &c.rels.supports());
        let inside = contains(&c.cone, &p)?;
        if !(sub && inside) {
            bad.push(format!("{t} {w}"));
        }
        rows.push(json!({ "type": t, "word": w, "inside_classical": sub, "point": in_order(&p, &c.rels.order.betas), "point_contained": inside }));
    }
    let detail = if bad.is_empty() { format!("{} cones checked", rows.len()) } else { format!("failed: {bad:?}") };
    Ok((bad.is_empty(), detail, Value::Array(rows)))
}

// ------------------------------------------------------------ relations

fn relation_terms(t: &str, w: &str, bi: &[i64], bj: &[i64]) -> Result<(i64, Vec<(Vec<String>, RatFunc)>)> {
    let r = rs(t);
    let o = order_of(&r, w)?;
    let pos = |v: &[i64]| r.index_of(v).map(|k| o.position[k]).ok_or_else(|| Error::Internal("not a root".into()));
    let (i, j) = (pos(bi)?, pos(bj)?);
    let l = exact_engine(&r, &o)?.ls_relation(i, j)?;
    let terms = l
        .terms
        .iter()
        .map(|(s, c)| {
            let mut names: Vec<String> = Vec::new();
            for (k, &m) in s.iter().enumerate() {
                for _ in 0..m {
                    names.push(r.label(o.betas[k]));
                }
            }
            names.sort();
            (names, c.clone())
        })
        .collect();
    Ok((l.qpow, terms))
}

fn relation_check(t: &str, w: &str, bi: &[i64], bj: &[i64], qpow: i64, want: Vec<(Vec<&str>, RatFunc)>) -> Outcome {
    let r = rs(t);
    let (got_q, got) = relation_terms(t, w, bi, bj)?;
    let mut want: Vec<(Vec<String>, RatFunc)> = want
        .into_iter()
        .map(|(ls, c)| {
            let mut v: Vec<String> = ls.iter().map(|l| parse_label(&r, l).map(|k| r.label(k))).collect::<Result<_>>()?;
            v.sort();
            Ok((v, c))
        })
        .collect::<Result<_>>()?;
    want.sort_by(|a, b| a.0.cmp(&b.0));
    let mut got_sorted = got.clone();
    got_sorted.sort_by(|a, b| a.0.cmp(&b.0));
    let ok = got_q == qpow && got_sorted == want;
    let shown: Vec<String> = got_sorted.iter().map(|(m, c)| format!("({c}) F[{}]", m.join(" "))).collect();
    Ok((ok, format!("q-power {got_q}, terms {}", shown.join(" + ")), json!({ "qpow": got_q, "terms": shown })))
}

fn q_minus_qinv() -> RatFunc {
    RatFunc::q().sub(&RatFunc::q_pow(-1))
}

fn a2_relation(_: &Suite) -> Outcome {
    // F_2 F_1 = q F_1 F_2 + F_12 in the order of 121
    relation_check("A2", "121", &[1, 0], &[0, 1], 1, vec![(vec!["1,2"], RatFunc::one())])
}

fn c2_relation(_: &Suite) -> Outcome {
    relation_check("C2", "1212", &[2, 1], &[0, 1], 0, vec![(vec!["1,2", "1,2"], RatFunc::q_pow(-2).sub(&RatFunc::one()))])
}

fn a3_relation_1(_: &Suite) -> Outcome {
    relation_check("A3", "121321", &[1, 1, 0], &[0, 1, 1], 0, vec![(vec!["2,2", "1,3"], q_minus_qinv().neg())])
}

fn a3_relation_2(_: &Suite) -> Outcome {
    relation_check("A3", "132312", &[1, 1, 1], &[0, 1, 0], 0, vec![(vec!["1,2", "2,3"], q_minus_qinv().neg())])
}

// ------------------------------------------------------ commuting swaps

fn adjacent_commuting(r: &RootSystem, w: &ReducedWord) -> Vec<usize> {
    let l = &w.letters;
    (0..l.len().saturating_sub(1))
        .filter(|&k| l[k] != l[k + 1] && r.inner(r.root(r.simple[l[k]]), r.root(r.simple[l[k + 1]])) == 0)
        .collect()
}

/// Words with a commuting adjacent pair: up to four in A3 and two in D4.
fn swap_cases() -> Result<Vec<(&'static str, ReducedWord, usize)>> {
    let mut cases = Vec::new();
    for (t, limit, per_type) in [("A3", 4, 4), ("D4", 2, 2)] {
        let r = rs(t);
        let mut n = 0;
        for w in reduced_words_of_w0(&r, Some(limit)) {
            if let Some(&k) = adjacent_commuting(&r, &w).first() {
                if n < per_type {
                    cases.push((t, w, k));
                    n += 1;
                }
            }
        }
    }
    Ok(cases)
}

fn swapped(r: &RootSystem, w: &ReducedWord, k: usize) -> Result<ReducedWord> {
    let mut l = w.letters.clone();
    l.swap(k, k + 1);
    ReducedWord::new(r, l)
}

fn commuting_swaps(s: &Suite) -> Outcome {
    let mut rows = Vec::new();
    let mut equal = 0;
    for (t, w, k) in swap_cases()? {
        let r = rs(t);
        let other = swapped(&r, &w, k)?;
        let a = s.quantum(t, &w.digits())?;
        let b = s.quantum(t, &other.digits())?;
        let eq = cone_equal(&a.cone, &b.cone)?;
        equal += eq as usize;
        rows.push(json!({ "type": t, "word": w.digits(), "swapped": other.digits(), "equal": eq }));
    }
    let n = rows.len();
    Ok((n >= 3 && equal == n, format!("{equal} of {n} swapped pairs give equal cones"), Value::Array(rows)))
}

fn swap_lemma(s: &Suite) -> Outcome {
    let mut rows = Vec::new();
    let mut ok = true;
    for (t, w, k) in swap_cases()?.into_iter().take(5) {
        let r = rs(t);
        let other = swapped(&r, &w, k)?;
        for wd in [&w, &other] {
            let c = s.quantum(t, &wd.digits())?;
            let mut good = true;
            for e in &c.rels.entries {
                if e.j == k + 1 && e.i < k {
                    good &= e.support.iter().all(|m| m[k] == 0);
                }
                if e.i == k && e.j > k + 1 {
                    good &= e.support.iter().all(|m| m[k + 1] == 0);
                }
            }
            ok &= good;
            rows.push(json!({ "type": t, "word": wd.digits(), "position": k + 1, "holds": good }));
        }
    }
    let pairs = rows.len() / 2;
    Ok((ok && pairs == 5, format!("{pairs} swapped pairs, exponent at the swapped positions vanishes: {ok}"), Value::Array(rows)))
}

fn exact_vs_specialized(s: &Suite) -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for t in ["A2", "B2", "C2", "G2"] {
        let r = rs(t);
        for w in reduced_words_of_w0(&r, None) {
            let o = ConvexOrder::new(&r, &w)?;
            let ex = compute_relations(&r, &o, Mode::Exact, None)?;
            for seed in [1, s.cfg.seed] {
                let sp = compute_relations(&r, &o, Mode::Specialized { seed }, None)?;
                let same = ex.entries.len() == sp.entries.len()
                    && ex.entries.iter().zip(&sp.entries).all(|(a, b)| (a.i, a.j, a.qpow, &a.support) == (b.i, b.j, b.qpow, &b.support));
                if !same {
                    bad.push(format!("{t} {} seed {seed}", w.digits()));
                }
                checked += ex.entries.len();
            }
        }
    }
    Ok((bad.is_empty(), format!("{checked} relation comparisons, mismatches {bad:?}"), json!({ "mismatches": bad })))
}

// ---------------------------------------------------------- monomiality

fn all_monomial(r: &RootSystem, d: &DegreeFunction) -> Result<(bool, String)> {
    let reps = fundamentals(r, d)?;
    let flags: Vec<bool> = reps.iter().map(|x| x.monomial).collect();
    Ok((flags.iter().all(|&m| m), format!("fundamentals monomial {flags:?}")))
}

fn c2_local(_: &Suite) -> Outcome {
    let r = rs("C2");
    let d = by_reference(&r, &C2_DEGREE);
    let reps = fundamentals(&r, &d)?;
    let perm: Vec<usize> = ["1,1", "1,2", "1,1b", "2,2"].iter().map(|l| parse_label(&r, l)).collect::<Result<_>>()?;
    let mut same = true;
    for (rep, (m1, m2)) in reps.iter().zip([(1, 0), (0, 1)]) {
        same &= basis_set(&r, rep)?.permuted(&perm) == lattice_points(&sp4_polytope(m1, m2))?;
    }
    let mono: Vec<bool> = reps.iter().map(|x| x.monomial).collect();
    Ok((mono.iter().all(|&m| m) && same, format!("fundamentals monomial {mono:?}; bases are SP4 lattice points: {same}"), json!({ "monomial": mono, "sp4": same })))
}

fn b3_local(_: &Suite) -> Outcome {
    let r = rs("B3");
    let d = canonical_degree(&r, DegreeVariant::Global)?;
    let printed = by_reference(&r, &[4, 3, 3, 3, 1, 1, 4, 3, 2]);
    let (m, detail) = all_monomial(&r, &d)?;
    Ok((m && d == printed, format!("degree matches printed values: {}; {detail}", d == printed), json!({ "degree": in_order(&d, &reference_order(&r)) })))
}

fn b3_facts(_: &Suite) -> Outcome {
    let r = rs("B3");
    let d = canonical_degree(&r, DegreeVariant::Global)?;
    let rep = is_monomial_ideal(&r, &Weight::fundamental(3, 1), &d, None)?;
    let a = rep.module.survives(&exponent(&r, &[("1,2", 1), ("1,3b", 1)])?);
    let b = rep.module.survives(&exponent(&r, &[("1,3", 2)])?);
    Ok((a && !b, format!("f_(1,2) f_(1,3b) v nonzero: {a}; f_(1,3)^2 v zero: {}", !b), json!({ "f12_f13b": a, "f13_squared": b })))
}

fn g2_global_local(_: &Suite) -> Outcome {
    let r = rs("G2");
    let d = canonical_degree(&r, DegreeVariant::Global)?;
    let ok_vals = d == by_reference(&r, &[2, 1, 3, 1, 3, 2]);
    let (m, detail) = all_monomial(&r, &d)?;
    Ok((m && ok_vals, format!("printed values: {ok_vals}; {detail}"), json!({ "monomial": m })))
}

fn g2_global_outside(s: &Suite) -> Outcome {
    let r = rs("G2");
    let d = canonical_degree(&r, DegreeVariant::Global)?;
    let mut inside = Vec::new();
    for w in G2_WORDS {
        inside.push(contains(&s.quantum("G2", w)?.cone, &d)?);
    }
    Ok((inside.iter().all(|&x| !x), format!("contained in the cones of {G2_WORDS:?}: {inside:?}"), json!({ "contained": inside })))
}

fn g2_local(_: &Suite) -> Outcome {
    let r = rs("G2");
    let d = canonical_degree(&r, DegreeVariant::Local)?;
    let ok_vals = d == by_reference(&r, &[2, 2, 1, 2, 2, 5]);
    let (m, detail) = all_monomial(&r, &d)?;
    Ok((m && ok_vals, format!("printed values: {ok_vals}; {detail}"), json!({ "monomial": m })))
}

fn d4_local(_: &Suite) -> Outcome {
    let r = rs("D4");
    let d = canonical_degree(&r, DegreeVariant::Global)?;
    let (m, detail) = all_monomial(&r, &d)?;
    Ok((m, detail, json!({ "degree": in_order(&d, &reference_order(&r)) })))
}

fn a3_ones(_: &Suite) -> Outcome {
    let r = rs("A3");
    let reps = fundamentals(&r, &DegreeFunction::ones(6))?;
    let flags: Vec<bool> = reps.iter().map(|x| x.monomial).collect();
    let crit = an_local_criterion(&r, &DegreeFunction::ones(6))?;
    Ok((flags.iter().any(|&m| !m) && !crit, format!("fundamentals monomial {flags:?}; local criterion {crit}"), json!({ "monomial": flags })))
}

fn a3_examples(s: &Suite) -> Outcome {
    let r = rs("A3");
    let o = order_of(&r, "123212")?;
    let cone = cone_from_relations(&r, &compute_relations(&r, &o, Mode::Exact, None)?);
    let mut ok = true;
    let mut rows = Vec::new();
    for v in [[2, 2, 1, 1, 1, 1], [1, 1, 1, 1, 1, 2]] {
        let d = values_in(&r, &o.betas, &v);
        let (m, _) = all_monomial(&r, &d)?;
        let crit = an_local_criterion(&r, &d)?;
        ok &= m && crit;
        rows.push(json!({ "degree": v, "monomial": m, "criterion": crit, "in_cone_of_123212": contains(&cone, &d)? }));
    }
    let _ = s;
    Ok((ok, "d' and d'' monomial on all fundamentals, criterion holds; cone membership reported, not asserted".into(), Value::Array(rows)))
}

fn a_power_of_two(_: &Suite) -> Outcome {
    let mut flags = Vec::new();
    for n in 2..=4 {
        let r = rs(&format!("A{n}"));
        flags.push(an_local_criterion(&r, &power_of_two_degree(&r)?)?);
    }
    Ok((flags.iter().all(|&x| x), format!("criterion for n = 2, 3, 4: {flags:?}"), json!(flags)))
}

fn a4_1023(_: &Suite) -> Outcome {
    let r = rs("A4");
    let g = minkowski_global_check(&r, &power_of_two_degree(&r)?, &Weight::new(vec![1, 1, 1, 1]), 0)?;
    Ok((g.count == 1023 && g.dim == 1024, format!("#sum = {}, dim = {}", g.count, g.dim), json!({ "count": g.count, "dim": g.dim.to_string() })))
}

fn canonical_fflv(types: &[&str], kind: DyckKind) -> Result<(bool, Vec<String>)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for t in types {
        let r = rs(t);
        let d = canonical_degree(&r, DegreeVariant::Global)?;
        for (i, rep) in fundamentals(&r, &d)?.iter().enumerate() {
            let w = Weight::fundamental(r.rank(), i);
            let same = rep.monomial && basis_set(&r, rep)? == lattice_points(&fflv_polytope(&r, kind, &w)?)?;
            ok &= same;
            notes.push(format!("{t} w{}: {same}", i + 1));
        }
    }
    Ok((ok, notes))
}

fn a_canonical(s: &Suite) -> Outcome {
    let (ok, notes) = canonical_fflv(&["A2", "A3", "A4"], DyckKind::A)?;
    let r = rs("A3");
    let inside = contains(&s.quantum("A3", "321323")?.cone, &canonical_degree(&r, DegreeVariant::Global)?)?;
    Ok((ok && inside, format!("monomial bases equal FFLV points [{}]; A3 degree in cone of 321323: {inside}", notes.join(", ")), json!({ "bases": notes, "in_cone": inside })))
}

fn c_canonical(_: &Suite) -> Outcome {
    let (ok, notes) = canonical_fflv(&["C2", "C3"], DyckKind::C)?;
    Ok((ok, format!("monomial bases equal FFLV points [{}]", notes.join(", ")), json!(notes)))
}

fn global_sweep(r: &RootSystem, d: &DegreeFunction, weights: &[Weight], direct: u128) -> Result<(bool, Vec<Value>)> {
    let sets = fundamental_sets(r, d)?;
    let rows: Vec<Result<GlobalCheck>> = weights.par_iter().map(|w| minkowski_check_with(r, d, &sets, w, direct)).collect();
    let mut ok = true;
    let mut out = Vec::new();
    for g in rows {
        let g = g?;
        ok &= g.equal && g.direct != Some(false);
        out.push(json!({ "lambda": g.lambda.coords, "count": g.count, "dim": g.dim.to_string(), "direct": g.direct }));
    }
    Ok((ok, out))
}

fn canonical_global(s: &Suite, types: &[&str]) -> Outcome {
    let mut ok = true;
    let mut data = serde_json::Map::new();
    let mut n = 0;
    for t in types {
        let r = rs(t);
        let d = canonical_degree(&r, DegreeVariant::Global)?;
        let ws = weights_up_to(r.rank(), s.cfg.bounds.max_height);
        let (g, rows) = global_sweep(&r, &d, &ws, s.cfg.bounds.direct_dim)?;
        ok &= g;
        n += rows.len();
        data.insert(t.to_string(), Value::Array(rows));
    }
    Ok((ok, format!("{n} weights with |lambda| <= {} in {types:?}", s.cfg.bounds.max_height), Value::Object(data)))
}

fn a_global(s: &Suite) -> Outcome {
    canonical_global(s, &["A2", "A3", "A4"])
}

fn c_global(s: &Suite) -> Outcome {
    canonical_global(s, &["C2", "C3"])
}

fn d4_global(s: &Suite) -> Outcome {
    canonical_global(s, &["D4"])
}

fn c2_global(s: &Suite) -> Outcome {
    let r = rs("C2");
    let d = by_reference(&r, &C2_DEGREE);
    let ws: Vec<Weight> = (0..=3).flat_map(|a| (0..=3).map(move |b| Weight::new(vec![a, b]))).collect();
    let (mut ok, rows) = global_sweep(&r, &d, &ws, s.cfg.bounds.direct_dim.min(40))?;
    for w in &ws {
        let sp = sp4_count(w.coords[0] as u64, w.coords[1] as u64)?;
        ok &= sp == weyl_dim(&r, w)?;
    }
    Ok((ok, format!("{} weights with m1, m2 <= 3: #S = sp4_count = dim", ws.len()), Value::Array(rows)))
}

// ------------------------------------------------------------- counting

fn count_n_check(_: &Suite) -> Outcome {
    let mut bad = Vec::new();
    for a in 0..=12u64 {
        for b in 0..=12u64 {
            if count_n(a, b) != count_lattice_points(&p_polytope(a as i64, b as i64))? {
                bad.push((a, b));
            }
        }
    }
    Ok((bad.is_empty(), format!("169 cases, mismatches {bad:?}"), json!({ "mismatches": bad })))
}

fn sp4_count_check(_: &Suite) -> Outcome {
    let r = rs("C2");
    let mut bad = Vec::new();
    for a in 0..=4u64 {
        for b in 0..=4u64 {
            let c = sp4_count(a, b)?;
            if c != count_lattice_points(&sp4_polytope(a as i64, b as i64))? || c != weyl_dim(&r, &Weight::new(vec![a as i64, b as i64]))? {
                bad.push((a, b));
            }
        }
    }
    Ok((bad.is_empty(), format!("25 cases, mismatches {bad:?}"), json!({ "mismatches": bad })))
}

fn c_obstruction(_: &Suite) -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in [2, 3] {
        let r = rs(&format!("C{n}"));
        let d = canonical_degree(&r, DegreeVariant::Global)?;
        let at = |l: String| parse_label(&r, &l).map(|k| d.values[k]);
        let m = n - 1;
        let lhs = at(format!("{m},{m}b"))? + at(format!("{n},{n}"))?;
        let rhs = 2 * at(format!("{m},{n}"))?;
        ok &= lhs <= rhs;
        notes.push(format!("C{n}: {lhs} vs {rhs}"));
    }
    Ok((ok, format!("inequality violated: {}", notes.join(", ")), json!(notes)))
}

fn g2_hull(_: &Suite) -> Outcome {
    let r = rs("G2");
    let d = canonical_degree(&r, DegreeVariant::Local)?;
    let rep = is_monomial_ideal(&r, &Weight::fundamental(2, 1), &d, None)?;
    let s = basis_set(&r, &rep)?;
    let h = hull_lattice_points(&s);
    Ok((rep.monomial && s.len() == 14 && h.len() == 16, format!("#S(w2) = {}, hull lattice points {}", s.len(), h.len()), json!({ "set": s.len(), "hull": h.len() })))
}

fn g2_experiment(_: &Suite) -> Outcome {
    let rows = g2_conjecture_experiment(2)?;
    let shown: Vec<String> = rows.iter().map(|r| format!("({},{}): {}/{}/{}", r.m1, r.m2, r.set_sum, r.dilated, r.dim)).collect();
    let data: Vec<Value> = rows
        .iter()
        .map(|r| json!({ "m1": r.m1, "m2": r.m2, "set_sum": r.set_sum, "dilated": r.dilated, "dim": r.dim.to_string() }))
        .collect();
    Ok((true, format!("experiment, not asserted; set-sum/dilated/dim {}", shown.join(" ")), Value::Array(data)))
}

// ---------------------------------------------------------------- FFLV

fn fflv_cases() -> Vec<(&'static str, DyckKind)> {
    vec![("A2", DyckKind::A), ("A3", DyckKind::A), ("A4", DyckKind::A), ("C2", DyckKind::C), ("C3", DyckKind::C)]
}

fn weights_box(rank: usize, max: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out.into_iter().flat_map(|v: Vec<i64>| (0..=max).map(move |c| [v.clone(), vec![c]].concat())).collect();
    }
    out.into_iter().map(Weight::new).collect()
}

fn fflv_counts(_: &Suite) -> Outcome {
    let mut bad = Vec::new();
    let mut n = 0;
    for (t, kind) in fflv_cases() {
        let r = rs(t);
        let ws = weights_box(r.rank(), 3);
        n += ws.len();
        let res: Vec<Result<(Weight, u128, u128)>> = ws
            .par_iter()
            .map(|w| Ok((w.clone(), count_lattice_points(&fflv_polytope(&r, kind, w)?)?, weyl_dim(&r, w)?)))
            .collect();
        for x in res {
            let (w, c, d) = x?;
            if c != d {
                bad.push(format!("{t} {:?}: {c} vs {d}", w.coords));
            }
        }
    }
    Ok((bad.is_empty(), format!("{n} weights, mismatches {bad:?}"), json!({ "weights": n, "mismatches": bad })))
}

fn pack(x: &[i64]) -> u64 {
    x.iter().fold(0u64, |acc, &c| (acc << 6) | c as u64)
}

/// `S(lambda - w_i) + S(w_i) = S(lambda)`, with `i` the first nonzero coordinate.
fn fflv_additivity(_: &Suite) -> Outcome {
    let mut bad = Vec::new();
    let mut n = 0;
    for (t, kind) in fflv_cases() {
        let r = rs(t);
        let ws: Vec<Weight> = weights_box(r.rank(), 3).into_iter().filter(|w| w.size() >= 2).collect();
        n += ws.len();
        let res: Vec<Result<Option<String>>> = ws
            .par_iter()
            .map(|w| {
                let i = w.coords.iter().position(|&c| c > 0).expect("nonzero");
                let fi = Weight::fundamental(r.rank(), i);
                let mut mu = w.clone();
                mu.coords[i] -= 1;
                let (hl, hm, hf) = (fflv_polytope(&r, kind, w)?, fflv_polytope(&r, kind, &mu)?, fflv_polytope(&r, kind, &fi)?);
                let rows_add = hl.rows.len() == hm.rows.len()
                    && hl.rows.iter().zip(&hm.rows).zip(&hf.rows).all(|((a, b), c)| a.a == b.a && a.a == c.a && a.b == b.b + c.b);
                let fset: Vec<Vec<i64>> = lattice_points(&hf)?.points.into_iter().collect();
                let mut sums = Vec::new();
                visit_lattice_points(&hm, &mut |x| {
                    for y in &fset {
                        let z: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
                        sums.push(pack(&z));
                    }
                })?;
                sums.sort_unstable();
                sums.dedup();
                let total = count_lattice_points(&hl)?;
                Ok((!rows_add || sums.len() as u128 != total).then(|| format!("{t} {:?}: {} vs {total}", w.coords, sums.len())))
            })
            .collect();
        for x in res {
            if let Some(b) = x? {
                bad.push(b);
            }
        }
    }
    Ok((bad.is_empty(), format!("{n} weights, failures {bad:?}"), json!({ "weights": n, "failures": bad })))
}
