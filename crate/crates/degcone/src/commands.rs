//! One function per subcommand. Each returns a [`Report`] with text, JSON and
//! optionally a table for CSV output.

use std::fmt::Write as _;

use serde_json::{json, Value};

use degcone_core::cone::*;
use degcone_core::poly::*;
use degcone_core::qpbw::{cone_from_relations, RelationSet};
use degcone_core::rep::*;
use degcone_core::roots::*;
use degcone_core::{Error, Result};

use crate::cache;
use crate::config::{in_order, order_of, parse_weight, weights_up_to, RunConfig};
use crate::json;
use crate::suite::{Group, Suite, CRITERIA};

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Output of a subcommand; `ok` is false when a requested check failed.
#[derive(Clone, Debug)]
pub struct Report {
    pub ok: bool,
    pub text: String,
    pub json: Value,
    pub table: Option<Table>,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report { ok: true, text, json, table: None }
    }

    fn with_table(mut self, t: Table) -> Self {
        self.table = Some(t);
        self
    }

    fn expect(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Expect {
    Empty,
    Nonempty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ExpectEq {
    Equal,
    Different,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Variant {
    /// The printed degree for global monomial bases.
    #[default]
    Global,
    /// The printed local degree (G2 only).
    Local,
    /// `d_{i,j} = 2^{(n-1)-(j-i)}` in type A.
    PowerOfTwo,
}

fn lines(v: &[String]) -> String {
    v.iter().map(|s| format!("{s}\n")).collect()
}

fn row<T: ToString>(v: &[T]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

/// Root labels in the coordinate order of `--degree` lists.
fn display_order(cfg: &RunConfig, r: &RootSystem) -> Result<Vec<usize>> {
    use crate::config::OrderArg;
    Ok(match cfg.order {
        OrderArg::Reference => reference_order(r),
        OrderArg::Canonical => (0..r.n_pos()).collect(),
        OrderArg::Word => cfg.word_order(r)?.betas,
    })
}

fn quantum_relations(cfg: &RunConfig, r: &RootSystem, word: &str) -> Result<RelationSet> {
    let o = order_of(r, word)?;
    cache::relations(r, &o, cfg.mode_for(r), cfg.jobs, cfg.cache.as_deref(), cfg.progress)
}

fn quantum_cone(cfg: &RunConfig, r: &RootSystem, word: &str) -> Result<StrictCone> {
    Ok(cone_from_relations(r, &quantum_relations(cfg, r, word)?))
}

fn cone_report(c: &StrictCone) -> Report {
    let forms = c.render();
    let table = Table { header: c.labels.clone(), rows: c.forms.iter().map(|f| f.coeffs.iter().map(|x| x.to_string()).collect()).collect() };
    Report::new(lines(&forms), json::cone(c)).with_table(table)
}

pub fn roots(cfg: &RunConfig) -> Result<Report> {
    let r = cfg.root_system()?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for &k in &reference_order(&r) {
        let _ = writeln!(text, "alpha_{{{}}}  {}  height {}", r.label(k), row(r.root(k)), r.height(k));
        rows.push(json!({ "index": k, "label": r.label(k), "ascii": r.ascii_label(k), "root": r.root(k), "height": r.height(k) }));
    }
    let table = Table {
        header: vec!["label".into(), "root".into(), "height".into()],
        rows: reference_order(&r).iter().map(|&k| vec![r.ascii_label(k), row(r.root(k)), r.height(k).to_string()]).collect(),
    };
    Ok(Report::new(text, json!({ "type": r.ty.to_string(), "roots": rows })).with_table(table))
}

pub fn words(cfg: &RunConfig, limit: Option<usize>) -> Result<Report> {
    let r = cfg.root_system()?;
    let ws: Vec<String> = reduced_words_of_w0(&r, limit).map(|w| w.digits()).collect();
    let table = Table { header: vec!["word".into()], rows: ws.iter().map(|w| vec![w.clone()]).collect() };
    Ok(Report::new(lines(&ws), json!({ "type": r.ty.to_string(), "count": ws.len(), "words": ws })).with_table(table))
}

pub fn cone_classical(cfg: &RunConfig) -> Result<Report> {
    Ok(cone_report(&classical_cone(&cfg.root_system()?)))
}

pub fn cone_quantum(cfg: &RunConfig, raw: bool) -> Result<Report> {
    let r = cfg.root_system()?;
    let w = cfg.word.as_deref().ok_or_else(|| Error::InvalidArgument("--word is required".into()))?;
    let c = quantum_cone(cfg, &r, w)?;
    Ok(cone_report(&if raw { c } else { c.normalized() }))
}

pub fn ls_relations(cfg: &RunConfig) -> Result<Report> {
    let r = cfg.root_system()?;
    let w = cfg.word.as_deref().ok_or_else(|| Error::InvalidArgument("--word is required".into()))?;
    let rels = quantum_relations(cfg, &r, w)?;
    let b = &rels.order.betas;
    let mono = |s: &[u32]| -> String {
        let parts: Vec<String> = s
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(t, &m)| if m == 1 { format!("F_{{{}}}", r.label(b[t])) } else { format!("F_{{{}}}^({m})", r.label(b[t])) })
            .collect();
        parts.join(" ")
    };
    let mut text = String::new();
    let mut table = Table { header: vec!["i".into(), "j".into(), "qpow".into(), "monomial".into(), "coefficient".into()], rows: Vec::new() };
    for e in &rels.entries {
        let (bi, bj) = (r.label(b[e.i]), r.label(b[e.j]));
        let rhs: Vec<String> = e.support.iter().zip(&e.coeffs).map(|(s, c)| format!("({c}) {}", mono(s))).collect();
        let rhs = if rhs.is_empty() { "0".into() } else { rhs.join(" + ") };
        let _ = writeln!(text, "F_{{{bj}}} F_{{{bi}}} - q^{} F_{{{bi}}} F_{{{bj}}} = {rhs}", e.qpow);
        for (s, c) in e.support.iter().zip(&e.coeffs) {
            table.rows.push(vec![(e.i + 1).to_string(), (e.j + 1).to_string(), e.qpow.to_string(), mono(s), c.clone()]);
        }
    }
    Ok(Report::new(text, json::relations(&r, &rels)).with_table(table))
}

/// The cone named by `spec`: `classical` or a word.
fn named_cone(cfg: &RunConfig, r: &RootSystem, spec: &str) -> Result<StrictCone> {
    if spec == "classical" {
        Ok(classical_cone(r))
    } else {
        quantum_cone(cfg, r, spec)
    }
}

pub fn cone_empty(cfg: &RunConfig, others: &[String], classical: bool, expect: Option<Expect>) -> Result<Report> {
    let r = cfg.root_system()?;
    let mut names: Vec<String> = cfg.word.iter().cloned().collect();
    names.extend(others.iter().cloned());
    if classical {
        names.push("classical".into());
    }
    if names.is_empty() {
        return Err(Error::InvalidArgument("give --word and/or --other".into()));
    }
    let mut c = named_cone(cfg, &r, &names[0])?;
    for n in &names[1..] {
        c = c.intersect(&named_cone(cfg, &r, n)?)?;
    }
    let (empty, text, data) = match is_empty(&c) {
        Emptiness::Empty { certificate } => {
            let ok = verify_certificate(&c, &certificate);
            let used: Vec<usize> = (0..certificate.len()).filter(|&k| certificate[k] != degcone_core::exact::rat(0)).collect();
            let mut t = format!("empty (certificate verified: {ok})\n");
            for &k in &used {
                let _ = writeln!(t, "  {} x [{}]", certificate[k], c.forms[k].render(&|i| c.labels[i].clone()));
            }
            let data = json!({
                "empty": true,
                "verified": ok,
                "certificate": used.iter().map(|&k| json!({ "form": c.forms[k].render(&|i| c.labels[i].clone()), "multiplier": certificate[k].to_string() })).collect::<Vec<_>>(),
            });
            (true, t, data)
        }
        Emptiness::NonEmpty { witness } => {
            let w: Vec<String> = witness.iter().map(|x| x.to_string()).collect();
            (false, format!("nonempty, witness {}\n", row(&w)), json!({ "empty": false, "witness": w }))
        }
    };
    let ok = match expect {
        Some(Expect::Empty) => empty,
        Some(Expect::Nonempty) => !empty,
        None => true,
    };
    Ok(Report::new(text, json!({ "cones": names, "result": data })).expect(ok))
}

pub fn cone_equal_cmd(cfg: &RunConfig, other: Option<&str>, classical: bool, expect: Option<ExpectEq>) -> Result<Report> {
    let r = cfg.root_system()?;
    let w = cfg.word.as_deref().ok_or_else(|| Error::InvalidArgument("--word is required".into()))?;
    let b = match (other, classical) {
        (Some(o), false) => o.to_string(),
        (None, true) => "classical".into(),
        _ => return Err(Error::InvalidArgument("give exactly one of --other or --classical".into())),
    };
    let ca = quantum_cone(cfg, &r, w)?;
    let cb = named_cone(cfg, &r, &b)?;
    let eq = cone_equal(&ca, &cb)?;
    let a_only: Vec<String> = not_implied(&ca, &cb).iter().map(|&k| ca.forms[k].render(&|i| ca.labels[i].clone())).collect();
    let b_only: Vec<String> = not_implied(&cb, &ca).iter().map(|&k| cb.forms[k].render(&|i| cb.labels[i].clone())).collect();
    let mut text = format!("{}\n", if eq { "equal" } else { "different" });
    for f in &a_only {
        let _ = writeln!(text, "  only {w}: {f}");
    }
    for f in &b_only {
        let _ = writeln!(text, "  only {b}: {f}");
    }
    let ok = match expect {
        Some(ExpectEq::Equal) => eq,
        Some(ExpectEq::Different) => !eq,
        None => true,
    };
    Ok(Report::new(text, json!({ "a": w, "b": b, "equal": eq, "a_only": a_only, "b_only": b_only })).expect(ok))
}

pub fn interior_point(cfg: &RunConfig) -> Result<Report> {
    let r = cfg.root_system()?;
    let w = cfg.word.as_deref().ok_or_else(|| Error::InvalidArgument("--word is required".into()))?;
    let rels = quantum_relations(cfg, &r, w)?;
    let d = interior_lattice_point(&rels.order.betas, &rels.supports());
    let inside = contains(&cone_from_relations(&r, &rels), &d)?;
    let ord = display_order(cfg, &r)?;
    let vals = in_order(&d, &ord);
    let text = format!("{}\ncontained: {inside}\n", row(&vals));
    Ok(Report::new(text, json!({ "degree": json::degree(&r, &d), "values": vals, "contained": inside })).expect(inside))
}

pub fn minimal_points(cfg: &RunConfig, classical: bool) -> Result<Report> {
    let r = cfg.root_system()?;
    let c = if classical { classical_cone(&r) } else { quantum_cone(cfg, &r, cfg.word.as_deref().ok_or_else(|| Error::InvalidArgument("--word or --classical is required".into()))?)? };
    let (sum, pts) = minimal_lattice_points(&c, cfg.bounds.search_sum)?;
    let ord = display_order(cfg, &r)?;
    let vals: Vec<Vec<i64>> = pts.iter().map(|p| in_order(p, &ord)).collect();
    let mut text = format!("minimal coordinate sum {sum}\n");
    for v in &vals {
        let _ = writeln!(text, "{}", row(v));
    }
    let header: Vec<String> = ord.iter().map(|&k| r.ascii_label(k)).collect();
    let table = Table { header: header.clone(), rows: vals.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect() };
    Ok(Report::new(text, json!({ "sum": sum, "header": header, "points": vals })).with_table(table))
}

pub fn irrep(cfg: &RunConfig, weight: &str) -> Result<Report> {
    let r = cfg.root_system()?;
    let w = parse_weight(&r, weight)?;
    let m = build_irrep(&r, &w)?;
    let dim = weyl_dim(&r, &w)?;
    let mut rows = Vec::new();
    let mut table = Table { header: vec!["depth".into(), "dim".into()], rows: Vec::new() };
    for (depth, d) in m.depths() {
        rows.push(json!({ "depth": depth, "dim": d }));
        table.rows.push(vec![row(depth), d.to_string()]);
    }
    let ok = m.dim() as u128 == dim;
    let text = format!("dim V({}) = {} (Weyl formula {dim}), {} weight spaces\n", row(&w.coords), m.dim(), rows.len());
    Ok(Report::new(text, json!({ "lambda": w.coords, "dim": m.dim(), "weyl_dim": dim.to_string(), "weights": rows })).with_table(table).expect(ok))
}

fn degree_or_variant(cfg: &RunConfig, r: &RootSystem, variant: Variant) -> Result<DegreeFunction> {
    match cfg.degree_function(r)? {
        Some(d) => Ok(d),
        None => match variant {
            Variant::Global => canonical_degree(r, DegreeVariant::Global),
            Variant::Local => canonical_degree(r, DegreeVariant::Local),
            Variant::PowerOfTwo => power_of_two_degree(r),
        },
    }
}

pub fn monomial_check(cfg: &RunConfig, weight: Option<&str>, fundamentals: bool, variant: Variant) -> Result<Report> {
    let r = cfg.root_system()?;
    let d = degree_or_variant(cfg, &r, variant)?;
    let mut ws: Vec<Weight> = Vec::new();
    if let Some(w) = weight {
        ws.push(parse_weight(&r, w)?);
    }
    if fundamentals || ws.is_empty() {
        ws.extend((0..r.rank()).map(|i| Weight::fundamental(r.rank(), i)));
    }
    let order = cfg.word.as_deref().map(|w| order_of(&r, w)).transpose()?;
    let mut text = format!("degree {}\n", row(&in_order(&d, &display_order(cfg, &r)?)));
    let mut rows = Vec::new();
    let mut table = Table { header: vec!["lambda".into(), "monomial".into(), "lemma".into(), "corollary".into(), "basis".into()], rows: Vec::new() };
    let mut all = true;
    for w in &ws {
        let rep = is_monomial_ideal(&r, w, &d, order.as_ref())?;
        all &= rep.monomial;
        let basis = rep.basis().len();
        let _ = writeln!(text, "lambda {}: monomial {} (criterion {}, distinct degrees {}), {} survivors", row(&w.coords), rep.monomial, rep.lemma, rep.corollary, basis);
        rows.push(json!({ "lambda": w.coords, "monomial": rep.monomial, "lemma": rep.lemma, "corollary": rep.corollary, "basis_size": basis }));
        table.rows.push(vec![row(&w.coords), rep.monomial.to_string(), rep.lemma.to_string(), rep.corollary.to_string(), basis.to_string()]);
    }
    let _ = writeln!(text, "{}", if all { "all monomial" } else { "not all monomial" });
    Ok(Report::new(text, json!({ "degree": json::degree(&r, &d), "results": rows, "all_monomial": all })).with_table(table).expect(all))
}

pub fn minkowski_check(cfg: &RunConfig, weight: Option<&str>, variant: Variant, direct_bound: u128) -> Result<Report> {
    let r = cfg.root_system()?;
    let d = degree_or_variant(cfg, &r, variant)?;
    let ws = match weight {
        Some(w) => vec![parse_weight(&r, w)?],
        None => weights_up_to(r.rank(), cfg.bounds.max_height),
    };
    let sets = fundamental_sets(&r, &d)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut table = Table { header: vec!["lambda".into(), "count".into(), "dim".into(), "equal".into(), "direct".into()], rows: Vec::new() };
    let mut ok = true;
    for w in &ws {
        let g = minkowski_check_with(&r, &d, &sets, w, direct_bound)?;
        ok &= g.equal && g.direct != Some(false);
        let direct = g.direct.map_or("-".to_string(), |b| b.to_string());
        let _ = writeln!(text, "lambda {}: #sum {} dim {} equal {} direct {direct}", row(&w.coords), g.count, g.dim, g.equal);
        rows.push(json!({ "lambda": w.coords, "count": g.count, "dim": g.dim.to_string(), "equal": g.equal, "direct": g.direct }));
        table.rows.push(vec![row(&w.coords), g.count.to_string(), g.dim.to_string(), g.equal.to_string(), direct]);
    }
    Ok(Report::new(text, json!({ "degree": json::degree(&r, &d), "results": rows, "all_equal": ok })).with_table(table).expect(ok))
}

fn dyck_kind(r: &RootSystem) -> Result<DyckKind> {
    match r.ty.family {
        Family::A => Ok(DyckKind::A),
        Family::C => Ok(DyckKind::C),
        _ => Err(Error::InadmissibleType(format!("FFLV polytopes need type A or C, got {}", r.ty))),
    }
}

fn points_table(header: Vec<String>, s: &LatticeSet) -> Table {
    Table { header, rows: s.points.iter().map(|p| p.iter().map(|x| x.to_string()).collect()).collect() }
}

pub fn fflv(cfg: &RunConfig, weight: &str, points: bool) -> Result<Report> {
    let r = cfg.root_system()?;
    let w = parse_weight(&r, weight)?;
    let h = fflv_polytope(&r, dyck_kind(&r)?, &w)?;
    let count = count_lattice_points(&h)?;
    let dim = weyl_dim(&r, &w)?;
    let mut text = String::new();
    for row_ in &h.rows {
        let f = LinearForm { coeffs: row_.a.clone() };
        let lhs = f.render(&|k| r.label(k));
        let lhs = lhs.split(" > ").next().unwrap_or_default().replace("d_", "s_");
        let _ = writeln!(text, "{lhs} <= {}", row_.b);
    }
    let _ = writeln!(text, "lattice points {count}, dim {dim}");
    let mut data = json!({ "lambda": w.coords, "halfspaces": json::halfspaces(&h), "count": count.to_string(), "dim": dim.to_string() });
    let mut rep = Report::new(text, Value::Null);
    if points {
        let s = lattice_points(&h)?;
        data["points"] = json::lattice_set(Some(&r), &s);
        rep = rep.with_table(points_table(r.labels(), &s));
    }
    rep.json = data;
    Ok(rep.expect(count == dim))
}

pub fn sp4(m1: i64, m2: i64, points: bool) -> Result<Report> {
    if m1 < 0 || m2 < 0 {
        return Err(Error::InvalidArgument("m1, m2 must be nonnegative".into()));
    }
    let h = sp4_polytope(m1, m2);
    let formula = sp4_count(m1 as u64, m2 as u64)?;
    let count = count_lattice_points(&h)?;
    let text = format!("SP4({m1},{m2}): formula {formula}, enumerated {count}\n");
    let mut data = json!({ "m1": m1, "m2": m2, "formula": formula.to_string(), "count": count.to_string(), "halfspaces": json::halfspaces(&h) });
    let mut rep = Report::new(text, Value::Null);
    if points {
        let s = lattice_points(&h)?;
        data["points"] = json::lattice_set(None, &s);
        rep = rep.with_table(points_table((1..=4).map(|k| format!("x{k}")).collect(), &s));
    }
    rep.json = data;
    Ok(rep.expect(formula == count))
}

pub fn counts(max_a: u64, max_m: u64) -> Result<Report> {
    let mut table = Table { header: vec!["family".into(), "a".into(), "b".into(), "formula".into(), "enumerated".into()], rows: Vec::new() };
    let mut bad = 0;
    for a in 0..=max_a {
        for b in 0..=max_a {
            let (f, e) = (count_n(a, b), count_lattice_points(&p_polytope(a as i64, b as i64))?);
            bad += (f != e) as usize;
            table.rows.push(vec!["N".into(), a.to_string(), b.to_string(), f.to_string(), e.to_string()]);
        }
    }
    for a in 0..=max_m {
        for b in 0..=max_m {
            let (f, e) = (sp4_count(a, b)?, count_lattice_points(&sp4_polytope(a as i64, b as i64))?);
            bad += (f != e) as usize;
            table.rows.push(vec!["SP4".into(), a.to_string(), b.to_string(), f.to_string(), e.to_string()]);
        }
    }
    let text = format!("{} cases, {bad} mismatches\n", table.rows.len());
    let data = json!({ "cases": table.rows.len(), "mismatches": bad, "rows": table.rows });
    Ok(Report::new(text, data).with_table(table).expect(bad == 0))
}

pub fn hull(cfg: &RunConfig, weight: &str, variant: Variant) -> Result<Report> {
    let r = cfg.root_system()?;
    let d = degree_or_variant(cfg, &r, variant)?;
    let w = parse_weight(&r, weight)?;
    let rep = is_monomial_ideal(&r, &w, &d, None)?;
    let s = LatticeSet::from_points(r.n_pos(), rep.basis().into_iter().map(|x| x.into_iter().map(i64::from).collect()))?;
    let h = hull_lattice_points(&s);
    let ord = display_order(cfg, &r)?;
    let new: Vec<Vec<i64>> = h.points.iter().filter(|p| !s.contains(p)).map(|p| ord.iter().map(|&k| p[k]).collect()).collect();
    let mut text = format!("#S = {}, hull lattice points {}\n", s.len(), h.len());
    for p in &new {
        let _ = writeln!(text, "  new {}", row(p));
    }
    let data = json!({ "set": s.len(), "hull": h.len(), "saturated": new.is_empty(), "new_points": new, "header": ord.iter().map(|&k| r.label(k)).collect::<Vec<_>>() });
    Ok(Report::new(text, data).with_table(points_table(r.labels(), &h)))
}

pub fn g2_experiment(bound: u32) -> Result<Report> {
    let rows = g2_conjecture_experiment(bound)?;
    let mut text = String::from("m1 m2  set-sum  dilated  dim\n");
    let mut table = Table { header: vec!["m1".into(), "m2".into(), "set_sum".into(), "dilated".into(), "dim".into()], rows: Vec::new() };
    for g in &rows {
        let _ = writeln!(text, "{:>2} {:>2}  {:>7}  {:>7}  {}", g.m1, g.m2, g.set_sum, g.dilated, g.dim);
        table.rows.push(vec![g.m1.to_string(), g.m2.to_string(), g.set_sum.to_string(), g.dilated.to_string(), g.dim.to_string()]);
    }
    let data: Vec<Value> = rows
        .iter()
        .map(|g| json!({ "m1": g.m1, "m2": g.m2, "set_sum": g.set_sum, "dilated": g.dilated, "dim": g.dim.to_string(), "set_sum_agrees": g.set_sum_agrees(), "dilated_agrees": g.dilated_agrees() }))
        .collect();
    Ok(Report::new(text, json!({ "rows": data })).with_table(table))
}

fn group_text(g: &Group, prefix: &str) -> String {
    let mut t = format!("{prefix} {}: {} - {}\n", g.key, if g.pass() { "PASS" } else { "FAIL" }, g.title);
    for c in &g.checks {
        let _ = writeln!(t, "  [{}] {}: {}", if c.pass { "ok" } else { "FAIL" }, c.id, c.detail);
    }
    t
}

pub fn reproduce(cfg: &RunConfig, section: Option<&str>, criterion: Option<u32>) -> Result<Report> {
    let suite = Suite::new(cfg.clone());
    let groups: Vec<(String, Group)> = match (section, criterion) {
        (Some(_), Some(_)) => return Err(Error::InvalidArgument("give at most one of --section and --criterion".into())),
        (Some(s), None) => vec![("section".into(), suite.section(s)?)],
        (None, Some(n)) => vec![("criterion".into(), suite.criterion(n)?)],
        (None, None) => CRITERIA.iter().map(|c| suite.criterion(c.0).map(|g| ("criterion".to_string(), g))).collect::<Result<_>>()?,
    };
    let ok = groups.iter().all(|(_, g)| g.pass());
    let text: String = groups.iter().map(|(p, g)| group_text(g, p)).collect();
    let table = Table {
        header: vec!["group".into(), "check".into(), "pass".into(), "detail".into()],
        rows: groups.iter().flat_map(|(_, g)| g.checks.iter().map(move |c| vec![g.key.clone(), c.id.to_string(), c.pass.to_string(), c.detail.clone()])).collect(),
    };
    let data = json!({
        "seed": cfg.seed,
        "pass": ok,
        "groups": groups.iter().map(|(p, g)| { let mut v = g.json(); v["kind"] = json!(p); v }).collect::<Vec<_>>(),
    });
    Ok(Report::new(text, data).with_table(table).expect(ok))
}
