//! JSON forms of the core types.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use degcone_core::cone::{DegreeFunction, StrictCone};
use degcone_core::exact::Rat;
use degcone_core::poly::{HalfspaceSystem, LatticeSet};
use degcone_core::qpbw::{RelationEntry, RelationSet};
use degcone_core::roots::RootSystem;

pub fn cone(c: &StrictCone) -> Value {
    json!({
        "ambient": c.labels,
        "forms": c.forms.iter().map(|f| f.coeffs.clone()).collect::<Vec<_>>(),
        "rendered": c.render(),
    })
}

pub fn degree(rs: &RootSystem, d: &DegreeFunction) -> Value {
    let mut m = serde_json::Map::new();
    for (k, v) in d.values.iter().enumerate() {
        m.insert(rs.label(k), json!(v));
    }
    Value::Object(m)
}

pub fn lattice_set(rs: Option<&RootSystem>, s: &LatticeSet) -> Value {
    let header: Vec<String> = match rs {
        Some(r) if r.n_pos() == s.dim => r.labels(),
        _ => (1..=s.dim).map(|k| format!("x{k}")).collect(),
    };
    json!({ "header": header, "points": s.points.iter().collect::<Vec<_>>() })
}

pub fn halfspaces(h: &HalfspaceSystem) -> Value {
    json!({
        "dim": h.dim,
        "rows": h.rows.iter().map(|r| json!({ "a": r.a, "b": r.b })).collect::<Vec<_>>(),
    })
}

pub fn rat(r: &Rat) -> String {
    r.to_string()
}

/// One relation as stored in the cache and in `ls-relations` output; `i`, `j`
/// are 1-based positions in the convex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub i: usize,
    pub j: usize,
    pub qpow: i64,
    pub support: Vec<Vec<u32>>,
    pub coeffs: Vec<String>,
}

impl From<&RelationEntry> for RelationJson {
    fn from(e: &RelationEntry) -> Self {
        RelationJson { i: e.i + 1, j: e.j + 1, qpow: e.qpow, support: e.support.clone(), coeffs: e.coeffs.clone() }
    }
}

impl RelationJson {
    pub fn entry(&self) -> RelationEntry {
        RelationEntry { i: self.i - 1, j: self.j - 1, qpow: self.qpow, support: self.support.clone(), coeffs: self.coeffs.clone() }
    }
}

pub fn relations(rs: &RootSystem, rels: &RelationSet) -> Value {
    let betas: Vec<String> = rels.order.betas.iter().map(|&b| rs.label(b)).collect();
    json!({
        "type": rs.ty.to_string(),
        "word": rels.order.word.digits(),
        "betas": betas,
        "mode": mode_name(rels),
        "q0": rels.q0.as_ref().map(|(a, b)| vec![rat(a), rat(b)]),
        "relations": rels.entries.iter().map(RelationJson::from).collect::<Vec<_>>(),
    })
}

fn mode_name(rels: &RelationSet) -> String {
    match rels.mode {
        degcone_core::qpbw::Mode::Exact => "exact".into(),
        degcone_core::qpbw::Mode::Specialized { seed } => format!("specialized:{seed}"),
    }
}
