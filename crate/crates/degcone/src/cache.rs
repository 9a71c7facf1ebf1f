//! Relation computation with an optional on-disk cache and parallel pairs.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use degcone_core::qpbw::{compute_relations, specialization_points, Mode, RelationEntry, RelationSet};
use degcone_core::roots::{ConvexOrder, RootSystem};
use degcone_core::{Error, Result};

use crate::json::RelationJson;

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Cached {
    mode: String,
    relation: RelationJson,
}

/// Relations keyed by `type|word|i|j` (1-based positions).
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct RelationCache {
    entries: BTreeMap<String, Cached>,
}

fn key(rs: &RootSystem, order: &ConvexOrder, i: usize, j: usize) -> String {
    format!("{}|{}|{}|{}", rs.ty, order.word.digits(), i + 1, j + 1)
}

pub fn mode_tag(mode: Mode) -> String {
    match mode {
        Mode::Exact => "exact".into(),
        Mode::Specialized { seed } => format!("specialized:{seed}"),
    }
}

impl RelationCache {
    pub fn load(path: &Path) -> Result<Self> {
        if !path.exists() {
            return Ok(Self::default());
        }
        let text = fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::InvalidArgument(format!("bad cache file {}: {e}", path.display())))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).expect("serializable");
        fs::write(path, text).map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))
    }

    fn get(&self, rs: &RootSystem, order: &ConvexOrder, mode: Mode, i: usize, j: usize) -> Option<RelationEntry> {
        self.entries.get(&key(rs, order, i, j)).filter(|c| c.mode == mode_tag(mode)).map(|c| c.relation.entry())
    }

    fn put(&mut self, rs: &RootSystem, order: &ConvexOrder, mode: Mode, e: &RelationEntry) {
        self.entries.insert(key(rs, order, e.i, e.j), Cached { mode: mode_tag(mode), relation: e.into() });
    }
}

/// All relations of `order`, reusing cached pairs and computing the rest on
/// `jobs` threads. Results are merged in pair order.
pub fn relations(
    rs: &RootSystem,
    order: &ConvexOrder,
    mode: Mode,
    jobs: usize,
    cache: Option<&Path>,
    progress: bool,
) -> Result<RelationSet> {
    let n = order.len();
    let mut store = match cache {
        Some(p) => RelationCache::load(p)?,
        None => RelationCache::default(),
    };
    let mut have: BTreeMap<(usize, usize), RelationEntry> = BTreeMap::new();
    let mut missing = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match store.get(rs, order, mode, i, j) {
                Some(e) => {
                    have.insert((i, j), e);
                }
                None => missing.push((i, j)),
            }
        }
    }
    if !missing.is_empty() {
        let chunk = missing.len().div_ceil(jobs.max(1) * 4).max(1);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().map_err(|e| Error::Internal(e.to_string()))?;
        let done: Vec<Result<RelationSet>> = pool.install(|| {
            missing
                .par_chunks(chunk)
                .map(|c| {
                    let r = compute_relations(rs, order, mode, Some(c));
                    if progress {
                        for &(i, j) in c {
                            eprintln!("{} {}: relation ({}, {}) done", rs.ty, order.word.digits(), i + 1, j + 1);
                        }
                    }
                    r
                })
                .collect()
        });
        for part in done {
            for e in part?.entries {
                store.put(rs, order, mode, &e);
                have.insert((e.i, e.j), e);
            }
        }
        if let Some(p) = cache {
            store.save(p)?;
        }
    }
    let q0 = match mode {
        Mode::Exact => None,
        Mode::Specialized { seed } => Some(specialization_points(seed)),
    };
    Ok(RelationSet { order: order.clone(), mode, q0, entries: have.into_values().collect() })
}
