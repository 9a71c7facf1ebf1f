//! Run configuration and argument parsing helpers.

use std::path::PathBuf;

use degcone_core::cone::DegreeFunction;
use degcone_core::qpbw::Mode;
use degcone_core::roots::{parse_label, reference_order, CartanType, ConvexOrder, ReducedWord, RootSystem, Weight};
use degcone_core::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum ModeArg {
    /// Exact for rank <= 2, specialized otherwise.
    #[default]
    Auto,
    Exact,
    Specialized,
}

/// Coordinate order of `--degree` lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OrderArg {
    /// The order of the printed tables.
    #[default]
    Reference,
    /// Height, then reverse lexicographic coordinates.
    Canonical,
    /// The convex order of `--word`.
    Word,
}

#[derive(Clone, Debug)]
pub struct Bounds {
    /// Largest `|lambda|` swept by global checks.
    pub max_height: u32,
    /// Cap on the coordinate sum in minimal-point searches.
    pub search_sum: i64,
    /// Largest `dim V(lambda)` checked directly.
    pub direct_dim: u128,
    /// Wall-clock seconds for `reproduce-paper`; later checks are skipped once spent.
    pub time_budget: Option<u64>,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_height: 2, search_sum: 64, direct_dim: 400, time_budget: None }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub ty: Option<CartanType>,
    pub word: Option<String>,
    pub degree: Option<String>,
    pub order: OrderArg,
    pub mode: ModeArg,
    pub seed: u64,
    pub jobs: usize,
    pub bounds: Bounds,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub cache: Option<PathBuf>,
    /// Per-pair progress lines on stderr.
    pub progress: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            ty: None,
            word: None,
            degree: None,
            order: OrderArg::Reference,
            mode: ModeArg::Auto,
            seed: Mode::DEFAULT_SEED,
            jobs: 1,
            bounds: Bounds::default(),
            out: None,
            format: Format::Text,
            cache: None,
            progress: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.bounds.search_sum <= 0 || self.bounds.max_height == 0 || self.jobs == 0 || self.bounds.time_budget == Some(0) {
            return Err(Error::InvalidArgument("bounds and --jobs must be positive".into()));
        }
        Ok(())
    }

    pub fn root_system(&self) -> Result<RootSystem> {
        let ty = self.ty.clone().ok_or_else(|| Error::InvalidArgument("--type and --rank are required".into()))?;
        Ok(RootSystem::new(ty))
    }

    pub fn mode_for(&self, rs: &RootSystem) -> Mode {
        match self.mode {
            ModeArg::Auto => match Mode::default_for(rs) {
                Mode::Exact => Mode::Exact,
                Mode::Specialized { .. } => Mode::Specialized { seed: self.seed },
            },
            ModeArg::Exact => Mode::Exact,
            ModeArg::Specialized => Mode::Specialized { seed: self.seed },
        }
    }

    pub fn word_order(&self, rs: &RootSystem) -> Result<ConvexOrder> {
        let w = self.word.as_deref().ok_or_else(|| Error::InvalidArgument("--word is required".into()))?;
        order_of(rs, w)
    }

    /// The `--degree` argument, if present.
    pub fn degree_function(&self, rs: &RootSystem) -> Result<Option<DegreeFunction>> {
        match &self.degree {
            None => Ok(None),
            Some(s) => {
                let order = match self.order {
                    OrderArg::Reference => reference_order(rs),
                    OrderArg::Canonical => (0..rs.n_pos()).collect(),
                    OrderArg::Word => self.word_order(rs)?.betas,
                };
                parse_degree(rs, s, &order).map(Some)
            }
        }
    }
}

pub fn cartan_type(family: &str, rank: Option<usize>) -> Result<CartanType> {
    match rank {
        Some(r) => CartanType::parse(&format!("{family}{r}")),
        None => CartanType::parse(family),
    }
}

pub fn order_of(rs: &RootSystem, word: &str) -> Result<ConvexOrder> {
    ConvexOrder::new(rs, &ReducedWord::parse(rs, word)?)
}

/// A comma list of values in `order`, or `label=value` pairs separated by `;`.
pub fn parse_degree(rs: &RootSystem, s: &str, order: &[usize]) -> Result<DegreeFunction> {
    let n = rs.n_pos();
    let mut v = vec![0i64; n];
    if s.contains('=') {
        let mut seen = vec![false; n];
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (l, x) = part.split_once('=').ok_or_else(|| Error::InvalidArgument(format!("bad pair {part:?}")))?;
            let k = parse_label(rs, l)?;
            v[k] = parse_int(x)?;
            seen[k] = true;
        }
        if let Some(k) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidArgument(format!("no value for root {}", rs.ascii_label(k))));
        }
    } else {
        let vals: Vec<i64> = s.split(',').map(parse_int).collect::<Result<_>>()?;
        if vals.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: vals.len() });
        }
        for (t, &a) in order.iter().enumerate() {
            v[a] = vals[t];
        }
    }
    DegreeFunction::new(v)
}

pub fn parse_weight(rs: &RootSystem, s: &str) -> Result<Weight> {
    let coords: Vec<i64> = s.split(',').map(parse_int).collect::<Result<_>>()?;
    if coords.len() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: coords.len() });
    }
    Ok(Weight::new(coords))
}

fn parse_int(s: &str) -> Result<i64> {
    s.trim().parse().map_err(|_| Error::InvalidArgument(format!("not an integer: {s:?}")))
}

/// Values of `d` listed in `order`.
pub fn in_order(d: &DegreeFunction, order: &[usize]) -> Vec<i64> {
    order.iter().map(|&k| d.values[k]).collect()
}

/// All dominant weights with `0 < |lambda| <= h`.
pub fn weights_up_to(rank: usize, h: u32) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    fn rec(k: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if k == cur.len() {
            if cur.iter().any(|&c| c > 0) {
                out.push(Weight::new(cur.clone()));
            }
            return;
        }
        for c in 0..=left {
            cur[k] = c;
            rec(k + 1, left - c, cur, out);
        }
        cur[k] = 0;
    }
    rec(0, h as i64, &mut cur, &mut out);
    out.sort_by_key(|w| (w.size(), std::cmp::Reverse(w.coords.clone())));
    out
}
