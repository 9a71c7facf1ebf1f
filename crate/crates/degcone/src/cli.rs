//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use degcone_core::qpbw::Mode;
use degcone_core::Result;

use crate::commands::{self, Expect, ExpectEq, Report, Variant};
use crate::config::{cartan_type, Bounds, Format, ModeArg, OrderArg, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "degcone", version, about = "Quantum degree cones, monomial bases and lattice polytopes")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Cartan type letter (A, B, C, D, G), or a full name such as C3.
    #[arg(long = "type", global = true)]
    pub ty: Option<String>,
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    /// Reduced word of w0 as a digit string, e.g. 1212.
    #[arg(long, global = true)]
    pub word: Option<String>,
    /// Comma list of values in `--order`, or `label=value` pairs separated by `;`.
    #[arg(long, global = true)]
    pub degree: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Reference)]
    pub order: OrderArg,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
    #[arg(long, global = true, default_value_t = Mode::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Also write the machine-readable report (JSON, or CSV with --format csv) here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest |lambda| swept by global checks.
    #[arg(long, global = true, default_value_t = 2)]
    pub max_height: u32,
    /// Cap on the coordinate sum searched for minimal points.
    #[arg(long, global = true, default_value_t = 64)]
    pub search_sum: i64,
    /// Largest dim V(lambda) tested directly in global checks.
    #[arg(long, global = true, default_value_t = 400)]
    pub direct_dim: u128,
    /// Seconds after which remaining reproduce checks are skipped.
    #[arg(long, global = true)]
    pub time_budget: Option<u64>,
    /// Relation cache file; created if missing, reused on later runs.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Print one stderr line per computed relation pair.
    #[arg(long, global = true)]
    pub progress: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Positive roots with labels and heights.
    Roots,
    /// Reduced words of the longest element.
    Words {
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Inequalities of the classical degree cone.
    ConeClassical,
    /// Inequalities of the quantum degree cone of --word.
    ConeQuantum {
        /// One form per relation term, without removing redundant forms.
        #[arg(long)]
        raw: bool,
    },
    /// Straightening relations of --word.
    LsRelations,
    /// Emptiness of an intersection of cones, with certificate.
    ConeEmpty {
        /// Further words to intersect with.
        #[arg(long)]
        other: Vec<String>,
        /// Intersect with the classical cone.
        #[arg(long)]
        classical: bool,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Semantic equality of the cone of --word with another cone.
    ConeEqual {
        #[arg(long)]
        other: Option<String>,
        #[arg(long)]
        classical: bool,
        #[arg(long, value_enum)]
        expect: Option<ExpectEq>,
    },
    /// A lattice point inside the quantum cone of --word.
    InteriorPoint,
    /// Lattice points of minimal coordinate sum.
    MinimalPoints {
        #[arg(long)]
        classical: bool,
    },
    /// Weight-space dimensions of V(lambda).
    Irrep {
        #[arg(long)]
        weight: String,
    },
    /// Whether I^d(lambda) is monomial.
    MonomialCheck {
        #[arg(long)]
        weight: Option<String>,
        /// Check every fundamental weight.
        #[arg(long)]
        fundamentals: bool,
        /// Built-in degree used when --degree is absent.
        #[arg(long, value_enum, default_value_t = Variant::Global)]
        variant: Variant,
    },
    /// Minkowski sums of fundamental bases against dim V(lambda).
    MinkowskiCheck {
        #[arg(long)]
        weight: Option<String>,
        #[arg(long, value_enum, default_value_t = Variant::Global)]
        variant: Variant,
        /// Also test monomiality directly when dim V(lambda) is at most this.
        #[arg(long, default_value_t = 0)]
        direct_bound: u128,
    },
    /// FFLV polytope of lambda in type A or C.
    Fflv {
        #[arg(long)]
        weight: String,
        #[arg(long)]
        points: bool,
    },
    /// The SP4(m1, m2) polytope.
    Sp4 {
        #[arg(long)]
        m1: i64,
        #[arg(long)]
        m2: i64,
        #[arg(long)]
        points: bool,
    },
    /// Closed counting formulas against enumeration.
    Counts {
        #[arg(long, default_value_t = 12)]
        max_a: u64,
        #[arg(long, default_value_t = 4)]
        max_m: u64,
    },
    /// Lattice points in the hull of a monomial basis.
    Hull {
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum, default_value_t = Variant::Local)]
        variant: Variant,
    },
    /// Both readings of the G2 Minkowski statement.
    G2Experiment {
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
    /// Pass/fail report against the recorded ground truth.
    ReproducePaper {
        /// Section key such as 6.4, or `all`.
        #[arg(long)]
        section: Option<String>,
        /// Acceptance criterion 1..12.
        #[arg(long)]
        criterion: Option<u32>,
    },
}

impl Global {
    pub fn config(&self) -> Result<RunConfig> {
        let ty = match &self.ty {
            Some(f) => Some(cartan_type(f, self.rank)?),
            None => None,
        };
        let cfg = RunConfig {
            ty,
            word: self.word.clone(),
            degree: self.degree.clone(),
            order: self.order,
            mode: self.mode,
            seed: self.seed,
            jobs: self.jobs,
            bounds: Bounds { max_height: self.max_height, search_sum: self.search_sum, direct_dim: self.direct_dim, time_budget: self.time_budget },
            out: self.out.clone(),
            format: self.format,
            cache: self.cache.clone(),
            progress: self.progress,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Runs one parsed command.
pub fn execute(cfg: &RunConfig, cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Roots => commands::roots(cfg),
        Command::Words { limit } => commands::words(cfg, *limit),
        Command::ConeClassical => commands::cone_classical(cfg),
        Command::ConeQuantum { raw } => commands::cone_quantum(cfg, *raw),
        Command::LsRelations => commands::ls_relations(cfg),
        Command::ConeEmpty { other, classical, expect } => commands::cone_empty(cfg, other, *classical, *expect),
        Command::ConeEqual { other, classical, expect } => commands::cone_equal_cmd(cfg, other.as_deref(), *classical, *expect),
        Command::InteriorPoint => commands::interior_point(cfg),
        Command::MinimalPoints { classical } => commands::minimal_points(cfg, *classical),
        Command::Irrep { weight } => commands::irrep(cfg, weight),
        Command::MonomialCheck { weight, fundamentals, variant } => commands::monomial_check(cfg, weight.as_deref(), *fundamentals, *variant),
        Command::MinkowskiCheck { weight, variant, direct_bound } => commands::minkowski_check(cfg, weight.as_deref(), *variant, *direct_bound),
        Command::Fflv { weight, points } => commands::fflv(cfg, weight, *points),
        Command::Sp4 { m1, m2, points } => commands::sp4(*m1, *m2, *points),
        Command::Counts { max_a, max_m } => commands::counts(*max_a, *max_m),
        Command::Hull { weight, variant } => commands::hull(cfg, weight, *variant),
        Command::G2Experiment { bound } => commands::g2_experiment(*bound),
        Command::ReproducePaper { section, criterion } => commands::reproduce(cfg, section.as_deref(), *criterion),
    }
}

fn csv_of(r: &Report) -> std::result::Result<String, String> {
    let t = r.table.as_ref().ok_or("this command has no tabular output; use --format json")?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&t.header).map_err(|e| e.to_string())?;
    for row in &t.rows {
        w.write_record(row).map_err(|e| e.to_string())?;
    }
    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

/// Rendered output in `format`.
pub fn render(r: &Report, format: Format) -> std::result::Result<String, String> {
    match format {
        Format::Text => Ok(r.text.clone()),
        Format::Json => Ok(serde_json::to_string_pretty(&r.json).expect("serializable") + "\n"),
        Format::Csv => csv_of(r),
    }
}

/// Parses `argv`, runs the command and returns the exit status: 0 when every
/// requested check passed, 1 when one failed, 2 on usage or input errors.
pub fn cmd_dispatch<I, T>(argv: I) -> (i32, Option<Report>)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return (code, None);
        }
    };
    let cfg = match cli.global.config() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return (2, None);
        }
    };
    let report = match execute(&cfg, &cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return (2, None);
        }
    };
    let shown = match render(&report, cfg.format) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return (2, Some(report));
        }
    };
    print!("{shown}");
    if let Some(path) = &cfg.out {
        let file_fmt = if cfg.format == Format::Csv { Format::Csv } else { Format::Json };
        let body = render(&report, file_fmt).unwrap_or_else(|_| render(&report, Format::Json).expect("json"));
        if let Err(e) = fs::write(path, body) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return (2, Some(report));
        }
    }
    (if report.ok { 0 } else { 1 }, Some(report))
}

pub fn run() -> i32 {
    cmd_dispatch(std::env::args_os()).0
}
