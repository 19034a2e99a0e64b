//! Command-line front end. Every command prints one JSON document.

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::format_rat;
use crate::arithmetic::{
    arithmetic_genus, hodge_index_max_square, purity_chi_bound, reduced_virtual_dim, splitting_lower_bound,
    SplittingData,
};
use crate::engine::{
    direct_invariant, EngineError, InvariantEngine, InvariantValue, PolynomialCache, SurfaceTopology,
    NUMBER_NAMES,
};
use crate::exterior::{pic_pushforward, wedge_invariants, H1Model, PicClass};
use crate::hilb::{hilb_fixed_points, DEFAULT_SEED};
use crate::toric::{
    euler_characteristic, h0_dimension, h2_vanishes, intersection_numbers, EquivariantLineBundle, ToricSurfaceModel,
};

#[derive(Parser, Debug)]
#[command(name = "resloc", version, about = "Reduced residue invariants of surfaces by localization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Seed for the weight specializations.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Directory of fitted polynomials.
    #[arg(long, env = "RESLOC_CACHE")]
    cache_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TopologyArgs {
    #[arg(long, allow_negative_numbers = true)]
    beta_sq: i64,
    #[arg(long, allow_negative_numbers = true)]
    beta_c1: i64,
    #[arg(long, allow_negative_numbers = true)]
    c1_sq: i64,
    #[arg(long, allow_negative_numbers = true)]
    c2: i64,
    #[arg(long, default_value_t = 0)]
    h01: u32,
    #[arg(long, default_value_t = 0)]
    h02: u32,
    /// Number of connected components.
    #[arg(long, default_value_t = 1)]
    components: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant of a toric configuration by localization.
    Direct {
        #[arg(long)]
        surface: String,
        /// Divisor coefficients, comma-separated, '+' between components.
        #[arg(long, allow_hyphen_values = true)]
        bundle: String,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[command(flatten)]
        common: Common,
    },
    /// Fit and validate the universal polynomial F_{n,k}.
    Fit {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Invariant at arbitrary topological input.
    Eval {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[command(flatten)]
        topology: TopologyArgs,
        /// Use the Picard-variety form of the invariant (requires h01 = 0).
        #[arg(long)]
        picard: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Wedge invariants and Picard pushforwards of an H^1 model.
    Wedge {
        #[arg(long)]
        model: PathBuf,
    },
    /// Purity and Hodge-index bounds.
    CheckPurity {
        /// Arithmetic genus; derived from --beta-sq and --beta-c1 if absent.
        #[arg(long, allow_negative_numbers = true)]
        h: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        beta_sq: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        beta_c1: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        delta: i64,
        #[arg(long, allow_negative_numbers = true)]
        chi: i64,
        /// Pairings beta.beta_k, comma-separated; needs --beta-sq.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        splitting: Option<Vec<i64>>,
        #[arg(long, allow_negative_numbers = true)]
        l_sq: Option<i64>,
        #[arg(long, allow_negative_numbers = true, requires = "l_sq")]
        l_dot_a: Option<i64>,
    },
    /// Fan, charts and bundle data of a toric surface.
    ToricInfo {
        #[arg(long)]
        surface: String,
        #[arg(long, allow_hyphen_values = true)]
        bundle: Option<String>,
        /// Also count fixed points of the Hilbert scheme of this many points.
        #[arg(long)]
        n: Option<u32>,
    },
}

struct Failure {
    code: i32,
    kind: String,
    message: String,
}

impl Failure {
    fn validation(kind: &str, message: impl ToString) -> Self {
        Failure { code: 1, kind: kind.into(), message: message.to_string() }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        Failure { code: if e.is_internal() { 2 } else { 1 }, kind: e.kind().into(), message: e.to_string() }
    }
}

fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json renders")
}

/// Parses `args` (program name first) and runs the command. Returns the
/// exit code and the text for standard output.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, e.to_string());
            }
            let f = Failure::validation("usage", e.to_string().trim());
            return (f.code, render(&json!({"error": {"kind": f.kind, "message": f.message}})));
        }
    };
    match execute(cli.command) {
        Ok(v) => (0, render(&v)),
        Err(f) => (f.code, render(&json!({"error": {"kind": f.kind, "message": f.message}}))),
    }
}

fn value_json(v: &InvariantValue) -> (Value, Value) {
    (json!(format_rat(&v.coefficient)), json!(v.t_exponent))
}

fn engine(common: &Common) -> InvariantEngine {
    InvariantEngine::new(common.seed, common.cache_dir.as_ref().map(PolynomialCache::new))
}

fn surface(name: &str) -> Result<Arc<ToricSurfaceModel>, Failure> {
    ToricSurfaceModel::parse(name).map(Arc::new).map_err(|e| Failure::validation("toric", e))
}

fn bundle(s: &Arc<ToricSurfaceModel>, b: &str) -> Result<EquivariantLineBundle, Failure> {
    EquivariantLineBundle::parse(s.clone(), b).map_err(|e| Failure::validation("toric", e))
}

fn execute(cmd: Command) -> Result<Value, Failure> {
    match cmd {
        Command::Direct { surface: s, bundle: b, n, m, common } => {
            let s = surface(&s)?;
            let l = bundle(&s, &b)?;
            let v = direct_invariant(&s, &l, n, m, common.seed)?;
            let chi = euler_characteristic(&l);
            let (coefficient, t_exponent) = value_json(&v);
            Ok(json!({
                "surface": s.name(),
                "bundle": l.describe(),
                "n": n,
                "m": m,
                "chi_l": chi,
                "k": chi - 1 - m,
                "coefficient": coefficient,
                "t_exponent": t_exponent,
            }))
        }
        Command::Fit { n, k, common } => {
            let e = engine(&common);
            let p = e.fit(n, k)?;
            let coeffs: Vec<Value> = p
                .coefficients
                .iter()
                .map(|(exp, c)| json!({"exp": exp, "value": format_rat(c)}))
                .collect();
            let cached = common.cache_dir.as_ref().map(|d| PolynomialCache::new(d).path_for(n, k));
            Ok(json!({
                "n": n,
                "k": k,
                "degree_bound": p.degree_bound,
                "variables": NUMBER_NAMES,
                "coeffs": coeffs,
                "polynomial": p.as_poly().to_string(),
                "training_size": p.provenance.len(),
                "holdouts_validated": p.holdouts_validated,
                "cache_file": cached,
            }))
        }
        Command::Eval { n, m, topology: t, picard, common } => {
            let topo = SurfaceTopology {
                beta_sq: t.beta_sq,
                beta_c1: t.beta_c1,
                c1_sq: t.c1_sq,
                c2: t.c2,
                h01: t.h01,
                h02: t.h02,
                components: t.components,
            };
            let e = engine(&common);
            let v = if picard { e.evaluate_theorem2_b1zero(&topo, n, m)? } else { e.evaluate_theorem1(&topo, n, m)? };
            let (coefficient, t_exponent) = value_json(&v);
            Ok(json!({
                "n": n,
                "m": m,
                "chi_l": topo.chi_l(),
                "k": topo.chi_l() - 1 - m,
                "coefficient": coefficient,
                "t_exponent": t_exponent,
                "reduced_virtual_dim": reduced_virtual_dim(&topo, n)?,
            }))
        }
        Command::Wedge { model } => {
            let text = std::fs::read_to_string(&model)
                .map_err(|e| Failure::validation("io", format!("{}: {e}", model.display())))?;
            let m = H1Model::from_json(&text).map_err(|e| Failure::validation("model", e))?;
            let w = wedge_invariants(&m).map_err(|e| Failure::validation("model", e))?;
            let mut push = serde_json::Map::new();
            for (alpha, power, class) in [
                (PicClass::Beta, 2, m.beta_class()),
                (PicClass::C1, 2, m.c1_class()),
                (PicClass::One, 4, m.one_class()),
            ] {
                let p = pic_pushforward(&m, alpha, power).map_err(|e| Failure::validation("model", e))?;
                let ratio = if class.is_zero() {
                    Value::Null
                } else {
                    let (idx, c) = class.terms().next().expect("nonzero");
                    json!(format_rat(&(p.coefficient(&idx) / c)))
                };
                push.insert(format!("{alpha}.id^{power}"), json!({"value": p.to_string(), "multiple_of_class": ratio}));
            }
            Ok(json!({"b1": m.b1, "w": w.to_json(), "pushforward": push}))
        }
        Command::CheckPurity { h, beta_sq, beta_c1, delta, chi, splitting, l_sq, l_dot_a } => {
            let h = match (h, beta_sq, beta_c1) {
                (Some(h), _, _) => h,
                (None, Some(b2), Some(bc)) => arithmetic_genus(b2, bc).map_err(|e| Failure::validation("arithmetic", e))?,
                _ => return Err(Failure::validation("usage", "give --h, or both --beta-sq and --beta-c1")),
            };
            let mut out = json!({
                "h": h,
                "delta": delta,
                "chi": chi,
                "chi_bound": purity_chi_bound(h, delta, chi),
                "free_points": chi - 1 + h,
            });
            if let Some(parts) = splitting {
                let b2 = beta_sq.ok_or_else(|| Failure::validation("usage", "--splitting needs --beta-sq"))?;
                let s = SplittingData::new(b2, parts).map_err(|e| Failure::validation("arithmetic", e))?;
                let bound = splitting_lower_bound(b2, &s).map_err(|e| Failure::validation("arithmetic", e))?;
                out["splitting_lower_bound"] = json!(format_rat(&bound));
            }
            if let Some(l2) = l_sq {
                let la = l_dot_a.unwrap_or(0);
                let q = hodge_index_max_square(l2, la).map_err(|e| Failure::validation("arithmetic", e))?;
                out["hodge_index_max_square"] = json!(format_rat(&q));
            }
            Ok(out)
        }
        Command::ToricInfo { surface: s, bundle: b, n } => {
            let s = surface(&s)?;
            let charts: Vec<Value> = s
                .charts()
                .iter()
                .map(|c| {
                    json!({
                        "id": c.id,
                        "component": c.component,
                        "tangent": c.tangent_characters.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let components: Vec<Value> = s
                .components()
                .iter()
                .map(|c| json!({"rays": c.rays(), "self_intersections": c.self_intersections()}))
                .collect();
            let mut out = json!({
                "surface": s.name(),
                "components": components,
                "charts": charts,
                "c1_sq": s.c1_sq(),
                "c2": s.c2(),
                "chi_o": s.chi_o(),
            });
            if let Some(b) = b {
                let l = bundle(&s, &b)?;
                let d = intersection_numbers(&l);
                out["bundle"] = json!({
                    "describe": l.describe(),
                    "beta_sq": d.beta_sq,
                    "beta_c1": d.beta_c1,
                    "chi": euler_characteristic(&l),
                    "h0": h0_dimension(&l),
                    "h2_vanishes": h2_vanishes(&l),
                    "nef": l.is_nef(),
                    "chart_weights": l.chart_weights().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                });
            }
            if let Some(n) = n {
                out["hilb_fixed_points"] = json!({"n": n, "count": hilb_fixed_points(&s, n).len()});
            }
            Ok(out)
        }
    }
}
