//! The `tfpoly` command line.
//!
//! Every subcommand reads one graph file (see [`MultiGraph`]'s text
//! format). Exit codes: 0 on success, 1 when a verification fails, 2 on
//! bad input or an exceeded size guard.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::algebra::{ScaledPoly, Var};
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Orientation};
use crate::invariants::{
    self, CheckReport, KappaMode, OmegaRoute, PolynomialReport, PsiKind, Quadrant, Route, Suite, TutteRoute,
};
use crate::limits::Limits;
use crate::orientations::{cut_eulerian_classes, ClassRecord};
use crate::tensionflow::FiniteAbelianGroup;

#[derive(Debug, Parser)]
#[command(
    name = "tfpoly",
    version,
    about = "Exact tension-flow and Tutte-type polynomial invariants"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct RunConfig {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for per-orientation work (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    /// Largest state space any enumeration may visit. Overrides TFPOLY_GUARD.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_states: Option<u64>,
    /// Largest edge count for subset and orientation enumerations.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub max_edges: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tutte polynomial T(G;x,y).
    Tutte {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "recursion")]
        route: TutteRouteArg,
    },
    /// Rank generating polynomial R(G;x,y).
    Whitney { graph: PathBuf },
    /// Hyperbolic tension-flow polynomial, or its value by enumeration.
    Omega {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "expansion")]
        via: OmegaVia,
        #[command(flatten)]
        groups: GroupArgs,
    },
    /// Modular (or integral) tension polynomial.
    Tension {
        graph: PathBuf,
        #[arg(long)]
        integral: bool,
    },
    /// Modular (or integral) flow polynomial.
    Flow {
        graph: PathBuf,
        #[arg(long)]
        integral: bool,
    },
    /// Chromatic polynomial.
    Chromatic { graph: PathBuf },
    /// Complementary counting polynomial; with --orientation, the factor of
    /// one orientation.
    Kappa {
        graph: PathBuf,
        #[arg(long)]
        integral: bool,
        /// Flip bits, one per edge, e.g. `01100`.
        #[arg(long)]
        orientation: Option<String>,
        /// With --orientation: the closed-window count.
        #[arg(long, requires = "orientation")]
        closed: bool,
    },
    /// Weighted complementary polynomial in x, y, z, w.
    Psi {
        graph: PathBuf,
        /// Sum over all orientations with integral windows.
        #[arg(long)]
        integral: bool,
        /// Closed windows (the barred polynomial).
        #[arg(long)]
        dual: bool,
    },
    /// One JSON record per cut-Eulerian class.
    ClassifyOrientations { graph: PathBuf },
    /// Signed triple count for a Tutte value T(G;±p,±q).
    TutteValues {
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        p: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        q: i64,
        /// One of ++, -+, +-, --.
        #[arg(long, default_value = "++", allow_hyphen_values = true)]
        quadrant: String,
    },
    /// Run verification suites on one or more graphs.
    Verify {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Order of the tension group (brute route).
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub p: Option<i64>,
    /// Order of the flow group (brute route).
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub q: Option<i64>,
    /// Tension group as cyclic factor orders, e.g. `2,2`; overrides --p.
    #[arg(long, value_delimiter = ',')]
    pub group_a: Option<Vec<u64>>,
    /// Flow group as cyclic factor orders; overrides --q.
    #[arg(long, value_delimiter = ',')]
    pub group_b: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TutteRouteArg {
    Recursion,
    Shift,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OmegaVia {
    Expansion,
    Arrangement,
    Brute,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SuiteArg {
    All,
    Reciprocity,
    Reiner,
    #[value(name = "section6", alias = "pair-identities")]
    PairIdentities,
    Arrangement,
    Orientation,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Reciprocity => Suite::Reciprocity,
            SuiteArg::Reiner => Suite::Reiner,
            SuiteArg::PairIdentities => Suite::PairIdentities,
            SuiteArg::Arrangement => Suite::Arrangement,
            SuiteArg::Orientation => Suite::Orientation,
        }
    }
}

/// Reads a graph file; errors carry the path.
pub fn parse_graph_file(path: &Path) -> Result<(MultiGraph, Orientation)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    let g: MultiGraph = text.parse().map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })?;
    let eps = Orientation::identity(&g);
    Ok((g, eps))
}

impl RunConfig {
    pub fn limits(&self) -> Limits {
        let mut limits = Limits::from_env();
        if let Some(s) = self.max_states {
            limits.max_states = s as u128;
        }
        if let Some(e) = self.max_edges {
            limits.max_edges = e as usize;
        }
        limits
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit
/// code.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    run_command(&cli, out, err)
}

pub fn run_command(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let pool = match cli.config.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n as usize).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    // Output is buffered so the worker pool never touches `out`.
    let mut buf = Vec::new();
    let result = pool.install(|| execute(cli, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Verification(_) | Error::RouteDisagreement { .. } => 1,
                _ => 2,
            }
        }
    }
}

fn emit_poly(out: &mut dyn Write, json: bool, file: &Path, report: PolynomialReport) -> Result<()> {
    if json {
        let report = PolynomialReport {
            graph: file.display().to_string(),
            ..report
        };
        writeln!(out, "{}", report.to_json())?;
    } else {
        writeln!(out, "{}", report.poly)?;
    }
    Ok(())
}

fn emit_value(out: &mut dyn Write, json: bool, file: &Path, name: &str, value: &BigInt) -> Result<()> {
    if json {
        let v = serde_json::json!({
            "invariant": name,
            "graph": file.display().to_string(),
            "value": value.to_string(),
        });
        writeln!(out, "{v}")?;
    } else {
        writeln!(out, "{value}")?;
    }
    Ok(())
}

fn group(orders: &Option<Vec<u64>>, fallback: Option<i64>, flag: &str) -> Result<FiniteAbelianGroup> {
    match (orders, fallback) {
        (Some(o), _) => FiniteAbelianGroup::new(o.clone()),
        (None, Some(m)) => FiniteAbelianGroup::cyclic(m as u64),
        (None, None) => Err(Error::InvalidArgument(format!(
            "--via brute needs --{flag} or --group-{}",
            if flag == "p" { "a" } else { "b" }
        ))),
    }
}

fn parse_flips(g: &MultiGraph, bits: &str) -> Result<Orientation> {
    let flips = bits
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::InvalidArgument(format!(
                "orientation bits must be 0 or 1, got {other:?}"
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    Orientation::from_flips(g, flips)
}

/// Ok(false) means a verification ran and failed.
fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let limits = cli.config.limits();
    let json = cli.config.json;
    match &cli.command {
        Command::Tutte { graph, route } => {
            let (g, _) = parse_graph_file(graph)?;
            let (route, tag) = match route {
                TutteRouteArg::Recursion => (TutteRoute::Recursion, Route::Recursion),
                TutteRouteArg::Shift => (TutteRoute::Shift, Route::Expansion),
            };
            let t = invariants::tutte(&g, route, &limits)?;
            emit_poly(out, json, graph, PolynomialReport::new("tutte", t, tag, &g))?;
        }
        Command::Whitney { graph } => {
            let (g, _) = parse_graph_file(graph)?;
            let r = invariants::whitney(&g, &limits)?;
            emit_poly(
                out,
                json,
                graph,
                PolynomialReport::new("whitney", r, Route::Expansion, &g),
            )?;
        }
        Command::Omega { graph, via, groups } => {
            let (g, _) = parse_graph_file(graph)?;
            match via {
                OmegaVia::Expansion | OmegaVia::Arrangement => {
                    let (route, tag) = match via {
                        OmegaVia::Expansion => (OmegaRoute::Expansion, Route::Expansion),
                        _ => (OmegaRoute::Arrangement, Route::Arrangement),
                    };
                    let w = invariants::omega(&g, route, &limits)?;
                    emit_poly(out, json, graph, PolynomialReport::new("omega", w, tag, &g))?;
                }
                OmegaVia::Brute => {
                    let a = group(&groups.group_a, groups.p, "p")?;
                    let b = group(&groups.group_b, groups.q, "q")?;
                    let n = invariants::omega_brute(&g, &a, &b, &limits)?;
                    emit_value(out, json, graph, "omega", &n)?;
                }
            }
        }
        Command::Tension { graph, integral } | Command::Flow { graph, integral } => {
            let (g, _) = parse_graph_file(graph)?;
            let tension = matches!(cli.command, Command::Tension { .. });
            let (name, p): (&str, ScaledPoly) = match (tension, integral) {
                (true, false) => ("tension", invariants::tension_poly(&g, &limits)?.into()),
                (true, true) => ("integral_tension", invariants::integral_tension_poly(&g, &limits)?),
                (false, false) => ("flow", invariants::flow_poly(&g, &limits)?.into()),
                (false, true) => ("integral_flow", invariants::integral_flow_poly(&g, &limits)?),
            };
            emit_poly(
                out,
                json,
                graph,
                PolynomialReport::new(name, p, Route::Interpolation, &g),
            )?;
        }
        Command::Chromatic { graph } => {
            let (g, _) = parse_graph_file(graph)?;
            let p = invariants::chromatic_poly(&g, &limits)?;
            emit_poly(
                out,
                json,
                graph,
                PolynomialReport::new("chromatic", p, Route::Interpolation, &g),
            )?;
        }
        Command::Kappa {
            graph,
            integral,
            orientation,
            closed,
        } => {
            let (g, _) = parse_graph_file(graph)?;
            let (name, p) = match orientation {
                Some(bits) => {
                    let rho = parse_flips(&g, bits)?;
                    let mode = if *closed { KappaMode::Closed } else { KappaMode::Open };
                    let name = if *closed { "kappa_bar_rho" } else { "kappa_rho" };
                    (name, invariants::kappa_rho(&g, &rho, mode, &limits)?)
                }
                None => {
                    let kind = if *integral { PsiKind::PsiZ } else { PsiKind::Psi };
                    let psi = invariants::psi_family(&g, kind, &limits)?;
                    let one = [(Var::Z, BigInt::from(1)), (Var::W, BigInt::from(1))];
                    (if *integral { "kappa_z" } else { "kappa" }, psi.partial_eval(&one))
                }
            };
            emit_poly(
                out,
                json,
                graph,
                PolynomialReport::new(name, p, Route::Interpolation, &g),
            )?;
        }
        Command::Psi { graph, integral, dual } => {
            let (g, _) = parse_graph_file(graph)?;
            let kind = match (integral, dual) {
                (true, false) => PsiKind::PsiZ,
                (true, true) => PsiKind::BarPsiZ,
                (false, false) => PsiKind::Psi,
                (false, true) => PsiKind::BarPsi,
            };
            let p = invariants::psi_family(&g, kind, &limits)?;
            emit_poly(
                out,
                json,
                graph,
                PolynomialReport::new(kind.name(), p, Route::Interpolation, &g),
            )?;
        }
        Command::ClassifyOrientations { graph } => {
            let (g, _) = parse_graph_file(graph)?;
            for cls in cut_eulerian_classes(&g, &limits)? {
                let rec = ClassRecord::from(&cls);
                writeln!(out, "{}", serde_json::to_string(&rec).expect("record serializes"))?;
            }
        }
        Command::TutteValues { graph, p, q, quadrant } => {
            let (g, _) = parse_graph_file(graph)?;
            let quad: Quadrant = quadrant.parse()?;
            let n = invariants::tutte_value_triples(&g, *p, *q, quad, &limits)?;
            emit_value(out, json, graph, "tutte_values", &n)?;
        }
        Command::Verify { graphs, suite } => {
            let mut ok = true;
            for path in graphs {
                let (g, _) = parse_graph_file(path)?;
                let reports = invariants::run_suite(&g, (*suite).into(), &limits)?;
                for rep in &reports {
                    ok &= rep.passed();
                    write_report(out, json, path, rep)?;
                }
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn write_report(out: &mut dyn Write, json: bool, path: &Path, rep: &CheckReport) -> Result<()> {
    if json {
        let mut v = serde_json::to_value(rep).expect("report serializes");
        v["file"] = serde_json::Value::String(path.display().to_string());
        writeln!(out, "{v}")?;
    } else {
        let status = if rep.passed() { "ok" } else { "FAILED" };
        write!(out, "[{status}] {}: {rep}", path.display())?;
    }
    Ok(())
}
