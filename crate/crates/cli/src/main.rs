//! Command-line surface for the dpcolor library: chromatic polynomials,
//! color-function tables, coloring counts, deletion-contraction checks and
//! catalog sweeps, all on graph/cover text files with byte-stable output.
//!
//! Exit codes: 0 success, 2 unreadable or malformed input, 3 resource limit
//! exceeded, 4 precondition violated.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dpcolor::counting;
use dpcolor::formulas::{self, TargetFn};
use dpcolor::relations::{self, DcBoundsReport, DcReport};
use dpcolor::{Cover, EdgeId, Error, Limits, MultiGraph};

const MAX_COVERS_ENV: &str = "DPCOLOR_MAX_COVERS";
const MAX_ORACLE_LEAVES_ENV: &str = "DPCOLOR_MAX_ORACLE_LEAVES";

#[derive(Parser)]
#[command(
    name = "dpcolor",
    version,
    about = "Exact DP color functions of small multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct LimitArgs {
    /// Maximum number of covers an exhaustive search may enumerate
    /// (env: DPCOLOR_MAX_COVERS)
    #[arg(long)]
    max_covers: Option<u64>,
    /// Maximum number of leaves the oracle counter may visit
    /// (env: DPCOLOR_MAX_ORACLE_LEAVES)
    #[arg(long)]
    max_oracle_leaves: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    Human,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichFn {
    Dp,
    Dual,
}

#[derive(Subcommand)]
enum Cmd {
    /// Chromatic polynomial of a graph
    Poly {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "human")]
        format: PolyFormat,
    },
    /// Table of (P_DP, P, P*_DP) over an m-range by exhaustive search
    Table {
        graph: PathBuf,
        /// Fold size or inclusive range, e.g. `3` or `2..5`
        #[arg(long)]
        m: MRange,
        #[arg(long, value_enum, default_value = "tsv")]
        format: TableFormat,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Number of colorings of a cover
    Count { graph: PathBuf, cover: PathBuf },
    /// Deletion-contraction relation for one cover and edge
    DcVerify {
        graph: PathBuf,
        cover: PathBuf,
        #[arg(long)]
        edge: usize,
    },
    /// Color-function bounds from deletion-contraction at one edge
    DcBounds {
        graph: PathBuf,
        #[arg(long)]
        edge: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Deletion-contraction relation over every cover of every cataloged
    /// multigraph
    Sweep {
        /// Largest vertex count in the catalog
        #[arg(long)]
        n: usize,
        /// Largest edge count in the catalog
        #[arg(long, default_value_t = 6)]
        max_edges: usize,
        /// Fold sizes to sweep
        #[arg(long, default_value = "2..3")]
        m: MRange,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Closed-form color-function formula, when one is known
    Formula {
        graph: PathBuf,
        #[arg(long, value_enum)]
        which: WhichFn,
        #[arg(long, value_enum, default_value = "human")]
        format: PolyFormat,
    },
    /// Seeded uniformly random cover, in the cover text format
    RandomCover {
        graph: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Inclusive m-range `a..b`, or a single value.
#[derive(Clone, Copy)]
struct MRange {
    lo: usize,
    hi: usize,
}

impl std::str::FromStr for MRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| format!("`{t}` is not a number"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo < 1 || hi < lo {
            return Err(format!("`{s}` is not a valid m-range"));
        }
        Ok(MRange { lo, hi })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("dpcolor: {err}");
            ExitCode::from(match err {
                Error::Parse { .. } => 2,
                Error::Resource { .. } => 3,
                Error::Input(_) => 4,
                Error::Internal(_) => 1,
            })
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Poly { graph, format } => {
            let g = read_graph(&graph)?;
            let p = formulas::chromatic_polynomial(&g);
            match format {
                PolyFormat::Human => println!("{}", p.to_human()),
                PolyFormat::Json => println!(
                    "{{\"coefficients\":{},\"human\":\"{}\"}}",
                    p.to_json(),
                    p.to_human()
                ),
            }
        }
        Cmd::Table {
            graph,
            m,
            format,
            limits,
        } => {
            let g = read_graph(&graph)?;
            let table = counting::color_function_table(&g, m.lo..=m.hi, &resolve(limits)?)?;
            match format {
                TableFormat::Tsv => print!("{}", table.to_tsv()),
                TableFormat::Json => println!("{}", table.to_json()),
            }
        }
        Cmd::Count { graph, cover } => {
            let g = read_graph(&graph)?;
            let h = read_cover(&g, &cover)?;
            println!("{}", counting::count_colorings(&h));
        }
        Cmd::DcVerify { graph, cover, edge } => {
            let g = read_graph(&graph)?;
            let h = read_cover(&g, &cover)?;
            let report = relations::dc_check_cover(&h, EdgeId(edge))?;
            print!("{}", render_dc_report(&report));
        }
        Cmd::DcBounds {
            graph,
            edge,
            m,
            limits,
        } => {
            let g = read_graph(&graph)?;
            let report = relations::dc_bounds_check(&g, EdgeId(edge), m, &resolve(limits)?)?;
            print!("{}", render_bounds_report(&report));
            if report.upper.is_none() {
                // the upper-bound precondition (multiplicity 1) failed;
                // the report above says so
                return Ok(ExitCode::from(4));
            }
        }
        Cmd::Sweep {
            n,
            max_edges,
            m,
            limits,
        } => {
            let limits = resolve(limits)?;
            let ms: Vec<usize> = (m.lo..=m.hi).collect();
            let mut rows = String::new();
            let summary = relations::relation_sweep(n, max_edges, &ms, &limits, |case| {
                rows.push_str(&case.tsv_row());
                rows.push('\n');
            })?;
            for (i, g) in summary.graphs.iter().enumerate() {
                println!("# graph {i}: {}", graph_one_liner(g));
            }
            println!("{}", relations::SWEEP_TSV_HEADER);
            print!("{rows}");
            eprintln!(
                "swept {} cases: {} inequality failures, {} conditional equality failures, \
                 {} strict cases",
                summary.cases,
                summary.inequality_failures,
                summary.conditional_equality_failures,
                summary.strict_inequality_cases
            );
        }
        Cmd::Formula {
            graph,
            which,
            format,
        } => {
            let g = read_graph(&graph)?;
            let target = match which {
                WhichFn::Dp => TargetFn::Dp,
                WhichFn::Dual => TargetFn::Dual,
            };
            match (formulas::auto_formula(&g, target)?, format) {
                (None, PolyFormat::Human) => println!("no closed form"),
                (None, PolyFormat::Json) => println!("{{\"closed_form\":false}}"),
                (Some(f), PolyFormat::Human) => {
                    println!("{}", f.expression);
                    println!("valid for m >= {}", f.min_m);
                }
                (Some(f), PolyFormat::Json) => println!(
                    "{{\"closed_form\":true,\"expression\":\"{}\",\"coefficients\":{},\"min_m\":{}}}",
                    f.expression,
                    f.poly.to_json(),
                    f.min_m
                ),
            }
        }
        Cmd::RandomCover { graph, m, seed } => {
            if m < 1 {
                return Err(Error::Input("fold size m must be at least 1".into()));
            }
            let g = read_graph(&graph)?;
            print!("{}", dpcolor::random_cover(&g, m, seed).to_text());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn resolve(args: LimitArgs) -> Result<Limits, Error> {
    let mut limits = Limits::default();
    if let Some(v) = env_limit(MAX_COVERS_ENV)? {
        limits.max_covers = v;
    }
    if let Some(v) = env_limit(MAX_ORACLE_LEAVES_ENV)? {
        limits.max_oracle_leaves = v;
    }
    if let Some(v) = args.max_covers {
        limits.max_covers = v;
    }
    if let Some(v) = args.max_oracle_leaves {
        limits.max_oracle_leaves = v;
    }
    if limits.max_covers < 1 || limits.max_oracle_leaves < 1 {
        return Err(Error::Input("resource limits must be at least 1".into()));
    }
    Ok(limits)
}

fn env_limit(name: &str) -> Result<Option<u64>, Error> {
    match std::env::var(name) {
        Err(_) => Ok(None),
        Ok(raw) => raw
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Error::Input(format!("{name} is not a number: `{raw}`"))),
    }
}

fn read_graph(path: &Path) -> Result<MultiGraph, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("cannot read {}: {e}", path.display()),
    })?;
    MultiGraph::from_text(&text)
}

fn read_cover(g: &MultiGraph, path: &Path) -> Result<Cover, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("cannot read {}: {e}", path.display()),
    })?;
    Cover::from_text(g, &text)
}

fn render_dc_report(r: &DcReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "lhs={}", r.lhs);
    let _ = writeln!(out, "deleted={}", r.deleted);
    let _ = writeln!(out, "contracted={}", r.contracted);
    let _ = writeln!(out, "condition={}", r.equality_condition);
    let _ = writeln!(out, "inequality={}", r.inequality_holds);
    let _ = writeln!(out, "equality={}", r.equality_holds);
    out
}

fn render_bounds_report(r: &DcBoundsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "m={}", r.m);
    let _ = writeln!(out, "edge={}", r.edge);
    let _ = writeln!(out, "edge_multiplicity={}", r.edge_multiplicity);
    let _ = writeln!(out, "p_dp={}", r.p_dp);
    let _ = writeln!(out, "p_dual={}", r.p_dual);
    let _ = writeln!(out, "p_dp_deleted={}", r.p_dp_deleted);
    let _ = writeln!(out, "p_dual_deleted={}", r.p_dual_deleted);
    let _ = writeln!(out, "p_dp_contracted={}", r.p_dp_contracted);
    let _ = writeln!(out, "p_dual_contracted={}", r.p_dual_contracted);
    let _ = writeln!(out, "lower_bound_holds={}", r.lower_holds);
    let _ = writeln!(out, "lower_bound_tight={}", r.lower_tight);
    match r.upper {
        Some(v) => {
            let _ = writeln!(out, "upper_bound=applicable");
            let _ = writeln!(out, "upper_bound_holds={}", v.holds);
            let _ = writeln!(out, "upper_bound_tight={}", v.tight);
        }
        None => {
            let _ = writeln!(
                out,
                "upper_bound=inapplicable (edge multiplicity {} > 1)",
                r.edge_multiplicity
            );
        }
    }
    out
}

fn graph_one_liner(g: &MultiGraph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|e| format!("{}-{}", e.u, e.v))
        .collect();
    format!("n={} edges={}", g.n(), edges.join(","))
}
