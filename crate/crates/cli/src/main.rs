//! `tpc`: generate graphs and products, color them, check colorings and
//! compute exact connection numbers. JSON goes to stdout, logs to stderr.
//!
//! Exit codes: 0 success, 1 failed verdict, 2 usage or input error,
//! 3 budget exhausted.

mod input;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tpc_core::colorers::{
    color_cartesian_near_star, color_cartesian_star, color_cartesian_traceable, color_join_general,
    color_lexicographic, color_permutation_star, color_permutation_traceable, color_strong, color_traceable,
    color_tree, search_coloring, ColorerOutcome, StarVariant, DEFAULT_SEARCH_BUDGET,
};
use tpc_core::coloring::colored_dot;
use tpc_core::graph::{
    make_complete, make_complete_bipartite, make_cycle, make_empty, make_path, make_spider, make_star,
};
use tpc_core::ops::{cartesian, join, lexicographic, permutation_graph, strong};
use tpc_core::oracle::{brute_force, hunt_permutation_tpc4, OracleConfig, OracleError};
use tpc_core::suite::{run_suite, SuiteName, SuiteReport};
use tpc_core::{
    CheckError, Checker, CheckerConfig, ColorerError, Graph, OpKind, PathFlavor, Permutation, Product,
};

use input::{parse_graph_spec, read_coloring, read_document, Document, ProductInfo};

#[derive(Parser)]
#[command(name = "tpc", version, about = "Total proper connection of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a standard graph.
    Gen(GenArgs),
    /// Build a join, product or permutation graph from the input graph.
    Product(ProductArgs),
    /// Color a graph with one of the constructions.
    Color(ColorArgs),
    /// Check that a colored graph is connected by proper paths.
    Check(CheckArgs),
    /// Exact connection number by exhaustive search.
    Tpc(TpcArgs),
    /// Search small permutation graphs for total proper connection number 4.
    HuntPerm(HuntArgs),
    /// Graphviz rendering of a graph or colored graph.
    ExportDot(DotArgs),
    /// Run batch checks over the small-graph corpus.
    Suite(SuiteArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Path,
    Star,
    Complete,
    Cycle,
    CompleteBipartite,
    Empty,
    Spider,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    kind: GraphKind,
    /// Order (path, complete, cycle, empty) or second part size (bipartite).
    #[arg(long)]
    n: Option<usize>,
    /// First part size of a complete bipartite graph.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    leaves: Option<usize>,
    /// Leg lengths of a spider, comma separated.
    #[arg(long, value_delimiter = ',')]
    legs: Vec<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Join,
    Cartesian,
    Lexicographic,
    Strong,
    Permutation,
}

#[derive(Args)]
struct ProductArgs {
    #[arg(long)]
    op: Op,
    /// First operand; standard input when omitted.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Second operand as a spec such as `path:3`, `star:4`, `cycle:5`,
    /// `complete:3`, `empty:2`, `complete-bipartite:2,3`, `spider:2,1,1` or
    /// `file:h.json`.
    #[arg(long = "with")]
    with: Option<String>,
    /// Permutation image list for `--op permutation`, e.g. `1,0,2`.
    #[arg(long, value_delimiter = ',')]
    perm: Vec<usize>,
    /// Also write the vertex label map to this file.
    #[arg(long)]
    labels_out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Join,
    CartTrace,
    CartStar,
    CartNearStar,
    PermTrace,
    PermStar,
    Lex,
    Strong,
    Tree,
    Traceable,
    Search,
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long)]
    theorem: Theorem,
    /// Graph or product document; standard input when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Palette size for `--theorem search`.
    #[arg(long, default_value_t = 3)]
    k: u32,
    /// Node budget for `--theorem search`.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    search_budget: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Flavor {
    Total,
    Edge,
    Vertex,
}

impl From<Flavor> for PathFlavor {
    fn from(f: Flavor) -> Self {
        match f {
            Flavor::Total => PathFlavor::TotalProper,
            Flavor::Edge => PathFlavor::EdgeProper,
            Flavor::Vertex => PathFlavor::VertexProper,
        }
    }
}

#[derive(Args)]
struct CheckArgs {
    /// Graph or document; standard input when omitted.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Coloring file; otherwise the document's own coloring is used.
    #[arg(long)]
    coloring: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "total")]
    flavor: Flavor,
    /// Search nodes allowed per vertex pair.
    #[arg(long, default_value_t = tpc_core::checker::DEFAULT_PAIR_BUDGET)]
    pair_budget: u64,
}

#[derive(Args)]
struct TpcArgs {
    /// Graph or document; standard input when omitted.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "total")]
    flavor: Flavor,
    /// Largest |V| + |E| searched.
    #[arg(long, default_value_t = tpc_core::oracle::DEFAULT_ORACLE_CAP)]
    cap: usize,
    /// Give up after this many complete colorings.
    #[arg(long)]
    max_colorings: Option<u64>,
    /// Plain enumeration without pruning or symmetry breaking.
    #[arg(long)]
    unpruned: bool,
}

#[derive(Args)]
struct HuntArgs {
    #[arg(long)]
    n_max: usize,
    /// Time budget in seconds.
    #[arg(long, default_value_t = 60.0)]
    budget: f64,
    /// Largest |V| + |E| of a permutation graph searched.
    #[arg(long, default_value_t = 40)]
    cap: usize,
}

#[derive(Args)]
struct DotArgs {
    /// Graph or document; standard input when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct SuiteArgs {
    /// Suites to run; all when omitted.
    #[arg(value_parser = parse_suite)]
    names: Vec<SuiteName>,
}

fn parse_suite(s: &str) -> Result<SuiteName, String> {
    s.parse()
}

/// An error together with its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn usage(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 2,
            error: error.into(),
        }
    }

    fn verdict(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 1,
            error: error.into(),
        }
    }

    fn budget(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 3,
            error: error.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure::usage(error)
    }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Self {
        match e {
            CheckError::BudgetExhausted { .. } => Failure::budget(e),
            _ => Failure::usage(e),
        }
    }
}

impl From<ColorerError> for Failure {
    fn from(e: ColorerError) -> Self {
        match e {
            ColorerError::Check(c) => c.into(),
            ColorerError::RepairFailed(_) | ColorerError::SearchFailed(_) => Failure::verdict(e),
            _ => Failure::usage(e),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExhausted(_) => Failure::budget(e),
            OracleError::Check(c) => c.into(),
            _ => Failure::usage(e),
        }
    }
}

type Outcome = Result<(), Failure>;

/// A closed pipe downstream is not an error.
fn write_stdout(text: &str) -> Outcome {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::usage(e)),
        _ => Ok(()),
    }
}

fn emit<T: Serialize>(value: &T) -> Outcome {
    let text = serde_json::to_string_pretty(value).context("serializing output")?;
    write_stdout(&(text + "\n"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Product(a) => product(a),
        Command::Color(a) => color(a),
        Command::Check(a) => check(a),
        Command::Tpc(a) => tpc(a),
        Command::HuntPerm(a) => hunt(a),
        Command::ExportDot(a) => export_dot(a),
        Command::Suite(a) => suite(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("tpc: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn gen(a: GenArgs) -> Outcome {
    let need = |v: Option<usize>, flag: &str| match v {
        Some(0) => Err(anyhow!("--{flag} must be positive")),
        Some(v) => Ok(v),
        None => Err(anyhow!("--kind needs --{flag}")),
    };
    let g = match a.kind {
        GraphKind::Path => make_path(need(a.n, "n")?),
        GraphKind::Star => make_star(need(a.leaves, "leaves")?),
        GraphKind::Complete => make_complete(need(a.n, "n")?),
        GraphKind::Cycle => make_cycle(need(a.n, "n")?).map_err(anyhow::Error::from)?,
        GraphKind::CompleteBipartite => make_complete_bipartite(need(a.m, "m")?, need(a.n, "n")?),
        GraphKind::Empty => make_empty(need(a.n, "n")?),
        GraphKind::Spider => {
            if a.legs.is_empty() {
                return Err(Failure::usage(anyhow!("--kind spider needs --legs")));
            }
            make_spider(&a.legs)
        }
    };
    emit(&g)
}

fn product(a: ProductArgs) -> Outcome {
    let g = read_document(a.graph.as_deref())?.graph;
    let second = || -> Result<Graph, Failure> {
        let spec = a.with.as_deref().ok_or_else(|| anyhow!("--op needs --with"))?;
        Ok(parse_graph_spec(spec)?)
    };
    let (built, h, permutation): (Product, _, _) = match a.op {
        Op::Permutation => {
            let alpha = Permutation::new(a.perm.clone()).map_err(Failure::usage)?;
            (permutation_graph(&g, &alpha).map_err(Failure::usage)?, None, Some(alpha))
        }
        op => {
            let h = second()?;
            let built = match op {
                Op::Join => join(&g, &h),
                Op::Cartesian => cartesian(&g, &h),
                Op::Lexicographic => lexicographic(&g, &h),
                Op::Strong => strong(&g, &h),
                Op::Permutation => unreachable!(),
            };
            (built, Some(h), None)
        }
    };
    if let Some(path) = &a.labels_out {
        let text = serde_json::to_string_pretty(&built.labels).context("serializing labels")?;
        fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    eprintln!(
        "tpc: {} product with {} vertices and {} edges",
        built.labels.kind(),
        built.graph.order(),
        built.graph.size()
    );
    let doc = Document {
        product: Some(ProductInfo {
            op: built.labels.kind(),
            g,
            h,
            permutation,
            labels: built.labels,
        }),
        ..Document::bare(built.graph)
    };
    emit(&doc)
}

fn operands(doc: &Document, want: OpKind) -> Result<(&Graph, Option<&Graph>, Option<&Permutation>), Failure> {
    let p = doc
        .product
        .as_ref()
        .ok_or_else(|| anyhow!("this construction needs a {want} product document"))?;
    if p.op != want {
        return Err(Failure::usage(anyhow!("expected a {want} product, got {}", p.op)));
    }
    Ok((&p.g, p.h.as_ref(), p.permutation.as_ref()))
}

fn factors(doc: &Document, want: OpKind) -> Result<(&Graph, &Graph), Failure> {
    match operands(doc, want)? {
        (g, Some(h), _) => Ok((g, h)),
        _ => Err(Failure::usage(anyhow!("{want} product is missing its second factor"))),
    }
}

fn star_variant(g: &Graph, alpha: &Permutation) -> Result<StarVariant, Failure> {
    let leaves = g.order().saturating_sub(1);
    if *g != make_star(leaves) {
        return Err(Failure::usage(anyhow!("perm-star needs a star with center 0")));
    }
    if alpha.is_identity() {
        Ok(StarVariant::Identity)
    } else if *alpha == StarVariant::Transposition01.permutation(leaves) {
        Ok(StarVariant::Transposition01)
    } else {
        Err(Failure::usage(anyhow!("perm-star needs the identity or the transposition of 0 and 1")))
    }
}

fn color(a: ColorArgs) -> Outcome {
    let doc = read_document(a.input.as_deref())?;
    let outcome: ColorerOutcome = match a.theorem {
        Theorem::Join => {
            let (g, h) = factors(&doc, OpKind::Join)?;
            color_join_general(g, h)?
        }
        Theorem::CartTrace => {
            let (g, h) = factors(&doc, OpKind::Cartesian)?;
            color_cartesian_traceable(g, h)?
        }
        Theorem::CartStar => {
            let (g, h) = factors(&doc, OpKind::Cartesian)?;
            color_cartesian_star(g, h)?
        }
        Theorem::CartNearStar => {
            let (g, h) = factors(&doc, OpKind::Cartesian)?;
            color_cartesian_near_star(g, h)?
        }
        Theorem::PermTrace | Theorem::PermStar => {
            let (g, _, alpha) = operands(&doc, OpKind::Permutation)?;
            let alpha = alpha.ok_or_else(|| anyhow!("permutation document lacks its permutation"))?;
            if a.theorem == Theorem::PermTrace {
                color_permutation_traceable(g, alpha)?
            } else {
                color_permutation_star(g.order() - 1, star_variant(g, alpha)?)?
            }
        }
        Theorem::Lex => {
            let (g, h) = factors(&doc, OpKind::Lexicographic)?;
            color_lexicographic(g, h)?
        }
        Theorem::Strong => {
            let (g, h) = factors(&doc, OpKind::Strong)?;
            color_strong(g, h)?
        }
        Theorem::Tree => color_tree(&doc.graph)?,
        Theorem::Traceable => color_traceable(&doc.graph)?,
        Theorem::Search => {
            let c = search_coloring(&doc.graph, a.k, None, a.search_budget).ok_or_else(|| {
                Failure::budget(anyhow!("no {}-coloring found within {} nodes", a.k, a.search_budget))
            })?;
            let out = Document {
                coloring: Some(c.to_json(&doc.graph)),
                ..doc
            };
            return emit(&out);
        }
    };
    if outcome.graph != doc.graph {
        return Err(Failure::usage(anyhow!("construction produced a different vertex layout")));
    }
    eprintln!(
        "tpc: {} coloring with k = {}{}",
        outcome.construction,
        outcome.coloring.k(),
        if outcome.repaired { ", repaired by search" } else { "" }
    );
    let out = Document {
        coloring: Some(outcome.coloring.to_json(&outcome.graph)),
        construction: Some(outcome.construction),
        repaired: Some(outcome.repaired),
        ..doc
    };
    emit(&out)
}

fn check(a: CheckArgs) -> Outcome {
    let doc = read_document(a.graph.as_deref())?;
    let coloring = match &a.coloring {
        Some(path) => {
            let json = read_coloring(path)?;
            tpc_core::TotalColoring::from_json(&doc.graph, &json).context("coloring does not fit the graph")?
        }
        None => doc
            .coloring()?
            .ok_or_else(|| anyhow!("no coloring given; pass --coloring or a colored document"))?,
    };
    let config = CheckerConfig {
        pair_budget: a.pair_budget,
        ..CheckerConfig::default()
    };
    let report = Checker::with_config(&doc.graph, &coloring, a.flavor.into(), config)?.report()?;
    emit(&report)?;
    if report.connected {
        eprintln!("tpc: connected, {} pairs", report.witnesses.len());
        Ok(())
    } else {
        let pairs: Vec<String> = report.failures.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        Err(Failure::verdict(anyhow!("no proper path for {}", pairs.join(", "))))
    }
}

fn tpc(a: TpcArgs) -> Outcome {
    let doc = read_document(a.graph.as_deref())?;
    let base = if a.unpruned { OracleConfig::unpruned(a.cap) } else { OracleConfig::with_cap(a.cap) };
    let config = OracleConfig {
        max_colorings: a.max_colorings,
        ..base
    };
    let result = brute_force(&doc.graph, a.flavor.into(), &config)?;
    eprintln!(
        "tpc: value {} after {} colorings in {:.3?}",
        result.value, result.colorings_tried, result.elapsed
    );
    emit(&result.to_json(&doc.graph))
}

fn hunt(a: HuntArgs) -> Outcome {
    if !a.budget.is_finite() || a.budget < 0.0 {
        return Err(Failure::usage(anyhow!("--budget must be a nonnegative number of seconds")));
    }
    let report = hunt_permutation_tpc4(a.n_max, Duration::from_secs_f64(a.budget), &OracleConfig::with_cap(a.cap))?;
    emit(&report)?;
    if report.complete {
        eprintln!("tpc: {} permutation graphs examined", report.examined);
        Ok(())
    } else {
        Err(Failure::budget(anyhow!(
            "time budget spent after {} permutation graphs; results are partial",
            report.examined
        )))
    }
}

fn export_dot(a: DotArgs) -> Outcome {
    let doc = read_document(a.input.as_deref())?;
    let dot = match doc.coloring()? {
        Some(c) => colored_dot(&doc.graph, &c),
        None => doc.graph.to_dot(),
    };
    write_stdout(&dot)
}

#[derive(Serialize)]
struct SuiteOutput {
    passed: bool,
    suites: Vec<SuiteReport>,
}

fn suite(a: SuiteArgs) -> Outcome {
    let names = if a.names.is_empty() { SuiteName::ALL.to_vec() } else { a.names };
    let suites: Vec<SuiteReport> = names.into_iter().map(run_suite).collect();
    for s in &suites {
        for c in &s.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            eprintln!("{mark} {} / {} ({} cases, {:.3?})", s.suite.as_str(), c.name, c.cases, c.elapsed);
        }
    }
    let out = SuiteOutput {
        passed: suites.iter().all(|s| s.passed),
        suites,
    };
    emit(&out)?;
    if out.passed {
        Ok(())
    } else {
        Err(Failure::verdict(anyhow!("some suite checks failed")))
    }
}
