//! Exact tpc, pc and pvc of tiny graphs by exhaustive palette search.
//!
//! Palettes are tried in increasing size, so the first palette admitting a
//! passing coloring is the answer and every smaller one has been exhausted.
//! Elements (vertices, then edges) are colored in index order; with symmetry
//! breaking an element may only use a color at most one above the largest
//! color seen so far. Partial colorings are pruned when some non-adjacent
//! pair has no proper walk under the optimistic reading of uncolored
//! elements, which never discards a passing completion.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::checker::{Automaton, CheckError, Checker, CheckerConfig, PathFlavor};
use crate::coloring::{Color, ColoringJson, TotalColoring};
use crate::graph::{enumerate_connected_graphs_capped, canonical_form, Graph, GraphError};
use crate::ops::{permutation_graph, OpsError, Permutation};

pub const DEFAULT_ORACLE_CAP: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has |V|+|E| = {size}, above the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("gave up after {0} complete colorings")]
    BudgetExhausted(u64),
    #[error("not a connected spanning subgraph")]
    NotSpanning,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ops(#[from] OpsError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `|V| + |E|` accepted.
    pub cap: usize,
    pub symmetry_breaking: bool,
    pub pruning: bool,
    pub parallel: bool,
    /// Complete colorings checked before giving up, over all palettes.
    pub max_colorings: Option<u64>,
    pub order: ElementOrder,
    pub checker: CheckerConfig,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap: DEFAULT_ORACLE_CAP,
            symmetry_breaking: true,
            pruning: true,
            parallel: true,
            max_colorings: None,
            order: ElementOrder::Interleaved,
            checker: CheckerConfig {
                parallel: false,
                ..CheckerConfig::default()
            },
        }
    }
}

impl OracleConfig {
    pub fn with_cap(cap: usize) -> Self {
        OracleConfig {
            cap,
            ..Self::default()
        }
    }

    /// Plain enumeration: no symmetry breaking, no pruning, sequential.
    pub fn unpruned(cap: usize) -> Self {
        OracleConfig {
            cap,
            symmetry_breaking: false,
            pruning: false,
            parallel: false,
            ..Self::default()
        }
    }
}

/// An exact invariant value with a witness.
///
/// For pc the witness's vertex colors, and for pvc its edge colors, are all
/// 1 and play no role. pvc of a complete graph is 0 and its witness is the
/// monochromatic coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TpcResult {
    pub flavor: PathFlavor,
    pub value: Color,
    pub witness: TotalColoring,
    pub colorings_tried: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TpcResultJson {
    pub flavor: PathFlavor,
    pub value: Color,
    pub witness: ColoringJson,
    pub colorings_tried: u64,
}

impl TpcResult {
    pub fn to_json(&self, g: &Graph) -> TpcResultJson {
        TpcResultJson {
            flavor: self.flavor,
            value: self.value,
            witness: self.witness.to_json(g),
            colorings_tried: self.colorings_tried,
        }
    }
}

pub fn brute_force_tpc(g: &Graph, config: &OracleConfig) -> Result<TpcResult, OracleError> {
    brute_force(g, PathFlavor::TotalProper, config)
}

pub fn brute_force_pc(g: &Graph, config: &OracleConfig) -> Result<TpcResult, OracleError> {
    brute_force(g, PathFlavor::EdgeProper, config)
}

pub fn brute_force_pvc(g: &Graph, config: &OracleConfig) -> Result<TpcResult, OracleError> {
    brute_force(g, PathFlavor::VertexProper, config)
}

/// Smallest palette under which `g` is connected by paths of `flavor`.
pub fn brute_force(g: &Graph, flavor: PathFlavor, config: &OracleConfig) -> Result<TpcResult, OracleError> {
    let size = g.order() + g.size();
    if size > config.cap {
        return Err(OracleError::CapExceeded { size, cap: config.cap });
    }
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    let started = Instant::now();
    if flavor == PathFlavor::VertexProper && g.is_complete() {
        return Ok(TpcResult {
            flavor,
            value: 0,
            witness: TotalColoring::monochromatic(g),
            colorings_tried: 0,
            elapsed: started.elapsed(),
        });
    }
    let elements = element_order(g, flavor, config.order);
    let tried = AtomicU64::new(0);
    let mut settled = 0;
    // all-distinct colors always pass, so the loop ends by k = elements
    for k in 1..=elements.len().max(1) as Color {
        let search = Search {
            g,
            flavor,
            k,
            elements: &elements,
            config,
            tried: &tried,
        };
        let (found, count) = search.run()?;
        settled += count;
        if let Some((vcol, ecol)) = found {
            let witness = TotalColoring::new(g, k, vcol, ecol).expect("colors within palette");
            return Ok(TpcResult {
                flavor,
                value: k,
                witness,
                colorings_tried: settled,
                elapsed: started.elapsed(),
            });
        }
    }
    unreachable!("a coloring with all colors distinct always passes")
}

/// Order in which the search colors elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementOrder {
    /// All vertices by index, then all edges by index.
    VerticesThenEdges,
    /// Each vertex followed by its edges to lower-indexed vertices.
    Interleaved,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Element {
    Vertex(usize),
    Edge(usize),
}

/// Elements the search branches on. A vertex of degree at most 1 is never
/// internal to a path, so its color is irrelevant and stays 1.
fn element_order(g: &Graph, flavor: PathFlavor, order: ElementOrder) -> Vec<Element> {
    let vertices = flavor.uses_vertices();
    let relevant = |v: usize| g.degree(v) >= 2;
    let edges = flavor.uses_edges();
    let mut out = Vec::new();
    match order {
        ElementOrder::VerticesThenEdges => {
            if vertices {
                out.extend((0..g.order()).filter(|&v| relevant(v)).map(Element::Vertex));
            }
            if edges {
                out.extend((0..g.size()).map(Element::Edge));
            }
        }
        ElementOrder::Interleaved => {
            for v in 0..g.order() {
                if vertices && relevant(v) {
                    out.push(Element::Vertex(v));
                }
                if edges {
                    let mut back: Vec<_> = g.neighbors(v).iter().filter(|&&(u, _)| u < v).collect();
                    back.sort_unstable();
                    out.extend(back.into_iter().map(|&(_, e)| Element::Edge(e)));
                }
            }
        }
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    flavor: PathFlavor,
    k: Color,
    elements: &'a [Element],
    config: &'a OracleConfig,
    /// Colorings checked by all workers, for the budget only.
    tried: &'a AtomicU64,
}

/// Outcome of one prefix block: colorings checked (up to and including the
/// witness, if any) and the witness.
struct Block {
    count: u64,
    witness: Option<(Vec<Color>, Vec<Color>)>,
}

enum Stop {
    Cancelled,
    Error(OracleError),
}

impl From<CheckError> for Stop {
    fn from(e: CheckError) -> Self {
        Stop::Error(e.into())
    }
}

/// Vertex and edge colors.
type Witness = (Vec<Color>, Vec<Color>);

impl<'a> Search<'a> {
    /// The first passing coloring in canonical order, and the number of
    /// colorings a sequential search checks before stopping.
    fn run(&self) -> Result<(Option<Witness>, u64), OracleError> {
        let prefixes = self.prefixes();
        let best = AtomicUsize::new(usize::MAX);
        let work = |(i, prefix): (usize, &Vec<Color>)| -> Result<Option<Block>, OracleError> {
            if i > best.load(Ordering::Relaxed) {
                return Ok(None);
            }
            match self.block(prefix, i, &best) {
                Ok(b) => {
                    if b.witness.is_some() {
                        best.fetch_min(i, Ordering::Relaxed);
                    }
                    Ok(Some(b))
                }
                Err(Stop::Cancelled) => Ok(None),
                Err(Stop::Error(e)) => Err(e),
            }
        };
        let blocks: Vec<Result<Option<Block>, OracleError>> = if self.config.parallel {
            prefixes.par_iter().enumerate().map(work).collect()
        } else {
            let mut out = Vec::with_capacity(prefixes.len());
            for item in prefixes.iter().enumerate() {
                let r = work(item);
                let done = matches!(r, Ok(Some(Block { witness: Some(_), .. })) | Err(_));
                out.push(r);
                if done {
                    break;
                }
            }
            out
        };
        // merge in canonical order; blocks after the winner were skipped or
        // cancelled and do not count
        let mut count = 0;
        for b in blocks {
            let Some(b) = b? else {
                continue;
            };
            count += b.count;
            if b.witness.is_some() {
                return Ok((b.witness, count));
            }
        }
        Ok((None, count))
    }

    /// Canonical prefixes of a fixed depth, in enumeration order.
    fn prefixes(&self) -> Vec<Vec<Color>> {
        let depth = self.elements.len().min(if self.config.parallel { 6 } else { 0 });
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(depth);
        self.grow(depth, 0, &mut cur, &mut out);
        out
    }

    fn grow(&self, depth: usize, maxc: Color, cur: &mut Vec<Color>, out: &mut Vec<Vec<Color>>) {
        if cur.len() == depth {
            out.push(cur.clone());
            return;
        }
        for c in self.choices(maxc) {
            cur.push(c);
            self.grow(depth, maxc.max(c), cur, out);
            cur.pop();
        }
    }

    fn choices(&self, maxc: Color) -> std::ops::RangeInclusive<Color> {
        if self.config.symmetry_breaking {
            1..=self.k.min(maxc + 1)
        } else {
            1..=self.k
        }
    }

    fn block(&self, prefix: &[Color], index: usize, best: &AtomicUsize) -> Result<Block, Stop> {
        let (n, m) = (self.g.order(), self.g.size());
        let mut walk = Walk {
            search: self,
            vcol: vec![0; n],
            ecol: vec![0; m],
            scratch: Vec::new(),
            count: 0,
            index,
            best,
        };
        for (i, &c) in prefix.iter().enumerate() {
            walk.set(i, c);
        }
        if self.config.pruning && !walk.feasible() {
            return Ok(Block { count: 0, witness: None });
        }
        let maxc = prefix.iter().copied().max().unwrap_or(0);
        let found = walk.dfs(prefix.len(), maxc)?;
        let witness = found.then(|| {
            let fill = |c: &Color| if *c == 0 { 1 } else { *c };
            (walk.vcol.iter().map(fill).collect(), walk.ecol.iter().map(fill).collect())
        });
        Ok(Block {
            count: walk.count,
            witness,
        })
    }
}

struct Walk<'s, 'a> {
    search: &'s Search<'a>,
    vcol: Vec<Color>,
    ecol: Vec<Color>,
    scratch: Vec<bool>,
    count: u64,
    index: usize,
    best: &'s AtomicUsize,
}

impl Walk<'_, '_> {
    /// Colors element `i` of the search order.
    fn set(&mut self, i: usize, c: Color) {
        match self.search.elements[i] {
            Element::Vertex(v) => self.vcol[v] = c,
            Element::Edge(e) => self.ecol[e] = c,
        }
    }

    fn feasible(&mut self) -> bool {
        let s = self.search;
        let auto = Automaton {
            g: s.g,
            flavor: s.flavor,
            k: s.k,
        };
        auto.all_pairs_walkable(&self.vcol, &self.ecol, &mut self.scratch)
    }

    fn dfs(&mut self, i: usize, maxc: Color) -> Result<bool, Stop> {
        let s = self.search;
        if i == s.elements.len() {
            return self.leaf();
        }
        for c in s.choices(maxc) {
            self.set(i, c);
            if s.config.pruning && !self.feasible() {
                continue;
            }
            if self.dfs(i + 1, maxc.max(c))? {
                return Ok(true);
            }
        }
        self.set(i, 0);
        Ok(false)
    }

    fn leaf(&mut self) -> Result<bool, Stop> {
        let s = self.search;
        self.count += 1;
        let total = s.tried.fetch_add(1, Ordering::Relaxed) + 1;
        if s.config.max_colorings.is_some_and(|cap| total > cap) {
            return Err(Stop::Error(OracleError::BudgetExhausted(total - 1)));
        }
        if self.count.is_multiple_of(1024) && self.best.load(Ordering::Relaxed) < self.index {
            return Err(Stop::Cancelled);
        }
        // elements outside the flavor are still 0; read them as color 1
        let fill = |c: &Color| if *c == 0 { 1 } else { *c };
        let vcol: Vec<Color> = self.vcol.iter().map(fill).collect();
        let ecol: Vec<Color> = self.ecol.iter().map(fill).collect();
        let checker = Checker::from_raw(s.g, s.flavor, s.k, &vcol, &ecol, s.config.checker);
        Ok(checker.all_connected()?)
    }
}

/// `tpc(g) >= max(pc(g), pvc(g))`.
pub fn verify_inequality_star(g: &Graph, config: &OracleConfig) -> Result<bool, OracleError> {
    let tpc = brute_force_tpc(g, config)?.value;
    let pc = brute_force_pc(g, config)?.value;
    let pvc = brute_force_pvc(g, config)?.value;
    Ok(tpc >= pc.max(pvc))
}

/// `tpc(g) >= b + 1` with `b` the most bridges at one vertex. Vacuously
/// true without bridges.
pub fn verify_bridge_bound(g: &Graph, config: &OracleConfig) -> Result<bool, OracleError> {
    if g.order() < 3 {
        return Err(OracleError::Precondition("need at least 3 vertices".into()));
    }
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    let b = g.max_bridges_at_vertex();
    if b == 0 {
        return Ok(true);
    }
    Ok(brute_force_tpc(g, config)?.value as usize > b)
}

/// `tpc(g) <= tpc(h)` for a connected spanning subgraph `h` of `g`.
pub fn verify_monotonicity(g: &Graph, h: &Graph, config: &OracleConfig) -> Result<bool, OracleError> {
    if !g.contains_spanning(h) || !h.is_connected() {
        return Err(OracleError::NotSpanning);
    }
    Ok(brute_force_tpc(g, config)?.value <= brute_force_tpc(h, config)?.value)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationCandidate {
    pub graph: Graph,
    pub permutation: Permutation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntReport {
    pub n_max: usize,
    pub candidates: Vec<PermutationCandidate>,
    /// Distinct permutation graphs whose tpc was computed.
    pub examined: usize,
    /// False when the time budget ran out before the sweep finished.
    pub complete: bool,
}

/// Every connected `G` with `2 <= |G| <= n_max` and permutation `α` such that
/// `tpc(P_α(G)) = 4`. Permutation graphs isomorphic to one already examined
/// are skipped; each class is reported through its first `(G, α)`.
pub fn hunt_permutation_tpc4(
    n_max: usize,
    budget: Duration,
    config: &OracleConfig,
) -> Result<HuntReport, OracleError> {
    let started = Instant::now();
    let mut report = HuntReport {
        n_max,
        candidates: Vec::new(),
        examined: 0,
        complete: true,
    };
    let mut seen = std::collections::BTreeSet::new();
    for n in 2..=n_max {
        for g in enumerate_connected_graphs_capped(n, n_max.max(2))? {
            for image in (0..n).permutations(n) {
                if started.elapsed() > budget {
                    report.complete = false;
                    return Ok(report);
                }
                let alpha = Permutation::new(image)?;
                let pg = permutation_graph(&g, &alpha)?.graph;
                if !seen.insert(canonical_form(&pg).1) {
                    continue;
                }
                report.examined += 1;
                if brute_force_tpc(&pg, config)?.value == 4 {
                    report.candidates.push(PermutationCandidate {
                        graph: g.clone(),
                        permutation: alpha,
                    });
                }
            }
        }
    }
    Ok(report)
}
