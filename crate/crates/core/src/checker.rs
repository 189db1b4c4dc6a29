//! Exact decision of total-proper connectivity.
//!
//! A path `v_0 e_1 v_1 ... e_L v_L` is read as the interleaved element
//! sequence; total properness says every window of three consecutive
//! elements strictly between the two endpoints is pairwise distinct. The
//! search runs over states `(vertex, color of the entering edge, color of the
//! previous vertex if it was internal)`. Walks in that state space give an
//! admissible lower bound on the remaining length of any proper path, which
//! prunes an iterative-deepening DFS over simple paths. Walks are never
//! accepted as witnesses.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, TotalColoring};
use crate::graph::{Graph, VertexId};

pub const DEFAULT_PAIR_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("coloring does not match the graph ({0})")]
    Mismatch(String),
    #[error("not a path: {0}")]
    NotAPath(String),
    #[error("search for a path between {u} and {v} exceeded {budget} nodes; no verdict")]
    BudgetExhausted { u: VertexId, v: VertexId, budget: u64 },
}

/// Which of the three path notions to test.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathFlavor {
    /// Adjacent edges differ, adjacent internal vertices differ, and each
    /// internal vertex differs from its two path edges.
    #[default]
    #[serde(alias = "total")]
    TotalProper,
    /// Adjacent edges differ; vertex colors are ignored.
    #[serde(alias = "edge")]
    EdgeProper,
    /// Adjacent internal vertices differ; edge colors are ignored.
    #[serde(alias = "vertex")]
    VertexProper,
}

impl PathFlavor {
    pub(crate) fn uses_edges(self) -> bool {
        self != PathFlavor::VertexProper
    }

    pub(crate) fn uses_vertices(self) -> bool {
        self != PathFlavor::EdgeProper
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckerConfig {
    /// DFS nodes allowed per vertex pair before the check is inconclusive.
    pub pair_budget: u64,
    pub parallel: bool,
}

impl Default for CheckerConfig {
    fn default() -> Self {
        CheckerConfig {
            pair_budget: DEFAULT_PAIR_BUDGET,
            parallel: true,
        }
    }
}

/// Outcome of an all-pairs check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CheckReportJson", try_from = "CheckReportJson")]
pub struct CheckReport {
    pub connected: bool,
    /// One witness path per connected pair `(u, v)`, `u < v`, from `u` to `v`.
    pub witnesses: BTreeMap<(VertexId, VertexId), Vec<VertexId>>,
    pub failures: Vec<(VertexId, VertexId)>,
    pub nodes_explored: u64,
}

#[derive(Serialize, Deserialize)]
struct CheckReportJson {
    connected: bool,
    witnesses: BTreeMap<String, Vec<VertexId>>,
    failures: Vec<[VertexId; 2]>,
    nodes_explored: u64,
}

impl From<CheckReport> for CheckReportJson {
    fn from(r: CheckReport) -> Self {
        CheckReportJson {
            connected: r.connected,
            witnesses: r
                .witnesses
                .into_iter()
                .map(|((u, v), p)| (format!("{u}-{v}"), p))
                .collect(),
            failures: r.failures.into_iter().map(|(u, v)| [u, v]).collect(),
            nodes_explored: r.nodes_explored,
        }
    }
}

impl TryFrom<CheckReportJson> for CheckReport {
    type Error = String;

    fn try_from(j: CheckReportJson) -> Result<Self, Self::Error> {
        let mut witnesses = BTreeMap::new();
        for (key, path) in j.witnesses {
            let (u, v) = key.split_once('-').ok_or_else(|| format!("bad key {key}"))?;
            let u = u.parse().map_err(|_| format!("bad key {key}"))?;
            let v = v.parse().map_err(|_| format!("bad key {key}"))?;
            witnesses.insert((u, v), path);
        }
        Ok(CheckReport {
            connected: j.connected,
            witnesses,
            failures: j.failures.into_iter().map(|[u, v]| (u, v)).collect(),
            nodes_explored: j.nodes_explored,
        })
    }
}

/// Transition rules of the walk automaton, over possibly partial colorings
/// where `0` means "not yet colored" and stands for every palette color.
#[derive(Clone, Copy)]
pub(crate) struct Automaton<'g> {
    pub g: &'g Graph,
    pub flavor: PathFlavor,
    pub k: Color,
}

impl<'g> Automaton<'g> {
    fn width(&self) -> usize {
        self.k as usize + 1
    }

    pub fn state_count(&self) -> usize {
        self.g.order() * self.width() * self.width()
    }

    pub fn encode(&self, x: VertexId, pe: Color, pv: Color) -> usize {
        (x * self.width() + pe as usize) * self.width() + pv as usize
    }

    pub fn vertex_of(&self, state: usize) -> VertexId {
        state / (self.width() * self.width())
    }

    pub fn start(&self, u: VertexId) -> usize {
        self.encode(u, 0, 0)
    }

    /// Calls `f(next_state)` for every move out of `state`.
    pub fn successors(
        &self,
        state: usize,
        vcol: &[Color],
        ecol: &[Color],
        mut f: impl FnMut(usize),
    ) {
        let w = self.width();
        let x = state / (w * w);
        let pe = ((state / w) % w) as Color;
        let pv = (state % w) as Color;
        let uses_edges = self.flavor.uses_edges();
        let uses_vertices = self.flavor.uses_vertices();
        let options = |c: Color| if c == 0 { 1..=self.k } else { c..=c };
        for &(y, e) in self.g.neighbors(x) {
            let edge_opts = if uses_edges { options(ecol[e]) } else { 1..=1 };
            if pe == 0 {
                for ce in edge_opts {
                    f(self.encode(y, ce, 0));
                }
                continue;
            }
            let vertex_opts = if uses_vertices { options(vcol[x]) } else { 0..=0 };
            for ce in edge_opts {
                if uses_edges && ce == pe {
                    continue;
                }
                for cx in vertex_opts.clone() {
                    if self.flavor == PathFlavor::TotalProper && (cx == pe || cx == ce) {
                        continue;
                    }
                    if uses_vertices && pv != 0 && cx == pv {
                        continue;
                    }
                    f(self.encode(y, ce, if uses_vertices { cx } else { 0 }));
                }
            }
        }
    }

    /// Vertices reachable from `u` by a proper walk.
    pub fn reachable(&self, u: VertexId, vcol: &[Color], ecol: &[Color], seen: &mut Vec<bool>) -> Vec<bool> {
        seen.clear();
        seen.resize(self.state_count(), false);
        let mut hit = vec![false; self.g.order()];
        let start = self.start(u);
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(s) = queue.pop_front() {
            self.successors(s, vcol, ecol, |t| {
                if !seen[t] {
                    seen[t] = true;
                    hit[self.vertex_of(t)] = true;
                    queue.push_back(t);
                }
            });
        }
        hit
    }

    /// True when every non-adjacent pair is joined by a proper walk under
    /// the optimistic reading of uncolored elements.
    pub fn all_pairs_walkable(&self, vcol: &[Color], ecol: &[Color], scratch: &mut Vec<bool>) -> bool {
        let n = self.g.order();
        for u in 0..n.saturating_sub(1) {
            let hit = self.reachable(u, vcol, ecol, scratch);
            if (u + 1..n).any(|v| !hit[v] && !self.g.has_edge(u, v)) {
                return false;
            }
        }
        true
    }
}

/// A colored graph prepared for path queries under one flavor.
pub struct Checker<'a> {
    g: &'a Graph,
    auto: Automaton<'a>,
    succ: Vec<Vec<u32>>,
    pred: Vec<Vec<u32>>,
    config: CheckerConfig,
}

const UNREACHABLE: u32 = u32::MAX;

impl<'a> Checker<'a> {
    pub fn new(g: &'a Graph, c: &TotalColoring, flavor: PathFlavor) -> Result<Self, CheckError> {
        Self::with_config(g, c, flavor, CheckerConfig::default())
    }

    pub fn with_config(
        g: &'a Graph,
        c: &TotalColoring,
        flavor: PathFlavor,
        config: CheckerConfig,
    ) -> Result<Self, CheckError> {
        if c.vertex_colors().len() != g.order() || c.edge_colors().len() != g.size() {
            return Err(CheckError::Mismatch(format!(
                "{} vertex / {} edge colors for a graph with {} vertices and {} edges",
                c.vertex_colors().len(),
                c.edge_colors().len(),
                g.order(),
                g.size()
            )));
        }
        Ok(Self::from_raw(g, flavor, c.k(), c.vertex_colors(), c.edge_colors(), config))
    }

    pub(crate) fn from_raw(
        g: &'a Graph,
        flavor: PathFlavor,
        k: Color,
        vcol: &[Color],
        ecol: &[Color],
        config: CheckerConfig,
    ) -> Self {
        let auto = Automaton { g, flavor, k };
        let states = auto.state_count();
        let mut succ = vec![Vec::new(); states];
        let mut pred = vec![Vec::new(); states];
        // only states reachable from some start matter
        let mut seen = vec![false; states];
        let mut queue: VecDeque<usize> = (0..g.order()).map(|u| auto.start(u)).collect();
        for &s in &queue {
            seen[s] = true;
        }
        while let Some(s) = queue.pop_front() {
            auto.successors(s, vcol, ecol, |t| {
                succ[s].push(t as u32);
                pred[t].push(s as u32);
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            });
        }
        Checker {
            g,
            auto,
            succ,
            pred,
            config,
        }
    }

    /// Fewest further edges from each state to `target` along proper walks.
    fn distances_to(&self, target: VertexId) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.succ.len()];
        let mut queue = VecDeque::new();
        for (s, d) in dist.iter_mut().enumerate() {
            if self.auto.vertex_of(s) == target {
                *d = 0;
                queue.push_back(s);
            }
        }
        while let Some(s) = queue.pop_front() {
            let next = dist[s] + 1;
            for &p in &self.pred[s] {
                let p = p as usize;
                // a walk stops at the target, it never passes through
                if dist[p] == UNREACHABLE && self.auto.vertex_of(p) != target {
                    dist[p] = next;
                    queue.push_back(p);
                }
            }
        }
        dist
    }

    /// Whether a proper walk joins `u` and `v`. `false` rules out a proper
    /// path; `true` certifies nothing.
    pub fn walk_feasible(&self, u: VertexId, v: VertexId) -> bool {
        u == v || self.distances_to(v)[self.auto.start(u)] != UNREACHABLE
    }

    /// A shortest proper `u`-`v` path found by iterative deepening.
    pub fn path_between(&self, u: VertexId, v: VertexId) -> Result<(Option<Vec<VertexId>>, u64), CheckError> {
        let dist = self.distances_to(v);
        self.path_with_distances(u, v, &dist)
    }

    fn path_with_distances(
        &self,
        u: VertexId,
        v: VertexId,
        dist: &[u32],
    ) -> Result<(Option<Vec<VertexId>>, u64), CheckError> {
        let start = self.auto.start(u);
        if u == v || dist[start] == UNREACHABLE {
            return Ok((None, 0));
        }
        let mut dfs = Dfs {
            checker: self,
            dist,
            target: v,
            visited: vec![false; self.g.order()],
            path: vec![u],
            nodes: 0,
            budget: self.config.pair_budget,
        };
        dfs.visited[u] = true;
        for limit in dist[start] as usize..self.g.order() {
            if dfs.run(start, 0, limit) {
                return Ok((Some(dfs.path), dfs.nodes));
            }
            if dfs.nodes > dfs.budget {
                return Err(CheckError::BudgetExhausted {
                    u,
                    v,
                    budget: dfs.budget,
                });
            }
        }
        Ok((None, dfs.nodes))
    }

    /// Full report over all pairs. Identical with or without parallelism.
    pub fn report(&self) -> Result<CheckReport, CheckError> {
        if !self.g.is_connected() {
            return Err(CheckError::Disconnected);
        }
        let n = self.g.order();
        type PairResult = ((VertexId, VertexId), Option<Vec<VertexId>>, u64);
        let per_target = |v: VertexId| -> Result<Vec<PairResult>, CheckError> {
            let dist = self.distances_to(v);
            (0..v)
                .map(|u| {
                    if self.g.has_edge(u, v) {
                        return Ok(((u, v), Some(vec![u, v]), 0));
                    }
                    let (path, nodes) = self.path_with_distances(u, v, &dist)?;
                    Ok(((u, v), path, nodes))
                })
                .collect()
        };
        let results: Vec<_> = if self.config.parallel {
            (0..n).into_par_iter().map(per_target).collect()
        } else {
            (0..n).map(per_target).collect()
        };
        let mut report = CheckReport {
            connected: true,
            witnesses: BTreeMap::new(),
            failures: Vec::new(),
            nodes_explored: 0,
        };
        for batch in results {
            for (pair, path, nodes) in batch? {
                report.nodes_explored += nodes;
                match path {
                    Some(p) => {
                        report.witnesses.insert(pair, p);
                    }
                    None => report.failures.push(pair),
                }
            }
        }
        report.failures.sort_unstable();
        report.connected = report.failures.is_empty();
        Ok(report)
    }

    /// Early-exit verdict without collecting witnesses.
    pub fn all_connected(&self) -> Result<bool, CheckError> {
        let n = self.g.order();
        for v in (1..n).rev() {
            let dist = self.distances_to(v);
            for u in 0..v {
                if self.g.has_edge(u, v) {
                    continue;
                }
                if dist[self.auto.start(u)] == UNREACHABLE {
                    return Ok(false);
                }
            }
            for u in 0..v {
                if !self.g.has_edge(u, v) && self.path_with_distances(u, v, &dist)?.0.is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

struct Dfs<'c, 'a> {
    checker: &'c Checker<'a>,
    dist: &'c [u32],
    target: VertexId,
    visited: Vec<bool>,
    path: Vec<VertexId>,
    nodes: u64,
    budget: u64,
}

impl Dfs<'_, '_> {
    fn run(&mut self, state: usize, depth: usize, limit: usize) -> bool {
        if self.checker.auto.vertex_of(state) == self.target {
            return true;
        }
        for &next in &self.checker.succ[state] {
            let next = next as usize;
            let y = self.checker.auto.vertex_of(next);
            let h = self.dist[next];
            if self.visited[y] || h == UNREACHABLE || depth + 1 + h as usize > limit {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return false;
            }
            self.visited[y] = true;
            self.path.push(y);
            if self.run(next, depth + 1, limit) {
                return true;
            }
            self.path.pop();
            self.visited[y] = false;
        }
        false
    }
}

/// Checks conditions (adjacent edges, adjacent internal vertices, internal
/// vertex against its path edges) on an explicit path.
pub fn path_is_proper(
    g: &Graph,
    c: &TotalColoring,
    path: &[VertexId],
    flavor: PathFlavor,
) -> Result<bool, CheckError> {
    if path.len() < 2 {
        return Err(CheckError::NotAPath("fewer than two vertices".into()));
    }
    let mut seen = vec![false; g.order()];
    let mut edges = Vec::with_capacity(path.len() - 1);
    for (i, &v) in path.iter().enumerate() {
        if v >= g.order() || std::mem::replace(&mut seen[v], true) {
            return Err(CheckError::NotAPath(format!("vertex {v} repeated or out of range")));
        }
        if i > 0 {
            let e = g
                .edge_id(path[i - 1], v)
                .ok_or_else(|| CheckError::NotAPath(format!("{}-{v} is not an edge", path[i - 1])))?;
            edges.push(c.edge(e));
        }
    }
    let internal = &path[1..path.len() - 1];
    let ok_edges = !flavor.uses_edges() || edges.windows(2).all(|w| w[0] != w[1]);
    let ok_vertices =
        !flavor.uses_vertices() || internal.windows(2).all(|w| c.vertex(w[0]) != c.vertex(w[1]));
    let ok_incident = flavor != PathFlavor::TotalProper
        || internal
            .iter()
            .enumerate()
            .all(|(i, &v)| c.vertex(v) != edges[i] && c.vertex(v) != edges[i + 1]);
    Ok(ok_edges && ok_vertices && ok_incident)
}

pub fn is_total_proper_path(g: &Graph, c: &TotalColoring, path: &[VertexId]) -> Result<bool, CheckError> {
    path_is_proper(g, c, path, PathFlavor::TotalProper)
}

/// A proper `u`-`v` path of the given flavor, if one exists.
pub fn exists_path(
    g: &Graph,
    c: &TotalColoring,
    u: VertexId,
    v: VertexId,
    flavor: PathFlavor,
) -> Result<Option<Vec<VertexId>>, CheckError> {
    if u == v {
        return Err(CheckError::NotAPath("endpoints coincide".into()));
    }
    Ok(Checker::new(g, c, flavor)?.path_between(u, v)?.0)
}

pub fn is_total_proper_connected(g: &Graph, c: &TotalColoring) -> Result<CheckReport, CheckError> {
    check_connected(g, c, PathFlavor::TotalProper)
}

pub fn check_connected(g: &Graph, c: &TotalColoring, flavor: PathFlavor) -> Result<CheckReport, CheckError> {
    Checker::new(g, c, flavor)?.report()
}

pub fn walk_feasibility(g: &Graph, c: &TotalColoring, u: VertexId, v: VertexId) -> bool {
    Checker::new(g, c, PathFlavor::TotalProper)
        .map(|ch| ch.walk_feasible(u, v))
        .unwrap_or(false)
}
