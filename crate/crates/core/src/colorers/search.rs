//! Bounded search for total-proper connected colorings.

use std::collections::VecDeque;

use crate::checker::{Automaton, Checker, CheckerConfig, PathFlavor};
use crate::coloring::{Color, TotalColoring};
use crate::graph::{Graph, VertexId};

pub const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Vertex(VertexId),
    Edge(usize),
}

/// A `k`-coloring of `g` that passes the checker, or `None` once `budget`
/// is spent. Deterministic.
///
/// With a seed the search first tries the seed itself, then steepest
/// descent over single-element recolorings (scored by failing pairs), then
/// a DFS that tries seed values first. Without a seed it is a DFS with
/// canonical color introduction. Partial colorings are pruned whenever some
/// non-adjacent pair has no proper walk under the optimistic reading of
/// uncolored elements.
pub fn search_coloring(
    g: &Graph,
    k: Color,
    seed: Option<&TotalColoring>,
    budget: u64,
) -> Option<TotalColoring> {
    if k == 0 || !g.is_connected() {
        return None;
    }
    if g.is_complete() {
        return TotalColoring::new(g, k, vec![1; g.order()], vec![1; g.size()]).ok();
    }
    let seed = seed.filter(|s| {
        s.vertex_colors().len() == g.order()
            && s.edge_colors().len() == g.size()
            && s.vertex_colors().iter().chain(s.edge_colors()).all(|&c| c <= k)
    });
    let mut spent = 0u64;
    if let Some(seed) = seed {
        let mut vcol = seed.vertex_colors().to_vec();
        let mut ecol = seed.edge_colors().to_vec();
        if descend(g, k, &mut vcol, &mut ecol, budget, &mut spent) {
            return TotalColoring::new(g, k, vcol, ecol).ok();
        }
    }
    let mut dfs = Dfs {
        g,
        auto: Automaton {
            g,
            flavor: PathFlavor::TotalProper,
            k,
        },
        order: element_order(g),
        vcol: vec![0; g.order()],
        ecol: vec![0; g.size()],
        seed,
        nodes: spent,
        budget,
        scratch: Vec::new(),
    };
    if dfs.run(0, 0) {
        TotalColoring::new(g, k, dfs.vcol, dfs.ecol).ok()
    } else {
        None
    }
}

fn failing_pairs(g: &Graph, k: Color, vcol: &[Color], ecol: &[Color]) -> usize {
    let config = CheckerConfig::default();
    Checker::from_raw(g, PathFlavor::TotalProper, k, vcol, ecol, config)
        .report()
        .map(|r| r.failures.len())
        .unwrap_or(usize::MAX)
}

/// Steepest descent on the number of failing pairs. Each evaluation costs
/// one unit per vertex pair.
fn descend(
    g: &Graph,
    k: Color,
    vcol: &mut [Color],
    ecol: &mut [Color],
    budget: u64,
    spent: &mut u64,
) -> bool {
    let cost = (g.order() * g.order() / 2).max(1) as u64;
    let mut score = failing_pairs(g, k, vcol, ecol);
    *spent += cost;
    while score > 0 {
        let mut best: Option<(usize, Slot, Color)> = None;
        let slots = (0..g.order())
            .map(Slot::Vertex)
            .chain((0..g.size()).map(Slot::Edge));
        for slot in slots {
            let current = match slot {
                Slot::Vertex(v) => vcol[v],
                Slot::Edge(e) => ecol[e],
            };
            for c in (1..=k).filter(|&c| c != current) {
                if *spent + cost > budget {
                    return false;
                }
                *spent += cost;
                let s = with_slot(vcol, ecol, slot, c, |v, e| failing_pairs(g, k, v, e));
                if best.is_none_or(|(b, _, _)| s < b) {
                    best = Some((s, slot, c));
                }
            }
        }
        match best {
            Some((s, slot, c)) if s < score => {
                match slot {
                    Slot::Vertex(v) => vcol[v] = c,
                    Slot::Edge(e) => ecol[e] = c,
                }
                score = s;
            }
            _ => return false,
        }
    }
    true
}

fn with_slot<R>(
    vcol: &mut [Color],
    ecol: &mut [Color],
    slot: Slot,
    c: Color,
    f: impl FnOnce(&[Color], &[Color]) -> R,
) -> R {
    let old = match slot {
        Slot::Vertex(v) => std::mem::replace(&mut vcol[v], c),
        Slot::Edge(e) => std::mem::replace(&mut ecol[e], c),
    };
    let r = f(vcol, ecol);
    match slot {
        Slot::Vertex(v) => vcol[v] = old,
        Slot::Edge(e) => ecol[e] = old,
    }
    r
}

/// Vertices in BFS order from 0, each followed by its edges back to
/// earlier vertices.
fn element_order(g: &Graph) -> Vec<Slot> {
    let mut seen = vec![false; g.order()];
    let mut placed = vec![false; g.order()];
    let mut order = Vec::with_capacity(g.order() + g.size());
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        order.push(Slot::Vertex(v));
        for &(w, e) in g.neighbors(v) {
            if placed[w] {
                order.push(Slot::Edge(e));
            }
        }
        placed[v] = true;
        for w in g.neighbor_ids(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

struct Dfs<'a> {
    g: &'a Graph,
    auto: Automaton<'a>,
    order: Vec<Slot>,
    vcol: Vec<Color>,
    ecol: Vec<Color>,
    seed: Option<&'a TotalColoring>,
    nodes: u64,
    budget: u64,
    scratch: Vec<bool>,
}

impl Dfs<'_> {
    fn run(&mut self, i: usize, max_used: Color) -> bool {
        if i == self.order.len() {
            let config = CheckerConfig {
                parallel: false,
                ..CheckerConfig::default()
            };
            return Checker::from_raw(self.g, PathFlavor::TotalProper, self.auto.k, &self.vcol, &self.ecol, config)
                .all_connected()
                .unwrap_or(false);
        }
        let slot = self.order[i];
        let candidates: Vec<Color> = match self.seed {
            Some(seed) => {
                let first = match slot {
                    Slot::Vertex(v) => seed.vertex(v),
                    Slot::Edge(e) => seed.edge(e),
                };
                std::iter::once(first)
                    .chain((1..=self.auto.k).filter(|&c| c != first))
                    .collect()
            }
            None => (1..=self.auto.k.min(max_used + 1)).collect(),
        };
        for c in candidates {
            self.nodes += 1;
            if self.nodes > self.budget {
                return false;
            }
            match slot {
                Slot::Vertex(v) => self.vcol[v] = c,
                Slot::Edge(e) => self.ecol[e] = c,
            }
            if self.auto.all_pairs_walkable(&self.vcol, &self.ecol, &mut self.scratch)
                && self.run(i + 1, max_used.max(c))
            {
                return true;
            }
        }
        match slot {
            Slot::Vertex(v) => self.vcol[v] = 0,
            Slot::Edge(e) => self.ecol[e] = 0,
        }
        false
    }
}
