use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpanningStrategy {
    Bfs,
    /// BFS tree followed by edge swaps that lower the maximum degree.
    MinMaxDegreeHeuristic,
}

/// A rooted spanning tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeInfo {
    pub tree: Graph,
    pub root: VertexId,
    /// `parent[root]` is `None`.
    pub parent: Vec<Option<VertexId>>,
}

impl TreeInfo {
    /// Roots an acyclic connected graph at `root`.
    pub fn rooted(tree: Graph, root: VertexId) -> Result<Self, GraphError> {
        if !tree.is_tree() {
            return Err(GraphError::Invalid("not a tree".into()));
        }
        if root >= tree.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: root,
                n: tree.order(),
            });
        }
        let mut parent = vec![None; tree.order()];
        let mut seen = vec![false; tree.order()];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in tree.neighbor_ids(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        Ok(TreeInfo { tree, root, parent })
    }

    pub fn depth(&self, mut v: VertexId) -> usize {
        let mut d = 0;
        while let Some(p) = self.parent[v] {
            v = p;
            d += 1;
        }
        d
    }

    /// `v, parent(v), ..., root`.
    pub fn path_to_root(&self, mut v: VertexId) -> Vec<VertexId> {
        let mut out = vec![v];
        while let Some(p) = self.parent[v] {
            out.push(p);
            v = p;
        }
        out
    }

    pub fn children(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.tree
            .neighbor_ids(v)
            .filter(move |&w| self.parent[w] == Some(v))
    }

    /// Non-root vertices of tree degree one.
    pub fn leaves(&self) -> Vec<VertexId> {
        (0..self.tree.order())
            .filter(|&v| v != self.root && self.tree.degree(v) == 1)
            .collect()
    }
}

pub fn spanning_tree(g: &Graph, strategy: SpanningStrategy) -> Result<TreeInfo, GraphError> {
    spanning_tree_rooted(g, strategy, 0)
}

pub fn spanning_tree_rooted(
    g: &Graph,
    strategy: SpanningStrategy,
    root: VertexId,
) -> Result<TreeInfo, GraphError> {
    if root >= g.order() {
        return Err(GraphError::VertexOutOfRange {
            vertex: root,
            n: g.order(),
        });
    }
    let mut edges = bfs_tree_edges(g, root)?;
    if strategy == SpanningStrategy::MinMaxDegreeHeuristic {
        lower_max_degree(g, &mut edges);
    }
    TreeInfo::rooted(Graph::from_edges_dedup(g.order(), edges), root)
}

fn bfs_tree_edges(g: &Graph, root: VertexId) -> Result<BTreeSet<(VertexId, VertexId)>, GraphError> {
    let mut seen = vec![false; g.order()];
    seen[root] = true;
    let mut edges = BTreeSet::new();
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbor_ids(v) {
            if !seen[w] {
                seen[w] = true;
                edges.insert((v.min(w), v.max(w)));
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(GraphError::Disconnected);
    }
    Ok(edges)
}

/// Swaps a tree edge at a maximum-degree vertex for a non-tree edge whose
/// endpoints both have tree degree at most `max - 2`, until no swap applies.
/// Each swap removes one maximum-degree vertex without creating another.
fn lower_max_degree(g: &Graph, edges: &mut BTreeSet<(VertexId, VertexId)>) {
    let n = g.order();
    loop {
        let mut deg = vec![0usize; n];
        for &(u, v) in edges.iter() {
            deg[u] += 1;
            deg[v] += 1;
        }
        let max = deg.iter().copied().max().unwrap_or(0);
        if max <= 2 {
            return;
        }
        let swap = g.edges().iter().copied().find_map(|(a, b)| {
            if edges.contains(&(a, b)) || deg[a] + 2 > max || deg[b] + 2 > max {
                return None;
            }
            let cycle = tree_path(n, edges, a, b);
            cycle.windows(3).find_map(|w| {
                (deg[w[1]] == max).then(|| (w[0].min(w[1]), w[0].max(w[1])))
            }).map(|drop| (drop, (a, b)))
        });
        match swap {
            Some((drop, add)) => {
                edges.remove(&drop);
                edges.insert(add);
            }
            None => return,
        }
    }
}

fn tree_path(
    n: usize,
    edges: &BTreeSet<(VertexId, VertexId)>,
    from: VertexId,
    to: VertexId,
) -> Vec<VertexId> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut prev = vec![usize::MAX; n];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &w in &adj[v] {
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut v = to;
    while v != from {
        v = prev[v];
        path.push(v);
    }
    path.reverse();
    path
}
