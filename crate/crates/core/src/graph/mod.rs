//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Edges are stored once, normalized to `(u, v)` with `u < v` and sorted, so
//! an edge has a stable index that colorings key on. Neighbor lists are
//! sorted ascending, which makes every search in the crate deterministic.

mod enumerate;
mod generators;
mod hamiltonian;
mod tree;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use enumerate::{
    canonical_form, enumerate_connected_graphs, enumerate_connected_graphs_capped,
    DEFAULT_ENUMERATION_CAP,
};
pub use generators::{
    make_complete, make_complete_bipartite, make_cycle, make_empty, make_path, make_spider,
    make_star,
};
pub use hamiltonian::{find_hamiltonian_path, find_hamiltonian_path_with_budget};
pub use tree::{spanning_tree, spanning_tree_rooted, SpanningStrategy, TreeInfo};

/// Index of a vertex in its graph.
pub type VertexId = usize;

/// Index of an edge in [`Graph::edges`].
pub type EdgeId = usize;

const NO_EDGE: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("enumeration of order {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("hamiltonian path search exceeded its budget of {0} nodes")]
    BudgetExhausted(u64),
    #[error("{0}")]
    Invalid(String),
}

/// An undirected simple graph.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    #[serde(skip)]
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    // n*n matrix of edge ids, NO_EDGE where absent
    #[serde(skip)]
    index: Vec<u32>,
}

/// Wire form of a graph: `{"n": 4, "edges": [[0,1],[1,2]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(value: GraphJson) -> Result<Self, Self::Error> {
        Graph::from_edges(value.n, value.edges.iter().map(|&[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unchecked(n, list))
    }

    /// Like [`Graph::from_edges`] but silently drops duplicate edges.
    pub(crate) fn from_edges_dedup<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut list: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| {
                debug_assert!(u != v && u < n && v < n);
                (u.min(v), u.max(v))
            })
            .collect();
        list.sort_unstable();
        list.dedup();
        Self::from_sorted_unchecked(n, list)
    }

    fn from_sorted_unchecked(n: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut index = vec![NO_EDGE; n * n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
            index[u * n + v] = id as u32;
            index[v * n + u] = id as u32;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adj,
            index,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted; position is the [`EdgeId`].
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (VertexId, VertexId) {
        self.edges[id]
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.index[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Neighbors of `v` with the connecting edge id, ascending by neighbor.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbor_ids(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &(w, _) in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// BFS layers `V_0 = {source}, V_1, ...` of a connected graph.
    pub fn bfs_layers(&self, source: VertexId) -> Result<BfsLayers, GraphError> {
        if source >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: source,
                n: self.n,
            });
        }
        let dist = self.distances_from(source);
        let mut layers: Vec<Vec<VertexId>> = Vec::new();
        for (v, d) in dist.iter().enumerate() {
            let d = d.ok_or(GraphError::Disconnected)?;
            if layers.len() <= d {
                layers.resize_with(d + 1, Vec::new);
            }
            layers[d].push(v);
        }
        Ok(BfsLayers { source, layers })
    }

    /// Edges whose removal disconnects the graph, as edge ids in ascending order.
    pub fn bridges(&self) -> Vec<EdgeId> {
        // iterative lowpoint DFS
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut bridges = Vec::new();
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent edge, next neighbor position)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (v, pe, ref mut pos)) = stack.last_mut() {
                if let Some(&(w, e)) = self.adj[v].get(*pos) {
                    *pos += 1;
                    if e == pe {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, e, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            bridges.push(pe);
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    /// Maximum number of bridges incident with a single vertex.
    pub fn max_bridges_at_vertex(&self) -> usize {
        let mut count = vec![0; self.n];
        for e in self.bridges() {
            let (u, v) = self.edges[e];
            count[u] += 1;
            count[v] += 1;
        }
        count.into_iter().max().unwrap_or(0)
    }

    /// Connected, at least 3 vertices, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        (0..self.n).all(|cut| {
            let rest: Vec<_> = (0..self.n).filter(|&v| v != cut).collect();
            self.induced(&rest).is_connected()
        })
    }

    /// Subgraph induced on `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[VertexId]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]));
        Graph::from_edges_dedup(vertices.len(), edges)
    }

    /// The same vertex set with only the given edges.
    pub fn spanning_subgraph<I>(&self, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        for &(u, v) in &edges {
            if !self.has_edge(u, v) {
                return Err(GraphError::Invalid(format!("{u}-{v} is not an edge")));
            }
        }
        Graph::from_edges(self.n, edges)
    }

    /// True when `other` has the same order and a subset of our edges.
    pub fn contains_spanning(&self, other: &Graph) -> bool {
        other.n == self.n && other.edges.iter().all(|&(u, v)| self.has_edge(u, v))
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[VertexId]) -> Graph {
        Graph::from_edges_dedup(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }

    /// Graphviz rendering without colors.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// BFS distance classes from a source vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BfsLayers {
    pub source: VertexId,
    pub layers: Vec<Vec<VertexId>>,
}

impl BfsLayers {
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer_of(&self, v: VertexId) -> Option<usize> {
        self.layers.iter().position(|layer| layer.contains(&v))
    }
}
