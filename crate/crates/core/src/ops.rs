//! Join, Cartesian, lexicographic and strong products, and permutation graphs.
//!
//! Flat layout: a composite vertex `(g, h)` of a product lives at index
//! `g * |H| + h`. Joins put `G` at `[0, |G|)` and `H` after it; permutation
//! graphs put the original copy at `[0, n)` and the second copy at `[n, 2n)`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OpsError {
    #[error("permutation of length {perm} does not match graph of order {graph}")]
    SizeMismatch { perm: usize, graph: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpKind {
    Join,
    Cartesian,
    Lexicographic,
    Strong,
    Permutation,
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OpKind::Join => "join",
            OpKind::Cartesian => "cartesian",
            OpKind::Lexicographic => "lexicographic",
            OpKind::Strong => "strong",
            OpKind::Permutation => "permutation",
        };
        f.write_str(name)
    }
}

/// How an edge of a strong product or permutation graph arose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    Cartesian,
    Noncartesian,
    /// An edge of one of the two copies of `G` in a permutation graph.
    Inherited,
    /// A matching edge `v_i u_{alpha(i)}` of a permutation graph.
    Cross,
}

/// Bijection between composite labels and flat vertex indices.
///
/// Labels are pairs: `(g, h)` for products, `(side, index)` for joins and
/// permutation graphs with side `0` for the first operand or copy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "LabelMapJson", into = "LabelMapJson")]
pub struct ProductVertexMap {
    kind: OpKind,
    backward: Vec<(usize, usize)>,
    forward: HashMap<(usize, usize), VertexId>,
}

#[derive(Serialize, Deserialize)]
struct LabelMapJson {
    kind: OpKind,
    labels: Vec<[usize; 2]>,
}

impl From<LabelMapJson> for ProductVertexMap {
    fn from(json: LabelMapJson) -> Self {
        ProductVertexMap::new(json.kind, json.labels.into_iter().map(|[a, b]| (a, b)).collect())
    }
}

impl From<ProductVertexMap> for LabelMapJson {
    fn from(map: ProductVertexMap) -> Self {
        LabelMapJson {
            kind: map.kind,
            labels: map.backward.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl ProductVertexMap {
    fn new(kind: OpKind, backward: Vec<(usize, usize)>) -> Self {
        let forward = backward.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        ProductVertexMap {
            kind,
            backward,
            forward,
        }
    }

    pub fn kind(&self) -> OpKind {
        self.kind
    }

    pub fn vertex(&self, label: (usize, usize)) -> Option<VertexId> {
        self.forward.get(&label).copied()
    }

    pub fn label(&self, v: VertexId) -> (usize, usize) {
        self.backward[v]
    }

    pub fn len(&self) -> usize {
        self.backward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.backward.is_empty()
    }

    pub fn labels(&self) -> &[(usize, usize)] {
        &self.backward
    }
}

/// A product graph with its label map and, where meaningful, edge kinds
/// aligned with [`Graph::edges`].
#[derive(Clone, Debug)]
pub struct Product {
    pub graph: Graph,
    pub labels: ProductVertexMap,
    pub edge_kinds: Option<Vec<EdgeKind>>,
}

/// A permutation of `[0, n)`; `image[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = OpsError;

    fn try_from(image: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::new(image)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.image
    }
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self, OpsError> {
        let mut seen = vec![false; image.len()];
        for &i in &image {
            if i >= image.len() || std::mem::replace(&mut seen[i], true) {
                return Err(OpsError::NotAPermutation(image));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Swaps `a` and `b`, fixes everything else.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(a, b);
        Permutation { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }
}

/// `G ∨ H`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Product {
    let (m, n) = (g.order(), h.order());
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(u, v)| (m + u, m + v)))
        .chain((0..m).flat_map(|u| (0..n).map(move |v| (u, m + v))));
    let labels = (0..m).map(|u| (0, u)).chain((0..n).map(|v| (1, v))).collect();
    Product {
        graph: Graph::from_edges_dedup(m + n, edges),
        labels: ProductVertexMap::new(OpKind::Join, labels),
        edge_kinds: None,
    }
}

fn pair_labels(kind: OpKind, g: &Graph, h: &Graph) -> ProductVertexMap {
    let hn = h.order();
    ProductVertexMap::new(
        kind,
        (0..g.order()).flat_map(|a| (0..hn).map(move |b| (a, b))).collect(),
    )
}

fn cartesian_edges(g: &Graph, h: &Graph) -> Vec<(VertexId, VertexId)> {
    let hn = h.order();
    let mut edges = Vec::new();
    for a in 0..g.order() {
        for &(u, v) in h.edges() {
            edges.push((a * hn + u, a * hn + v));
        }
    }
    for &(a, b) in g.edges() {
        for x in 0..hn {
            edges.push((a * hn + x, b * hn + x));
        }
    }
    edges
}

/// `G □ H`.
pub fn cartesian(g: &Graph, h: &Graph) -> Product {
    Product {
        graph: Graph::from_edges_dedup(g.order() * h.order(), cartesian_edges(g, h)),
        labels: pair_labels(OpKind::Cartesian, g, h),
        edge_kinds: None,
    }
}

/// `G ∘ H`: `(g,h) ~ (g',h')` iff `gg' ∈ E(G)`, or `g = g'` and `hh' ∈ E(H)`.
pub fn lexicographic(g: &Graph, h: &Graph) -> Product {
    let hn = h.order();
    let mut edges = Vec::new();
    for a in 0..g.order() {
        for &(u, v) in h.edges() {
            edges.push((a * hn + u, a * hn + v));
        }
    }
    for &(a, b) in g.edges() {
        for x in 0..hn {
            for y in 0..hn {
                edges.push((a * hn + x, b * hn + y));
            }
        }
    }
    Product {
        graph: Graph::from_edges_dedup(g.order() * hn, edges),
        labels: pair_labels(OpKind::Lexicographic, g, h),
        edge_kinds: None,
    }
}

/// `G ⊠ H` with every edge tagged Cartesian or noncartesian.
pub fn strong(g: &Graph, h: &Graph) -> Product {
    let hn = h.order();
    let mut edges = cartesian_edges(g, h);
    let cart_count = edges.len();
    for &(a, b) in g.edges() {
        for &(x, y) in h.edges() {
            edges.push((a * hn + x, b * hn + y));
            edges.push((a * hn + y, b * hn + x));
        }
    }
    let diagonal: Vec<_> = edges[cart_count..]
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    let graph = Graph::from_edges_dedup(g.order() * hn, edges);
    let kinds = graph
        .edges()
        .iter()
        .map(|e| {
            if diagonal.contains(e) {
                EdgeKind::Noncartesian
            } else {
                EdgeKind::Cartesian
            }
        })
        .collect();
    Product {
        graph,
        labels: pair_labels(OpKind::Strong, g, h),
        edge_kinds: Some(kinds),
    }
}

/// `P_alpha(G)`: two copies of `G` plus the matching `v_i u_{alpha(i)}`.
pub fn permutation_graph(g: &Graph, alpha: &Permutation) -> Result<Product, OpsError> {
    let n = g.order();
    if alpha.len() != n {
        return Err(OpsError::SizeMismatch {
            perm: alpha.len(),
            graph: n,
        });
    }
    let mut edges: Vec<_> = g.edges().to_vec();
    edges.extend(g.edges().iter().map(|&(u, v)| (n + u, n + v)));
    let cross: Vec<_> = (0..n).map(|i| (i, n + alpha.apply(i))).collect();
    edges.extend(cross.iter().copied());
    let graph = Graph::from_edges_dedup(2 * n, edges);
    let kinds = graph
        .edges()
        .iter()
        .map(|e| {
            if cross.contains(e) {
                EdgeKind::Cross
            } else {
                EdgeKind::Inherited
            }
        })
        .collect();
    let labels = (0..n).map(|i| (0, i)).chain((0..n).map(|i| (1, i))).collect();
    Ok(Product {
        graph,
        labels: ProductVertexMap::new(OpKind::Permutation, labels),
        edge_kinds: Some(kinds),
    })
}
