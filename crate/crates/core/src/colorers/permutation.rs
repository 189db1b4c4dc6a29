use serde::{Deserialize, Serialize};

use super::cartesian::color_cartesian_star;
use super::paint::Draft;
use super::traceable::color_along_path;
use super::{finish, hamiltonian, require, ColorerError, ColorerOutcome, Construction};
use crate::coloring::TotalColoring;
use crate::graph::{make_path, make_star, Graph};
use crate::ops::{permutation_graph, Permutation};

/// `P_α(G)` for traceable `G`. With `P = v_1 ... v_n` a Hamiltonian path of
/// `G` and `u_j` the copy of `v_j`, write `α(v_j) = u_{β(j)}`. When
/// `β(n) ∈ {1, n}` the permutation graph is traceable; otherwise `P` and the
/// three paths through `v_n u_{β(n)}` and `u_{β(1)} v_1` are colored
/// periodically and the cross edge at `v_j` copies `c(v_{j-1} v_j)`.
pub fn color_permutation_traceable(g: &Graph, alpha: &Permutation) -> Result<ColorerOutcome, ColorerError> {
    require(g.order() >= 2, "G must be nontrivial")?;
    let product = permutation_graph(g, alpha)?;
    let graph = product.graph;
    let n = g.order();
    let p = hamiltonian(g)?;
    let mut pos = vec![0; n];
    for (k, &v) in p.iter().enumerate() {
        pos[v] = k;
    }
    // 0-based: v[k] = p[k], u[k] = n + p[k], beta[k] = index of alpha(v[k]) in p
    let v = |k: usize| p[k];
    let u = |k: usize| n + p[k];
    let beta: Vec<usize> = (0..n).map(|k| pos[alpha.apply(p[k])]).collect();
    let i = beta[n - 1];
    let forward: Vec<usize> = (0..n).map(v).collect();
    if i == 0 || i == n - 1 {
        let mut path = forward;
        if i == 0 {
            path.extend((0..n).map(u));
        } else {
            path.extend((0..n).rev().map(u));
        }
        return color_along_path(&graph, &path, Construction::PermutationTraceable);
    }
    let mut draft = Draft::new(&graph);
    draft.paint_trail(&forward);
    let mut down = forward.clone();
    down.extend((0..=i).rev().map(u));
    draft.paint_trail(&down);
    let mut up = forward.clone();
    up.extend((i..n).map(u));
    draft.paint_trail(&up);
    let mut lead = vec![u(beta[0])];
    lead.extend(forward.iter().copied());
    draft.paint_trail(&lead);
    for (j, &b) in beta.iter().enumerate().take(n - 1).skip(1) {
        let c = draft.edge(v(j - 1), v(j));
        draft.set_edge(v(j), u(b), c);
    }
    let coloring = draft.finish(3);
    finish(graph, coloring, Construction::PermutationTraceable, None)
}

/// The two permutation graphs of `K_{1,m}` up to isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StarVariant {
    Identity,
    /// The transposition of the center `0` and leaf `1`.
    Transposition01,
}

impl StarVariant {
    pub fn permutation(self, leaves: usize) -> Permutation {
        match self {
            StarVariant::Identity => Permutation::identity(leaves + 1),
            StarVariant::Transposition01 => Permutation::transposition(leaves + 1, 0, 1),
        }
    }
}

/// Permutation graphs of `K_{1,m}`, `m >= 3`. The identity variant is
/// `K_{1,m} □ K_2` and uses [`color_cartesian_star`]; the transposition
/// variant uses three explicit color classes.
pub fn color_permutation_star(leaves: usize, variant: StarVariant) -> Result<ColorerOutcome, ColorerError> {
    require(leaves >= 3, "star needs at least 3 leaves")?;
    let star = make_star(leaves);
    let product = permutation_graph(&star, &variant.permutation(leaves))?;
    let graph = product.graph;
    if variant == StarVariant::Identity {
        let inner = color_cartesian_star(&make_path(2), &star)?;
        debug_assert_eq!(inner.graph, graph);
        return Ok(ColorerOutcome {
            construction: Construction::PermutationStar,
            ..inner
        });
    }
    let m = leaves;
    let v = |i: usize| i;
    let vp = |i: usize| m + 1 + i;
    let mut vertex_colors = vec![3; graph.order()];
    vertex_colors[v(0)] = 1;
    vertex_colors[vp(0)] = 1;
    vertex_colors[vp(2)] = 2;
    for i in (1..=m).filter(|&i| i != 2) {
        vertex_colors[v(i)] = 2;
    }
    let mut edge_colors = vec![3; graph.size()];
    let mut set = |a: usize, b: usize, c: u32| {
        edge_colors[graph.edge_id(a, b).expect("edge of the permutation graph")] = c;
    };
    for i in 2..=m {
        set(v(i), vp(i), 1);
    }
    set(v(0), vp(1), 2);
    set(v(0), v(2), 2);
    for i in (1..=m).filter(|&i| i != 2) {
        set(vp(0), vp(i), 2);
    }
    let coloring = TotalColoring::new(&graph, 3, vertex_colors, edge_colors).expect("palette 3");
    finish(graph, coloring, Construction::PermutationStar, None)
}
