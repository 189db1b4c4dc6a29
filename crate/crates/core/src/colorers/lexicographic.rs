use super::known::color_complete_bipartite;
use super::paint::Draft;
use super::{finish, require, ColorerError, ColorerOutcome, Construction};
use crate::coloring::Color;
use crate::graph::{make_empty, spanning_tree, Graph, SpanningStrategy, TreeInfo};
use crate::ops::lexicographic;

const PATTERN: [Color; 3] = [1, 2, 3];

fn periodic(pos: i64) -> Color {
    PATTERN[pos.rem_euclid(3) as usize]
}

/// `G ∘ H` for connected `G` and nontrivial `H`, built on `T ∘ E_{|H|}` for
/// a spanning tree `T` rooted at its lowest-index pendant vertex `r`.
///
/// Layer `X = {(g, h_1)}` and layer `Y = {(q, h_2) : q != r}` form, through
/// the edge `(r, h_1)(t, h_2)`, one periodic sequence per pair of root
/// paths; the edges at `r`, `t` and `a` (lowest neighbor of `t` other than
/// `r`) copy colors from those layers. `h_i` is vertex `i - 1` of `H`.
pub fn color_lexicographic(g: &Graph, h: &Graph) -> Result<ColorerOutcome, ColorerError> {
    require(g.is_connected() && g.order() >= 2, "G must be connected and nontrivial")?;
    require(h.order() >= 2, "H must be nontrivial")?;
    let product = lexicographic(g, h);
    let graph = product.graph;
    if graph.is_complete() {
        return Err(ColorerError::Complete);
    }
    let hn = h.order();
    if g.order() == 2 {
        let bip = color_complete_bipartite(hn, hn)?;
        // K_2 ∘ H lays out its two sides exactly like K_{|H|,|H|}
        let map: Vec<usize> = (0..2 * hn).collect();
        let coloring = bip.coloring.transfer(&bip.graph, &graph, &map, 1);
        return finish(graph, coloring, Construction::Lexicographic, Some(bip.graph));
    }
    let bfs = spanning_tree(g, SpanningStrategy::Bfs)?;
    let r = (0..g.order())
        .find(|&v| bfs.tree.degree(v) == 1)
        .expect("trees have pendant vertices");
    let tree = TreeInfo::rooted(bfs.tree, r)?;
    let t = tree.tree.neighbor_ids(r).next().expect("r has a neighbor");
    let a = tree.tree.neighbor_ids(t).find(|&v| v != r).expect("|T| >= 3");
    let at = |v: usize, i: usize| v * hn + (i - 1);
    let parent = |v: usize| tree.parent[v].expect("non-root vertex");
    let depth: Vec<i64> = (0..g.order()).map(|v| tree.depth(v) as i64).collect();
    let others: Vec<usize> = (0..g.order()).filter(|&v| v != r && v != t).collect();

    let scaffold = lexicographic(&tree.tree, &make_empty(hn)).graph;
    let mut draft = Draft::new(&graph);
    for (v, &d) in depth.iter().enumerate() {
        draft.set_vertex(at(v, 1), periodic(2 * d));
        if v != r {
            draft.set_edge(at(v, 1), at(parent(v), 1), periodic(2 * d - 1));
            draft.set_vertex(at(v, 2), periodic(-2 * d));
        }
    }
    draft.set_edge(at(r, 1), at(t, 2), periodic(-1));
    for &v in &others {
        draft.set_edge(at(v, 2), at(parent(v), 2), periodic(-2 * depth[v] + 1));
    }

    for &v in &others {
        let c1 = draft.edge(at(v, 1), at(parent(v), 1));
        let c2 = draft.edge(at(v, 2), at(parent(v), 2));
        for i in 1..=hn {
            draft.set_edge(at(v, i), at(parent(v), 1), c1);
            draft.set_edge(at(v, i), at(parent(v), 2), c2);
        }
    }
    let c = draft.edge(at(t, 1), at(r, 1));
    for i in 2..=hn {
        draft.set_edge(at(t, 1), at(r, i), c);
    }
    let c = draft.edge(at(r, 1), at(t, 2));
    for j in 3..=hn {
        draft.set_edge(at(r, 1), at(t, j), c);
        draft.set_edge(at(t, 2), at(r, j), c);
    }
    let c = draft.vertex(at(t, 2));
    for s in 4..=hn {
        draft.set_edge(at(r, 3), at(t, s), c);
    }
    let c = draft.vertex(at(r, 1));
    draft.set_edge(at(r, 2), at(t, 2), c);
    let c = draft.vertex(at(t, 2));
    for i in 3..=hn {
        draft.set_edge(at(a, 2), at(t, i), c);
    }
    if hn >= 3 {
        let c = draft.edge(at(a, 2), at(t, 2));
        draft.set_vertex(at(r, 3), c);
        draft.set_vertex(at(t, 3), c);
        let c = draft.vertex(at(a, 2));
        for j in 3..=hn {
            draft.set_edge(at(t, 3), at(r, j), c);
        }
    }
    let coloring = draft.finish(3);
    finish(graph, coloring, Construction::Lexicographic, Some(scaffold))
}
