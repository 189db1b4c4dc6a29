use super::cartesian::fill_scaffold_edges;
use super::paint::{Draft, BACKWARD};
use super::{finish, require, ColorerError, ColorerOutcome, Construction};
use crate::graph::{spanning_tree, Graph, SpanningStrategy, VertexId};
use crate::ops::strong;

/// `G ⊠ H` for connected nontrivial factors, built on `T ⊠ S` for BFS trees
/// rooted at `t = 0` and `s = 0`.
///
/// For every leaf `w` of `T`, vertex `v != s` and leaf `x` of `S`, the trail
/// `(w,v) ... (t,v) ... (t,s) ... (w,s) ... (w,x)` gets the sequence
/// `1, 3, 2, ...`; then `(u,s)(p(u),s*)` copies `c(p(u),s)` with `s*` the
/// lowest neighbor of `s`, and the remaining scaffold edges avoid both
/// endpoint colors.
pub fn color_strong(g: &Graph, h: &Graph) -> Result<ColorerOutcome, ColorerError> {
    require(g.is_connected() && h.is_connected(), "factors must be connected")?;
    require(g.order() >= 2 && h.order() >= 2, "factors must be nontrivial")?;
    let product = strong(g, h);
    let graph = product.graph;
    if graph.is_complete() {
        return Err(ColorerError::Complete);
    }
    let tt = spanning_tree(g, SpanningStrategy::Bfs)?;
    let ss = spanning_tree(h, SpanningStrategy::Bfs)?;
    let (t, s) = (tt.root, ss.root);
    let hn = h.order();
    let at = |u: VertexId, v: VertexId| u * hn + v;
    let scaffold = strong(&tt.tree, &ss.tree).graph;

    let mut draft = Draft::new(&graph);
    for &w in &tt.leaves() {
        let w_up = tt.path_to_root(w);
        let w_down: Vec<_> = w_up.iter().rev().copied().collect();
        for v in (0..hn).filter(|&v| v != s) {
            let v_up = ss.path_to_root(v);
            for &x in &ss.leaves() {
                let mut trail: Vec<VertexId> = w_up.iter().map(|&u| at(u, v)).collect();
                trail.extend(v_up[1..].iter().map(|&q| at(t, q)));
                trail.extend(w_down[1..].iter().map(|&u| at(u, s)));
                let x_down: Vec<_> = ss.path_to_root(x).into_iter().rev().collect();
                trail.extend(x_down[1..].iter().map(|&q| at(w, q)));
                draft.paint_trail_with(&trail, &[BACKWARD]);
            }
        }
    }
    let s_star = ss.tree.neighbor_ids(s).next().expect("S is nontrivial");
    for u in (0..g.order()).filter(|&u| u != t) {
        let pu = tt.parent[u].expect("non-root");
        let c = draft.vertex(at(pu, s));
        draft.set_edge(at(u, s), at(pu, s_star), c);
    }
    fill_scaffold_edges(&mut draft, &scaffold);
    let coloring = draft.finish(3);
    finish(graph, coloring, Construction::Strong, Some(scaffold))
}
