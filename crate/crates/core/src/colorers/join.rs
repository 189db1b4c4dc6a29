use super::known::color_complete_bipartite;
use super::{finish, require, ColorerError, ColorerOutcome, Construction};
use crate::coloring::TotalColoring;
use crate::graph::{make_empty, spanning_tree, Graph, SpanningStrategy};
use crate::ops::join;

/// `G ∨ K_1` from a BFS tree of `G` rooted at vertex 0: tree vertices by
/// layer parity (1 even, 2 odd), the apex 3, apex edges 2 to even layers and
/// 1 to odd layers, tree edges 3. The apex is vertex `|G|`.
pub fn color_join_with_k1(g: &Graph) -> Result<ColorerOutcome, ColorerError> {
    require(g.is_connected(), "G must be connected")?;
    require(g.order() >= 3, "G needs at least 3 vertices")?;
    require(!g.is_complete(), "G must not be complete")?;
    let n = g.order();
    let tree = spanning_tree(g, SpanningStrategy::Bfs)?;
    let product = join(g, &make_empty(1));
    let graph = product.graph;
    let apex = n;
    let depth: Vec<usize> = (0..n).map(|v| tree.depth(v)).collect();
    let mut vertex_colors: Vec<u32> = depth.iter().map(|d| if d % 2 == 0 { 1 } else { 2 }).collect();
    vertex_colors.push(3);
    let edge_colors = graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            if v == apex {
                if depth[u].is_multiple_of(2) { 2 } else { 1 }
            } else if tree.tree.has_edge(u, v) {
                3
            } else {
                1
            }
        })
        .collect();
    let coloring = TotalColoring::new(&graph, 3, vertex_colors, edge_colors).expect("palette 3");
    let scaffold = join(&tree.tree, &make_empty(1)).graph;
    finish(graph, coloring, Construction::JoinWithK1, Some(scaffold))
}

/// `G ∨ H` for connected `G`, `H` with a non-complete join. A trivial side
/// reduces to [`color_join_with_k1`]; otherwise the spanning `K_{|G|,|H|}`
/// is colored and every other edge gets 1.
pub fn color_join_general(g: &Graph, h: &Graph) -> Result<ColorerOutcome, ColorerError> {
    require(g.is_connected() && h.is_connected(), "both sides must be connected")?;
    let product = join(g, h);
    if product.graph.is_complete() {
        return Err(ColorerError::Complete);
    }
    let (m, n) = (g.order(), h.order());
    if n == 1 {
        return color_join_with_k1(g);
    }
    if m == 1 {
        // apex is vertex 0 here, |H| there
        let inner = color_join_with_k1(h)?;
        let map: Vec<usize> = (0..n).map(|v| v + 1).chain([0]).collect();
        let coloring = inner.coloring.transfer(&inner.graph, &product.graph, &map, 1);
        let scaffold = inner.scaffold.map(|s| s.permuted(&map));
        return Ok(ColorerOutcome {
            graph: product.graph,
            coloring,
            scaffold,
            ..inner
        });
    }
    let bip = color_complete_bipartite(m.min(n), m.max(n))?;
    // bipartite parts are [0, small) and [small, small + large)
    let map: Vec<usize> = if m <= n {
        (0..m + n).collect()
    } else {
        (0..n).map(|i| m + i).chain(0..m).collect()
    };
    let coloring = bip.coloring.transfer(&bip.graph, &product.graph, &map, 1);
    let scaffold = bip.graph.permuted(&map);
    finish(product.graph, coloring, Construction::JoinBipartite, Some(scaffold))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_path, make_star};

    #[test]
    fn path_of_three_matches_hand_coloring() {
        let out = color_join_with_k1(&make_path(3)).unwrap();
        let (g, c) = (&out.graph, &out.coloring);
        assert_eq!(c.vertex_colors(), &[1, 2, 1, 3]);
        assert_eq!(c.edge_between(g, 3, 1), Some(1));
        assert_eq!(c.edge_between(g, 3, 0), Some(2));
        assert_eq!(c.edge_between(g, 3, 2), Some(2));
        assert_eq!(c.edge_between(g, 0, 1), Some(3));
        assert_eq!(c.edge_between(g, 1, 2), Some(3));
        assert!(!out.repaired);
    }

    #[test]
    fn stars_and_cycles() {
        for g in [make_star(3), make_cycle(5).unwrap()] {
            let out = color_join_with_k1(&g).unwrap();
            assert_eq!(out.coloring.k(), 3);
            assert!(!out.repaired);
        }
    }

    #[test]
    fn preconditions() {
        assert!(matches!(color_join_with_k1(&make_complete(3)), Err(ColorerError::Precondition(_))));
        assert_eq!(color_join_general(&make_path(2), &make_path(2)), Err(ColorerError::Complete));
    }

    #[test]
    fn general_join_both_orders() {
        let a = color_join_general(&make_path(3), &make_path(2)).unwrap();
        let b = color_join_general(&make_path(2), &make_path(3)).unwrap();
        assert_eq!(a.coloring.k(), 3);
        assert_eq!(b.coloring.k(), 3);
        let c = color_join_general(&make_empty(1), &make_path(3)).unwrap();
        assert_eq!(c.graph, join(&make_empty(1), &make_path(3)).graph);
        assert!(!c.repaired);
    }
}
