use super::paint::Draft;
use super::traceable::color_along_path;
use super::{finish, hamiltonian, require, ColorerError, ColorerOutcome, Construction};
use crate::coloring::Color;
use crate::graph::{Graph, VertexId};
use crate::ops::cartesian;

/// `G □ H` for traceable `G`, `H`: a boustrophedon Hamiltonian path through
/// the two factor paths, colored as in [`super::color_traceable`].
pub fn color_cartesian_traceable(g: &Graph, h: &Graph) -> Result<ColorerOutcome, ColorerError> {
    require(g.order() >= 2 && h.order() >= 2, "both factors must be nontrivial")?;
    let (pg, ph) = (hamiltonian(g)?, hamiltonian(h)?);
    let hn = h.order();
    let product = cartesian(g, h);
    let mut path = Vec::with_capacity(g.order() * hn);
    for (i, &a) in pg.iter().enumerate() {
        let row = ph.iter().map(|&x| a * hn + x);
        if i % 2 == 0 {
            path.extend(row);
        } else {
            path.extend(row.rev());
        }
    }
    color_along_path(&product.graph, &path, Construction::CartesianTraceable)
}

/// Lowest-index vertex of `h` with the given degree.
fn first_with_degree(h: &Graph, d: usize) -> Option<VertexId> {
    (0..h.order()).find(|&v| h.degree(v) == d)
}

/// `G □ H` for traceable `G` and `H` with a dominating vertex, on the
/// spanning `P_n □ K_{1,s}`. Factors with `|H| <= 3` are traceable and go to
/// [`color_cartesian_traceable`].
pub fn color_cartesian_star(g: &Graph, h: &Graph) -> Result<ColorerOutcome, ColorerError> {
    require(g.order() >= 2, "G must be nontrivial")?;
    require(h.is_connected(), "H must be connected")?;
    let hn = h.order();
    let center = first_with_degree(h, hn - 1)
        .ok_or_else(|| ColorerError::Precondition("H needs a vertex of degree |H| - 1".into()))?;
    let p = hamiltonian(g)?;
    if hn <= 3 {
        return color_cartesian_traceable(g, h);
    }
    // star[0] is the center h_0, star[j] the leaf h_j
    let star: Vec<VertexId> = std::iter::once(center)
        .chain((0..hn).filter(|&v| v != center))
        .collect();
    let s = hn - 1;
    let product = cartesian(g, h);
    let graph = product.graph;
    let at = |i: usize, j: usize| p[i - 1] * hn + star[j];
    let mut draft = Draft::new(&graph);
    let mut scaffold = Vec::new();
    for i in 1..=p.len() {
        let odd = i % 2 == 1;
        for j in 0..=s {
            let c = if j == 0 {
                1
            } else if (odd && j >= 2) || (!odd && j == 1) {
                2
            } else {
                3
            };
            draft.set_vertex(at(i, j), c);
            if i < p.len() {
                draft.set_edge(at(i, j), at(i + 1, j), if j == 0 { 2 } else { 1 });
                scaffold.push((at(i, j), at(i + 1, j)));
            }
            if j >= 1 {
                let c = if (odd && j == 1) || (!odd && j >= 2) { 2 } else { 3 };
                draft.set_edge(at(i, 0), at(i, j), c);
                scaffold.push((at(i, 0), at(i, j)));
            }
        }
    }
    let scaffold = Graph::from_edges(graph.order(), scaffold)?;
    finish(graph.clone(), draft.finish(3), Construction::CartesianStar, Some(scaffold))
}

/// `G □ H` for traceable `G` and `H` with maximum degree `|H| - 2`, on the
/// spanning `P_n □ T` where `T` is the star at `x` plus the edge `yz`.
/// `|H| = 4` is traceable and goes to [`color_cartesian_traceable`].
pub fn color_cartesian_near_star(g: &Graph, h: &Graph) -> Result<ColorerOutcome, ColorerError> {
    require(g.order() >= 2, "G must be nontrivial")?;
    require(h.is_connected(), "H must be connected")?;
    let hn = h.order();
    require(hn >= 4, "H needs at least 4 vertices")?;
    require(h.max_degree() == hn - 2, "H must have maximum degree |H| - 2")?;
    let p = hamiltonian(g)?;
    if hn == 4 {
        return color_cartesian_traceable(g, h);
    }
    let x = first_with_degree(h, hn - 2).expect("max degree attained");
    let z = (0..hn).find(|&v| v != x && !h.has_edge(x, v)).expect("x misses one vertex");
    let y = h
        .neighbor_ids(x)
        .find(|&v| h.has_edge(v, z))
        .ok_or_else(|| ColorerError::Precondition("no common neighbor of x and z".into()))?;
    let ws: Vec<VertexId> = (0..hn).filter(|&v| v != x && v != y && v != z).collect();
    let n = p.len();
    let product = cartesian(g, h);
    let graph = product.graph;
    let at = |i: usize, v: VertexId| p[i - 1] * hn + v;

    let mut scaffold = Vec::new();
    for i in 1..=n {
        scaffold.push((at(i, y), at(i, z)));
        for v in (0..hn).filter(|&v| v != x && v != z) {
            scaffold.push((at(i, x), at(i, v)));
        }
        if i < n {
            for v in 0..hn {
                scaffold.push((at(i, v), at(i + 1, v)));
            }
        }
    }
    let scaffold = Graph::from_edges(graph.order(), scaffold)?;

    let mut draft = Draft::new(&graph);
    let layer_trail = |i: usize, top: usize, w: VertexId| -> Vec<VertexId> {
        let mut t = vec![at(i, w), at(i, x), at(i, y)];
        t.extend((1..=i).rev().map(|l| at(l, z)));
        t.extend([at(1, y), at(1, x)]);
        t.extend((1..=top).map(|l| at(l, w)));
        t
    };
    if n <= 3 {
        for &w in &ws {
            let set = [
                (Some(at(1, y)), None, 1),
                (None, Some((at(1, x), at(1, w))), 1),
                (Some(at(2, w)), None, 1),
                (None, Some((at(2, x), at(2, y))), 1),
                (None, Some((at(1, x), at(1, y))), 2),
                (Some(at(1, w)), None, 2),
                (None, Some((at(2, x), at(2, w))), 2),
                (Some(at(2, y)), None, 2),
                (Some(at(1, x)), None, 3),
                (None, Some((at(1, w), at(2, w))), 3),
                (Some(at(2, x)), None, 3),
                (None, Some((at(1, y), at(2, y))), 3),
                (None, Some((at(1, z), at(1, y))), 3),
                (None, Some((at(2, z), at(2, y))), 3),
            ];
            for (v, e, c) in set {
                if let Some(v) = v {
                    draft.set_vertex(v, c);
                }
                if let Some((a, b)) = e {
                    draft.set_edge(a, b, c);
                }
            }
        }
        if n == 3 {
            for &w in &ws {
                draft.paint_trail(&layer_trail(3, 3, w));
            }
        }
    } else {
        // case 1 on the first m layers, m = 1 (mod 3); then one trail per
        // extra layer
        let m = n - (n - 1) % 3;
        for i in 2..=m {
            for &w in &ws {
                draft.paint_trail(&layer_trail(i, m, w));
            }
        }
        for &w in &ws {
            let mut path: Vec<VertexId> = (1..=m).map(|l| at(l, w)).collect();
            path.extend([at(m, x), at(m, y), at(m, z)]);
            draft.paint_trail(&path);
        }
        for i in m + 1..=n {
            for &w in &ws {
                draft.paint_trail(&layer_trail(i, i, w));
            }
        }
        if n % 3 == 0 {
            let c = draft.edge(at(n - 2, x), at(n - 2, y));
            draft.set_edge(at(n - 1, x), at(n - 2, x), c);
            let c = draft.edge(at(n - 2, y), at(n - 2, z));
            draft.set_edge(at(n - 1, y), at(n - 2, y), c);
        }
    }
    fill_scaffold_edges(&mut draft, &scaffold);
    finish(graph.clone(), draft.finish(3), Construction::CartesianNearStar, Some(scaffold))
}

/// Uncolored scaffold edges get the smallest color unlike both endpoints.
pub(crate) fn fill_scaffold_edges(draft: &mut Draft<'_>, scaffold: &Graph) {
    for &(u, v) in scaffold.edges() {
        if draft.edge(u, v) == 0 {
            let (cu, cv) = (draft.vertex(u), draft.vertex(v));
            let c: Color = (1..=3).find(|&c| c != cu && c != cv).unwrap_or(1);
            draft.set_edge(u, v, c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_path, make_spider, make_star};

    #[test]
    fn small_grids() {
        for (g, h) in [
            (make_path(2), make_path(2)),
            (make_path(3), make_path(3)),
            (make_cycle(4).unwrap(), make_path(2)),
        ] {
            let out = color_cartesian_traceable(&g, &h).unwrap();
            assert_eq!(out.coloring.k(), 3);
            assert!(!out.repaired);
        }
    }

    #[test]
    fn star_table_for_two_layers() {
        let out = color_cartesian_star(&make_path(2), &make_star(3)).unwrap();
        let (g, c) = (&out.graph, &out.coloring);
        // (g_1, h_j) = j, (g_2, h_j) = 4 + j
        assert_eq!(c.vertex_colors(), &[1, 3, 2, 2, 1, 2, 3, 3]);
        for j in 1..4 {
            assert_eq!(c.edge_between(g, j, 4 + j), Some(1));
        }
        assert_eq!(c.edge_between(g, 0, 4), Some(2));
        assert_eq!(
            [1, 2, 3].map(|j| c.edge_between(g, 0, j).unwrap()),
            [2, 3, 3]
        );
        assert_eq!(
            [1, 2, 3].map(|j| c.edge_between(g, 4, 4 + j).unwrap()),
            [3, 2, 2]
        );
        assert!(!out.repaired);
    }

    #[test]
    fn star_with_extra_leaf_edge() {
        let h = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let out = color_cartesian_star(&make_path(4), &h).unwrap();
        assert_eq!(out.coloring.k(), 3);
    }

    #[test]
    fn near_star_two_layers_explicit_colors() {
        // x = 0 adjacent to y = 1, w = 3, 4; z = 2 hangs off y
        let h = make_spider(&[2, 1, 1]);
        let out = color_cartesian_near_star(&make_path(2), &h).unwrap();
        let (g, c) = (&out.graph, &out.coloring);
        assert_eq!(c.vertex(0), 3);
        assert_eq!(c.vertex(1), 1);
        assert_eq!(c.edge_between(g, 0, 1), Some(2));
        assert!(!out.repaired);
    }

    #[test]
    fn rejects_wrong_degree() {
        assert!(color_cartesian_near_star(&make_path(2), &make_star(4)).is_err());
        assert!(color_cartesian_star(&make_path(2), &make_path(5)).is_err());
    }
}
