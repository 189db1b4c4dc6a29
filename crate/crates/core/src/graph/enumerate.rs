//! Exhaustive generation of small connected graphs up to isomorphism.

use std::collections::BTreeSet;

use super::{Graph, GraphError, VertexId};

pub const DEFAULT_ENUMERATION_CAP: usize = 6;

// codes pack the upper triangle into a u64
const MAX_CANON_ORDER: usize = 11;

/// Every connected graph on `n` vertices, one per isomorphism class.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    enumerate_connected_graphs_capped(n, DEFAULT_ENUMERATION_CAP)
}

/// As [`enumerate_connected_graphs`] with an explicit cap on `n`.
///
/// Graphs on `n` vertices are grown from all graphs on `n - 1` vertices by
/// adding a vertex with every possible neighborhood, then deduplicated by
/// [`canonical_form`]. Output is sorted by edge count, then canonical code.
pub fn enumerate_connected_graphs_capped(n: usize, cap: usize) -> Result<Vec<Graph>, GraphError> {
    if n > cap || n > MAX_CANON_ORDER {
        return Err(GraphError::CapExceeded { n, cap });
    }
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for order in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = from_code(order - 1, code);
            for mask in 0u32..(1 << (order - 1)) {
                let new_vertex = order - 1;
                let edges = base.edges().iter().copied().chain(
                    (0..order - 1)
                        .filter(|&v| mask >> v & 1 == 1)
                        .map(|v| (v, new_vertex)),
                );
                let g = Graph::from_edges_dedup(order, edges);
                next.insert(canonical_form(&g).1);
            }
        }
        level = next;
    }
    let mut graphs: Vec<Graph> = level
        .into_iter()
        .map(|code| from_code(n, code))
        .filter(Graph::is_connected)
        .collect();
    graphs.sort_by_key(|g| (g.size(), canonical_form(g).1));
    Ok(graphs)
}

/// Canonical labelling: returns the relabelled graph and its code.
///
/// Vertices are ordered by non-increasing degree; among all orderings that
/// respect the degree classes the one with the smallest upper-triangle
/// adjacency code wins. Isomorphic graphs get identical codes.
pub fn canonical_form(g: &Graph) -> (Graph, u64) {
    let n = g.order();
    assert!(n <= MAX_CANON_ORDER, "canonical form limited to {MAX_CANON_ORDER} vertices");
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    let mut by_degree: Vec<VertexId> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for v in by_degree {
        match classes.last_mut() {
            Some(class) if g.degree(class[0]) == g.degree(v) => class.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best: Option<(u64, Vec<VertexId>)> = None;
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search_orders(g, &classes, 0, &mut order, &mut used, &mut best);
    let (code, order) = best.expect("at least one ordering");
    // order[i] = old vertex placed at position i
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (g.permuted(&perm), code)
}

fn search_orders(
    g: &Graph,
    classes: &[Vec<VertexId>],
    class: usize,
    order: &mut Vec<VertexId>,
    used: &mut [bool],
    best: &mut Option<(u64, Vec<VertexId>)>,
) {
    if order.len() == g.order() {
        let code = code_of(g, order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order.clone()));
        }
        return;
    }
    let members = &classes[class];
    let placed_in_class = members.iter().filter(|&&v| used[v]).count();
    let next_class = if placed_in_class + 1 == members.len() { class + 1 } else { class };
    for &v in members {
        if used[v] {
            continue;
        }
        used[v] = true;
        order.push(v);
        search_orders(g, classes, next_class, order, used, best);
        order.pop();
        used[v] = false;
    }
}

fn code_of(g: &Graph, order: &[VertexId]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | u64::from(g.has_edge(order[i], order[j]));
        }
    }
    code
}

fn from_code(n: usize, code: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = pairs.len();
    let edges = pairs
        .into_iter()
        .enumerate()
        .filter(|&(k, _)| code >> (total - 1 - k) & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges_dedup(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_path};
    use itertools::Itertools;

    /// Minimum adjacency string over all n! labelings.
    fn brute_canonical(g: &Graph) -> u64 {
        (0..g.order())
            .permutations(g.order())
            .map(|order| code_of(g, &order))
            .min()
            .unwrap()
    }

    fn brute_connected_classes(n: usize) -> usize {
        let pairs = n * (n - 1) / 2;
        let mut seen = BTreeSet::new();
        for code in 0u64..(1 << pairs) {
            let g = from_code(n, code);
            if g.is_connected() {
                seen.insert(brute_canonical(&g));
            }
        }
        seen.len()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected_graphs(1).unwrap().len(), 1);
        let two = enumerate_connected_graphs(2).unwrap();
        assert_eq!(two, vec![make_complete(2)]);
        let three = enumerate_connected_graphs(3).unwrap();
        assert_eq!(three.len(), 2);
        assert_eq!(canonical_form(&three[0]).1, canonical_form(&make_path(3)).1);
        assert_eq!(three[1], make_complete(3));
    }

    #[test]
    fn counts_match_exhaustive_isomorphism_filtering() {
        for n in 1..=5 {
            assert_eq!(
                enumerate_connected_graphs(n).unwrap().len(),
                brute_connected_classes(n),
                "n = {n}"
            );
        }
        assert_eq!(brute_connected_classes(4), 6);
    }

    #[test]
    fn known_counts_up_to_seven() {
        // OEIS A001349
        let expected = [1, 1, 2, 6, 21, 112, 853];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(enumerate_connected_graphs_capped(i + 1, 7).unwrap().len(), count);
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_connected_graphs(7),
            Err(GraphError::CapExceeded { n: 7, cap: 6 })
        );
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        for g in enumerate_connected_graphs(5).unwrap() {
            let code = canonical_form(&g).1;
            for perm in (0..5).permutations(5).step_by(7) {
                assert_eq!(canonical_form(&g.permuted(&perm)).1, code);
            }
        }
    }
}
