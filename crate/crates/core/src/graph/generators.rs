use super::{Graph, GraphError};

/// Path `0 - 1 - ... - (n-1)`.
///
/// # Panics
/// If `n == 0`.
pub fn make_path(n: usize) -> Graph {
    assert!(n >= 1, "a path needs at least one vertex");
    Graph::from_edges_dedup(n, (1..n).map(|i| (i - 1, i)))
}

/// Star `K_{1,leaves}` with center `0`.
pub fn make_star(leaves: usize) -> Graph {
    assert!(leaves >= 1, "a star needs at least one leaf");
    Graph::from_edges_dedup(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

pub fn make_complete(n: usize) -> Graph {
    assert!(n >= 1, "K_n needs at least one vertex");
    Graph::from_edges_dedup(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooSmall(n));
    }
    Ok(Graph::from_edges_dedup(n, (0..n).map(|i| (i, (i + 1) % n))))
}

/// `K_{m,n}` with parts `[0, m)` and `[m, m + n)`.
pub fn make_complete_bipartite(m: usize, n: usize) -> Graph {
    assert!(m >= 1 && n >= 1, "both parts must be nonempty");
    Graph::from_edges_dedup(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

/// `n` isolated vertices.
pub fn make_empty(n: usize) -> Graph {
    assert!(n >= 1);
    Graph::from_edges_dedup(n, [])
}

/// A center `0` with pendant paths of the given lengths, laid out leg by leg.
pub fn make_spider(legs: &[usize]) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges_dedup(next, edges)
}
