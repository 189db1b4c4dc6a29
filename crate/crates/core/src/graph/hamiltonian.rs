use super::{Graph, GraphError, VertexId};

/// Node budget used by [`find_hamiltonian_path`].
pub const DEFAULT_HAMILTONIAN_BUDGET: u64 = 50_000_000;

/// A Hamiltonian path, or `None` when the graph is not traceable.
///
/// Deterministic: start vertices and neighbors are tried in ascending order,
/// except that a degree-1 vertex, when present, is forced to be the start.
///
/// # Panics
/// If the default search budget is exhausted, which does not happen at the
/// sizes this crate works with.
pub fn find_hamiltonian_path(g: &Graph) -> Option<Vec<VertexId>> {
    find_hamiltonian_path_with_budget(g, DEFAULT_HAMILTONIAN_BUDGET)
        .expect("hamiltonian path search exhausted its budget")
}

pub fn find_hamiltonian_path_with_budget(
    g: &Graph,
    budget: u64,
) -> Result<Option<Vec<VertexId>>, GraphError> {
    let n = g.order();
    if n == 1 {
        return Ok(Some(vec![0]));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let pendant: Vec<_> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if pendant.len() > 2 {
        return Ok(None);
    }
    let starts: Vec<VertexId> = match pendant.first() {
        Some(&v) => vec![v],
        None => (0..n).collect(),
    };
    let mut search = Search {
        g,
        path: Vec::with_capacity(n),
        visited: vec![false; n],
        nodes: 0,
        budget,
    };
    for s in starts {
        search.path.push(s);
        search.visited[s] = true;
        if search.extend()? {
            return Ok(Some(search.path));
        }
        search.visited[s] = false;
        search.path.pop();
    }
    Ok(None)
}

struct Search<'g> {
    g: &'g Graph,
    path: Vec<VertexId>,
    visited: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn extend(&mut self) -> Result<bool, GraphError> {
        if self.path.len() == self.g.order() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(GraphError::BudgetExhausted(self.budget));
        }
        if !self.viable() {
            return Ok(false);
        }
        let end = *self.path.last().unwrap();
        for &(w, _) in self.g.neighbors(end) {
            if self.visited[w] {
                continue;
            }
            self.visited[w] = true;
            self.path.push(w);
            if self.extend()? {
                return Ok(true);
            }
            self.path.pop();
            self.visited[w] = false;
        }
        Ok(false)
    }

    /// Every unvisited vertex but one must keep two usable neighbors among
    /// the unvisited vertices and the current end.
    fn viable(&self) -> bool {
        let end = *self.path.last().unwrap();
        let mut weak = 0;
        for w in 0..self.g.order() {
            if self.visited[w] {
                continue;
            }
            let usable = self
                .g
                .neighbor_ids(w)
                .filter(|&x| !self.visited[x] || x == end)
                .count();
            match usable {
                0 => return false,
                1 => {
                    weak += 1;
                    if weak > 1 {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }
}
