//! Colorings whose constructions are not spelled out; found by search and
//! verified.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::search::{search_coloring, DEFAULT_SEARCH_BUDGET};
use super::{require, ColorerError, ColorerOutcome, Construction};
use crate::coloring::TotalColoring;
use crate::graph::{make_complete_bipartite, Graph};

fn bipartite_cache() -> &'static Mutex<HashMap<(usize, usize), TotalColoring>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), TotalColoring>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `K_{m,n}` with parts `[0, m)` and `[m, m + n)`, 3 colors.
pub fn color_complete_bipartite(m: usize, n: usize) -> Result<ColorerOutcome, ColorerError> {
    require(2 <= m && m <= n, "need 2 <= m <= n")?;
    let graph = make_complete_bipartite(m, n);
    let cached = bipartite_cache().lock().expect("cache poisoned").get(&(m, n)).cloned();
    let coloring = match cached {
        Some(c) => c,
        None => {
            let c = search_coloring(&graph, 3, None, DEFAULT_SEARCH_BUDGET)
                .ok_or(ColorerError::SearchFailed(Construction::CompleteBipartite))?;
            bipartite_cache()
                .lock()
                .expect("cache poisoned")
                .insert((m, n), c.clone());
            c
        }
    };
    Ok(ColorerOutcome {
        graph,
        coloring,
        construction: Construction::CompleteBipartite,
        repaired: false,
        scaffold: None,
    })
}

/// Trees on at least 3 vertices, `Δ + 1` colors.
pub fn color_tree(t: &Graph) -> Result<ColorerOutcome, ColorerError> {
    require(t.is_tree(), "not a tree")?;
    require(t.order() >= 3, "tree needs at least 3 vertices")?;
    let k = t.max_degree() as u32 + 1;
    let coloring = search_coloring(t, k, None, DEFAULT_SEARCH_BUDGET)
        .ok_or(ColorerError::SearchFailed(Construction::Tree))?;
    Ok(ColorerOutcome {
        graph: t.clone(),
        coloring,
        construction: Construction::Tree,
        repaired: false,
        scaffold: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorers::passes;
    use crate::graph::{make_path, make_spider, make_star};

    #[test]
    fn small_complete_bipartite() {
        for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
            let out = color_complete_bipartite(m, n).unwrap();
            assert_eq!(out.coloring.k(), 3);
            assert!(passes(&out.graph, &out.coloring).unwrap());
        }
        assert!(color_complete_bipartite(1, 3).is_err());
        assert!(color_complete_bipartite(3, 2).is_err());
    }

    #[test]
    fn trees_use_max_degree_plus_one() {
        for (t, k) in [(make_path(4), 3), (make_star(3), 4), (make_spider(&[2, 2, 1]), 4)] {
            let out = color_tree(&t).unwrap();
            assert_eq!(out.coloring.k(), k);
            assert!(passes(&out.graph, &out.coloring).unwrap());
        }
        assert!(color_tree(&make_path(2)).is_err());
    }
}
