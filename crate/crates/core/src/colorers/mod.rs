//! Explicit 3-colorings of joins, products and permutation graphs.
//!
//! Every colorer returns an outcome that has already passed the checker.
//! When a construction's output fails, it seeds [`search_coloring`]; a
//! successful repair is reported through [`ColorerOutcome::repaired`].

mod cartesian;
mod join;
mod known;
mod lexicographic;
mod paint;
mod permutation;
mod search;
mod strong;
mod traceable;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::checker::{CheckError, Checker, PathFlavor};
use crate::coloring::TotalColoring;
use crate::graph::{Graph, GraphError};
use crate::ops::OpsError;

pub use cartesian::{color_cartesian_near_star, color_cartesian_star, color_cartesian_traceable};
pub use join::{color_join_general, color_join_with_k1};
pub use known::{color_complete_bipartite, color_tree};
pub use lexicographic::color_lexicographic;
pub use permutation::{color_permutation_star, color_permutation_traceable, StarVariant};
pub use search::{search_coloring, DEFAULT_SEARCH_BUDGET};
pub use strong::color_strong;
pub use traceable::color_traceable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColorerError {
    #[error("graph is not traceable")]
    NotTraceable,
    #[error("the product is complete; color everything 1")]
    Complete,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0} construction failed the checker and search could not repair it")]
    RepairFailed(Construction),
    #[error("search for a {0} coloring ran out of budget")]
    SearchFailed(Construction),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ops(#[from] OpsError),
}

/// Which rule produced a coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    Traceable,
    JoinWithK1,
    JoinBipartite,
    CompleteBipartite,
    CartesianTraceable,
    CartesianStar,
    CartesianNearStar,
    PermutationTraceable,
    PermutationStar,
    Lexicographic,
    Strong,
    Tree,
}

impl std::fmt::Display for Construction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = serde_json::to_value(self).expect("unit variant");
        f.write_str(name.as_str().expect("string"))
    }
}

/// A verified coloring of `graph`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorerOutcome {
    pub graph: Graph,
    pub coloring: TotalColoring,
    pub construction: Construction,
    /// True when the constructive output failed and search fixed it.
    pub repaired: bool,
    /// Spanning subgraph the construction was designed on, if any.
    pub scaffold: Option<Graph>,
}

pub(crate) fn passes(g: &Graph, c: &TotalColoring) -> Result<bool, CheckError> {
    Checker::new(g, c, PathFlavor::TotalProper)?.all_connected()
}

/// Verifies a constructed coloring, repairing it by seeded search if needed.
pub(crate) fn finish(
    graph: Graph,
    coloring: TotalColoring,
    construction: Construction,
    scaffold: Option<Graph>,
) -> Result<ColorerOutcome, ColorerError> {
    if passes(&graph, &coloring)? {
        return Ok(ColorerOutcome {
            graph,
            coloring,
            construction,
            repaired: false,
            scaffold,
        });
    }
    let fixed = search_coloring(&graph, coloring.k(), Some(&coloring), DEFAULT_SEARCH_BUDGET)
        .ok_or(ColorerError::RepairFailed(construction))?;
    Ok(ColorerOutcome {
        graph,
        coloring: fixed,
        construction,
        repaired: true,
        scaffold,
    })
}

/// Lowest-index Hamiltonian path of a graph with at least two vertices.
pub(crate) fn hamiltonian(g: &Graph) -> Result<Vec<usize>, ColorerError> {
    crate::graph::find_hamiltonian_path(g).ok_or(ColorerError::NotTraceable)
}

pub(crate) fn require(cond: bool, what: &str) -> Result<(), ColorerError> {
    if cond {
        Ok(())
    } else {
        Err(ColorerError::Precondition(what.to_string()))
    }
}
