//! Total proper connection of graphs: exact checking, exhaustive search for
//! the connection number, and explicit colorings of graph products.

pub mod checker;
pub mod colorers;
pub mod coloring;
pub mod graph;
pub mod ops;
pub mod oracle;
pub mod suite;

pub use checker::{
    check_connected, exists_path, is_total_proper_connected, is_total_proper_path, walk_feasibility,
    CheckError, CheckReport, Checker, CheckerConfig, PathFlavor,
};
pub use colorers::{ColorerError, ColorerOutcome, Construction};
pub use coloring::{Color, ColoringError, ColoringJson, TotalColoring};
pub use graph::{Graph, GraphError, VertexId};
pub use ops::{OpKind, Permutation, Product};
pub use oracle::{brute_force_pc, brute_force_pvc, brute_force_tpc, OracleConfig, OracleError, TpcResult};
