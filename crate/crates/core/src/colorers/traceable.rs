use super::paint::Draft;
use super::{finish, hamiltonian, ColorerError, ColorerOutcome, Construction};
use crate::coloring::TotalColoring;
use crate::graph::{Graph, VertexId};

/// Traceable graphs: the Hamiltonian path colored `1, 2, 3, 1, ...` along
/// its vertices and edges; everything else 1.
pub fn color_traceable(g: &Graph) -> Result<ColorerOutcome, ColorerError> {
    if g.is_complete() {
        return finish(g.clone(), TotalColoring::monochromatic(g), Construction::Traceable, None);
    }
    let path = hamiltonian(g)?;
    color_along_path(g, &path, Construction::Traceable)
}

pub(crate) fn color_along_path(
    g: &Graph,
    path: &[VertexId],
    construction: Construction,
) -> Result<ColorerOutcome, ColorerError> {
    let mut draft = Draft::new(g);
    draft.paint_trail(path);
    let scaffold = Graph::from_edges(g.order(), path.windows(2).map(|w| (w[0], w[1])))?;
    finish(g.clone(), draft.finish(3), construction, Some(scaffold))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_path, make_star};

    #[test]
    fn complete_graph_is_monochromatic() {
        let out = color_traceable(&make_complete(4)).unwrap();
        assert_eq!(out.coloring.k(), 1);
        assert!(!out.repaired);
    }

    #[test]
    fn paths_and_cycles() {
        for g in [make_path(4), make_path(7), make_cycle(6).unwrap()] {
            let out = color_traceable(&g).unwrap();
            assert_eq!(out.coloring.k(), 3);
            assert!(!out.repaired);
        }
        let p4 = color_traceable(&make_path(4)).unwrap().coloring;
        assert_eq!(p4.vertex_colors(), &[1, 3, 2, 1]);
        assert_eq!(p4.edge_colors(), &[2, 1, 3]);
    }

    #[test]
    fn star_is_rejected() {
        assert_eq!(color_traceable(&make_star(3)), Err(ColorerError::NotTraceable));
    }
}
