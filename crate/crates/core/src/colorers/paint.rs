//! Partial colorings and periodic trail painting.

use crate::coloring::{Color, TotalColoring};
use crate::graph::{EdgeId, Graph, VertexId};

pub(crate) const FORWARD: [Color; 3] = [1, 2, 3];
pub(crate) const BACKWARD: [Color; 3] = [1, 3, 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Vertex(VertexId),
    Edge(EdgeId),
}

/// A coloring under construction; `0` marks an uncolored element.
#[derive(Clone, Debug)]
pub(crate) struct Draft<'g> {
    g: &'g Graph,
    vcol: Vec<Color>,
    ecol: Vec<Color>,
}

impl<'g> Draft<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Draft {
            g,
            vcol: vec![0; g.order()],
            ecol: vec![0; g.size()],
        }
    }

    pub fn vertex(&self, v: VertexId) -> Color {
        self.vcol[v]
    }

    pub fn edge(&self, u: VertexId, v: VertexId) -> Color {
        self.ecol[self.id(u, v)]
    }

    pub fn set_vertex(&mut self, v: VertexId, c: Color) {
        self.vcol[v] = c;
    }

    pub fn set_edge(&mut self, u: VertexId, v: VertexId, c: Color) {
        let id = self.id(u, v);
        self.ecol[id] = c;
    }

    fn id(&self, u: VertexId, v: VertexId) -> EdgeId {
        self.g
            .edge_id(u, v)
            .unwrap_or_else(|| panic!("{u}-{v} is not an edge"))
    }

    fn get(&self, s: Slot) -> Color {
        match s {
            Slot::Vertex(v) => self.vcol[v],
            Slot::Edge(e) => self.ecol[e],
        }
    }

    fn put(&mut self, s: Slot, c: Color) {
        match s {
            Slot::Vertex(v) => self.vcol[v] = c,
            Slot::Edge(e) => self.ecol[e] = c,
        }
    }

    /// Paints `trail` with a period-3 sequence in either direction, choosing
    /// the direction and phase that agree with the most internal elements
    /// already colored. Colored elements are never overwritten; the end
    /// vertices are filled if uncolored but never weigh in on the phase.
    pub fn paint_trail(&mut self, trail: &[VertexId]) {
        self.paint_trail_with(trail, &[FORWARD, BACKWARD]);
    }

    pub fn paint_trail_with(&mut self, trail: &[VertexId], directions: &[[Color; 3]]) {
        if trail.len() < 2 {
            return;
        }
        let slots = self.slots(trail);
        let last = slots.len() - 1;
        let color_at = |dir: &[Color; 3], phase: usize, p: usize| dir[(p + phase) % 3];
        let mut best = (&directions[0], 0);
        let mut best_score = None;
        for dir in directions {
            for phase in 0..3 {
                let score = (1..last)
                    .filter(|&p| self.get(slots[p]) == color_at(dir, phase, p))
                    .count();
                if best_score.is_none_or(|b| score > b) {
                    best_score = Some(score);
                    best = (dir, phase);
                }
            }
        }
        let (dir, phase) = best;
        // internal positions first: a closed trail revisits its start vertex
        for p in (1..last).chain([0, last]) {
            if self.get(slots[p]) == 0 {
                self.put(slots[p], color_at(dir, phase, p));
            }
        }
    }

    fn slots(&self, trail: &[VertexId]) -> Vec<Slot> {
        let mut slots = Vec::with_capacity(2 * trail.len());
        for (i, &v) in trail.iter().enumerate() {
            slots.push(Slot::Vertex(v));
            if let Some(&w) = trail.get(i + 1) {
                slots.push(Slot::Edge(self.id(v, w)));
            }
        }
        slots
    }

    /// Remaining uncolored elements get color 1.
    pub fn finish(self, k: Color) -> TotalColoring {
        let fill = |c: Color| if c == 0 { 1 } else { c };
        TotalColoring::new(
            self.g,
            k,
            self.vcol.into_iter().map(fill).collect(),
            self.ecol.into_iter().map(fill).collect(),
        )
        .expect("draft colors stay inside the palette")
    }
}
