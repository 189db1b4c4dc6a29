//! Total colorings: one color in `1..=k` for every vertex and every edge.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexId};

pub type Color = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("palette size must be at least 1")]
    EmptyPalette,
    #[error("expected {expected} vertex colors, got {got}")]
    VertexCount { expected: usize, got: usize },
    #[error("expected {expected} edge colors, got {got}")]
    EdgeCount { expected: usize, got: usize },
    #[error("color {color} outside palette 1..={k}")]
    OutOfPalette { color: Color, k: Color },
    #[error("bad edge key {0:?}")]
    BadEdgeKey(String),
    #[error("edge {0} is not in the graph")]
    UnknownEdge(String),
    #[error("edge {0} has no color")]
    MissingEdge(String),
}

/// Colors aligned with a specific graph: `edge_colors[i]` colors
/// `graph.edges()[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TotalColoring {
    k: Color,
    vertex_colors: Vec<Color>,
    edge_colors: Vec<Color>,
}

impl TotalColoring {
    pub fn new(
        g: &Graph,
        k: Color,
        vertex_colors: Vec<Color>,
        edge_colors: Vec<Color>,
    ) -> Result<Self, ColoringError> {
        if k == 0 {
            return Err(ColoringError::EmptyPalette);
        }
        if vertex_colors.len() != g.order() {
            return Err(ColoringError::VertexCount {
                expected: g.order(),
                got: vertex_colors.len(),
            });
        }
        if edge_colors.len() != g.size() {
            return Err(ColoringError::EdgeCount {
                expected: g.size(),
                got: edge_colors.len(),
            });
        }
        if let Some(&color) = vertex_colors
            .iter()
            .chain(&edge_colors)
            .find(|&&c| c == 0 || c > k)
        {
            return Err(ColoringError::OutOfPalette { color, k });
        }
        Ok(TotalColoring {
            k,
            vertex_colors,
            edge_colors,
        })
    }

    /// Every element colored 1.
    pub fn monochromatic(g: &Graph) -> Self {
        TotalColoring {
            k: 1,
            vertex_colors: vec![1; g.order()],
            edge_colors: vec![1; g.size()],
        }
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn vertex_colors(&self) -> &[Color] {
        &self.vertex_colors
    }

    pub fn edge_colors(&self) -> &[Color] {
        &self.edge_colors
    }

    pub fn vertex(&self, v: VertexId) -> Color {
        self.vertex_colors[v]
    }

    pub fn edge(&self, id: usize) -> Color {
        self.edge_colors[id]
    }

    /// Color of edge `uv` in `g`, if it is an edge.
    pub fn edge_between(&self, g: &Graph, u: VertexId, v: VertexId) -> Option<Color> {
        g.edge_id(u, v).map(|e| self.edge_colors[e])
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut used: Vec<_> = self.vertex_colors.iter().chain(&self.edge_colors).collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    /// Applies `sigma` (indexed by color, `sigma[c - 1]`) to every element.
    pub fn renamed(&self, sigma: &[Color]) -> Self {
        let map = |c: &Color| sigma[(*c - 1) as usize];
        TotalColoring {
            k: self.k,
            vertex_colors: self.vertex_colors.iter().map(map).collect(),
            edge_colors: self.edge_colors.iter().map(map).collect(),
        }
    }

    /// Restriction to a spanning subgraph `sub` of `g`.
    pub fn restrict(&self, g: &Graph, sub: &Graph) -> Self {
        assert!(g.contains_spanning(sub), "not a spanning subgraph");
        TotalColoring {
            k: self.k,
            vertex_colors: self.vertex_colors.clone(),
            edge_colors: sub
                .edges()
                .iter()
                .map(|&(u, v)| self.edge_colors[g.edge_id(u, v).unwrap()])
                .collect(),
        }
    }

    /// Moves a coloring of `from` onto `to` through the vertex map
    /// `map[v_from] = v_to`. Edges of `to` not hit by the map get `fill`.
    pub fn transfer(&self, from: &Graph, to: &Graph, map: &[VertexId], fill: Color) -> Self {
        let mut vertex_colors = vec![fill; to.order()];
        for (v, &w) in map.iter().enumerate() {
            vertex_colors[w] = self.vertex_colors[v];
        }
        let mut edge_colors = vec![fill; to.size()];
        for (id, &(u, v)) in from.edges().iter().enumerate() {
            let target = to
                .edge_id(map[u], map[v])
                .expect("vertex map must send edges to edges");
            edge_colors[target] = self.edge_colors[id];
        }
        TotalColoring {
            k: self.k.max(fill),
            vertex_colors,
            edge_colors,
        }
    }

    pub fn to_json(&self, g: &Graph) -> ColoringJson {
        ColoringJson {
            k: self.k,
            vertex_colors: self.vertex_colors.clone(),
            edge_colors: g
                .edges()
                .iter()
                .zip(&self.edge_colors)
                .map(|(&(u, v), &c)| (format!("{u}-{v}"), c))
                .collect(),
        }
    }

    pub fn from_json(g: &Graph, json: &ColoringJson) -> Result<Self, ColoringError> {
        let mut edge_colors = vec![0; g.size()];
        for (key, &c) in &json.edge_colors {
            let (u, v) = parse_edge_key(key)?;
            let id = g
                .edge_id(u, v)
                .ok_or_else(|| ColoringError::UnknownEdge(key.clone()))?;
            edge_colors[id] = c;
        }
        if let Some(id) = edge_colors.iter().position(|&c| c == 0) {
            let (u, v) = g.edge(id);
            return Err(ColoringError::MissingEdge(format!("{u}-{v}")));
        }
        TotalColoring::new(g, json.k, json.vertex_colors.clone(), edge_colors)
    }
}

fn parse_edge_key(key: &str) -> Result<(VertexId, VertexId), ColoringError> {
    let bad = || ColoringError::BadEdgeKey(key.to_string());
    let (a, b) = key.split_once('-').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

/// Wire form: `{"k": 3, "vertex_colors": [..], "edge_colors": {"u-v": c}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub k: Color,
    pub vertex_colors: Vec<Color>,
    pub edge_colors: BTreeMap<String, Color>,
}

/// Fixed Graphviz names for palette colors.
pub const DOT_PALETTE: [&str; 8] = [
    "red", "blue", "green", "orange", "purple", "brown", "gold", "cyan",
];

pub fn dot_color(c: Color) -> &'static str {
    DOT_PALETTE.get((c as usize).wrapping_sub(1)).copied().unwrap_or("gray")
}

/// Graphviz rendering with colored, labelled nodes and edges.
pub fn colored_dot(g: &Graph, c: &TotalColoring) -> String {
    let mut out = String::from("graph G {\n  node [style=filled];\n");
    for v in 0..g.order() {
        let color = c.vertex(v);
        out.push_str(&format!(
            "  {v} [fillcolor={}, xlabel=\"{color}\"];\n",
            dot_color(color)
        ));
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let color = c.edge(id);
        out.push_str(&format!(
            "  {u} -- {v} [color={}, label=\"{color}\"];\n",
            dot_color(color)
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_path;

    #[test]
    fn validates_shape_and_palette() {
        let g = make_path(3);
        assert!(TotalColoring::new(&g, 3, vec![1, 2, 3], vec![1, 2]).is_ok());
        assert_eq!(
            TotalColoring::new(&g, 2, vec![1, 2, 3], vec![1, 2]),
            Err(ColoringError::OutOfPalette { color: 3, k: 2 })
        );
        assert!(matches!(
            TotalColoring::new(&g, 3, vec![1, 2], vec![1, 2]),
            Err(ColoringError::VertexCount { .. })
        ));
        assert_eq!(
            TotalColoring::new(&g, 0, vec![], vec![]),
            Err(ColoringError::EmptyPalette)
        );
    }

    #[test]
    fn json_round_trip() {
        let g = make_path(3);
        let c = TotalColoring::new(&g, 3, vec![1, 2, 3], vec![3, 1]).unwrap();
        let json = serde_json::to_string(&c.to_json(&g)).unwrap();
        assert_eq!(
            json,
            r#"{"k":3,"vertex_colors":[1,2,3],"edge_colors":{"0-1":3,"1-2":1}}"#
        );
        let back: ColoringJson = serde_json::from_str(&json).unwrap();
        assert_eq!(TotalColoring::from_json(&g, &back).unwrap(), c);
        let mut broken = back.clone();
        broken.edge_colors.remove("1-2");
        assert_eq!(
            TotalColoring::from_json(&g, &broken),
            Err(ColoringError::MissingEdge("1-2".into()))
        );
        broken.edge_colors.insert("0-2".into(), 1);
        assert!(matches!(
            TotalColoring::from_json(&g, &broken),
            Err(ColoringError::UnknownEdge(_))
        ));
    }

    #[test]
    fn dot_uses_fixed_palette() {
        let g = make_path(2);
        let c = TotalColoring::new(&g, 2, vec![1, 2], vec![2]).unwrap();
        let dot = colored_dot(&g, &c);
        assert!(dot.contains("0 [fillcolor=red"));
        assert!(dot.contains("0 -- 1 [color=blue"));
        assert_eq!(dot_color(42), "gray");
    }
}
