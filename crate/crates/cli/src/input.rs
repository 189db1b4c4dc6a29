//! JSON documents passed between verbs, and graph spec strings.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use tpc_core::graph::{
    make_complete, make_complete_bipartite, make_cycle, make_empty, make_path, make_spider, make_star,
};
use tpc_core::ops::ProductVertexMap;
use tpc_core::{ColoringJson, Construction, Graph, OpKind, Permutation, TotalColoring};

/// How a product graph was built.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductInfo {
    pub op: OpKind,
    pub g: Graph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Graph>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Permutation>,
    pub labels: ProductVertexMap,
}

/// What `product` and `color` write, and what every verb reads.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Document {
    pub graph: Graph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<ProductInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<ColoringJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<Construction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub repaired: Option<bool>,
}

impl Document {
    pub fn bare(graph: Graph) -> Self {
        Document {
            graph,
            product: None,
            coloring: None,
            construction: None,
            repaired: None,
        }
    }

    pub fn coloring(&self) -> Result<Option<TotalColoring>> {
        self.coloring
            .as_ref()
            .map(|c| TotalColoring::from_json(&self.graph, c).context("coloring does not fit the graph"))
            .transpose()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AnyGraph {
    Doc(Box<Document>),
    Graph(Graph),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AnyColoring {
    Doc(Box<Document>),
    Coloring(ColoringJson),
}

/// Reads a file, or standard input when `path` is `None` or `-`.
pub fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

/// A document or a bare graph.
pub fn read_document(path: Option<&Path>) -> Result<Document> {
    let text = read_text(path)?;
    match serde_json::from_str(&text).context("expected a graph or document JSON")? {
        AnyGraph::Doc(d) => Ok(*d),
        AnyGraph::Graph(g) => Ok(Document::bare(g)),
    }
}

/// A coloring file, either bare or inside a document.
pub fn read_coloring(path: &Path) -> Result<ColoringJson> {
    let text = read_text(Some(path))?;
    match serde_json::from_str(&text).context("expected a coloring or document JSON")? {
        AnyColoring::Coloring(c) => Ok(c),
        AnyColoring::Doc(d) => d.coloring.ok_or_else(|| anyhow!("{} has no coloring", path.display())),
    }
}

fn numbers(args: &str) -> Result<Vec<usize>> {
    args.split(',')
        .map(|a| a.trim().parse().with_context(|| format!("bad number {a:?}")))
        .collect()
}

/// Parses `kind:args`, e.g. `path:4`, `star:3`, `complete-bipartite:2,3`,
/// `spider:2,1,1`, or `file:g.json`.
pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let (kind, args) = spec.split_once(':').unwrap_or((spec, ""));
    if kind == "file" {
        return Ok(read_document(Some(Path::new(args)))?.graph);
    }
    let nums = if args.is_empty() { Vec::new() } else { numbers(args)? };
    if nums.contains(&0) && kind != "spider" {
        bail!("{kind} sizes must be positive");
    }
    let one = || match nums.as_slice() {
        [n] => Ok(*n),
        _ => Err(anyhow!("{kind} takes one number, got {args:?}")),
    };
    let g = match kind {
        "path" => make_path(one()?),
        "star" => make_star(one()?),
        "complete" => make_complete(one()?),
        "cycle" => make_cycle(one()?)?,
        "empty" => make_empty(one()?),
        "complete-bipartite" | "bipartite" => match nums.as_slice() {
            [m, n] => make_complete_bipartite(*m, *n),
            _ => bail!("complete-bipartite takes two numbers, got {args:?}"),
        },
        "spider" => make_spider(&nums),
        _ => bail!("unknown graph kind {kind:?}"),
    };
    if g.order() == 0 {
        bail!("graph must have at least one vertex");
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        assert_eq!(parse_graph_spec("path:4").unwrap(), make_path(4));
        assert_eq!(parse_graph_spec("bipartite:2,3").unwrap(), make_complete_bipartite(2, 3));
        assert_eq!(parse_graph_spec("spider:2,1,1").unwrap().order(), 5);
        assert!(parse_graph_spec("cycle:2").is_err());
        assert!(parse_graph_spec("wheel:5").is_err());
        assert!(parse_graph_spec("path:x").is_err());
        assert!(parse_graph_spec("path:0").is_err());
        assert!(parse_graph_spec("bipartite:0,2").is_err());
    }

    #[test]
    fn bare_graph_and_document_both_parse() {
        let g: AnyGraph = serde_json::from_str(r#"{"n":2,"edges":[[0,1]]}"#).unwrap();
        assert!(matches!(g, AnyGraph::Graph(_)));
        let d: AnyGraph = serde_json::from_str(r#"{"graph":{"n":2,"edges":[[0,1]]}}"#).unwrap();
        assert!(matches!(d, AnyGraph::Doc(_)));
    }
}
