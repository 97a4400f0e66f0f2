use serde::{Deserialize, Serialize};

use super::{EdgeLabelledGraph, MarkedGraph};
use crate::error::{input, Error, Result};

/// JSON form of a graph. `markings[i]` is the vertex carrying marking
/// `i + 1`; `labels[e]`, when present, is the label of edge `e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub genus: u32,
    pub vertex_genera: Vec<u32>,
    pub edges: Vec<[usize; 2]>,
    pub markings: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<usize>>,
}

impl From<&MarkedGraph> for GraphJson {
    fn from(g: &MarkedGraph) -> Self {
        GraphJson {
            genus: g.genus(),
            vertex_genera: g.vertex_genera().to_vec(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            markings: g.markings().to_vec(),
            labels: None,
        }
    }
}

impl From<&EdgeLabelledGraph> for GraphJson {
    fn from(g: &EdgeLabelledGraph) -> Self {
        GraphJson {
            labels: Some((0..g.edge_count()).collect()),
            ..GraphJson::from(g.graph())
        }
    }
}

impl Serialize for MarkedGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl Serialize for EdgeLabelledGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<MarkedGraph> {
        let g = MarkedGraph::new(
            self.vertex_genera.clone(),
            self.edges.iter().map(|e| (e[0], e[1])).collect(),
            self.markings.clone(),
        )?;
        if g.genus() != self.genus {
            return input(format!(
                "declared genus {} but the graph has genus {}",
                self.genus,
                g.genus()
            ));
        }
        Ok(g)
    }

    pub fn to_labelled(&self) -> Result<EdgeLabelledGraph> {
        let g = self.to_graph()?;
        match &self.labels {
            Some(l) => EdgeLabelledGraph::new(&g, l),
            None => input("graph has no edge labels"),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Input(format!("bad graph JSON: {e}")))
    }
}

/// Graphviz description; vertices show their genus and 1-based markings,
/// edges show their label when `labelled`.
pub fn graph_to_dot(g: &MarkedGraph, name: &str, labelled: bool) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.vertex_count() {
        let marks: Vec<String> = g.markings_at(v).iter().map(|m| (m + 1).to_string()).collect();
        out.push_str(&format!(
            "  v{v} [label=\"h={}; {{{}}}\"];\n",
            g.vertex_genera()[v],
            marks.join(",")
        ));
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if labelled {
            out.push_str(&format!("  v{u} -- v{v} [label=\"{e}\"];\n"));
        } else {
            out.push_str(&format!("  v{u} -- v{v};\n"));
        }
    }
    out.push_str("}\n");
    out
}
