//! JSON graph files and DOT export.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Edge, FacetId, PlaneGraph, VertexId};
use crate::error::{Error, Result};

/// Vertex and facet ids in files may be strings or integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NodeId {
    Int(i64),
    Str(String),
}

impl NodeId {
    fn name(&self) -> String {
        match self {
            NodeId::Int(i) => i.to_string(),
            NodeId::Str(s) => s.clone(),
        }
    }
}

impl From<&str> for NodeId {
    fn from(s: &str) -> Self {
        NodeId::Str(s.to_owned())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: usize,
    pub tail: NodeId,
    pub head: NodeId,
    pub left: NodeId,
    pub right: NodeId,
}

/// On-disk graph description. Facets are implied by the edge records and
/// the two outer facets; edge ids must be exactly `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<NodeId>,
    pub edges: Vec<EdgeRecord>,
    pub source: NodeId,
    pub sink: NodeId,
    pub outer_left: NodeId,
    pub outer_right: NodeId,
}

impl GraphFile {
    /// Resolves ids. Facets are numbered in order of first mention: the left
    /// outer facet, the right outer facet, then edge records by id.
    pub fn to_graph(&self) -> Result<PlaneGraph> {
        let vertex_names: Vec<String> = self.vertices.iter().map(NodeId::name).collect();
        let vertex_ids: HashMap<String, VertexId> = vertex_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), VertexId(i)))
            .collect();
        let vertex = |id: &NodeId| -> Result<VertexId> {
            vertex_ids
                .get(&id.name())
                .copied()
                .ok_or_else(|| Error::MalformedGraph(format!("unknown vertex '{}'", id.name())))
        };

        let mut records: Vec<&EdgeRecord> = self.edges.iter().collect();
        records.sort_by_key(|r| r.id);
        for (k, r) in records.iter().enumerate() {
            if r.id != k + 1 {
                return Err(Error::MalformedGraph(format!(
                    "edge ids must be exactly 1..={}",
                    records.len()
                )));
            }
        }

        let mut facet_names: Vec<String> = Vec::new();
        let mut facet_ids: HashMap<String, FacetId> = HashMap::new();
        let mut facet = |id: &NodeId| -> FacetId {
            let name = id.name();
            *facet_ids.entry(name.clone()).or_insert_with(|| {
                facet_names.push(name);
                FacetId(facet_names.len() - 1)
            })
        };
        let outer_left = facet(&self.outer_left);
        let outer_right = facet(&self.outer_right);
        let mut edges = Vec::with_capacity(records.len());
        for r in records {
            edges.push(Edge {
                tail: vertex(&r.tail)?,
                head: vertex(&r.head)?,
                left: facet(&r.left),
                right: facet(&r.right),
            });
        }
        PlaneGraph::new(
            vertex_names,
            facet_names,
            edges,
            vertex(&self.source)?,
            vertex(&self.sink)?,
            outer_left,
            outer_right,
        )
    }

    pub fn from_graph(g: &PlaneGraph) -> Self {
        let v = |x: VertexId| NodeId::from(g.vertex_name(x));
        let f = |x: FacetId| NodeId::from(g.facet_name(x));
        GraphFile {
            vertices: g.vertices().map(v).collect(),
            edges: g
                .edges()
                .map(|(id, e)| EdgeRecord {
                    id,
                    tail: v(e.tail),
                    head: v(e.head),
                    left: f(e.left),
                    right: f(e.right),
                })
                .collect(),
            source: v(g.source()),
            sink: v(g.sink()),
            outer_left: f(g.outer_left()),
            outer_right: f(g.outer_right()),
        }
    }
}

impl PlaneGraph {
    /// Parses a graph file without running the validator.
    pub fn from_json(text: &str) -> Result<PlaneGraph> {
        let file: GraphFile = serde_json::from_str(text)?;
        file.to_graph()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GraphFile::from_graph(self)).expect("graph serializes")
    }
}

#[derive(Clone, Debug, Default)]
pub struct DotOptions {
    /// Graph name; `G` when unset.
    pub name: Option<String>,
    /// Append `left|right` facet ids to edge labels.
    pub facet_labels: bool,
}

/// Graphviz description drawn bottom to top: the source on the lowest rank,
/// the sink on the highest, each edge labelled by its index.
pub fn dot_export(g: &PlaneGraph, options: &DotOptions) -> String {
    let mut out = String::new();
    let name = options.name.as_deref().unwrap_or("G");
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for v in g.vertices() {
        writeln!(out, "  {};", quote(g.vertex_name(v))).unwrap();
    }
    writeln!(out, "  {{ rank=min; {}; }}", quote(g.vertex_name(g.source()))).unwrap();
    writeln!(out, "  {{ rank=max; {}; }}", quote(g.vertex_name(g.sink()))).unwrap();
    for (i, e) in g.edges() {
        let label = if options.facet_labels {
            format!("{i} ({}|{})", g.facet_name(e.left), g.facet_name(e.right))
        } else {
            i.to_string()
        };
        writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(g.vertex_name(e.tail)),
            quote(g.vertex_name(e.head)),
            quote(&label)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
