//! Upward bipolar plane graphs described combinatorially.
//!
//! No geometry is stored. Each edge carries the facet on its left and the
//! facet on its right (looking from tail to head), and the unbounded region
//! is split into two outer facets by a curve joining the source and sink.
//! The left outer facet sits to the left of the leftmost source-to-sink
//! path, the right outer facet to the right of the rightmost one.

mod build;
mod io;
mod validate;

pub use build::{graph_of_term, graph_of_term_indexed, EdgeIndexMap};
pub use io::{dot_export, DotOptions, EdgeRecord, GraphFile, NodeId};
pub use validate::Violation;

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Default cap on the number of enumerated maximal paths.
pub const DEFAULT_PATH_LIMIT: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetId(pub usize);

/// Edges are numbered `1..=n`.
pub type EdgeIndex = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
    pub left: FacetId,
    pub right: FacetId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    vertex_names: Vec<String>,
    facet_names: Vec<String>,
    edges: Vec<Edge>,
    source: VertexId,
    sink: VertexId,
    outer_left: FacetId,
    outer_right: FacetId,
    /// Outgoing edges per vertex, ascending by index.
    out_edges: Vec<Vec<EdgeIndex>>,
}

impl PlaneGraph {
    /// Assembles a graph after checking that every reference is in range and
    /// names are unique. The planar invariants are checked by
    /// [`PlaneGraph::validate`], not here.
    pub fn new(
        vertex_names: Vec<String>,
        facet_names: Vec<String>,
        edges: Vec<Edge>,
        source: VertexId,
        sink: VertexId,
        outer_left: FacetId,
        outer_right: FacetId,
    ) -> Result<Self> {
        let nv = vertex_names.len();
        let nf = facet_names.len();
        check_unique("vertex", &vertex_names)?;
        check_unique("facet", &facet_names)?;
        let bad_vertex = |v: VertexId| v.0 >= nv;
        let bad_facet = |f: FacetId| f.0 >= nf;
        if bad_vertex(source) || bad_vertex(sink) {
            return Err(Error::MalformedGraph("source or sink out of range".into()));
        }
        if bad_facet(outer_left) || bad_facet(outer_right) {
            return Err(Error::MalformedGraph("outer facet out of range".into()));
        }
        for (i, e) in edges.iter().enumerate() {
            if bad_vertex(e.tail) || bad_vertex(e.head) || bad_facet(e.left) || bad_facet(e.right) {
                return Err(Error::MalformedGraph(format!(
                    "edge {} refers to an unknown vertex or facet",
                    i + 1
                )));
            }
        }
        let mut out_edges = vec![Vec::new(); nv];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.tail.0].push(i + 1);
        }
        Ok(PlaneGraph {
            vertex_names,
            facet_names,
            edges,
            source,
            sink,
            outer_left,
            outer_right,
            out_edges,
        })
    }

    /// Like [`PlaneGraph::new`], then rejects graphs with violations.
    pub fn new_validated(
        vertex_names: Vec<String>,
        facet_names: Vec<String>,
        edges: Vec<Edge>,
        source: VertexId,
        sink: VertexId,
        outer_left: FacetId,
        outer_right: FacetId,
    ) -> Result<Self> {
        let g = Self::new(
            vertex_names,
            facet_names,
            edges,
            source,
            sink,
            outer_left,
            outer_right,
        )?;
        g.ensure_valid()?;
        Ok(g)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_facets(&self) -> usize {
        self.facet_names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.num_vertices()).map(VertexId)
    }

    pub fn facets(&self) -> impl Iterator<Item = FacetId> {
        (0..self.num_facets()).map(FacetId)
    }

    /// Facets other than the two outer ones, ascending by id.
    pub fn inner_facets(&self) -> impl Iterator<Item = FacetId> + '_ {
        self.facets()
            .filter(move |&f| f != self.outer_left && f != self.outer_right)
    }

    /// # Panics
    /// Panics unless `1 <= index <= n`.
    pub fn edge(&self, index: EdgeIndex) -> &Edge {
        &self.edges[index - 1]
    }

    pub fn try_edge(&self, index: EdgeIndex) -> Result<&Edge> {
        if index == 0 || index > self.edges.len() {
            return Err(Error::EdgeIndexOutOfRange {
                index,
                n: self.edges.len(),
            });
        }
        Ok(&self.edges[index - 1])
    }

    /// `(index, edge)` pairs in index order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeIndex, &Edge)> {
        self.edges.iter().enumerate().map(|(i, e)| (i + 1, e))
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeIndex] {
        &self.out_edges[v.0]
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn sink(&self) -> VertexId {
        self.sink
    }

    pub fn outer_left(&self) -> FacetId {
        self.outer_left
    }

    pub fn outer_right(&self) -> FacetId {
        self.outer_right
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.0]
    }

    pub fn facet_name(&self, f: FacetId) -> &str {
        &self.facet_names[f.0]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_names.iter().position(|n| n == name).map(VertexId)
    }

    /// `V - E + F`; equals 3 for admissible graphs since the unbounded
    /// region counts twice.
    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_facets() as i64
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate::validate(self)
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(violations))
        }
    }

    /// Facets become vertices and each edge `e` becomes an edge from the
    /// facet on its left to the facet on its right. In the dual, the facet
    /// left of `e*` is `head(e)` and the one on its right is `tail(e)`; the
    /// dual runs from the left outer facet to the right outer facet and its
    /// left and right outer facets are the sink and the source. With these
    /// labels the double dual is exactly the transpose.
    pub fn dual(&self) -> PlaneGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                tail: VertexId(e.left.0),
                head: VertexId(e.right.0),
                left: FacetId(e.head.0),
                right: FacetId(e.tail.0),
            })
            .collect();
        PlaneGraph::new(
            self.facet_names.clone(),
            self.vertex_names.clone(),
            edges,
            VertexId(self.outer_left.0),
            VertexId(self.outer_right.0),
            FacetId(self.sink.0),
            FacetId(self.source.0),
        )
        .expect("dual of a well-formed graph is well-formed")
    }

    /// Reverses every edge, swapping the roles of left and right.
    pub fn transpose(&self) -> PlaneGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                tail: e.head,
                head: e.tail,
                left: e.right,
                right: e.left,
            })
            .collect();
        PlaneGraph::new(
            self.vertex_names.clone(),
            self.facet_names.clone(),
            edges,
            self.sink,
            self.source,
            self.outer_right,
            self.outer_left,
        )
        .expect("transpose of a well-formed graph is well-formed")
    }

    /// All directed source-to-sink paths as edge-index sequences, in
    /// depth-first order with outgoing edges tried by ascending index.
    /// Assumes an acyclic graph.
    pub fn maximal_paths(&self, limit: usize) -> Result<Vec<Vec<EdgeIndex>>> {
        let mut paths = Vec::new();
        let mut stack: Vec<EdgeIndex> = Vec::new();
        self.paths_from(self.source, &mut stack, &mut paths, limit)?;
        Ok(paths)
    }

    fn paths_from(
        &self,
        v: VertexId,
        stack: &mut Vec<EdgeIndex>,
        paths: &mut Vec<Vec<EdgeIndex>>,
        limit: usize,
    ) -> Result<()> {
        if v == self.sink {
            if paths.len() == limit {
                return Err(Error::PathLimitExceeded {
                    limit,
                    vertices: self.num_vertices(),
                    edges: self.num_edges(),
                });
            }
            paths.push(stack.clone());
            return Ok(());
        }
        for &i in &self.out_edges[v.0] {
            stack.push(i);
            self.paths_from(self.edge(i).head, stack, paths, limit)?;
            stack.pop();
        }
        Ok(())
    }

    /// The first path in [`PlaneGraph::maximal_paths`] order, found by
    /// always following the lowest-index outgoing edge.
    pub fn first_path(&self) -> Vec<EdgeIndex> {
        let mut path = Vec::new();
        let mut v = self.source;
        while v != self.sink {
            let Some(&i) = self.out_edges[v.0].first() else {
                break;
            };
            path.push(i);
            v = self.edge(i).head;
            if path.len() > self.num_edges() {
                break;
            }
        }
        path
    }

    /// Edges having `f` on their right, i.e. the left side of `f`'s
    /// boundary, ascending by index.
    pub fn left_boundary(&self, f: FacetId) -> Vec<EdgeIndex> {
        self.edges()
            .filter(|(_, e)| e.right == f)
            .map(|(i, _)| i)
            .collect()
    }

    /// Edges having `f` on their left.
    pub fn right_boundary(&self, f: FacetId) -> Vec<EdgeIndex> {
        self.edges()
            .filter(|(_, e)| e.left == f)
            .map(|(i, _)| i)
            .collect()
    }

    /// True iff sending edge `i` of `self` to edge `i` of `other` induces a
    /// bijection of vertices preserving tails and heads.
    pub fn iso_check(&self, other: &PlaneGraph) -> bool {
        if self.num_edges() != other.num_edges() || self.num_vertices() != other.num_vertices() {
            return false;
        }
        let mut forward: HashMap<VertexId, VertexId> = HashMap::new();
        let mut backward: HashMap<VertexId, VertexId> = HashMap::new();
        let mut bind = |a: VertexId, b: VertexId| -> bool {
            match (forward.get(&a), backward.get(&b)) {
                (None, None) => {
                    forward.insert(a, b);
                    backward.insert(b, a);
                    true
                }
                (Some(&x), Some(&y)) => x == b && y == a,
                _ => false,
            }
        };
        for (e1, e2) in self.edges.iter().zip(&other.edges) {
            if !bind(e1.tail, e2.tail) || !bind(e1.head, e2.head) {
                return false;
            }
        }
        forward.len() == self.num_vertices()
    }

    /// One-line size summary.
    pub fn stats(&self) -> GraphStats {
        GraphStats {
            vertices: self.num_vertices(),
            edges: self.num_edges(),
            facets: self.num_facets(),
            inner_facets: self.inner_facets().count(),
            euler: self.euler_characteristic(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
    pub facets: usize,
    pub inner_facets: usize,
    pub euler: i64,
}

impl std::fmt::Display for GraphStats {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} vertices, {} edges, {} facets",
            self.vertices, self.edges, self.facets
        )
    }
}

fn check_unique(kind: &str, names: &[String]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(Error::MalformedGraph(format!("duplicate {kind} id '{n}'")));
        }
    }
    Ok(())
}

pub fn dual_graph(g: &PlaneGraph) -> Result<PlaneGraph> {
    g.ensure_valid()?;
    Ok(g.dual())
}

pub fn transpose_graph(g: &PlaneGraph) -> PlaneGraph {
    g.transpose()
}

pub fn maximal_paths(g: &PlaneGraph, limit: usize) -> Result<Vec<Vec<EdgeIndex>>> {
    g.maximal_paths(limit)
}

pub fn validate(g: &PlaneGraph) -> Vec<Violation> {
    g.validate()
}

pub fn iso_check(g1: &PlaneGraph, g2: &PlaneGraph) -> bool {
    g1.iso_check(g2)
}
