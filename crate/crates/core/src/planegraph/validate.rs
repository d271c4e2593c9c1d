use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{EdgeIndex, PlaneGraph, VertexId};

/// A broken invariant of an admissible plane graph. Names refer to vertex
/// and facet ids as given in the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    TooFewVertices { count: usize },
    Cycle,
    SourceMismatch { declared: String, found: Vec<String> },
    SinkMismatch { declared: String, found: Vec<String> },
    Disconnected,
    Euler { vertices: usize, edges: usize, facets: usize },
    OuterFacetsCoincide,
    SameFacetOnBothSides { edge: EdgeIndex },
    UnusedFacet { facet: String },
    OuterBoundary { facet: String, reason: String },
    InnerBoundary { facet: String, reason: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewVertices { count } => {
                write!(f, "a bipolar graph needs at least 2 vertices, found {count}")
            }
            Violation::Cycle => f.write_str("graph contains a directed cycle"),
            Violation::SourceMismatch { declared, found } => write!(
                f,
                "declared source '{declared}' but vertices without incoming edges are {found:?}"
            ),
            Violation::SinkMismatch { declared, found } => write!(
                f,
                "declared sink '{declared}' but vertices without outgoing edges are {found:?}"
            ),
            Violation::Disconnected => f.write_str("graph is not connected"),
            Violation::Euler {
                vertices,
                edges,
                facets,
            } => write!(
                f,
                "Euler check failed: {vertices} - {edges} + {facets} != 3"
            ),
            Violation::OuterFacetsCoincide => f.write_str("the two outer facets are the same"),
            Violation::SameFacetOnBothSides { edge } => {
                write!(f, "edge {edge} has the same facet on both sides")
            }
            Violation::UnusedFacet { facet } => write!(f, "facet '{facet}' borders no edge"),
            Violation::OuterBoundary { facet, reason } => {
                write!(f, "outer facet '{facet}': {reason}")
            }
            Violation::InnerBoundary { facet, reason } => {
                write!(f, "inner facet '{facet}': {reason}")
            }
        }
    }
}

pub(super) fn validate(g: &PlaneGraph) -> Vec<Violation> {
    let mut out = Vec::new();
    let nv = g.num_vertices();
    if nv < 2 {
        out.push(Violation::TooFewVertices { count: nv });
    }

    let mut indeg = vec![0usize; nv];
    let mut outdeg = vec![0usize; nv];
    for (_, e) in g.edges() {
        outdeg[e.tail.0] += 1;
        indeg[e.head.0] += 1;
    }
    if !is_acyclic(g, &indeg) {
        out.push(Violation::Cycle);
    }
    let sources: Vec<VertexId> = g.vertices().filter(|v| indeg[v.0] == 0).collect();
    if sources != [g.source()] {
        out.push(Violation::SourceMismatch {
            declared: g.vertex_name(g.source()).to_owned(),
            found: names(g, &sources),
        });
    }
    let sinks: Vec<VertexId> = g.vertices().filter(|v| outdeg[v.0] == 0).collect();
    if sinks != [g.sink()] {
        out.push(Violation::SinkMismatch {
            declared: g.vertex_name(g.sink()).to_owned(),
            found: names(g, &sinks),
        });
    }
    if !is_connected(g) {
        out.push(Violation::Disconnected);
    }
    if g.euler_characteristic() != 3 {
        out.push(Violation::Euler {
            vertices: nv,
            edges: g.num_edges(),
            facets: g.num_facets(),
        });
    }

    let (ol, or) = (g.outer_left(), g.outer_right());
    if ol == or {
        out.push(Violation::OuterFacetsCoincide);
    }
    let mut used = vec![false; g.num_facets()];
    for (i, e) in g.edges() {
        used[e.left.0] = true;
        used[e.right.0] = true;
        if e.left == e.right {
            out.push(Violation::SameFacetOnBothSides { edge: i });
        }
    }
    for f in g.facets() {
        if !used[f.0] {
            out.push(Violation::UnusedFacet {
                facet: g.facet_name(f).to_owned(),
            });
        }
    }

    for (outer, along, forbidden) in [
        (ol, g.right_boundary(ol), g.left_boundary(ol)),
        (or, g.left_boundary(or), g.right_boundary(or)),
    ] {
        let facet = g.facet_name(outer).to_owned();
        if !forbidden.is_empty() {
            out.push(Violation::OuterBoundary {
                facet: facet.clone(),
                reason: format!("lies on the wrong side of edges {forbidden:?}"),
            });
        }
        match path_ends(g, &along) {
            Ok((first, last)) if first == g.source() && last == g.sink() => {}
            Ok(_) => out.push(Violation::OuterBoundary {
                facet,
                reason: "boundary path does not run from source to sink".into(),
            }),
            Err(reason) => out.push(Violation::OuterBoundary { facet, reason }),
        }
    }

    for f in g.inner_facets() {
        let facet = g.facet_name(f).to_owned();
        let left = path_ends(g, &g.left_boundary(f));
        let right = path_ends(g, &g.right_boundary(f));
        match (left, right) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(_), Ok(_)) => out.push(Violation::InnerBoundary {
                facet,
                reason: "left and right boundary paths have different ends".into(),
            }),
            (Err(reason), _) => out.push(Violation::InnerBoundary {
                facet,
                reason: format!("left boundary: {reason}"),
            }),
            (_, Err(reason)) => out.push(Violation::InnerBoundary {
                facet,
                reason: format!("right boundary: {reason}"),
            }),
        }
    }
    out
}

fn names(g: &PlaneGraph, vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(|&v| g.vertex_name(v).to_owned()).collect()
}

fn is_acyclic(g: &PlaneGraph, indeg: &[usize]) -> bool {
    let mut indeg = indeg.to_vec();
    let mut queue: VecDeque<VertexId> = g.vertices().filter(|v| indeg[v.0] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop_front() {
        seen += 1;
        for &i in g.out_edges(v) {
            let h = g.edge(i).head;
            indeg[h.0] -= 1;
            if indeg[h.0] == 0 {
                queue.push_back(h);
            }
        }
    }
    seen == g.num_vertices()
}

fn is_connected(g: &PlaneGraph) -> bool {
    let n = g.num_vertices();
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for (_, e) in g.edges() {
        adj[e.tail.0].push(e.head.0);
        adj[e.head.0].push(e.tail.0);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// If `edges` can be ordered into one directed path, returns its first and
/// last vertex.
fn path_ends(g: &PlaneGraph, edges: &[EdgeIndex]) -> Result<(VertexId, VertexId), String> {
    if edges.is_empty() {
        return Err("boundary is empty".into());
    }
    let mut next = std::collections::HashMap::new();
    let mut heads = std::collections::HashSet::new();
    for &i in edges {
        let e = g.edge(i);
        if next.insert(e.tail, i).is_some() {
            return Err(format!(
                "two boundary edges leave vertex '{}'",
                g.vertex_name(e.tail)
            ));
        }
        if !heads.insert(e.head) {
            return Err(format!(
                "two boundary edges enter vertex '{}'",
                g.vertex_name(e.head)
            ));
        }
    }
    let starts: Vec<VertexId> = next.keys().filter(|v| !heads.contains(v)).copied().collect();
    let [start] = starts[..] else {
        return Err("boundary edges do not form a single path".into());
    };
    let mut v = start;
    let mut walked = 0;
    while let Some(&i) = next.get(&v) {
        walked += 1;
        v = g.edge(i).head;
        if walked > edges.len() {
            break;
        }
    }
    if walked != edges.len() {
        return Err("boundary edges do not form a single path".into());
    }
    Ok((start, v))
}
