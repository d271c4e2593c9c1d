use serde::{Deserialize, Serialize};

use super::{Edge, EdgeIndex, FacetId, PlaneGraph, VertexId};
use crate::error::{Error, Result};
use crate::term::{Term, Var};

/// Bijection between the variables of a term and edge indices: edge `i`
/// carries the `i`-th smallest variable. On a term over `x1..xn` this is the
/// identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeIndexMap {
    vars: Vec<Var>,
}

impl EdgeIndexMap {
    /// `vars` is sorted and deduplicated.
    pub fn new(vars: impl IntoIterator<Item = Var>) -> Self {
        let mut vars: Vec<Var> = vars.into_iter().collect();
        vars.sort_unstable();
        vars.dedup();
        EdgeIndexMap { vars }
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn edge_of(&self, v: Var) -> Option<EdgeIndex> {
        self.vars.binary_search(&v).ok().map(|i| i + 1)
    }

    pub fn var_of(&self, e: EdgeIndex) -> Option<Var> {
        e.checked_sub(1).and_then(|i| self.vars.get(i)).copied()
    }

    pub fn is_identity(&self) -> bool {
        self.vars.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }
}

/// Builds the graph of a repetition-free term: a variable is a single edge,
/// `r1 \/ r2` stacks the graph of `r2` on top of that of `r1`, and
/// `r1 /\ r2` places them side by side with `r1` on the left, sharing the
/// source and the sink.
pub fn graph_of_term(t: &Term) -> Result<(PlaneGraph, EdgeIndexMap)> {
    let map = EdgeIndexMap::new(t.leaves());
    let g = graph_of_term_indexed(t, &map)?;
    Ok((g, map))
}

/// As [`graph_of_term`] with a caller-supplied variable numbering, used when
/// both sides of an inequality must share edge indices.
pub fn graph_of_term_indexed(t: &Term, map: &EdgeIndexMap) -> Result<PlaneGraph> {
    if let Some((&v, _)) = t.counts().iter().find(|(_, &c)| c > 1) {
        return Err(Error::RepeatedVariable(v));
    }
    let leaves = t.leaves();
    if leaves.len() != map.len() {
        return Err(Error::DimensionMismatch(format!(
            "term has {} variables, index map has {}",
            leaves.len(),
            map.len()
        )));
    }
    let mut b = Builder {
        vertices: vec!["s".into(), "t".into()],
        facets: vec!["L".into(), "R".into()],
        edges: vec![None; map.len()],
        map,
    };
    b.place(t, VertexId(0), VertexId(1), FacetId(0), FacetId(1))?;
    let edges = b.edges.into_iter().map(|e| e.expect("every leaf placed")).collect();
    PlaneGraph::new(
        b.vertices,
        b.facets,
        edges,
        VertexId(0),
        VertexId(1),
        FacetId(0),
        FacetId(1),
    )
}

/// Places subterms between fixed endpoints and between fixed bounding
/// facets. This yields the same graph as gluing bottom-up and merging the
/// outer facets, without a union-find pass.
struct Builder<'a> {
    vertices: Vec<String>,
    facets: Vec<String>,
    edges: Vec<Option<Edge>>,
    map: &'a EdgeIndexMap,
}

impl Builder<'_> {
    fn place(
        &mut self,
        t: &Term,
        tail: VertexId,
        head: VertexId,
        left: FacetId,
        right: FacetId,
    ) -> Result<()> {
        match t {
            Term::Var(v) => {
                let index = self.map.edge_of(*v).ok_or_else(|| {
                    Error::DimensionMismatch(format!("x{v} missing from the index map"))
                })?;
                self.edges[index - 1] = Some(Edge {
                    tail,
                    head,
                    left,
                    right,
                });
            }
            Term::Join(lower, upper) => {
                let mid = VertexId(self.vertices.len());
                self.vertices.push(format!("v{}", mid.0 - 1));
                self.place(lower, tail, mid, left, right)?;
                self.place(upper, mid, head, left, right)?;
            }
            Term::Meet(l, r) => {
                let between = FacetId(self.facets.len());
                self.facets.push(format!("F{}", between.0 - 1));
                self.place(l, tail, head, left, between)?;
                self.place(r, tail, head, between, right)?;
            }
        }
        Ok(())
    }
}
