//! Paired-bipolar-graphs problems.
//!
//! A problem pairs a flow graph `G` with a control graph `H` whose edges are
//! matched by index. A capacity vector `a` solves the problem when, for every
//! maximal path of `H`, using exactly the matching edges of `G` at full
//! capacity moves `b` from the source of `G` to its sink and leaves every
//! other vertex unchanged. Values live in the cyclic group `Z_m` (`m = 0`
//! meaning the integers).

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::planegraph::{
    graph_of_term_indexed, EdgeIndex, EdgeIndexMap, GraphFile, PlaneGraph, VertexId,
};
use crate::term::Identity;

/// The group `Z_m`; `m = 0` is the integers and `m = 1` the trivial group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupSpec {
    pub modulus: u64,
}

impl GroupSpec {
    pub const INTEGERS: GroupSpec = GroupSpec { modulus: 0 };

    pub fn new(modulus: u64) -> Self {
        GroupSpec { modulus }
    }

    pub fn modulus_big(&self) -> BigInt {
        BigInt::from(self.modulus)
    }

    /// Canonical representative: `0..m` for `m >= 1`, unchanged for `m = 0`.
    pub fn reduce(&self, x: &BigInt) -> BigInt {
        if self.modulus == 0 {
            x.clone()
        } else {
            x.mod_floor(&self.modulus_big())
        }
    }

    pub fn is_zero(&self, x: &BigInt) -> bool {
        self.reduce(x).is_zero()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            0 => f.write_str("Z"),
            m => write!(f, "Z_{m}"),
        }
    }
}

/// A group element per vertex of one fixed graph, indexed by [`VertexId`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentSystem {
    group: GroupSpec,
    values: Vec<BigInt>,
}

impl ContentSystem {
    pub fn zero(g: &PlaneGraph, group: GroupSpec) -> Self {
        ContentSystem {
            group,
            values: vec![BigInt::zero(); g.num_vertices()],
        }
    }

    /// Values are reduced on entry.
    pub fn from_values(group: GroupSpec, values: Vec<BigInt>) -> Self {
        let values = values.iter().map(|x| group.reduce(x)).collect();
        ContentSystem { group, values }
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn get(&self, v: VertexId) -> &BigInt {
        &self.values[v.0]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    fn add_at(&mut self, v: VertexId, x: &BigInt) {
        let sum = &self.values[v.0] + x;
        self.values[v.0] = self.group.reduce(&sum);
    }

    /// Pointwise sum.
    pub fn plus(&self, other: &ContentSystem) -> ContentSystem {
        self.zip_with(other, |a, b| a + b)
    }

    /// Pointwise difference.
    pub fn minus(&self, other: &ContentSystem) -> ContentSystem {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &ContentSystem, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        assert_eq!(self.values.len(), other.values.len(), "systems of different graphs");
        assert_eq!(self.group, other.group, "systems over different groups");
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| self.group.reduce(&f(a, b)))
            .collect();
        ContentSystem {
            group: self.group,
            values,
        }
    }

    /// Sum of all contents, reduced.
    pub fn total(&self) -> BigInt {
        let sum: BigInt = self.values.iter().sum();
        self.group.reduce(&sum)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// `(vertex name, content)` pairs in vertex order.
    pub fn named(&self, g: &PlaneGraph) -> Vec<(String, BigInt)> {
        g.vertices()
            .map(|v| (g.vertex_name(v).to_owned(), self.values[v.0].clone()))
            .collect()
    }
}

/// `b` at the source, zero elsewhere.
pub fn init_content(g: &PlaneGraph, group: GroupSpec, b: &BigInt) -> ContentSystem {
    let mut s = ContentSystem::zero(g, group);
    s.add_at(g.source(), b);
    s
}

/// `b` at the sink, zero elsewhere.
pub fn term_content(g: &PlaneGraph, group: GroupSpec, b: &BigInt) -> ContentSystem {
    let mut s = ContentSystem::zero(g, group);
    s.add_at(g.sink(), b);
    s
}

/// `-b` at the source, `b` at the sink, zero elsewhere.
pub fn transp_content(g: &PlaneGraph, group: GroupSpec, b: &BigInt) -> ContentSystem {
    let mut s = ContentSystem::zero(g, group);
    s.add_at(g.source(), &-b);
    s.add_at(g.sink(), b);
    s
}

fn check_len(g: &PlaneGraph, a: &[BigInt]) -> Result<()> {
    if a.len() != g.num_edges() {
        return Err(Error::DimensionMismatch(format!(
            "capacity vector has {} entries, graph has {} edges",
            a.len(),
            g.num_edges()
        )));
    }
    Ok(())
}

/// `-a_j` at the tail of edge `j`, `a_j` at its head.
pub fn edge_effect(
    g: &PlaneGraph,
    group: GroupSpec,
    a: &[BigInt],
    j: EdgeIndex,
) -> Result<ContentSystem> {
    check_len(g, a)?;
    let e = g.try_edge(j)?;
    let mut s = ContentSystem::zero(g, group);
    s.add_at(e.tail, &-&a[j - 1]);
    s.add_at(e.head, &a[j - 1]);
    Ok(s)
}

/// Sum of the edge effects over the set `edges` (duplicates ignored).
pub fn set_effect(
    g: &PlaneGraph,
    group: GroupSpec,
    a: &[BigInt],
    edges: &[EdgeIndex],
) -> Result<ContentSystem> {
    check_len(g, a)?;
    let mut s = ContentSystem::zero(g, group);
    for &j in edges.iter().collect::<BTreeSet<_>>() {
        let e = g.try_edge(j)?;
        s.add_at(e.tail, &-&a[j - 1]);
        s.add_at(e.head, &a[j - 1]);
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbgProblem {
    flow: PlaneGraph,
    control: PlaneGraph,
    group: GroupSpec,
    b: BigInt,
}

impl PbgProblem {
    /// Both graphs must pass validation and have the same number of edges.
    pub fn new(flow: PlaneGraph, control: PlaneGraph, group: GroupSpec, b: BigInt) -> Result<Self> {
        flow.ensure_valid()?;
        control.ensure_valid()?;
        if flow.num_edges() != control.num_edges() {
            return Err(Error::DimensionMismatch(format!(
                "flow graph has {} edges, control graph has {}",
                flow.num_edges(),
                control.num_edges()
            )));
        }
        let b = group.reduce(&b);
        Ok(PbgProblem {
            flow,
            control,
            group,
            b,
        })
    }

    /// The problem `(G_p, G_q)` of a 1-balanced inequality `p <= q`, with
    /// variables numbered by ascending index.
    pub fn from_balanced_identity(
        id: &Identity,
        group: GroupSpec,
        b: BigInt,
    ) -> Result<(PbgProblem, EdgeIndexMap)> {
        if !id.is_one_balanced() {
            return Err(Error::Unsupported(format!("'{id}' is not 1-balanced")));
        }
        let map = EdgeIndexMap::new(id.variables());
        let flow = graph_of_term_indexed(&id.lhs, &map)?;
        let control = graph_of_term_indexed(&id.rhs, &map)?;
        Ok((PbgProblem::new(flow, control, group, b)?, map))
    }

    pub fn n(&self) -> usize {
        self.flow.num_edges()
    }

    pub fn flow(&self) -> &PlaneGraph {
        &self.flow
    }

    pub fn control(&self) -> &PlaneGraph {
        &self.control
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// Swaps the two graphs and dualizes both; indices are kept.
    pub fn dual(&self) -> PbgProblem {
        PbgProblem {
            flow: self.control.dual(),
            control: self.flow.dual(),
            group: self.group,
            b: self.b.clone(),
        }
    }

    /// Reverses every edge of both graphs.
    pub fn transpose(&self) -> PbgProblem {
        PbgProblem {
            flow: self.flow.transpose(),
            control: self.control.transpose(),
            group: self.group,
            b: self.b.clone(),
        }
    }

    /// Checks the transport condition along every maximal control path.
    pub fn is_solution(&self, a: &[BigInt], path_limit: usize) -> Result<bool> {
        check_len(&self.flow, a)?;
        let target = transp_content(&self.flow, self.group, &self.b);
        for path in self.control.maximal_paths(path_limit)? {
            if set_effect(&self.flow, self.group, a, &path)? != target {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn from_json(text: &str) -> Result<PbgProblem> {
        let file: ProblemFile = serde_json::from_str(text)?;
        file.to_problem()
    }

    pub fn to_file(&self) -> ProblemFile {
        ProblemFile {
            flow: GraphFile::from_graph(&self.flow),
            control: GraphFile::from_graph(&self.control),
            modulus: self.group.modulus,
            b: self.b.clone(),
        }
    }
}

pub fn dual_problem(p: &PbgProblem) -> PbgProblem {
    p.dual()
}

pub fn transpose_problem(p: &PbgProblem) -> PbgProblem {
    p.transpose()
}

pub fn is_solution(p: &PbgProblem, a: &[BigInt], path_limit: usize) -> Result<bool> {
    p.is_solution(a, path_limit)
}

/// On-disk problem description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemFile {
    pub flow: GraphFile,
    pub control: GraphFile,
    pub modulus: u64,
    #[serde(with = "crate::int_serde::scalar")]
    pub b: BigInt,
}

impl ProblemFile {
    pub fn to_problem(&self) -> Result<PbgProblem> {
        PbgProblem::new(
            self.flow.to_graph()?,
            self.control.to_graph()?,
            GroupSpec::new(self.modulus),
            self.b.clone(),
        )
    }
}

/// Renders a vector of group elements as `(a1, a2, ...)`.
pub fn format_vector(a: &[BigInt]) -> String {
    let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}
