//! Deciding lattice identities in submodule lattices of `Z_m`-modules by
//! reduction to transport problems on pairs of bipolar plane graphs.
//!
//! The pipeline for an inequality `p <= q` is: absorb missing variables,
//! split repeated ones until the inequality is 1-balanced, build the plane
//! graphs of both sides, and decide whether the resulting transport problem
//! has a solution over `Z_m` using the Smith normal form.

pub mod balance;
pub mod decision;
pub mod error;
pub mod int_serde;
pub mod linsolve;
pub mod pbg;
pub mod planegraph;
pub mod term;

pub use error::{Error, ParseError, Result};
pub use pbg::{GroupSpec, PbgProblem};
pub use planegraph::PlaneGraph;
pub use term::{parse_identity, parse_term, Identity, Term, Var};
