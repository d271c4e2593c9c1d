use std::fmt;

use thiserror::Error;

use crate::planegraph::Violation;

/// Syntax error at a 0-based character offset.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("variable x{0} occurs more than once; graph construction needs a repetition-free term")]
    RepeatedVariable(u32),

    #[error("invalid plane graph: {}", ViolationList(.0))]
    InvalidGraph(Vec<Violation>),

    #[error("malformed graph description: {0}")]
    MalformedGraph(String),

    #[error("more than {limit} maximal paths in a graph with {vertices} vertices and {edges} edges")]
    PathLimitExceeded {
        limit: usize,
        vertices: usize,
        edges: usize,
    },

    #[error("enumeration of {modulus}^{n} vectors exceeds the cap of {cap}")]
    CapExceeded { modulus: u64, n: usize, cap: u64 },

    #[error("edge index {index} out of range 1..={n}")]
    EdgeIndexOutOfRange { index: usize, n: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("consistency check failed: {0}")]
    AssertionFailure(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

struct ViolationList<'a>(&'a [Violation]);

impl fmt::Display for ViolationList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
