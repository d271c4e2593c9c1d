use std::collections::BTreeMap;

use ldk_core::Error;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Machine-readable result of one command, printed as JSON on stdout.
/// Keys appear in sorted order at every level.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: CommandEcho,
    pub inputs: BTreeMap<String, InputDigest>,
    pub outputs: Value,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommandEcho {
    pub args: Vec<String>,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputDigest {
    pub sha256: String,
    pub text: Option<String>,
}

impl InputDigest {
    /// Digest of an input, echoing the text itself when `echo` is set.
    pub fn of(text: &str, echo: bool) -> Self {
        InputDigest {
            sha256: hex::encode(Sha256::digest(text.as_bytes())),
            text: echo.then(|| text.to_owned()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    ParseError,
    ValidationError,
    AssertionFailure,
    LimitExceeded,
    IoError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::IoError => 1,
            Status::ParseError => 2,
            Status::ValidationError => 3,
            Status::AssertionFailure => 4,
            Status::LimitExceeded => 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Value>,
}

/// A failed command: exit status plus what to report.
#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub info: ErrorInfo,
}

impl Failure {
    pub fn new(status: Status, message: impl Into<String>) -> Self {
        Failure {
            status,
            info: ErrorInfo {
                message: message.into(),
                position: None,
                violations: Vec::new(),
            },
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse(_) | Error::Json(_) => Status::ParseError,
            Error::RepeatedVariable(_)
            | Error::InvalidGraph(_)
            | Error::MalformedGraph(_)
            | Error::EdgeIndexOutOfRange { .. }
            | Error::DimensionMismatch(_) => Status::ValidationError,
            Error::PathLimitExceeded { .. } | Error::CapExceeded { .. } | Error::Unsupported(_) => {
                Status::LimitExceeded
            }
            Error::AssertionFailure(_) => Status::AssertionFailure,
        };
        let mut failure = Failure::new(status, e.to_string());
        match &e {
            Error::Parse(p) => failure.info.position = Some(p.position),
            Error::InvalidGraph(vs) => {
                failure.info.violations = vs
                    .iter()
                    .map(|v| serde_json::to_value(v).expect("violations serialize"))
                    .collect();
            }
            _ => {}
        }
        failure
    }
}
