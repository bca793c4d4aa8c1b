use std::fmt;

use thiserror::Error;

/// Position and context of a failed parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    /// Byte offset into the input, always `<= input.len()`.
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at byte {}: expected {}, found {}",
            self.offset, self.expected, self.found
        )
    }
}

/// Which of the generator conditions a candidate `e_I` failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorViolation {
    /// The leading set is not exactly `{e'_I}`.
    LeadingSet,
    /// The stabilizer of the candidate differs from that of `e'_I`.
    Stabilizer,
    /// The coefficient of `e'_I` is not a unit.
    NonUnit,
}

impl fmt::Display for GeneratorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorViolation::LeadingSet => "leading set is not the singleton {e'_I}",
            GeneratorViolation::Stabilizer => "stabilizer differs from that of e'_I",
            GeneratorViolation::NonUnit => "leading coefficient is not a unit",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid index set {members:?} for n = {n}: {reason}")]
    InvalidIndexSet {
        n: usize,
        members: Vec<usize>,
        reason: &'static str,
    },

    #[error("invalid generator: {0}")]
    InvalidGenerator(GeneratorViolation),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error {0}")]
    Parse(ParseDiagnostic),

    #[error("variable x{index} out of range for n = {n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
