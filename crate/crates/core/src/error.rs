use thiserror::Error;

/// Errors raised by the library.
///
/// Several variants (`NonDivisible`, `NotTriangular`, `MalformedPath`) can only
/// surface through an internal inconsistency or a bad input module; they are
/// reported rather than panicking so the CLI can name the failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{numerator} is not divisible by {denominator} in Z[q, q^-1]")]
    NonDivisible { numerator: String, denominator: String },

    #[error("quantum integer requested for negative n = {0}")]
    NegativeQuantumInteger(i64),

    #[error("weight {mu} is not in the Weyl orbit of {lambda}")]
    NotInOrbit { lambda: String, mu: String },

    #[error("malformed path: {0}")]
    MalformedPath(String),

    #[error("block is not triangular: {0}")]
    NotTriangular(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("module relation violated: {0}")]
    RelationViolation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("lectof peeling did not terminate on {0}")]
    NonTerminating(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
