use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("negative degree in `{0}`")]
    NegativeDegree(String),
    #[error("sequence is not graphical")]
    NotGraphical,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("degree {degree} out of range for n = {n}")]
    DegreeOutOfRange { degree: usize, n: usize },
    #[error("parameter out of domain: {0}")]
    ParamOutOfDomain(String),
    #[error("sequence too short: n = {n}, condition needs n >= {min}")]
    SequenceTooShort { n: usize, min: usize },
    #[error("length n = {n} not admissible: {reason}")]
    LengthOutOfDomain { n: usize, reason: String },
    #[error("scale exceeded: n = {n} above limit {limit}")]
    ScaleExceeded { n: usize, limit: usize },
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("empty part: {0}")]
    EmptyPart(String),
    #[error("no extremal family for {0}")]
    NoWitness(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
