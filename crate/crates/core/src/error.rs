use thiserror::Error;

/// Errors produced by the combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inner partition ({inner}) is not contained in outer partition ({outer})")]
    Containment { outer: String, inner: String },
    #[error("operation requires a nonempty diagram")]
    EmptyDiagram,
    #[error("operation requires a nonempty partition")]
    EmptyPartition,
    #[error("class is already the minimal staircase class")]
    AtMinimum,
    #[error("no delta-preserving cocover exists for {class}")]
    TheoremViolation { class: String },
    #[error("pair does not differ by exactly one box: {0}")]
    MalformedPair(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("independent computations disagree for {what} at n = {n}: {left} vs {right}")]
    OracleMismatch { what: &'static str, n: usize, left: u64, right: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
