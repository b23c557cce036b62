use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{token}` as a rational: {reason}")]
pub struct ParseRationalError {
    pub token: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseRationalError),

    /// The quadratic component has `a2 = 0`, so it has no vertex.
    #[error("q2 is not a parabola (a2 = 0)")]
    DegenerateParabola,

    #[error("degenerate interval: left end {left} is not below right end {right}")]
    DegenerateInterval { left: String, right: String },

    /// An enclosure did not contain exactly one root.
    #[error("lost root: {0}")]
    LostRoot(String),

    #[error("invalid request: {0}")]
    InvalidRequest(String),

    /// Two independent computations disagreed.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
