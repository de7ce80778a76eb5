use thiserror::Error;

/// Errors raised by the exact engine, the game and the poset builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("interval endpoint {0} is a root; perturb the endpoint by a small rational and retry")]
    EndpointIsRoot(String),

    #[error("invalid interval: lower endpoint {lo} exceeds upper endpoint {hi}")]
    InvalidInterval { lo: String, hi: String },

    #[error("enclosure does not isolate exactly one root (Sturm count {0})")]
    NotIsolating(usize),

    #[error("parameters must be strictly positive: {0}")]
    NonPositive(&'static str),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("repeated eigenvalue at x = {0}; use the recurrence path")]
    RepeatedEigenvalue(String),

    #[error("illegal firing: node {node} value is {sign}, not positive")]
    IllegalFiring { node: &'static str, sign: &'static str },

    #[error("initial pair must be nonzero and dominant")]
    NotDominant,

    #[error("the sign of a node value depends on the choice of (a, b)")]
    UndeterminedSign,

    #[error("budget must be positive")]
    ZeroBudget,

    #[error("no games terminate for this game graph (pq >= B)")]
    DivergentRegime,

    #[error("pq is not a largest root r_k of a sign-alternating polynomial")]
    NotALargestRoot,

    #[error("{0}")]
    Unsupported(String),

    #[error("posets require n > alpha >= 1 (got n = {n}, alpha = {alpha})")]
    PosetParams { n: u32, alpha: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("number fields of different defining polynomials cannot be mixed")]
    FieldMismatch,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
