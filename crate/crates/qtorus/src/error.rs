use thiserror::Error;

/// Errors shared by all layers of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalar backends do not match: expected {expected}, got {got}")]
    BackendMismatch { expected: &'static str, got: &'static str },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible: {0}")]
    NonInvertible(String),
    #[error("lattice vector has length {got}, configured rank is {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("rank argument {r} out of range 1..={n}")]
    RankOutOfRange { r: usize, n: usize },
    #[error("vector is not supported on the first {r} coordinates")]
    SupportViolation { r: usize },
    #[error("vector is not lexicographically negative")]
    NotNegative,
    #[error("vector lies in the radical R_{r}")]
    InRadical { r: usize },
    #[error("search budget exceeded: scanned {scanned} candidates (cap {cap})")]
    SearchBudgetExceeded { scanned: usize, cap: usize },
    #[error("basis key kind not allowed here: {0}")]
    KindViolation(String),
    #[error("u_0/w_0 are not Heisenberg generators")]
    ZeroExponent,
    #[error("w_a requires a outside the radical")]
    WInRadical,
    #[error("element is not a weight vector")]
    NotWeightVector,
    #[error("lambda values must live in a decidable backend (rational or cyclotomic)")]
    NonDecidableLambda,
    #[error("all central charges vanish; theorem hypothesis unmet")]
    CentralChargeZero,
    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("operation is undefined for c/d basis keys")]
    UnsupportedKeys,
    #[error("bracket table produced a nonzero w-coefficient inside the radical (scalar backend bug?)")]
    InternalTableInconsistency,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
