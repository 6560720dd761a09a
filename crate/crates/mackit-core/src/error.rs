use thiserror::Error;

/// Errors surfaced by fallible operations. Programmer errors (out-of-range
/// operator indices, mismatched variable counts) panic instead, like slice
/// indexing does.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("exact division left a nonzero remainder: {0}")]
    NotDivisible(String),

    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("binomial index out of range: k={k} > n={n}")]
    BinomialRange { n: usize, k: usize },

    #[error("degree {degree} exceeds variable count {nvars} required for {context}")]
    DegreeTooHigh {
        degree: u32,
        nvars: usize,
        context: &'static str,
    },

    #[error("partition has {len} parts but only {nvars} variables are available")]
    TooManyParts { len: usize, nvars: usize },

    #[error("basis {0:?} is not supported by this operation")]
    UnsupportedBasis(crate::symfun::Basis),

    #[error("cell ({row},{col}) lies outside the diagram")]
    CellOutsideDiagram { row: usize, col: usize },

    #[error("{mu:?} is not reachable from {lam:?} by adding a vertical strip")]
    NotAdmissible { lam: String, mu: String },

    #[error("index set {sub:?} is not contained in {sup:?}")]
    NotASubset { sub: String, sup: String },

    #[error("linear system is singular or inconsistent")]
    SingularSystem,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown verification suite '{0}'")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
