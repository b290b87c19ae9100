//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by ideal arithmetic, socle computation, and the
/// combinatorial deciders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("operation requires a proper ideal, got the unit ideal")]
    UnitIdeal,

    #[error("a graph needs at least one edge to define an edge ideal")]
    NoEdges,

    #[error("variable index {index} out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {vertex}")]
    LoopEdge { vertex: usize },

    #[error("facets must be nonempty")]
    EmptyFacet,

    #[error("facet {{{inner}}} is contained in facet {{{outer}}}; facets must form an antichain")]
    ComparableFacets { inner: String, outer: String },

    #[error("at most 64 vertices are supported, got n = {n}")]
    TooManyVertices { n: usize },

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("exponent overflow during monomial multiplication")]
    ExponentOverflow,

    #[error("power exponent k must be at least 1")]
    ZeroPower,

    #[error("search box of {required} candidate monomials exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("socle strategies disagree; this is a bug: {detail}")]
    StrategyDisagreement { detail: String },

    #[error("{0}")]
    InvalidParameter(String),
}

impl Error {
    /// True for resource-limit errors, as opposed to bad inputs.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

/// Error produced while reading one of the text file formats.
///
/// `line` is 1-based; `None` means the problem concerns the file as a
/// whole (e.g. a facet list that is not an antichain).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    pub fn at(line: usize, message: impl Into<String>) -> Self {
        Self { line: Some(line), message: message.into() }
    }

    pub fn whole_file(message: impl Into<String>) -> Self {
        Self { line: None, message: message.into() }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}
