use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: i64, n: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(u16, u16),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid numbering: {0}")]
    InvalidNumbering(String),

    #[error("cannot standardize: {0}")]
    Standardize(String),

    #[error("no exchange pi({row},{prefix}) on a numbering with {rows} rows")]
    InvalidExchange { row: usize, prefix: usize, rows: usize },

    #[error("vector is not in the span of the given basis")]
    NotInSpan,

    #[error("vector lies in the rational span of the basis but has a non-integral expansion")]
    NonIntegerSolution,

    #[error("straightening did not terminate within {0} term steps")]
    StraighteningStalled(usize),

    #[error("n = {n} exceeds the oracle size bound {bound}")]
    SizeBound { n: usize, bound: usize },

    #[error("d1 * d2 is not zero")]
    ComplexNotExact,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("embedding does not map the graph onto a subgraph: {0}")]
    NotASubgraph(String),

    #[error("graph is planar; no Kuratowski subdivision exists")]
    PlanarInput,

    #[error("lifted certificate failed verification: {0}")]
    LiftFailed(String),

    #[error("malformed certificate: {0}")]
    Certificate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Errors caused by what the caller supplied rather than by a failed
    /// computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::VertexOutOfRange { .. }
                | Error::Graph6(_)
                | Error::NotAnEdge(..)
                | Error::InvalidShape(_)
                | Error::InvalidNumbering(_)
                | Error::DimensionMismatch(_)
                | Error::SizeBound { .. }
                | Error::PlanarInput
                | Error::Certificate(_)
        )
    }
}
