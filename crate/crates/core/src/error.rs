use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} is isolated; total domination is undefined")]
    IsolatedVertex(usize),
    #[error("empty vertex set")]
    EmptySet,
    #[error("graph has {n} vertices, limit is {max}")]
    TooLarge { n: usize, max: usize },
    #[error("more than {limit} optimal sets exist")]
    LimitExceeded { limit: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("not a minimum total dominating set: {0}")]
    NotMinimumTdSet(String),
    #[error("graph belongs to none of F1, F2, F3")]
    NotInFamilies,
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("graph6: byte {byte:#04x} at position {pos} outside 63..=126")]
    BadChar { byte: u8, pos: usize },
    #[error("graph6: expected {expected} bytes, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("graph6: size form for n > 62 is not supported")]
    UnsupportedSize,
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by malformed input text rather than by the
    /// mathematics or by I/O.
    pub fn is_format_error(&self) -> bool {
        match self {
            Error::BadChar { .. } | Error::BadLength { .. } | Error::UnsupportedSize => true,
            Error::AtLine { source, .. } => source.is_format_error(),
            _ => false,
        }
    }
}
