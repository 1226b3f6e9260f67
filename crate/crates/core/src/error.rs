use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {n} outside supported range {min}..={max}")]
    VertexCount { n: usize, min: usize, max: usize },

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("loop at vertex {0} is not allowed")]
    Loop(usize),

    #[error("edge ({0}, {1}) already present")]
    EdgeExists(usize, usize),

    #[error("empty graph sequence")]
    EmptySequence,

    #[error("malformed graph6 string: {0}")]
    Graph6(String),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("unknown verifier `{0}`")]
    UnknownVerifier(String),
}
