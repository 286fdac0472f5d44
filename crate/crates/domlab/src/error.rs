use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("loop edge ({0}, {0}) is not allowed")]
    LoopEdge(usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EdgeOutOfRange(usize, usize, usize),
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("graph order {0} exceeds the supported maximum of {1}")]
    OrderTooLarge(usize, usize),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("every minimum dominating set lacks an external private neighbor (theorem violation)")]
    TheoremViolation,
}

pub type Result<T> = std::result::Result<T, Error>;
