use thiserror::Error;

use crate::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),

    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),

    #[error("edge id {0} is already in use")]
    DuplicateEdgeId(EdgeId),

    #[error("instance contains an empty edge")]
    EmptyEdge,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid generator parameters: {0}")]
    Generator(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("variant `{variant}` cannot handle {found} input")]
    WrongInput {
        variant: &'static str,
        found: &'static str,
    },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
