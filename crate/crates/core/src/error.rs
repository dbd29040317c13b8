use thiserror::Error;

use crate::groebner::GroebnerBasis;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("not a subspace: vector {index} of the smaller space lies outside the larger one")]
    NotASubspace { index: usize },

    #[error("the zero element has no tip")]
    ZeroElement,

    #[error("paths are not parallel: {0}")]
    NotParallel(String),

    #[error("paths are not composable: {0}")]
    NotComposable(String),

    #[error("relation `{0}` has a support path of length below 2")]
    ShortRelation(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("completion stopped: a new basis element has tip length {tip_length} > {max_tip_length}")]
    Incomplete {
        tip_length: usize,
        max_tip_length: usize,
        partial: Box<GroebnerBasis>,
    },

    #[error("more than {cap} nontip paths; the algebra is (possibly) infinite-dimensional")]
    InfiniteDimensional { cap: usize },

    #[error("invalid Brauer graph: {0}")]
    InvalidBrauerGraph(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
