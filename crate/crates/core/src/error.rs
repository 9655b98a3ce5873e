use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("homomorphism undefined at this point")]
    HomomorphismUndefined,

    #[error("image not a near-regular homomorphism")]
    NotNearRegularImage,

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("pivot entry at ({row}, {col}) is zero")]
    ZeroPivot { row: String, col: String },

    #[error("scaling must use a group element")]
    NotGroupElement,

    #[error("entry `{0}` is not in the carrier ring of the partial field")]
    OutsideCarrier(String),

    #[error("enumeration bound exceeded ({size} elements, bound {bound})")]
    EnumerationBound { size: usize, bound: usize },

    #[error("blocks do not match: {0}")]
    BlockMismatch(String),

    #[error("not a modular flat: {0}")]
    NotModular(String),

    #[error("input is not a P-matrix: {0}")]
    NotPMatrix(String),

    #[error("restrictions to the common ground set differ")]
    RestrictionMismatch,

    #[error("common restriction is not a clique matroid")]
    NotCliqueMatroid,

    #[error("not scaling-equivalent: {0}")]
    NotScalingEquivalent(String),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("modular short-circuit verdicts disagree on flat {0}")]
    InconsistentModularity(String),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("certificate failed: {0}")]
    Certificate(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
