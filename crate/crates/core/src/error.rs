use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by a series whose constant term {0:e} is not a unit")]
    DivisionByNonUnit(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("closed form has a pole at z = 1")]
    Pole,

    #[error("arctan branch point hit at z = {re} + {im}i")]
    BranchPoint { re: f64, im: f64 },

    #[error("invalid dilatation spec: {0}")]
    InvalidSpec(String),

    #[error("map is not normalized: {0}")]
    Normalization(String),

    #[error("series order {order} too low: {reason}")]
    InsufficientOrder { order: usize, reason: String },

    #[error("malformed map file: {0}")]
    Format(String),
}
