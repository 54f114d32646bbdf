use thiserror::Error;

use crate::frobenius::HomomorphismReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("{what} size {requested} exceeds the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("index {index} is outside 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("letter {letter} is outside an alphabet of size {alphabet}")]
    LetterOutOfRange { letter: usize, alphabet: usize },

    #[error("operands belong to different rings: {0}")]
    RingMismatch(String),

    #[error("the target ring of a central map must be commutative")]
    NonCommutativeTarget,

    #[error("map `{map}` is not central: f(ab) != f(ba) at a = {left}, b = {right}")]
    NotCentral {
        map: String,
        left: String,
        right: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("pre-check `{}` failed at level {}", .0.label, .0.level)]
    PrecheckFailed(Box<HomomorphismReport>),
}
