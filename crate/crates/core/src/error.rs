use thiserror::Error;

use crate::term::Term;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two collapse terms of the same family differ in their subscript and
    /// the cross-subscript monotonicity rule does not decide them.
    #[error("incomparable subscripts: {left:?} vs {right:?}")]
    IncomparableSubscript { left: Box<Term>, right: Box<Term> },
    #[error("enumeration pool exceeded the cap of {cap} candidates")]
    SizeLimitExceeded { cap: usize },
    #[error("result is at or above the ceiling w_{max_tower}(I+1)")]
    CeilingExceeded { max_tower: u32 },
    #[error("not a collapse term")]
    NotACollapse,
    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("sequence is not componentwise below at index {index}")]
    NotComponentwiseLess { index: usize },
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid term: {0}")]
    InvalidTerm(String),
    #[error("formula cannot be relativized: {0}")]
    NotRelativizable(String),
    #[error("truth of literal is undecidable at term level")]
    UndecidableLiteral,
    #[error("bound state shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not a regular-designated cardinal: {0}")]
    InvalidRegular(String),
    #[error("theory index is already at the floor ({0})")]
    TheoryFloor(i32),
    #[error("bound violated: {0}")]
    BoundViolated(String),
}

impl Error {
    pub(crate) fn incomparable(left: &Term, right: &Term) -> Self {
        Error::IncomparableSubscript {
            left: Box::new(left.clone()),
            right: Box::new(right.clone()),
        }
    }
}
