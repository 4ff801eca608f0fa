use thiserror::Error;

use crate::step_affine::CortegeDefect;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("input must be nonempty")]
    EmptyInput,
    #[error("malformed rational literal `{0}`")]
    BadRational(alloc::string::String),
    #[error("point is not a member of the body")]
    NotAMember,
    #[error("vertex index {index} out of range for {len} vertices")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("the empty set has no certificate")]
    EmptyFace,
    #[error("the whole polytope is not a proper face")]
    ImproperFace,
    #[error("vertex set does not span a face")]
    NotAFace,
    #[error("invalid cortege at level {index}: {defect:?}")]
    InvalidCortege { index: usize, defect: CortegeDefect },
    #[error("step-affine function has an empty zero set")]
    IrregularFunction,
    #[error("linear functional must be nonzero")]
    ZeroFunctional,
    #[error("disk configuration has irrational bitangents")]
    UnsupportedConfiguration,
    #[error("support value in this direction is irrational")]
    IrrationalSupport,
    #[error("the whole body is not a proper face")]
    WholeBodyNotProper,
    #[error("face is not part of this body")]
    UnknownFace,
    #[error("input exceeds the brute-force size guard ({0})")]
    SizeGuard(&'static str),
}
