//! Crate-wide error type.

use crate::semantics::SemanticsKind;
use crate::verification::NeighborhoodFn;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A set or argument referenced an id outside the framework.
    ArgumentOutOfRange { id: usize, arg_count: usize },
    /// An exhaustive search was asked to exceed its configured bound.
    BoundExceeded { requested: usize, limit: usize },
    /// The semantics has no known kernel or criterion for this operation.
    UnsupportedSemantics { semantics: SemanticsKind, reason: &'static str },
    /// A verification class was built for a different neighborhood function
    /// than the criterion requires.
    ClassMismatch { expected: NeighborhoodFn, found: NeighborhoodFn },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ArgumentOutOfRange { id, arg_count } => {
                write!(f, "argument id {id} out of range for a framework with {arg_count} arguments")
            }
            Error::BoundExceeded { requested, limit } => {
                write!(f, "requested bound {requested} exceeds the supported limit {limit}")
            }
            Error::UnsupportedSemantics { semantics, reason } => {
                write!(f, "semantics `{semantics}` is not supported here: {reason}")
            }
            Error::ClassMismatch { expected, found } => {
                write!(f, "verification class mismatch: criterion needs `{expected}` but the class was built for `{found}`")
            }
        }
    }
}

impl core::error::Error for Error {}
