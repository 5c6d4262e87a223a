use thiserror::Error;

use super::term::Term;
use crate::surface::show;

/// Typechecking failures. Terms are stored together with the length of the
/// context they live in so they can be printed with consistent names.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("variable {index} is out of scope in a context of length {len}")]
    Scope { index: usize, len: usize },
    #[error("type mismatch: expected {}, found {}", show(*depth, expected), show(*depth, actual))]
    Mismatch {
        depth: usize,
        expected: Term,
        actual: Term,
    },
    #[error("{} is not a Π-type", show(*depth, ty))]
    NotPi { depth: usize, ty: Term },
    #[error("{} is not a lifted type", show(*depth, ty))]
    NotLift { depth: usize, ty: Term },
    #[error("{} is not a universe", show(*depth, ty))]
    NotUniverse { depth: usize, ty: Term },
    #[error("{} is not a type", show(*depth, term))]
    NotAType { depth: usize, term: Term },
    #[error("{} is a type, not a term", show(*depth, term))]
    TypeInTermPosition { depth: usize, term: Term },
    #[error("cannot infer a type for {}; lambdas are only checkable", show(*depth, term))]
    NotInferable { depth: usize, term: Term },
    #[error("universe level {level} is not below the maximum level {max}")]
    LevelTooLarge { level: usize, max: usize },
    #[error("ill-formed context morphism: {0}")]
    BadMorphism(String),
}
