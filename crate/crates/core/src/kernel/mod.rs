//! The syntax of the theory: raw terms, telescopes, renamings,
//! substitutions and a bidirectional typechecker.

mod check;
mod context;
mod error;
mod term;

pub use check::{check, conv, infer, is_inferable, Checker, DEFAULT_MAX_LEVEL};
pub use context::{rename, subst, Context, Renaming, Substitution};
pub use error::TypeError;
pub use term::Term;
