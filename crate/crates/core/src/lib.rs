//! A workbench for the metatheory of a small dependent type theory with
//! Π-types, booleans, a hierarchy of Coquand universes and explicit lifting.
//!
//! - [`kernel`]: syntax, renamings, substitutions and typechecking.
//! - [`model`]: the higher-order model interface, a generic evaluator and the
//!   standard set-theoretic model.
//! - [`canonicity`]: the glued evaluator deciding closed booleans.
//! - [`nbe`]: normalization by evaluation over Kripke-indexed values.
//! - [`parametricity`]: the unary parametricity translation.
//! - [`oracle`]: a reduction-based normalizer and well-typed generators,
//!   independent of the evaluators above.
//! - [`engine`]: named registries of normalizers and boolean deciders.
//! - [`surface`]: the named surface syntax.

pub mod canonicity;
pub mod engine;
pub mod kernel;
pub mod model;
pub mod nbe;
pub mod oracle;
pub mod parametricity;
pub mod surface;
