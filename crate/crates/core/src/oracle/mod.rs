//! An independent reference implementation used to cross-check the
//! evaluators.
//!
//! Nothing here calls into [`crate::nbe`] or the kernel's conversion test.
//! Terms are normalized by contracting redexes one at a time,
//! leftmost-outermost, and the β-normal result is then η-expanded by
//! following its type. Typing for the expansion is recomputed here from
//! the rules, with conversion of types decided by this same procedure.
//!
//! The generators in [`gen`] produce well-typed terms, normal forms,
//! contexts and renamings from a seed.

mod eta;
pub mod gen;
mod reduce;
mod typing;

use thiserror::Error;

use crate::kernel::{Context, Term, DEFAULT_MAX_LEVEL};
use crate::nbe::Nf;

pub use gen::{Fragment, GenBudget, GenError, Generator};
pub use reduce::{contract, step, ReductionTrace, Rule, Step};

pub const DEFAULT_FUEL: usize = 10_000;

/// Environment variable overriding [`DEFAULT_FUEL`].
pub const FUEL_VAR: &str = "SCONEKIT_FUEL";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("reduction did not terminate within {fuel} steps")]
    FuelExhausted { fuel: usize },
    #[error("ill-typed input: {0}")]
    IllTyped(String),
}

/// Reduction-based normalizer and checker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub fuel: usize,
    pub max_level: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            fuel: DEFAULT_FUEL,
            max_level: DEFAULT_MAX_LEVEL,
        }
    }
}

impl Oracle {
    pub fn new(fuel: usize) -> Oracle {
        Oracle {
            fuel: fuel.max(1),
            ..Oracle::default()
        }
    }

    /// Reads the fuel from `SCONEKIT_FUEL`, falling back to the default.
    pub fn from_env() -> Oracle {
        let fuel = std::env::var(FUEL_VAR)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_FUEL);
        Oracle::new(fuel)
    }

    pub fn with_max_level(self, max_level: usize) -> Oracle {
        Oracle { max_level, ..self }
    }

    /// Reduces to β-normal form, recording each contraction.
    pub fn reduce(&self, t: &Term) -> ReductionTrace {
        reduce::reduce(t, self.fuel)
    }

    /// The β-normal form, or an error if the fuel runs out.
    pub fn beta_normal(&self, t: &Term) -> Result<Term, OracleError> {
        let trace = self.reduce(t);
        if trace.fuel_exhausted {
            Err(OracleError::FuelExhausted { fuel: self.fuel })
        } else {
            Ok(trace.result)
        }
    }

    /// Synthesizes a β-normal type.
    pub fn infer(&self, ctx: &Context, t: &Term) -> Result<Term, OracleError> {
        typing::Typing::new(self).infer(ctx, t)
    }

    pub fn check(&self, ctx: &Context, t: &Term, ty: &Term) -> Result<(), OracleError> {
        typing::Typing::new(self).check(ctx, t, ty)
    }

    /// The universe level of a type.
    pub fn level(&self, ctx: &Context, ty: &Term) -> Result<usize, OracleError> {
        typing::Typing::new(self).level(ctx, ty)
    }

    pub fn check_context(&self, ctx: &Context) -> Result<(), OracleError> {
        for k in 0..ctx.len() {
            self.level(&ctx.prefix(k), &ctx.entries()[k])?;
        }
        Ok(())
    }

    /// β-normal η-long form of a type assumed well formed.
    pub fn type_nf(&self, ctx: &Context, ty: &Term) -> Result<Nf, OracleError> {
        let ty = self.beta_normal(ty)?;
        eta::Expander::new(self, ctx)?.expand_type(&ty)
    }

    /// β-normal η-long form of a term assumed to have type `ty`.
    pub fn nf_unchecked(&self, ctx: &Context, ty: &Term, t: &Term) -> Result<Nf, OracleError> {
        let ty = self.beta_normal(ty)?;
        let t = self.beta_normal(t)?;
        eta::Expander::new(self, ctx)?.expand(&ty, &t)
    }

    /// Checks the input, then normalizes.
    pub fn norm_nf(&self, ctx: &Context, ty: &Term, t: &Term) -> Result<Nf, OracleError> {
        self.check_context(ctx)?;
        self.level(ctx, ty)?;
        self.check(ctx, t, ty)?;
        self.nf_unchecked(ctx, ty, t)
    }

    pub fn norm(&self, ctx: &Context, ty: &Term, t: &Term) -> Result<Term, OracleError> {
        Ok(self.norm_nf(ctx, ty, t)?.embed())
    }

    pub fn conv(&self, ctx: &Context, ty: &Term, a: &Term, b: &Term) -> Result<bool, OracleError> {
        Ok(self.norm_nf(ctx, ty, a)? == self.norm_nf(ctx, ty, b)?)
    }

    pub fn types_equal(&self, ctx: &Context, a: &Term, b: &Term) -> Result<bool, OracleError> {
        Ok(self.type_nf(ctx, a)? == self.type_nf(ctx, b)?)
    }
}

/// Normalizes `t : ty` in `ctx` by reduction and η-expansion.
pub fn oracle_norm(ctx: &Context, ty: &Term, t: &Term, fuel: usize) -> Result<Term, OracleError> {
    Oracle::new(fuel).norm(ctx, ty, t)
}

/// Compares oracle normal forms.
pub fn oracle_conv(
    ctx: &Context,
    ty: &Term,
    a: &Term,
    b: &Term,
    fuel: usize,
) -> Result<bool, OracleError> {
    Oracle::new(fuel).conv(ctx, ty, a, b)
}
