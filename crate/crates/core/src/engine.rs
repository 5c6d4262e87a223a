//! Interchangeable back ends, registered by name.
//!
//! A [`Normalizer`] turns a typed term into its normal form; a
//! [`BoolDecider`] decides a closed boolean. The [`EngineRegistry`] holds
//! boxed instances of both, keyed by name.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::canonicity::{self, CanonError};
use crate::kernel::{Checker, Context, Term, TypeError};
use crate::model::{self, Environment};
use crate::nbe::{self, Nf};
use crate::oracle::{Oracle, OracleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error("expected a closed term")]
    Open,
    #[error("unknown {kind} `{name}` (available: {})", available.join(", "))]
    Unknown {
        kind: &'static str,
        name: String,
        available: Vec<String>,
    },
}

pub trait Normalizer: Send + Sync {
    fn name(&self) -> &'static str;

    fn normalize(&self, ctx: &Context, ty: &Term, t: &Term) -> Result<Nf, EngineError>;

    fn normalize_type(&self, ctx: &Context, ty: &Term) -> Result<Nf, EngineError>;

    fn conv(&self, ctx: &Context, ty: &Term, a: &Term, b: &Term) -> Result<bool, EngineError> {
        Ok(self.normalize(ctx, ty, a)? == self.normalize(ctx, ty, b)?)
    }
}

pub trait BoolDecider: Send + Sync {
    fn name(&self) -> &'static str;

    fn decide(&self, b: &Term) -> Result<bool, EngineError>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct NbeNormalizer {
    pub checker: Checker,
}

impl Normalizer for NbeNormalizer {
    fn name(&self) -> &'static str {
        "nbe"
    }

    fn normalize(&self, ctx: &Context, ty: &Term, t: &Term) -> Result<Nf, EngineError> {
        Ok(nbe::norm_with(&self.checker, ctx, ty, t)?)
    }

    fn normalize_type(&self, ctx: &Context, ty: &Term) -> Result<Nf, EngineError> {
        self.checker.check_context(ctx)?;
        self.checker.is_type(ctx, ty)?;
        Ok(nbe::norm_type_unchecked(ctx, ty))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct OracleNormalizer {
    pub oracle: Oracle,
}

impl Normalizer for OracleNormalizer {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn normalize(&self, ctx: &Context, ty: &Term, t: &Term) -> Result<Nf, EngineError> {
        Ok(self.oracle.norm_nf(ctx, ty, t)?)
    }

    fn normalize_type(&self, ctx: &Context, ty: &Term) -> Result<Nf, EngineError> {
        self.oracle.check_context(ctx)?;
        self.oracle.level(ctx, ty)?;
        Ok(self.oracle.type_nf(ctx, ty)?)
    }
}

/// Decides by the glued canonicity evaluator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CanonicityDecider {
    pub checker: Checker,
}

impl BoolDecider for CanonicityDecider {
    fn name(&self) -> &'static str {
        "canonicity"
    }

    fn decide(&self, b: &Term) -> Result<bool, EngineError> {
        Ok(canonicity::canon_with(&self.checker, b)?.as_bool())
    }
}

/// Decides by evaluation into the standard model.
#[derive(Debug, Clone, Copy, Default)]
pub struct StandardDecider {
    pub checker: Checker,
}

impl BoolDecider for StandardDecider {
    fn name(&self) -> &'static str {
        "standard"
    }

    fn decide(&self, b: &Term) -> Result<bool, EngineError> {
        if !b.is_closed() {
            return Err(EngineError::Open);
        }
        self.checker.check(&Context::empty(), b, &Term::Bool)?;
        let m = model::standard_model();
        let v = model::eval(&m, &Environment::empty(), b);
        Ok(v.as_bool().expect("a closed boolean evaluates to a boolean"))
    }
}

/// Decides by normalizing with any [`Normalizer`].
pub struct NormalizingDecider<N> {
    name: &'static str,
    normalizer: N,
}

impl<N: Normalizer> NormalizingDecider<N> {
    pub fn new(name: &'static str, normalizer: N) -> Self {
        NormalizingDecider { name, normalizer }
    }
}

impl<N: Normalizer> BoolDecider for NormalizingDecider<N> {
    fn name(&self) -> &'static str {
        self.name
    }

    fn decide(&self, b: &Term) -> Result<bool, EngineError> {
        if !b.is_closed() {
            return Err(EngineError::Open);
        }
        match self.normalizer.normalize(&Context::empty(), &Term::Bool, b)? {
            Nf::True => Ok(true),
            Nf::False => Ok(false),
            nf => unreachable!("closed boolean normalized to {nf:?}"),
        }
    }
}

pub struct EngineRegistry {
    normalizers: BTreeMap<String, Box<dyn Normalizer>>,
    deciders: BTreeMap<String, Box<dyn BoolDecider>>,
}

impl EngineRegistry {
    pub fn new() -> Self {
        EngineRegistry {
            normalizers: BTreeMap::new(),
            deciders: BTreeMap::new(),
        }
    }

    /// All built-in engines, with the oracle's fuel taken from the environment.
    pub fn standard() -> Self {
        Self::with_oracle(Oracle::from_env())
    }

    pub fn with_oracle(oracle: Oracle) -> Self {
        let checker = Checker::with_max_level(oracle.max_level);
        let mut r = Self::new();
        r.register_normalizer(NbeNormalizer { checker });
        r.register_normalizer(OracleNormalizer { oracle });
        r.register_decider(CanonicityDecider { checker });
        r.register_decider(StandardDecider { checker });
        r.register_decider(NormalizingDecider::new("nbe", NbeNormalizer { checker }));
        r.register_decider(NormalizingDecider::new("oracle", OracleNormalizer { oracle }));
        r
    }

    /// Replaces any normalizer already registered under the same name.
    pub fn register_normalizer<N: Normalizer + 'static>(&mut self, n: N) {
        self.normalizers.insert(n.name().to_string(), Box::new(n));
    }

    pub fn register_decider<D: BoolDecider + 'static>(&mut self, d: D) {
        self.deciders.insert(d.name().to_string(), Box::new(d));
    }

    pub fn normalizer(&self, name: &str) -> Result<&dyn Normalizer, EngineError> {
        self.normalizers.get(name).map(|b| &**b).ok_or_else(|| EngineError::Unknown {
            kind: "normalizer",
            name: name.to_string(),
            available: self.normalizer_names(),
        })
    }

    pub fn decider(&self, name: &str) -> Result<&dyn BoolDecider, EngineError> {
        self.deciders.get(name).map(|b| &**b).ok_or_else(|| EngineError::Unknown {
            kind: "decider",
            name: name.to_string(),
            available: self.decider_names(),
        })
    }

    pub fn normalizer_names(&self) -> Vec<String> {
        self.normalizers.keys().cloned().collect()
    }

    pub fn decider_names(&self) -> Vec<String> {
        self.deciders.keys().cloned().collect()
    }
}

impl Default for EngineRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn neg_true() -> Term {
        Term::app(Term::negation(), Term::True)
    }

    #[test]
    fn every_decider_agrees_on_negation() {
        let r = EngineRegistry::with_oracle(Oracle::default());
        for name in r.decider_names() {
            assert_eq!(r.decider(&name).unwrap().decide(&neg_true()), Ok(false), "{name}");
        }
    }

    #[test]
    fn normalizers_agree_on_eta() {
        let r = EngineRegistry::with_oracle(Oracle::default());
        let ty = Term::arrow(Term::Bool, Term::Bool);
        let ctx = Context::empty().extend(ty.clone());
        let a = r.normalizer("nbe").unwrap().normalize(&ctx, &ty, &Term::Var(0)).unwrap();
        let b = r.normalizer("oracle").unwrap().normalize(&ctx, &ty, &Term::Var(0)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_names_list_alternatives() {
        let r = EngineRegistry::with_oracle(Oracle::default());
        let err = r.normalizer("magic").err().unwrap();
        assert_eq!(err.to_string(), "unknown normalizer `magic` (available: nbe, oracle)");
    }

    #[test]
    fn registration_replaces_by_name() {
        struct Always;
        impl BoolDecider for Always {
            fn name(&self) -> &'static str {
                "standard"
            }
            fn decide(&self, _: &Term) -> Result<bool, EngineError> {
                Ok(true)
            }
        }
        let mut r = EngineRegistry::with_oracle(Oracle::default());
        r.register_decider(Always);
        assert_eq!(r.decider("standard").unwrap().decide(&neg_true()), Ok(true));
        assert_eq!(r.decider_names().len(), 4);
    }

    #[test]
    fn open_terms_are_rejected() {
        let r = EngineRegistry::with_oracle(Oracle::default());
        assert_eq!(r.decider("standard").unwrap().decide(&Term::Var(0)), Err(EngineError::Open));
    }
}
