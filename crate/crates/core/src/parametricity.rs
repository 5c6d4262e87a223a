//! Unary parametricity for the fragment with Π, universes and lifts.
//!
//! A source context `Γ` of length `n` is translated to a context of length
//! `2n` in which every variable `x` is followed by its witness `x•`: source
//! index `i` becomes `2i + 1` for `x` and `2i` for `x•`. Each type `A`
//! becomes a predicate `⟪A⟫`, a type in the doubled context extended with a
//! subject of type `A`; each term `a : A` becomes a witness `⟦a⟧ : ⟪A⟫[a]`.
//!
//! ```text
//! ⟪U i⟫       = El s -> U i
//! ⟪El c⟫      = El (⟦c⟧ s)
//! ⟪(x : A) -> B⟫ = (x : A) -> (x• : ⟪A⟫[x]) -> ⟪B⟫[s x]
//! ⟪Lift A⟫    = Lift ⟪A⟫[unlift s]
//!
//! ⟦x⟧ = x•     ⟦fun x => b⟧ = fun x x• => ⟦b⟧     ⟦f a⟧ = ⟦f⟧ a ⟦a⟧
//! ⟦code A⟧ = fun s => code ⟪A⟫    ⟦lift a⟧ = lift ⟦a⟧    ⟦unlift a⟧ = unlift ⟦a⟧
//! ```
//!
//! [`predicate`] and [`witness`] follow these clauses on raw syntax. On a
//! redex such as `(fun x => b) a` the output has a lambda in head position,
//! which the checker cannot synthesize a type for, so [`translate`] and
//! [`translate_open`] translate normal forms instead; the results are
//! convertible.

use thiserror::Error;

use crate::kernel::{Checker, Context, Substitution, Term, TypeError};
use crate::nbe;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("`{0}` is outside the Π/universe fragment")]
    Unsupported(&'static str),
    #[error("expected a closed term")]
    Open,
    #[error(transparent)]
    Type(#[from] TypeError),
}

/// The translation of a closed term `a : A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamResult {
    /// `⟪A⟫`, a type with one free variable (the subject, of type `A`).
    pub predicate_type: Term,
    /// `⟦a⟧`, a closed term of type `⟪A⟫[a]`.
    pub witness: Term,
}

impl ParamResult {
    /// The predicate as a closed Π over its subject.
    pub fn predicate_pi(&self, subject_ty: &Term) -> Term {
        Term::pi(subject_ty.clone(), self.predicate_type.clone())
    }

    /// `⟪A⟫[a]`, the type the witness checks against.
    pub fn witness_type(&self, subject: &Term) -> Term {
        self.predicate_type.instantiate(subject)
    }
}

/// The source term read in the doubled context.
pub fn dup(t: &Term) -> Term {
    remap(t, |i, d| Term::Var(2 * i + 1 + d))
}

fn remap(t: &Term, mut f: impl FnMut(usize, usize) -> Term) -> Term {
    let r: Result<Term, std::convert::Infallible> = t.map_free_vars(&mut |i, d| Ok(f(i, d)));
    r.unwrap()
}

/// `⟪A⟫` for a type in a source context, in the doubled context extended
/// by the subject.
pub fn predicate(ty: &Term) -> Result<Term, ParamError> {
    match ty {
        Term::U(i) => Ok(Term::arrow(Term::el(Term::Var(0)), Term::U(*i))),
        Term::El(c) => Ok(Term::el(Term::app(witness(c)?.shift(1), Term::Var(0)))),
        Term::Pi(a, b) => {
            let pa = predicate(a)?;
            let pb = predicate(b)?;
            // [2n, s] ⊢ ⟪A⟫ to [2n, s, x] with the subject read as x
            let pa = remap(&pa, |i, d| Term::Var(if i == 0 { d } else { i + 1 + d }));
            // [2n, x, x•, s'] ⊢ ⟪B⟫ to [2n, s, x, x•] with s' read as s x
            let pb = remap(&pb, |i, d| match i {
                0 => Term::app(Term::Var(2 + d), Term::Var(1 + d)),
                1 => Term::Var(d),
                2 => Term::Var(1 + d),
                _ => Term::Var(i + d),
            });
            Ok(Term::pi(dup(a).shift(1), Term::pi(pa, pb)))
        }
        Term::Lift(a) => {
            let pa = predicate(a)?;
            let pa = remap(&pa, |i, d| {
                if i == 0 {
                    Term::unlift_tm(Term::Var(d))
                } else {
                    Term::Var(i + d)
                }
            });
            Ok(Term::lift(pa))
        }
        Term::Bool => Err(ParamError::Unsupported("Bool")),
        _ => Err(ParamError::Unsupported("a non-type in type position")),
    }
}

/// `⟦a⟧` for a term in a source context, in the doubled context.
pub fn witness(t: &Term) -> Result<Term, ParamError> {
    match t {
        Term::Var(i) => Ok(Term::Var(2 * i)),
        Term::Lam(b) => Ok(Term::lam(Term::lam(witness(b)?))),
        Term::App(f, a) => Ok(Term::app(Term::app(witness(f)?, dup(a)), witness(a)?)),
        Term::Code(a) => Ok(Term::lam(Term::code(predicate(a)?))),
        Term::LiftTm(x) => Ok(Term::lift_tm(witness(x)?)),
        Term::UnliftTm(x) => Ok(Term::unlift_tm(witness(x)?)),
        Term::True | Term::False => Err(ParamError::Unsupported("true/false")),
        Term::ElimBool { .. } => Err(ParamError::Unsupported("elim")),
        _ => Err(ParamError::Unsupported("a type in term position")),
    }
}

/// The doubled context `x₀ : A₀, x₀• : ⟪A₀⟫[x₀], …`.
pub fn translate_context(ctx: &Context) -> Result<Context, ParamError> {
    let mut out = Context::empty();
    for entry in ctx.entries() {
        out = out.extend(dup(entry));
        out = out.extend(predicate(entry)?);
    }
    Ok(out)
}

/// Translates a substitution `Δ → Γ` to one between the doubled contexts,
/// sending `x` to `s(x)` and `x•` to `⟦s(x)⟧`.
pub fn translate_substitution(s: &Substitution) -> Result<Substitution, ParamError> {
    let mut terms = Vec::with_capacity(2 * s.terms().len());
    for t in s.terms() {
        terms.push(witness(t)?);
        terms.push(dup(t));
    }
    Ok(Substitution::new_unchecked(
        translate_context(s.source())?,
        translate_context(s.target())?,
        terms,
    ))
}

/// `⟪A⟫` for a closed type.
pub fn param_type(ty: &Term) -> Result<Term, ParamError> {
    if !ty.is_closed() {
        return Err(ParamError::Open);
    }
    predicate(ty)
}

/// `⟦a⟧` for a closed term.
pub fn param_term(t: &Term) -> Result<Term, ParamError> {
    if !t.is_closed() {
        return Err(ParamError::Open);
    }
    witness(t)
}

/// `(⟪A⟫, ⟦a⟧)` for `a : A` in `ctx`, computed on normal forms. The input
/// must be well typed.
pub fn translate_open(ctx: &Context, t: &Term, ty: &Term) -> Result<(Term, Term), ParamError> {
    let ty_nf = nbe::norm_type_unchecked(ctx, ty).embed();
    let t_nf = nbe::norm_unchecked(ctx, ty, t).embed();
    Ok((predicate(&ty_nf)?, witness(&t_nf)?))
}

/// Translates a closed term of type `ty` and checks the witness against
/// the predicate at the term.
pub fn translate(checker: &Checker, t: &Term, ty: &Term) -> Result<ParamResult, ParamError> {
    let empty = Context::empty();
    checker.is_type(&empty, ty)?;
    checker.check(&empty, t, ty)?;
    let (predicate_type, witness) = translate_open(&empty, t, ty)?;
    let result = ParamResult {
        predicate_type,
        witness,
    };
    checker.is_type(&empty.extend(ty.clone()), &result.predicate_type)?;
    checker.check(&empty, &result.witness, &result.witness_type(t))?;
    Ok(result)
}
