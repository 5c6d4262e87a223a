//! Bidirectional typechecking. Conversion is decided by comparing normal
//! forms computed by [`crate::nbe`].

use super::context::Context;
use super::error::TypeError;
use super::term::Term;
use crate::nbe;

pub const DEFAULT_MAX_LEVEL: usize = 2;

/// Typechecker configuration. Universes `U(i)` exist for `i < max_level`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checker {
    pub max_level: usize,
}

impl Default for Checker {
    fn default() -> Self {
        Checker {
            max_level: DEFAULT_MAX_LEVEL,
        }
    }
}

impl Checker {
    pub fn with_max_level(max_level: usize) -> Checker {
        Checker { max_level }
    }

    /// Checks every entry of the telescope in its prefix.
    pub fn check_context(&self, ctx: &Context) -> Result<(), TypeError> {
        for k in 0..ctx.len() {
            self.infer_level(&ctx.prefix(k), &ctx.entries()[k])?;
        }
        Ok(())
    }

    /// Checks that `ty` is a type and returns its universe level.
    ///
    /// `Pi` lives at the larger of the levels of its domain and codomain;
    /// there is no cumulativity, so every type has exactly one level.
    pub fn infer_level(&self, ctx: &Context, ty: &Term) -> Result<usize, TypeError> {
        match ty {
            Term::Pi(dom, cod) => {
                let l = self.infer_level(ctx, dom)?;
                let r = self.infer_level(&ctx.extend((**dom).clone()), cod)?;
                Ok(l.max(r))
            }
            Term::Bool => Ok(0),
            Term::U(i) => {
                self.universe_exists(*i)?;
                Ok(i + 1)
            }
            Term::El(code) => {
                let code_ty = self.infer(ctx, code)?;
                match whnf_type(ctx, &code_ty) {
                    Term::U(i) => Ok(i),
                    other => Err(TypeError::NotUniverse {
                        depth: ctx.len(),
                        ty: other,
                    }),
                }
            }
            Term::Lift(inner) => Ok(self.infer_level(ctx, inner)? + 1),
            _ => Err(TypeError::NotAType {
                depth: ctx.len(),
                term: ty.clone(),
            }),
        }
    }

    pub fn is_type(&self, ctx: &Context, ty: &Term) -> Result<(), TypeError> {
        self.infer_level(ctx, ty).map(|_| ())
    }

    fn universe_exists(&self, level: usize) -> Result<(), TypeError> {
        if level < self.max_level {
            Ok(())
        } else {
            Err(TypeError::LevelTooLarge {
                level,
                max: self.max_level,
            })
        }
    }

    /// Synthesizes the type of `t`.
    pub fn infer(&self, ctx: &Context, t: &Term) -> Result<Term, TypeError> {
        let depth = ctx.len();
        match t {
            Term::Var(i) => ctx.type_of(*i).ok_or(TypeError::Scope {
                index: *i,
                len: depth,
            }),
            Term::Lam(_) => Err(TypeError::NotInferable {
                depth,
                term: t.clone(),
            }),
            // A redex is inferred like a let: the argument fixes the domain.
            Term::App(fun, arg) if matches!(**fun, Term::Lam(_)) => {
                let Term::Lam(body) = &**fun else { unreachable!() };
                let dom = self.infer(ctx, arg)?;
                let cod = self.infer(&ctx.extend(dom), body)?;
                Ok(cod.instantiate(arg))
            }
            Term::App(fun, arg) => {
                let fun_ty = self.infer(ctx, fun)?;
                match whnf_type(ctx, &fun_ty) {
                    Term::Pi(dom, cod) => {
                        self.check(ctx, arg, &dom)?;
                        Ok(cod.instantiate(arg))
                    }
                    other => Err(TypeError::NotPi { depth, ty: other }),
                }
            }
            Term::True | Term::False => Ok(Term::Bool),
            Term::ElimBool {
                motive,
                tcase,
                fcase,
                scrut,
            } => {
                self.is_type(&ctx.extend(Term::Bool), motive)?;
                self.check(ctx, scrut, &Term::Bool)?;
                self.check(ctx, tcase, &motive.instantiate(&Term::True))?;
                self.check(ctx, fcase, &motive.instantiate(&Term::False))?;
                Ok(motive.instantiate(scrut))
            }
            Term::Code(ty) => {
                let level = self.infer_level(ctx, ty)?;
                self.universe_exists(level)?;
                Ok(Term::U(level))
            }
            Term::LiftTm(inner) => Ok(Term::lift(self.infer(ctx, inner)?)),
            Term::UnliftTm(inner) => {
                let ty = self.infer(ctx, inner)?;
                match whnf_type(ctx, &ty) {
                    Term::Lift(a) => Ok((*a).clone()),
                    other => Err(TypeError::NotLift { depth, ty: other }),
                }
            }
            Term::Pi(..) | Term::Bool | Term::U(_) | Term::El(_) | Term::Lift(_) => {
                Err(TypeError::TypeInTermPosition {
                    depth,
                    term: t.clone(),
                })
            }
        }
    }

    /// Checks `t` against the type `ty`, which must be well formed in `ctx`.
    pub fn check(&self, ctx: &Context, t: &Term, ty: &Term) -> Result<(), TypeError> {
        let depth = ctx.len();
        match t {
            Term::Lam(body) => match whnf_type(ctx, ty) {
                Term::Pi(dom, cod) => self.check(&ctx.extend((*dom).clone()), body, &cod),
                other => Err(TypeError::NotPi { depth, ty: other }),
            },
            Term::LiftTm(inner) => match whnf_type(ctx, ty) {
                Term::Lift(a) => self.check(ctx, inner, &a),
                other => Err(TypeError::NotLift { depth, ty: other }),
            },
            Term::App(fun, arg) if matches!(&**fun, Term::Lam(b) if !is_inferable(b)) => {
                let Term::Lam(body) = &**fun else { unreachable!() };
                let dom = self.infer(ctx, arg)?;
                self.check(&ctx.extend(dom), body, &ty.shift(1))
            }
            _ => {
                let actual = self.infer(ctx, t)?;
                let expected_nf = whnf_type(ctx, ty);
                let actual_nf = whnf_type(ctx, &actual);
                if expected_nf == actual_nf {
                    Ok(())
                } else {
                    Err(TypeError::Mismatch {
                        depth,
                        expected: expected_nf,
                        actual: actual_nf,
                    })
                }
            }
        }
    }

    /// Decides `a ≡ b : ty` by comparing normal forms.
    pub fn conv(&self, ctx: &Context, ty: &Term, a: &Term, b: &Term) -> Result<bool, TypeError> {
        self.is_type(ctx, ty)?;
        self.check(ctx, a, ty)?;
        self.check(ctx, b, ty)?;
        Ok(nbe::norm_unchecked(ctx, ty, a) == nbe::norm_unchecked(ctx, ty, b))
    }

    /// Decides `a ≡ b` as types.
    pub fn conv_type(&self, ctx: &Context, a: &Term, b: &Term) -> Result<bool, TypeError> {
        self.is_type(ctx, a)?;
        self.is_type(ctx, b)?;
        Ok(whnf_type(ctx, a) == whnf_type(ctx, b))
    }
}

/// Whether bidirectional checking can synthesize a type for `t` without an
/// expected type. Lambdas in head position are the only obstruction.
pub fn is_inferable(t: &Term) -> bool {
    match t {
        Term::Lam(_) => false,
        Term::LiftTm(inner) => is_inferable(inner),
        Term::App(fun, arg) => match &**fun {
            Term::Lam(body) => is_inferable(arg) && is_inferable(body),
            _ => true,
        },
        _ => true,
    }
}

/// Full normal form of a well-formed type, embedded back into syntax.
fn whnf_type(ctx: &Context, ty: &Term) -> Term {
    nbe::norm_type_unchecked(ctx, ty).embed()
}

/// [`Checker::infer`] with the default configuration.
pub fn infer(ctx: &Context, t: &Term) -> Result<Term, TypeError> {
    Checker::default().infer(ctx, t)
}

/// [`Checker::check`] with the default configuration.
pub fn check(ctx: &Context, t: &Term, ty: &Term) -> Result<(), TypeError> {
    Checker::default().check(ctx, t, ty)
}

/// [`Checker::conv`] with the default configuration.
pub fn conv(ctx: &Context, ty: &Term, a: &Term, b: &Term) -> Result<bool, TypeError> {
    Checker::default().conv(ctx, ty, a, b)
}
