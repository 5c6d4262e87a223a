//! Typing rules re-derived for the oracle. Types are compared by their
//! oracle normal forms.

use crate::kernel::{is_inferable, Context, Term};
use crate::surface::show;

use super::{Oracle, OracleError};

pub(super) struct Typing<'a> {
    oracle: &'a Oracle,
}

fn ill(msg: String) -> OracleError {
    OracleError::IllTyped(msg)
}

impl<'a> Typing<'a> {
    pub(super) fn new(oracle: &'a Oracle) -> Self {
        Typing { oracle }
    }

    fn bn(&self, t: &Term) -> Result<Term, OracleError> {
        self.oracle.beta_normal(t)
    }

    pub(super) fn level(&self, ctx: &Context, ty: &Term) -> Result<usize, OracleError> {
        match ty {
            Term::Pi(a, b) => {
                let l = self.level(ctx, a)?;
                let r = self.level(&ctx.extend((**a).clone()), b)?;
                Ok(l.max(r))
            }
            Term::Bool => Ok(0),
            Term::U(i) if *i < self.oracle.max_level => Ok(i + 1),
            Term::U(i) => Err(ill(format!("universe U{i} does not exist"))),
            Term::El(c) => match self.infer(ctx, c)? {
                Term::U(i) => Ok(i),
                other => Err(ill(format!("El of a non-code of type {}", show(ctx.len(), &other)))),
            },
            Term::Lift(a) => Ok(self.level(ctx, a)? + 1),
            other => Err(ill(format!("{} is not a type", show(ctx.len(), other)))),
        }
    }

    pub(super) fn infer(&self, ctx: &Context, t: &Term) -> Result<Term, OracleError> {
        let n = ctx.len();
        match t {
            Term::Var(i) => {
                let ty = ctx
                    .type_of(*i)
                    .ok_or_else(|| ill(format!("variable {i} out of scope")))?;
                self.bn(&ty)
            }
            Term::App(f, a) => {
                if let Term::Lam(body) = &**f {
                    let dom = self.infer(ctx, a)?;
                    let cod = self.infer(&ctx.extend(dom), body)?;
                    return self.bn(&cod.instantiate(a));
                }
                match self.infer(ctx, f)? {
                    Term::Pi(dom, cod) => {
                        self.check(ctx, a, &dom)?;
                        self.bn(&cod.instantiate(a))
                    }
                    other => Err(ill(format!("applied a term of type {}", show(n, &other)))),
                }
            }
            Term::True | Term::False => Ok(Term::Bool),
            Term::ElimBool {
                motive,
                tcase,
                fcase,
                scrut,
            } => {
                self.level(&ctx.extend(Term::Bool), motive)?;
                self.check(ctx, scrut, &Term::Bool)?;
                self.check(ctx, tcase, &motive.instantiate(&Term::True))?;
                self.check(ctx, fcase, &motive.instantiate(&Term::False))?;
                self.bn(&motive.instantiate(scrut))
            }
            Term::Code(a) => {
                let l = self.level(ctx, a)?;
                if l < self.oracle.max_level {
                    Ok(Term::U(l))
                } else {
                    Err(ill(format!("no universe for a type of level {l}")))
                }
            }
            Term::LiftTm(x) => Ok(Term::lift(self.infer(ctx, x)?)),
            Term::UnliftTm(x) => match self.infer(ctx, x)? {
                Term::Lift(a) => Ok((*a).clone()),
                other => Err(ill(format!("unlift at type {}", show(n, &other)))),
            },
            Term::Lam(_) => Err(ill("cannot infer the type of a lambda".into())),
            _ => Err(ill(format!("type {} used as a term", show(n, t)))),
        }
    }

    pub(super) fn check(&self, ctx: &Context, t: &Term, ty: &Term) -> Result<(), OracleError> {
        let n = ctx.len();
        match t {
            Term::Lam(body) => match self.bn(ty)? {
                Term::Pi(dom, cod) => self.check(&ctx.extend((*dom).clone()), body, &cod),
                other => Err(ill(format!("lambda at type {}", show(n, &other)))),
            },
            Term::LiftTm(x) => match self.bn(ty)? {
                Term::Lift(a) => self.check(ctx, x, &a),
                other => Err(ill(format!("lift at type {}", show(n, &other)))),
            },
            Term::App(f, a) if matches!(&**f, Term::Lam(b) if !is_inferable(b)) => {
                let Term::Lam(body) = &**f else { unreachable!() };
                let dom = self.infer(ctx, a)?;
                self.check(&ctx.extend(dom), body, &ty.shift(1))
            }
            _ => {
                let actual = self.infer(ctx, t)?;
                if self.oracle.types_equal(ctx, &actual, ty)? {
                    Ok(())
                } else {
                    Err(ill(format!(
                        "expected {}, found {}",
                        show(n, ty),
                        show(n, &actual)
                    )))
                }
            }
        }
    }
}
