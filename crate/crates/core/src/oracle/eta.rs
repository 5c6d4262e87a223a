//! Type-directed η-expansion of β-normal terms.

use crate::kernel::{Context, Term};
use crate::nbe::{Ne, Nf};
use crate::surface::show;

use super::{Oracle, OracleError};

pub(super) struct Expander<'a> {
    oracle: &'a Oracle,
    /// Context entries in β-normal form.
    ctx: Context,
}

fn stuck(depth: usize, what: &str, t: &Term) -> OracleError {
    OracleError::IllTyped(format!("{what}: {}", show(depth, t)))
}

impl<'a> Expander<'a> {
    pub(super) fn new(oracle: &'a Oracle, ctx: &Context) -> Result<Self, OracleError> {
        let entries = ctx
            .entries()
            .iter()
            .map(|e| oracle.beta_normal(e))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Expander {
            oracle,
            ctx: Context::from_entries(entries),
        })
    }

    fn under<T>(&mut self, ty: Term, f: impl FnOnce(&mut Self) -> T) -> T {
        let saved = self.ctx.clone();
        self.ctx = self.ctx.extend(ty);
        let r = f(self);
        self.ctx = saved;
        r
    }

    fn bn(&self, t: &Term) -> Result<Term, OracleError> {
        self.oracle.beta_normal(t)
    }

    /// `ty` and `t` must be β-normal.
    pub(super) fn expand(&mut self, ty: &Term, t: &Term) -> Result<Nf, OracleError> {
        let depth = self.ctx.len();
        match ty {
            Term::Pi(a, b) => {
                let body = match t {
                    Term::Lam(body) => (**body).clone(),
                    _ => Term::app(t.shift(1), Term::Var(0)),
                };
                let body = self.under((**a).clone(), |s| s.expand(b, &body))?;
                Ok(Nf::Lam(Box::new(body)))
            }
            Term::Bool => match t {
                Term::True => Ok(Nf::True),
                Term::False => Ok(Nf::False),
                _ => Ok(Nf::NeAtBool(self.expand_ne(t)?.0)),
            },
            Term::U(_) => match t {
                Term::Code(a) => Ok(Nf::Code(Box::new(self.expand_type(a)?))),
                _ => Ok(Nf::NeAtU(self.expand_ne(t)?.0)),
            },
            Term::Lift(a) => match t {
                Term::LiftTm(x) => Ok(Nf::LiftTm(Box::new(self.expand(a, x)?))),
                _ => Ok(Nf::LiftTm(Box::new(self.expand(a, &Term::unlift_tm(t.clone()))?))),
            },
            Term::El(_) => Ok(Nf::NeAtEl(self.expand_ne(t)?.0)),
            _ => Err(stuck(depth, "not a type", ty)),
        }
    }

    pub(super) fn expand_type(&mut self, ty: &Term) -> Result<Nf, OracleError> {
        match ty {
            Term::Pi(a, b) => {
                let dom = self.expand_type(a)?;
                let cod = self.under((**a).clone(), |s| s.expand_type(b))?;
                Ok(Nf::Pi(Box::new(dom), Box::new(cod)))
            }
            Term::Bool => Ok(Nf::Bool),
            Term::U(i) => Ok(Nf::U(*i)),
            Term::El(c) => Ok(Nf::El(self.expand_ne(c)?.0)),
            Term::Lift(a) => Ok(Nf::Lift(Box::new(self.expand_type(a)?))),
            _ => Err(stuck(self.ctx.len(), "not a type", ty)),
        }
    }

    /// Expands a neutral and returns it with its β-normal type.
    fn expand_ne(&mut self, t: &Term) -> Result<(Ne, Term), OracleError> {
        let depth = self.ctx.len();
        match t {
            Term::Var(i) => {
                let ty = self
                    .ctx
                    .type_of(*i)
                    .ok_or_else(|| stuck(depth, "unbound variable", t))?;
                Ok((Ne::Var(*i), ty))
            }
            Term::App(f, a) => {
                let (f_ne, f_ty) = self.expand_ne(f)?;
                let Term::Pi(dom, cod) = f_ty else {
                    return Err(stuck(depth, "application of a non-function", t));
                };
                let a_nf = self.expand(&dom, a)?;
                let ty = self.bn(&cod.instantiate(a))?;
                Ok((Ne::App(Box::new(f_ne), Box::new(a_nf)), ty))
            }
            Term::ElimBool {
                motive,
                tcase,
                fcase,
                scrut,
            } => {
                let (s, _) = self.expand_ne(scrut)?;
                let m = self.under(Term::Bool, |e| e.expand_type(motive))?;
                let t_ty = self.bn(&motive.instantiate(&Term::True))?;
                let f_ty = self.bn(&motive.instantiate(&Term::False))?;
                let tc = self.expand(&t_ty, tcase)?;
                let fc = self.expand(&f_ty, fcase)?;
                let ty = self.bn(&motive.instantiate(scrut))?;
                let ne = Ne::ElimBool {
                    motive: Box::new(m),
                    tcase: Box::new(tc),
                    fcase: Box::new(fc),
                    scrut: Box::new(s),
                };
                Ok((ne, ty))
            }
            Term::UnliftTm(x) => {
                let (x_ne, x_ty) = self.expand_ne(x)?;
                let Term::Lift(a) = x_ty else {
                    return Err(stuck(depth, "unlift of a non-lifted term", t));
                };
                Ok((Ne::Unlift(Box::new(x_ne)), (*a).clone()))
            }
            _ => Err(stuck(depth, "expected a neutral term", t)),
        }
    }
}
