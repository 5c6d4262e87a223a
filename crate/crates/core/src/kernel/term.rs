//! Raw de Bruijn syntax.
//!
//! Types and terms live in one sort; the checker decides which positions are
//! types. Children are reference counted.

use std::sync::Arc;

/// A raw term. `Var(0)` is the innermost bound variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Lam(Arc<Term>),
    App(Arc<Term>, Arc<Term>),
    /// `Pi(dom, cod)`, where `cod` binds one variable of type `dom`.
    Pi(Arc<Term>, Arc<Term>),
    Bool,
    True,
    False,
    /// Dependent boolean eliminator. `motive` binds the scrutinee.
    ElimBool {
        motive: Arc<Term>,
        tcase: Arc<Term>,
        fcase: Arc<Term>,
        scrut: Arc<Term>,
    },
    U(usize),
    El(Arc<Term>),
    Code(Arc<Term>),
    Lift(Arc<Term>),
    LiftTm(Arc<Term>),
    UnliftTm(Arc<Term>),
}

impl Term {
    pub fn var(ix: usize) -> Term {
        Term::Var(ix)
    }

    pub fn lam(body: Term) -> Term {
        Term::Lam(Arc::new(body))
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Arc::new(fun), Arc::new(arg))
    }

    /// Left-nested application `f a1 a2 ...`.
    pub fn apps(fun: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(fun, Term::app)
    }

    pub fn pi(dom: Term, cod: Term) -> Term {
        Term::Pi(Arc::new(dom), Arc::new(cod))
    }

    /// Non-dependent function type; `cod` is weakened under the binder.
    pub fn arrow(dom: Term, cod: Term) -> Term {
        Term::pi(dom, cod.shift(1))
    }

    pub fn elim_bool(motive: Term, tcase: Term, fcase: Term, scrut: Term) -> Term {
        Term::ElimBool {
            motive: Arc::new(motive),
            tcase: Arc::new(tcase),
            fcase: Arc::new(fcase),
            scrut: Arc::new(scrut),
        }
    }

    pub fn el(code: Term) -> Term {
        Term::El(Arc::new(code))
    }

    pub fn code(ty: Term) -> Term {
        Term::Code(Arc::new(ty))
    }

    pub fn lift(ty: Term) -> Term {
        Term::Lift(Arc::new(ty))
    }

    pub fn lift_tm(tm: Term) -> Term {
        Term::LiftTm(Arc::new(tm))
    }

    pub fn unlift_tm(tm: Term) -> Term {
        Term::UnliftTm(Arc::new(tm))
    }

    /// Boolean negation `fun b => elim b at _ => Bool | false | true`.
    pub fn negation() -> Term {
        Term::lam(Term::elim_bool(Term::Bool, Term::False, Term::True, Term::Var(0)))
    }

    /// Number of constructors in the tree.
    pub fn size(&self) -> usize {
        1 + self.children().map(|(_, c)| c.size()).sum::<usize>()
    }

    /// Immediate subterms together with the number of binders each one sits under.
    pub fn children(&self) -> impl Iterator<Item = (usize, &Term)> {
        let mut out: Vec<(usize, &Term)> = Vec::with_capacity(4);
        match self {
            Term::Var(_) | Term::Bool | Term::True | Term::False | Term::U(_) => {}
            Term::Lam(b) => out.push((1, b)),
            Term::App(f, a) => {
                out.push((0, f));
                out.push((0, a));
            }
            Term::Pi(a, b) => {
                out.push((0, a));
                out.push((1, b));
            }
            Term::ElimBool {
                motive,
                tcase,
                fcase,
                scrut,
            } => {
                out.push((1, motive));
                out.push((0, tcase));
                out.push((0, fcase));
                out.push((0, scrut));
            }
            Term::El(x) | Term::Code(x) | Term::Lift(x) | Term::LiftTm(x) | Term::UnliftTm(x) => {
                out.push((0, x))
            }
        }
        out.into_iter()
    }

    /// Rebuilds this node with new children, in the order of [`Term::children`].
    pub fn with_children(&self, mut kids: Vec<Term>) -> Term {
        let mut next = || Arc::new(kids.remove(0));
        match self {
            Term::Var(_) | Term::Bool | Term::True | Term::False | Term::U(_) => self.clone(),
            Term::Lam(_) => Term::Lam(next()),
            Term::App(_, _) => {
                let f = next();
                Term::App(f, next())
            }
            Term::Pi(_, _) => {
                let a = next();
                Term::Pi(a, next())
            }
            Term::ElimBool { .. } => {
                let motive = next();
                let tcase = next();
                let fcase = next();
                Term::ElimBool {
                    motive,
                    tcase,
                    fcase,
                    scrut: next(),
                }
            }
            Term::El(_) => Term::El(next()),
            Term::Code(_) => Term::Code(next()),
            Term::Lift(_) => Term::Lift(next()),
            Term::LiftTm(_) => Term::LiftTm(next()),
            Term::UnliftTm(_) => Term::UnliftTm(next()),
        }
    }

    /// Replaces every free variable. `f(ix, depth)` receives the free index
    /// (relative to the outside of `self`) and the number of binders crossed,
    /// and must return a term valid under those binders.
    pub fn map_free_vars<E>(
        &self,
        f: &mut impl FnMut(usize, usize) -> Result<Term, E>,
    ) -> Result<Term, E> {
        self.map_free_vars_at(0, f)
    }

    fn map_free_vars_at<E>(
        &self,
        depth: usize,
        f: &mut impl FnMut(usize, usize) -> Result<Term, E>,
    ) -> Result<Term, E> {
        match self {
            Term::Var(i) if *i >= depth => f(*i - depth, depth),
            Term::Var(_) | Term::Bool | Term::True | Term::False | Term::U(_) => Ok(self.clone()),
            _ => {
                let mut kids = Vec::with_capacity(4);
                for (binds, child) in self.children() {
                    kids.push(child.map_free_vars_at(depth + binds, f)?);
                }
                Ok(self.with_children(kids))
            }
        }
    }

    /// Adds `by` to every free variable.
    pub fn shift(&self, by: usize) -> Term {
        if by == 0 {
            return self.clone();
        }
        let r: Result<Term, std::convert::Infallible> =
            self.map_free_vars(&mut |i, depth| Ok(Term::Var(i + by + depth)));
        r.unwrap()
    }

    /// Removes `by` from every free variable, failing if one would escape.
    pub fn unshift(&self, by: usize) -> Option<Term> {
        self.map_free_vars(&mut |i, depth| {
            if i >= by {
                Ok(Term::Var(i - by + depth))
            } else {
                Err(())
            }
        })
        .ok()
    }

    /// `self[0 := arg]`: instantiates the innermost free variable and lowers
    /// the others by one.
    pub fn instantiate(&self, arg: &Term) -> Term {
        let r: Result<Term, std::convert::Infallible> = self.map_free_vars(&mut |i, depth| {
            Ok(if i == 0 {
                arg.shift(depth)
            } else {
                Term::Var(i - 1 + depth)
            })
        });
        r.unwrap()
    }

    /// Whether the free variable `ix` occurs.
    pub fn mentions(&self, ix: usize) -> bool {
        let mut found = false;
        let _: Result<Term, std::convert::Infallible> = self.map_free_vars(&mut |i, depth| {
            found |= i == ix;
            Ok(Term::Var(i + depth))
        });
        found
    }

    /// Smallest `n` such that every free variable is `< n`.
    pub fn free_var_bound(&self) -> usize {
        let mut bound = 0;
        let _: Result<Term, std::convert::Infallible> = self.map_free_vars(&mut |i, depth| {
            bound = bound.max(i + 1);
            Ok(Term::Var(i + depth))
        });
        bound
    }

    pub fn is_closed(&self) -> bool {
        self.free_var_bound() == 0
    }

    /// Whether the head constructor is a type former.
    pub fn is_type_former(&self) -> bool {
        matches!(
            self,
            Term::Pi(..) | Term::Bool | Term::U(_) | Term::El(_) | Term::Lift(_)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_respects_binders() {
        let t = Term::lam(Term::app(Term::Var(0), Term::Var(1)));
        assert_eq!(t.shift(2), Term::lam(Term::app(Term::Var(0), Term::Var(3))));
    }

    #[test]
    fn instantiate_single_variable() {
        let t = Term::app(Term::Var(0), Term::Var(0));
        assert_eq!(t.instantiate(&Term::True), Term::app(Term::True, Term::True));
        let under = Term::lam(Term::app(Term::Var(1), Term::Var(2)));
        assert_eq!(
            under.instantiate(&Term::Var(5)),
            Term::lam(Term::app(Term::Var(6), Term::Var(1)))
        );
    }

    #[test]
    fn unshift_detects_escape() {
        assert_eq!(Term::Var(0).unshift(1), None);
        assert_eq!(Term::lam(Term::Var(2)).unshift(1), Some(Term::lam(Term::Var(1))));
    }

    #[test]
    fn size_and_bound() {
        let neg = Term::negation();
        assert_eq!(neg.size(), 6);
        assert!(neg.is_closed());
        assert_eq!(Term::pi(Term::el(Term::Var(0)), Term::Var(3)).free_var_bound(), 3);
    }

    #[test]
    fn arrow_weakens_codomain() {
        assert_eq!(
            Term::arrow(Term::el(Term::Var(0)), Term::el(Term::Var(0))),
            Term::pi(Term::el(Term::Var(0)), Term::el(Term::Var(1)))
        );
    }
}
