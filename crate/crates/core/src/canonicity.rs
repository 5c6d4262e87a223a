//! Canonicity for closed booleans, by a glued evaluator.
//!
//! A glued value pairs a closed term with a witness that it satisfies the
//! logical predicate of its type: at `Bool` the witness says which
//! constructor the term equals, at a function type it maps related
//! arguments to related results, at a universe it carries a predicate on
//! the elements of the coded type. Evaluating a closed boolean and reading
//! off the witness decides it.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::kernel::{Checker, Context, Term, TypeError};
use crate::model::{Binder, DisplayedModelSignature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Canonical {
    IsTrue,
    IsFalse,
}

impl Canonical {
    pub fn as_bool(self) -> bool {
        self == Canonical::IsTrue
    }

    pub fn term(self) -> Term {
        match self {
            Canonical::IsTrue => Term::True,
            Canonical::IsFalse => Term::False,
        }
    }
}

impl fmt::Display for Canonical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.as_bool() { "true" } else { "false" })
    }
}

/// The predicate attached to a closed type.
#[derive(Clone)]
pub enum DisplayedType {
    Bool,
    Pi(Arc<DisplayedType>, Binder<(Term, Witness), DisplayedType>),
    U(usize),
    Lift(Arc<DisplayedType>),
}

/// Evidence that a closed term satisfies a [`DisplayedType`].
#[derive(Clone)]
pub enum Witness {
    Bool(Canonical),
    Fun(Binder<(Term, Witness), Witness>),
    Code(DisplayedType),
    Lifted(Arc<Witness>),
}

impl fmt::Debug for DisplayedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DisplayedType::Bool => write!(f, "Bool•"),
            DisplayedType::Pi(a, _) => write!(f, "Π•({a:?}, _)"),
            DisplayedType::U(i) => write!(f, "U•{i}"),
            DisplayedType::Lift(a) => write!(f, "Lift•({a:?})"),
        }
    }
}

impl fmt::Debug for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Bool(c) => write!(f, "{c:?}"),
            Witness::Fun(_) => write!(f, "<preserves predicates>"),
            Witness::Code(d) => write!(f, "code•({d:?})"),
            Witness::Lifted(w) => write!(f, "lift•({w:?})"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GluedValue {
    pub term: Term,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("canonicity applies to closed terms only")]
    Open,
    #[error(transparent)]
    Type(#[from] TypeError),
}

/// The displayed model over closed syntax.
#[derive(Debug, Clone, Copy, Default)]
pub struct CanonicityModel;

impl DisplayedModelSignature for CanonicityModel {
    type TyD = DisplayedType;
    type TmD = Witness;

    fn pi_d(&self, dom: DisplayedType, cod: Binder<(Term, Witness), DisplayedType>) -> DisplayedType {
        DisplayedType::Pi(Arc::new(dom), cod)
    }

    fn app_d(&self, fun: &Witness, arg: &Term, arg_d: &Witness) -> Witness {
        match fun {
            Witness::Fun(f) => f((arg.clone(), arg_d.clone())),
            other => panic!("app• of {other:?}"),
        }
    }

    fn lam_d(&self, body: Binder<(Term, Witness), Witness>) -> Witness {
        Witness::Fun(body)
    }

    fn bool_d(&self) -> DisplayedType {
        DisplayedType::Bool
    }

    fn true_d(&self) -> Witness {
        Witness::Bool(Canonical::IsTrue)
    }

    fn false_d(&self) -> Witness {
        Witness::Bool(Canonical::IsFalse)
    }

    fn elim_bool_d(
        &self,
        _motive: Binder<(Term, Witness), DisplayedType>,
        tcase: &Witness,
        fcase: &Witness,
        scrut: &Witness,
    ) -> Witness {
        match scrut {
            Witness::Bool(Canonical::IsTrue) => tcase.clone(),
            Witness::Bool(Canonical::IsFalse) => fcase.clone(),
            other => panic!("elimBool• on {other:?}"),
        }
    }

    fn universe_d(&self, level: usize) -> DisplayedType {
        DisplayedType::U(level)
    }

    fn el_d(&self, code: &Witness) -> DisplayedType {
        match code {
            Witness::Code(d) => d.clone(),
            other => panic!("El• of {other:?}"),
        }
    }

    fn code_d(&self, ty: DisplayedType) -> Witness {
        Witness::Code(ty)
    }

    fn lift_d(&self, ty: DisplayedType) -> DisplayedType {
        DisplayedType::Lift(Arc::new(ty))
    }

    fn lift_tm_d(&self, tm: &Witness) -> Witness {
        Witness::Lifted(Arc::new(tm.clone()))
    }

    fn unlift_tm_d(&self, tm: &Witness) -> Witness {
        match tm {
            Witness::Lifted(w) => (**w).clone(),
            other => panic!("unlift• of {other:?}"),
        }
    }
}

/// Substitutes the closed terms of `env` for the free variables of `t`.
fn close(env: &[GluedValue], t: &Term) -> Term {
    let r: Result<Term, std::convert::Infallible> = t.map_free_vars(&mut |i, _| {
        Ok(env[env.len() - 1 - i].term.clone())
    });
    r.unwrap()
}

fn extended(env: &[GluedValue], v: GluedValue) -> Vec<GluedValue> {
    let mut out = env.to_vec();
    out.push(v);
    out
}

fn binder<T: 'static>(
    env: &[GluedValue],
    body: &Arc<Term>,
    run: fn(&[GluedValue], &Term) -> T,
) -> Binder<(Term, Witness), T> {
    let (env, body) = (env.to_vec(), body.clone());
    Arc::new(move |(term, witness)| run(&extended(&env, GluedValue { term, witness }), &body))
}

fn witness_of(env: &[GluedValue], t: &Term) -> Witness {
    glued_eval(env, t).witness
}

/// Evaluates `t` under a glued environment (the last entry is variable 0).
pub fn glued_eval(env: &[GluedValue], t: &Term) -> GluedValue {
    let m = CanonicityModel;
    let witness = match t {
        Term::Var(i) => env[env.len() - 1 - i].witness.clone(),
        Term::Lam(body) => m.lam_d(binder(env, body, witness_of)),
        Term::App(f, a) => {
            let f = glued_eval(env, f);
            let a = glued_eval(env, a);
            m.app_d(&f.witness, &a.term, &a.witness)
        }
        Term::True => m.true_d(),
        Term::False => m.false_d(),
        Term::ElimBool {
            motive,
            tcase,
            fcase,
            scrut,
        } => {
            let s = glued_eval(env, scrut).witness;
            let branch = match s {
                Witness::Bool(Canonical::IsTrue) => tcase,
                _ => fcase,
            };
            let chosen = glued_eval(env, branch).witness;
            m.elim_bool_d(binder(env, motive, glued_eval_type), &chosen, &chosen, &s)
        }
        Term::Code(a) => m.code_d(glued_eval_type(env, a)),
        Term::LiftTm(x) => m.lift_tm_d(&glued_eval(env, x).witness),
        Term::UnliftTm(x) => m.unlift_tm_d(&glued_eval(env, x).witness),
        Term::Pi(..) | Term::Bool | Term::U(_) | Term::El(_) | Term::Lift(_) => {
            panic!("type former in term position: {t:?}")
        }
    };
    GluedValue {
        term: close(env, t),
        witness,
    }
}

/// The predicate of a type under a glued environment.
pub fn glued_eval_type(env: &[GluedValue], ty: &Term) -> DisplayedType {
    let m = CanonicityModel;
    match ty {
        Term::Pi(a, b) => m.pi_d(glued_eval_type(env, a), binder(env, b, glued_eval_type)),
        Term::Bool => m.bool_d(),
        Term::U(i) => m.universe_d(*i),
        Term::El(c) => m.el_d(&glued_eval(env, c).witness),
        Term::Lift(a) => m.lift_d(glued_eval_type(env, a)),
        _ => panic!("term in type position: {ty:?}"),
    }
}

/// Whether the witness has the shape the displayed type demands. Function
/// witnesses are probed at the boolean constructors when their domain is
/// `Bool`.
pub fn inhabits(ty: &DisplayedType, w: &Witness) -> bool {
    match (ty, w) {
        (DisplayedType::Bool, Witness::Bool(_)) => true,
        (DisplayedType::Pi(dom, cod), Witness::Fun(f)) => match **dom {
            DisplayedType::Bool => [Canonical::IsTrue, Canonical::IsFalse].into_iter().all(|c| {
                let arg = (c.term(), Witness::Bool(c));
                inhabits(&cod(arg.clone()), &f(arg))
            }),
            _ => true,
        },
        (DisplayedType::U(_), Witness::Code(_)) => true,
        (DisplayedType::Lift(a), Witness::Lifted(x)) => inhabits(a, x),
        _ => false,
    }
}

/// Decides a closed boolean.
pub fn canon(b: &Term) -> Result<Canonical, CanonError> {
    canon_with(&Checker::default(), b)
}

pub fn canon_with(checker: &Checker, b: &Term) -> Result<Canonical, CanonError> {
    if !b.is_closed() {
        return Err(CanonError::Open);
    }
    checker.check(&Context::empty(), b, &Term::Bool)?;
    match glued_eval(&[], b).witness {
        Witness::Bool(c) => Ok(c),
        other => unreachable!("a boolean evaluated to {other:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn true_is_true() {
        assert_eq!(canon(&Term::True), Ok(Canonical::IsTrue));
        let g = glued_eval(&[], &Term::True);
        assert_eq!(g.term, Term::True);
    }

    #[test]
    fn negation_of_true_is_false() {
        let t = Term::app(Term::negation(), Term::True);
        assert_eq!(canon(&t), Ok(Canonical::IsFalse));
    }

    #[test]
    fn identity_preserves_witness() {
        let id = glued_eval(&[], &Term::lam(Term::Var(0)));
        let m = CanonicityModel;
        let out = m.app_d(&id.witness, &Term::True, &m.true_d());
        assert!(matches!(out, Witness::Bool(Canonical::IsTrue)));
    }

    #[test]
    fn underlying_term_is_the_substitution() {
        let env = vec![GluedValue {
            term: Term::False,
            witness: Witness::Bool(Canonical::IsFalse),
        }];
        let t = Term::lam(Term::app(Term::Var(0), Term::Var(1)));
        assert_eq!(glued_eval(&env, &t).term, Term::lam(Term::app(Term::Var(0), Term::False)));
    }

    #[test]
    fn open_and_ill_typed_inputs_are_rejected() {
        assert_eq!(canon(&Term::Var(0)), Err(CanonError::Open));
        assert!(matches!(canon(&Term::lam(Term::Var(0))), Err(CanonError::Type(_))));
    }

    #[test]
    fn large_elimination() {
        // the motive computes Bool on true and Bool -> Bool on false
        let motive = Term::el(Term::elim_bool(
            Term::U(0),
            Term::code(Term::Bool),
            Term::code(Term::arrow(Term::Bool, Term::Bool)),
            Term::Var(0),
        ));
        let t = Term::elim_bool(motive, Term::False, Term::lam(Term::Var(0)), Term::True);
        assert_eq!(canon(&t), Ok(Canonical::IsFalse));
    }

    #[test]
    fn lifted_values() {
        let t = Term::unlift_tm(Term::lift_tm(Term::True));
        assert_eq!(canon(&t), Ok(Canonical::IsTrue));
        let d = glued_eval_type(&[], &Term::lift(Term::Bool));
        assert!(inhabits(&d, &glued_eval(&[], &Term::lift_tm(Term::False)).witness));
    }
}
