//! Higher-order models and the generic evaluator.
//!
//! A [`ModelSignature`] gives carriers for types and terms and one operation
//! per type or term former. Binders are meta-level functions, so an
//! instance never deals with contexts or variables. [`eval`] interprets
//! syntax into any instance by structural recursion: a context becomes an
//! environment of term values, one per entry, and each former is sent to
//! the corresponding operation.
//!
//! [`DisplayedModelSignature`] is the dependent version over a base of
//! closed terms; the canonicity evaluator is its instance.

use std::fmt;
use std::sync::Arc;

use crate::kernel::{Substitution, Term};

/// A binder in a higher-order signature.
pub type Binder<A, B> = Arc<dyn Fn(A) -> B + Send + Sync>;

pub trait ModelSignature: Clone + Send + Sync + 'static {
    type Ty: Clone + Send + Sync + 'static;
    type Tm: Clone + Send + Sync + 'static;

    fn pi(&self, dom: Self::Ty, cod: Binder<Self::Tm, Self::Ty>) -> Self::Ty;
    fn app(&self, fun: Self::Tm, arg: Self::Tm) -> Self::Tm;
    fn lam(&self, body: Binder<Self::Tm, Self::Tm>) -> Self::Tm;

    fn bool(&self) -> Self::Ty;
    fn tt(&self) -> Self::Tm;
    fn ff(&self) -> Self::Tm;
    fn elim_bool(
        &self,
        motive: Binder<Self::Tm, Self::Ty>,
        tcase: Self::Tm,
        fcase: Self::Tm,
        scrut: Self::Tm,
    ) -> Self::Tm;

    fn universe(&self, level: usize) -> Self::Ty;
    fn el(&self, code: Self::Tm) -> Self::Ty;
    fn code(&self, ty: Self::Ty) -> Self::Tm;

    fn lift(&self, ty: Self::Ty) -> Self::Ty;
    fn lift_tm(&self, tm: Self::Tm) -> Self::Tm;
    fn unlift_tm(&self, tm: Self::Tm) -> Self::Tm;
}

/// Values for the variables of a context; the last one is bound by index 0.
pub struct Environment<M: ModelSignature> {
    values: Vec<M::Tm>,
}

impl<M: ModelSignature> Clone for Environment<M> {
    fn clone(&self) -> Self {
        Environment {
            values: self.values.clone(),
        }
    }
}

impl<M: ModelSignature> Default for Environment<M> {
    fn default() -> Self {
        Environment { values: Vec::new() }
    }
}

impl<M: ModelSignature> Environment<M> {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Values in context order (the first entry first).
    pub fn from_values(values: Vec<M::Tm>) -> Self {
        Environment { values }
    }

    pub fn values(&self) -> &[M::Tm] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn extended(&self, value: M::Tm) -> Self {
        let mut values = self.values.clone();
        values.push(value);
        Environment { values }
    }

    pub fn lookup(&self, ix: usize) -> &M::Tm {
        &self.values[self.values.len() - 1 - ix]
    }
}

/// Interprets a term. `t` must check in the context `env` was built for;
/// type formers in term position are a caller error.
pub fn eval<M: ModelSignature>(model: &M, env: &Environment<M>, t: &Term) -> M::Tm {
    match t {
        Term::Var(i) => {
            debug_assert!(*i < env.len(), "variable {i} outside environment");
            env.lookup(*i).clone()
        }
        Term::Lam(body) => {
            let (m, env, body) = (model.clone(), env.clone(), body.clone());
            model.lam(Arc::new(move |a| eval(&m, &env.extended(a), &body)))
        }
        Term::App(f, a) => model.app(eval(model, env, f), eval(model, env, a)),
        Term::True => model.tt(),
        Term::False => model.ff(),
        Term::ElimBool {
            motive,
            tcase,
            fcase,
            scrut,
        } => model.elim_bool(
            type_binder(model, env, motive),
            eval(model, env, tcase),
            eval(model, env, fcase),
            eval(model, env, scrut),
        ),
        Term::Code(ty) => model.code(eval_type(model, env, ty)),
        Term::LiftTm(x) => model.lift_tm(eval(model, env, x)),
        Term::UnliftTm(x) => model.unlift_tm(eval(model, env, x)),
        Term::Pi(..) | Term::Bool | Term::U(_) | Term::El(_) | Term::Lift(_) => {
            panic!("type former in term position: {t:?}")
        }
    }
}

/// Interprets a type.
pub fn eval_type<M: ModelSignature>(model: &M, env: &Environment<M>, ty: &Term) -> M::Ty {
    match ty {
        Term::Pi(dom, cod) => model.pi(eval_type(model, env, dom), type_binder(model, env, cod)),
        Term::Bool => model.bool(),
        Term::U(i) => model.universe(*i),
        Term::El(code) => model.el(eval(model, env, code)),
        Term::Lift(a) => model.lift(eval_type(model, env, a)),
        _ => panic!("term in type position: {ty:?}"),
    }
}

fn type_binder<M: ModelSignature>(
    model: &M,
    env: &Environment<M>,
    body: &Arc<Term>,
) -> Binder<M::Tm, M::Ty> {
    let (m, env, body) = (model.clone(), env.clone(), body.clone());
    Arc::new(move |a| eval_type(&m, &env.extended(a), &body))
}

/// Interprets a substitution `source -> target` as a map from environments
/// of `source` to environments of `target`.
pub fn eval_subst<M: ModelSignature>(
    model: &M,
    env: &Environment<M>,
    s: &Substitution,
) -> Environment<M> {
    let values = s.terms().iter().rev().map(|t| eval(model, env, t)).collect();
    Environment::from_values(values)
}

/// The standard model: types are sets, terms their elements, functions are
/// meta-level functions and codes carry the type they stand for.
#[derive(Debug, Clone, Copy, Default)]
pub struct StandardModel;

pub fn standard_model() -> StandardModel {
    StandardModel
}

#[derive(Clone)]
pub enum StdTy {
    Bool,
    Pi(Arc<StdTy>, Binder<StdVal, StdTy>),
    U(usize),
    Lift(Arc<StdTy>),
}

#[derive(Clone)]
pub enum StdVal {
    Bool(bool),
    Fun(Binder<StdVal, StdVal>),
    Code(Arc<StdTy>),
    Lifted(Arc<StdVal>),
}

impl fmt::Debug for StdTy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.shape())
    }
}

impl fmt::Debug for StdVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StdVal::Bool(b) => write!(f, "{b}"),
            StdVal::Fun(_) => write!(f, "<function>"),
            StdVal::Code(ty) => write!(f, "code {ty:?}"),
            StdVal::Lifted(v) => write!(f, "lift {v:?}"),
        }
    }
}

impl StdVal {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            StdVal::Bool(b) => Some(*b),
            _ => None,
        }
    }
}

impl ModelSignature for StandardModel {
    type Ty = StdTy;
    type Tm = StdVal;

    fn pi(&self, dom: StdTy, cod: Binder<StdVal, StdTy>) -> StdTy {
        StdTy::Pi(Arc::new(dom), cod)
    }

    fn app(&self, fun: StdVal, arg: StdVal) -> StdVal {
        match fun {
            StdVal::Fun(f) => f(arg),
            other => panic!("applied {other:?}"),
        }
    }

    fn lam(&self, body: Binder<StdVal, StdVal>) -> StdVal {
        StdVal::Fun(body)
    }

    fn bool(&self) -> StdTy {
        StdTy::Bool
    }

    fn tt(&self) -> StdVal {
        StdVal::Bool(true)
    }

    fn ff(&self) -> StdVal {
        StdVal::Bool(false)
    }

    fn elim_bool(
        &self,
        _motive: Binder<StdVal, StdTy>,
        tcase: StdVal,
        fcase: StdVal,
        scrut: StdVal,
    ) -> StdVal {
        match scrut {
            StdVal::Bool(true) => tcase,
            StdVal::Bool(false) => fcase,
            other => panic!("eliminated {other:?}"),
        }
    }

    fn universe(&self, level: usize) -> StdTy {
        StdTy::U(level)
    }

    fn el(&self, code: StdVal) -> StdTy {
        match code {
            StdVal::Code(ty) => (*ty).clone(),
            other => panic!("El of {other:?}"),
        }
    }

    fn code(&self, ty: StdTy) -> StdVal {
        StdVal::Code(Arc::new(ty))
    }

    fn lift(&self, ty: StdTy) -> StdTy {
        StdTy::Lift(Arc::new(ty))
    }

    fn lift_tm(&self, tm: StdVal) -> StdVal {
        StdVal::Lifted(Arc::new(tm))
    }

    fn unlift_tm(&self, tm: StdVal) -> StdVal {
        match tm {
            StdVal::Lifted(v) => (*v).clone(),
            other => panic!("unlifted {other:?}"),
        }
    }
}

/// A finite, comparable description of a standard-model element, obtained
/// by probing functions at the sample points of their domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Observation {
    Bool(bool),
    Table(Vec<Observation>),
    Code(TypeShape),
    Lifted(Box<Observation>),
}

/// The observable structure of a standard-model type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeShape {
    Bool,
    U(usize),
    Lift(Box<TypeShape>),
    /// Domain, and the codomain at each sample point of the domain.
    Pi(Box<TypeShape>, Vec<TypeShape>),
}

const MAX_SAMPLES: usize = 8;

impl StdTy {
    /// Deterministic sample elements. Exhaustive for booleans and for
    /// function spaces small enough to enumerate.
    pub fn samples(&self) -> Vec<StdVal> {
        match self {
            StdTy::Bool => vec![StdVal::Bool(true), StdVal::Bool(false)],
            StdTy::Lift(a) => a
                .samples()
                .into_iter()
                .map(|v| StdVal::Lifted(Arc::new(v)))
                .collect(),
            StdTy::U(0) => vec![
                StdVal::Code(Arc::new(StdTy::Bool)),
                StdVal::Code(Arc::new(StdTy::Pi(
                    Arc::new(StdTy::Bool),
                    Arc::new(|_| StdTy::Bool),
                ))),
            ],
            StdTy::U(i) => {
                let mut lifted = StdTy::Bool;
                for _ in 0..*i {
                    lifted = StdTy::Lift(Arc::new(lifted));
                }
                vec![
                    StdVal::Code(Arc::new(StdTy::U(i - 1))),
                    StdVal::Code(Arc::new(lifted)),
                ]
            }
            StdTy::Pi(dom, cod) => {
                let points = dom.samples();
                let outs: Vec<Vec<StdVal>> = points.iter().map(|p| cod(p.clone()).samples()).collect();
                let keys: Arc<Vec<Observation>> =
                    Arc::new(points.iter().map(|p| dom.observe(p)).collect());
                let mut choices: Vec<Vec<usize>> = vec![vec![]];
                for o in &outs {
                    let mut next = Vec::new();
                    'outer: for prefix in &choices {
                        for k in 0..o.len().max(1) {
                            let mut c = prefix.clone();
                            c.push(k);
                            next.push(c);
                            if next.len() >= MAX_SAMPLES {
                                break 'outer;
                            }
                        }
                    }
                    choices = next;
                }
                choices
                    .into_iter()
                    .map(|choice| {
                        let table: Vec<Option<StdVal>> = choice
                            .iter()
                            .zip(&outs)
                            .map(|(&k, o)| o.get(k).cloned())
                            .collect();
                        let (dom, cod, keys) = (dom.clone(), cod.clone(), keys.clone());
                        StdVal::Fun(Arc::new(move |x| {
                            let key = dom.observe(&x);
                            let hit = keys.iter().position(|k| *k == key);
                            match hit.and_then(|i| table[i].clone()) {
                                Some(v) => v,
                                None => cod(x).samples().swap_remove(0),
                            }
                        }))
                    })
                    .collect()
            }
        }
    }

    pub fn shape(&self) -> TypeShape {
        match self {
            StdTy::Bool => TypeShape::Bool,
            StdTy::U(i) => TypeShape::U(*i),
            StdTy::Lift(a) => TypeShape::Lift(Box::new(a.shape())),
            StdTy::Pi(dom, cod) => TypeShape::Pi(
                Box::new(dom.shape()),
                dom.samples().into_iter().map(|p| cod(p).shape()).collect(),
            ),
        }
    }

    /// Observes an element of this type.
    pub fn observe(&self, v: &StdVal) -> Observation {
        match (self, v) {
            (StdTy::Bool, StdVal::Bool(b)) => Observation::Bool(*b),
            (StdTy::Pi(dom, cod), StdVal::Fun(f)) => Observation::Table(
                dom.samples()
                    .into_iter()
                    .map(|p| cod(p.clone()).observe(&f(p)))
                    .collect(),
            ),
            (StdTy::U(_), StdVal::Code(ty)) => Observation::Code(ty.shape()),
            (StdTy::Lift(a), StdVal::Lifted(x)) => Observation::Lifted(Box::new(a.observe(x))),
            (ty, v) => panic!("{v:?} is not an element of {ty:?}"),
        }
    }
}

/// A model displayed over closed syntax: each type of the base gets a family
/// of displayed types, each term a displayed element over it.
pub trait DisplayedModelSignature {
    type TyD: Clone;
    type TmD: Clone;

    fn pi_d(&self, dom: Self::TyD, cod: Binder<(Term, Self::TmD), Self::TyD>) -> Self::TyD;
    /// `app•(f•, a•)`; the base argument is passed along with its witness.
    fn app_d(&self, fun: &Self::TmD, arg: &Term, arg_d: &Self::TmD) -> Self::TmD;
    fn lam_d(&self, body: Binder<(Term, Self::TmD), Self::TmD>) -> Self::TmD;

    fn bool_d(&self) -> Self::TyD;
    fn true_d(&self) -> Self::TmD;
    fn false_d(&self) -> Self::TmD;
    fn elim_bool_d(
        &self,
        motive: Binder<(Term, Self::TmD), Self::TyD>,
        tcase: &Self::TmD,
        fcase: &Self::TmD,
        scrut: &Self::TmD,
    ) -> Self::TmD;

    fn universe_d(&self, level: usize) -> Self::TyD;
    fn el_d(&self, code: &Self::TmD) -> Self::TyD;
    fn code_d(&self, ty: Self::TyD) -> Self::TmD;

    fn lift_d(&self, ty: Self::TyD) -> Self::TyD;
    fn lift_tm_d(&self, tm: &Self::TmD) -> Self::TmD;
    fn unlift_tm_d(&self, tm: &Self::TmD) -> Self::TmD;
}
