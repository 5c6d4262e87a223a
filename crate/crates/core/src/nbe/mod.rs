//! Normalization by evaluation.
//!
//! A type is interpreted as a [`SemTy`]: a carrier of values together with
//! `unquote` (neutrals into values) and `quote` (values into normal forms).
//! At `Pi`, quoting introduces one fresh variable per binder by unquoting it
//! at the domain, and an unquoted neutral function applies its spine to the
//! quoted argument. Variables of the context are interpreted by unquoting
//! their own neutral, so `norm` is `quote ∘ eval` in the reflected
//! environment.

mod normal;
mod value;

use std::sync::Arc;

pub use normal::{Ne, Nf};
pub use value::{Closure, Env, LevelRenaming, Neutral, Value};

use crate::kernel::{Checker, Context, Term, TypeError};

/// Values are called semantic values when seen as inhabitants of a [`SemTy`].
pub type SemVal = Value;

/// Evaluates a well-typed term.
///
/// # Panics
///
/// On ill-typed input, e.g. applying a boolean.
pub fn eval(env: &Env, t: &Term) -> Value {
    match t {
        Term::Var(i) => env.lookup(*i).clone(),
        Term::Lam(body) => Value::Lam(Closure {
            env: env.clone(),
            body: body.clone(),
        }),
        Term::App(f, a) => apply(eval(env, f), eval(env, a)),
        Term::Pi(a, b) => Value::Pi(
            Arc::new(eval(env, a)),
            Closure {
                env: env.clone(),
                body: b.clone(),
            },
        ),
        Term::Bool => Value::Bool,
        Term::True => Value::True,
        Term::False => Value::False,
        Term::ElimBool {
            motive,
            tcase,
            fcase,
            scrut,
        } => elim_bool(
            Closure {
                env: env.clone(),
                body: motive.clone(),
            },
            eval(env, tcase),
            eval(env, fcase),
            eval(env, scrut),
        ),
        Term::U(i) => Value::U(*i),
        Term::El(c) => el(eval(env, c)),
        Term::Code(a) => Value::Code(Arc::new(eval(env, a))),
        Term::Lift(a) => Value::Lift(Arc::new(eval(env, a))),
        Term::LiftTm(a) => Value::LiftTm(Arc::new(eval(env, a))),
        Term::UnliftTm(a) => unlift(eval(env, a)),
    }
}

pub fn apply(fun: Value, arg: Value) -> Value {
    match fun {
        Value::Lam(body) => body.apply(arg),
        Value::Neutral { ty, ne } => match &*ty {
            Value::Pi(dom, cod) => Value::neutral(
                cod.apply(arg.clone()),
                Neutral::App {
                    fun: ne,
                    arg,
                    arg_ty: (**dom).clone(),
                },
            ),
            other => panic!("applied a neutral of non-function type {other:?}"),
        },
        other => panic!("applied a non-function {other:?}"),
    }
}

pub fn elim_bool(motive: Closure, tcase: Value, fcase: Value, scrut: Value) -> Value {
    match scrut {
        Value::True => tcase,
        Value::False => fcase,
        Value::Neutral { ne, .. } => Value::neutral(
            motive.apply(Value::Neutral {
                ty: Arc::new(Value::Bool),
                ne: ne.clone(),
            }),
            Neutral::ElimBool {
                motive,
                tcase,
                fcase,
                scrut: ne,
            },
        ),
        other => panic!("eliminated a non-boolean {other:?}"),
    }
}

pub fn el(code: Value) -> Value {
    match code {
        Value::Code(ty) => (*ty).clone(),
        Value::Neutral { ne, .. } => Value::El(ne),
        other => panic!("El of a non-code {other:?}"),
    }
}

pub fn unlift(v: Value) -> Value {
    match v {
        Value::LiftTm(inner) => (*inner).clone(),
        Value::Neutral { ty, ne } => match &*ty {
            Value::Lift(a) => Value::neutral((**a).clone(), Neutral::Unlift(ne)),
            other => panic!("unlifted a neutral of type {other:?}"),
        },
        other => panic!("unlifted a non-lifted value {other:?}"),
    }
}

/// The interpretation of a type. Wraps its type value and provides the
/// unquote and quote maps at a given context length.
#[derive(Debug, Clone, PartialEq)]
pub struct SemTy(pub Value);

impl SemTy {
    /// Reflects a neutral. At `Pi` the result applies its spine to quoted
    /// arguments when it is eventually read back.
    pub fn unquote(&self, ne: Neutral) -> SemVal {
        Value::neutral(self.0.clone(), ne)
    }

    /// Reifies a value in a context of length `depth`.
    pub fn quote(&self, depth: usize, v: &SemVal) -> Nf {
        quote(depth, &self.0, v)
    }

    pub fn restrict(&self, r: &LevelRenaming) -> SemTy {
        SemTy(self.0.restrict(r))
    }
}

/// Fresh variable of level `level` at type `ty`: `unquote(ty, var(level))`.
pub fn fresh(ty: &Value, level: usize) -> Value {
    SemTy(ty.clone()).unquote(Neutral::Var(level))
}

/// Reads back a value at a type, in a context of length `depth`.
pub fn quote(depth: usize, ty: &Value, v: &Value) -> Nf {
    match ty {
        Value::Pi(dom, cod) => {
            let x = fresh(dom, depth);
            let body = quote(depth + 1, &cod.apply(x.clone()), &apply(v.clone(), x));
            Nf::Lam(Box::new(body))
        }
        Value::Bool => match v {
            Value::True => Nf::True,
            Value::False => Nf::False,
            Value::Neutral { ne, .. } => Nf::NeAtBool(quote_neutral(depth, ne)),
            other => panic!("quoted {other:?} at Bool"),
        },
        Value::U(_) => match v {
            Value::Code(a) => match quote_type(depth, a) {
                Nf::El(ne) => Nf::NeAtU(ne),
                ty => Nf::Code(Box::new(ty)),
            },
            Value::Neutral { ne, .. } => Nf::NeAtU(quote_neutral(depth, ne)),
            other => panic!("quoted {other:?} at a universe"),
        },
        Value::Lift(a) => Nf::LiftTm(Box::new(quote(depth, a, &unlift(v.clone())))),
        Value::El(_) => match v {
            Value::Neutral { ne, .. } => Nf::NeAtEl(quote_neutral(depth, ne)),
            other => panic!("quoted {other:?} at a neutral type"),
        },
        other => panic!("quoted at non-type {other:?}"),
    }
}

/// Reads back a type value.
pub fn quote_type(depth: usize, ty: &Value) -> Nf {
    match ty {
        Value::Pi(dom, cod) => {
            let x = fresh(dom, depth);
            Nf::Pi(
                Box::new(quote_type(depth, dom)),
                Box::new(quote_type(depth + 1, &cod.apply(x))),
            )
        }
        Value::Bool => Nf::Bool,
        Value::U(i) => Nf::U(*i),
        Value::El(ne) => Nf::El(quote_neutral(depth, ne)),
        Value::Lift(a) => Nf::Lift(Box::new(quote_type(depth, a))),
        other => panic!("quoted non-type {other:?} as a type"),
    }
}

pub fn quote_neutral(depth: usize, ne: &Neutral) -> Ne {
    match ne {
        Neutral::Var(level) => Ne::Var(depth - 1 - level),
        Neutral::App { fun, arg, arg_ty } => Ne::App(
            Box::new(quote_neutral(depth, fun)),
            Box::new(quote(depth, arg_ty, arg)),
        ),
        Neutral::ElimBool {
            motive,
            tcase,
            fcase,
            scrut,
        } => {
            let x = fresh(&Value::Bool, depth);
            Ne::ElimBool {
                motive: Box::new(quote_type(depth + 1, &motive.apply(x))),
                tcase: Box::new(quote(depth, &motive.apply(Value::True), tcase)),
                fcase: Box::new(quote(depth, &motive.apply(Value::False), fcase)),
                scrut: Box::new(quote_neutral(depth, scrut)),
            }
        }
        Neutral::Unlift(n) => Ne::Unlift(Box::new(quote_neutral(depth, n))),
    }
}

/// The environment in which every variable of `ctx` is unquoted at the
/// interpretation of its type.
pub fn reflect_context(ctx: &Context) -> Env {
    let mut env = Env::new();
    for (level, ty) in ctx.entries().iter().enumerate() {
        let ty_v = eval(&env, ty);
        env.push(fresh(&ty_v, level));
    }
    env
}

/// Normal form of `t : ty` in `ctx`, after typechecking.
pub fn norm(ctx: &Context, ty: &Term, t: &Term) -> Result<Nf, TypeError> {
    norm_with(&Checker::default(), ctx, ty, t)
}

pub fn norm_with(checker: &Checker, ctx: &Context, ty: &Term, t: &Term) -> Result<Nf, TypeError> {
    checker.check_context(ctx)?;
    checker.is_type(ctx, ty)?;
    checker.check(ctx, t, ty)?;
    Ok(norm_unchecked(ctx, ty, t))
}

/// Normal form of a type in `ctx`, after checking that it is one.
pub fn norm_type(ctx: &Context, ty: &Term) -> Result<Nf, TypeError> {
    let checker = Checker::default();
    checker.check_context(ctx)?;
    checker.is_type(ctx, ty)?;
    Ok(norm_type_unchecked(ctx, ty))
}

/// [`norm`] without the typechecking step. The input must be well typed.
pub fn norm_unchecked(ctx: &Context, ty: &Term, t: &Term) -> Nf {
    let env = reflect_context(ctx);
    quote(ctx.len(), &eval(&env, ty), &eval(&env, t))
}

/// [`norm_type`] without the well-formedness check.
pub fn norm_type_unchecked(ctx: &Context, ty: &Term) -> Nf {
    let env = reflect_context(ctx);
    quote_type(ctx.len(), &eval(&env, ty))
}

/// Evaluates `t` in the reflected environment of `ctx`.
pub fn eval_in(ctx: &Context, t: &Term) -> Value {
    eval(&reflect_context(ctx), t)
}
