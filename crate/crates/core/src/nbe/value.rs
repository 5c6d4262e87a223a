//! The semantic domain.
//!
//! Values live in a context and refer to its variables by de Bruijn level,
//! so moving a value into an extended context needs no work. Moving it along
//! an arbitrary renaming is [`Value::restrict`]; together these make every
//! carrier a Kripke family over renamings.

use std::sync::Arc;

use crate::kernel::{Renaming, Term};

/// An evaluation environment. The last element is bound by index 0.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Env(Vec<Value>);

impl Env {
    pub fn new() -> Env {
        Env(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, v: Value) {
        self.0.push(v)
    }

    pub fn extended(&self, v: Value) -> Env {
        let mut e = self.clone();
        e.push(v);
        e
    }

    pub fn lookup(&self, ix: usize) -> &Value {
        &self.0[self.0.len() - 1 - ix]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Value> {
        self.0.iter()
    }

    pub fn restrict(&self, r: &LevelRenaming) -> Env {
        Env(self.0.iter().map(|v| v.restrict(r)).collect())
    }
}

impl FromIterator<Value> for Env {
    fn from_iter<I: IntoIterator<Item = Value>>(iter: I) -> Self {
        Env(iter.into_iter().collect())
    }
}

/// A term with one free variable, closed over an environment.
#[derive(Debug, Clone, PartialEq)]
pub struct Closure {
    pub env: Env,
    pub body: Arc<Term>,
}

impl Closure {
    pub fn apply(&self, arg: Value) -> Value {
        super::eval(&self.env.extended(arg), &self.body)
    }

    pub fn restrict(&self, r: &LevelRenaming) -> Closure {
        Closure {
            env: self.env.restrict(r),
            body: self.body.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Pi(Arc<Value>, Closure),
    Bool,
    U(usize),
    /// `El` of a neutral code; `El` of a code value computes away.
    El(Arc<Neutral>),
    Lift(Arc<Value>),
    Lam(Closure),
    True,
    False,
    Code(Arc<Value>),
    LiftTm(Arc<Value>),
    /// A neutral together with its type.
    Neutral {
        ty: Arc<Value>,
        ne: Arc<Neutral>,
    },
}

/// Variables are de Bruijn levels. Arguments of applications keep their
/// type.
#[derive(Debug, Clone, PartialEq)]
pub enum Neutral {
    Var(usize),
    App {
        fun: Arc<Neutral>,
        arg: Value,
        arg_ty: Value,
    },
    ElimBool {
        motive: Closure,
        tcase: Value,
        fcase: Value,
        scrut: Arc<Neutral>,
    },
    Unlift(Arc<Neutral>),
}

impl Value {
    pub fn neutral(ty: Value, ne: Neutral) -> Value {
        Value::Neutral {
            ty: Arc::new(ty),
            ne: Arc::new(ne),
        }
    }

    /// Moves a value along a renaming of levels.
    pub fn restrict(&self, r: &LevelRenaming) -> Value {
        match self {
            Value::Pi(a, b) => Value::Pi(Arc::new(a.restrict(r)), b.restrict(r)),
            Value::Bool => Value::Bool,
            Value::U(i) => Value::U(*i),
            Value::El(ne) => Value::El(Arc::new(ne.restrict(r))),
            Value::Lift(a) => Value::Lift(Arc::new(a.restrict(r))),
            Value::Lam(c) => Value::Lam(c.restrict(r)),
            Value::True => Value::True,
            Value::False => Value::False,
            Value::Code(a) => Value::Code(Arc::new(a.restrict(r))),
            Value::LiftTm(a) => Value::LiftTm(Arc::new(a.restrict(r))),
            Value::Neutral { ty, ne } => Value::Neutral {
                ty: Arc::new(ty.restrict(r)),
                ne: Arc::new(ne.restrict(r)),
            },
        }
    }
}

impl Neutral {
    pub fn restrict(&self, r: &LevelRenaming) -> Neutral {
        match self {
            Neutral::Var(l) => Neutral::Var(r.apply(*l)),
            Neutral::App { fun, arg, arg_ty } => Neutral::App {
                fun: Arc::new(fun.restrict(r)),
                arg: arg.restrict(r),
                arg_ty: arg_ty.restrict(r),
            },
            Neutral::ElimBool {
                motive,
                tcase,
                fcase,
                scrut,
            } => Neutral::ElimBool {
                motive: motive.restrict(r),
                tcase: tcase.restrict(r),
                fcase: fcase.restrict(r),
                scrut: Arc::new(scrut.restrict(r)),
            },
            Neutral::Unlift(n) => Neutral::Unlift(Arc::new(n.restrict(r))),
        }
    }
}

/// A renaming expressed on de Bruijn levels: `map[l]` is the new level of
/// old level `l`, and `new_len` the length of the new context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelRenaming {
    map: Vec<usize>,
    new_len: usize,
}

impl LevelRenaming {
    pub fn new(map: Vec<usize>, new_len: usize) -> LevelRenaming {
        debug_assert!(map.iter().all(|&l| l < new_len));
        LevelRenaming { map, new_len }
    }

    /// The level form of a syntactic renaming from `r.target()` to `r.source()`.
    pub fn from_renaming(r: &Renaming) -> LevelRenaming {
        let n = r.target().len();
        let m = r.source().len();
        let map = (0..n).map(|lvl| m - 1 - r.map()[n - 1 - lvl]).collect();
        LevelRenaming { map, new_len: m }
    }

    pub fn new_len(&self) -> usize {
        self.new_len
    }

    /// Levels past the old context are fresh variables introduced later and
    /// keep their offset from the end.
    pub fn apply(&self, level: usize) -> usize {
        match self.map.get(level) {
            Some(&l) => l,
            None => level - self.map.len() + self.new_len,
        }
    }
}
