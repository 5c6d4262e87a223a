//! Typed normal and neutral forms.
//!
//! Normal forms are η-long at `Pi` and `Lift`: every normal inhabitant of a
//! function type is a lambda and of a lifted type a lift. At a universe a
//! normal form is either a code for a type normal form other than `El`, or
//! a neutral; `code (El c)` contracts to `c`. Neutrals are observed at `Bool`, at universes and at `El` of a neutral code.

use crate::kernel::Term;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Nf {
    Lam(Box<Nf>),
    True,
    False,
    NeAtBool(Ne),
    NeAtEl(Ne),
    NeAtU(Ne),
    /// A code for a type normal form.
    Code(Box<Nf>),
    LiftTm(Box<Nf>),
    // type normal forms
    Pi(Box<Nf>, Box<Nf>),
    Bool,
    U(usize),
    El(Ne),
    Lift(Box<Nf>),
}

/// A variable head followed by a spine of eliminations. Variables are de
/// Bruijn indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ne {
    Var(usize),
    App(Box<Ne>, Box<Nf>),
    ElimBool {
        motive: Box<Nf>,
        tcase: Box<Nf>,
        fcase: Box<Nf>,
        scrut: Box<Ne>,
    },
    Unlift(Box<Ne>),
}

impl Nf {
    /// Forgets normality.
    pub fn embed(&self) -> Term {
        match self {
            Nf::Lam(b) => Term::lam(b.embed()),
            Nf::True => Term::True,
            Nf::False => Term::False,
            Nf::NeAtBool(ne) | Nf::NeAtEl(ne) | Nf::NeAtU(ne) => ne.embed(),
            Nf::Code(ty) => Term::code(ty.embed()),
            Nf::LiftTm(t) => Term::lift_tm(t.embed()),
            Nf::Pi(a, b) => Term::pi(a.embed(), b.embed()),
            Nf::Bool => Term::Bool,
            Nf::U(i) => Term::U(*i),
            Nf::El(ne) => Term::el(ne.embed()),
            Nf::Lift(a) => Term::lift(a.embed()),
        }
    }

    /// Height of the tree, counting neutral spines.
    pub fn depth(&self) -> usize {
        1 + match self {
            Nf::True | Nf::False | Nf::Bool | Nf::U(_) => 0,
            Nf::Lam(b) | Nf::Code(b) | Nf::LiftTm(b) | Nf::Lift(b) => b.depth(),
            Nf::NeAtBool(ne) | Nf::NeAtEl(ne) | Nf::NeAtU(ne) | Nf::El(ne) => ne.depth(),
            Nf::Pi(a, b) => a.depth().max(b.depth()),
        }
    }
}

impl Ne {
    pub fn embed(&self) -> Term {
        match self {
            Ne::Var(i) => Term::Var(*i),
            Ne::App(f, a) => Term::app(f.embed(), a.embed()),
            Ne::ElimBool {
                motive,
                tcase,
                fcase,
                scrut,
            } => Term::elim_bool(motive.embed(), tcase.embed(), fcase.embed(), scrut.embed()),
            Ne::Unlift(n) => Term::unlift_tm(n.embed()),
        }
    }

    pub fn depth(&self) -> usize {
        1 + match self {
            Ne::Var(_) => 0,
            Ne::App(f, a) => f.depth().max(a.depth()),
            Ne::ElimBool {
                motive,
                tcase,
                fcase,
                scrut,
            } => motive
                .depth()
                .max(tcase.depth())
                .max(fcase.depth())
                .max(scrut.depth()),
            Ne::Unlift(n) => n.depth(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embed_constants() {
        assert_eq!(Nf::True.embed(), Term::True);
        assert_eq!(
            Nf::Lam(Box::new(Nf::NeAtBool(Ne::Var(0)))).embed(),
            Term::lam(Term::Var(0))
        );
    }
}
