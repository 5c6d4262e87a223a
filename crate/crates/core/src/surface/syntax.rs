use crate::kernel::Term;

use super::parse::ParseError;

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

/// Named syntax as written by the user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceTerm {
    pub kind: SurfaceKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceKind {
    Var(String),
    Lam(String, Box<SurfaceTerm>),
    App(Box<SurfaceTerm>, Box<SurfaceTerm>),
    /// `(x : A) -> B`; plain arrows bind `_`.
    Pi(String, Box<SurfaceTerm>, Box<SurfaceTerm>),
    Bool,
    True,
    False,
    Elim {
        scrut: Box<SurfaceTerm>,
        binder: String,
        motive: Box<SurfaceTerm>,
        tcase: Box<SurfaceTerm>,
        fcase: Box<SurfaceTerm>,
    },
    U(usize),
    El(Box<SurfaceTerm>),
    Code(Box<SurfaceTerm>),
    Lift(Box<SurfaceTerm>),
    LiftTm(Box<SurfaceTerm>),
    Unlift(Box<SurfaceTerm>),
}

impl SurfaceTerm {
    pub fn new(kind: SurfaceKind, span: Span) -> SurfaceTerm {
        SurfaceTerm { kind, span }
    }

    fn is_type_former(&self) -> bool {
        matches!(
            self.kind,
            SurfaceKind::Pi(..)
                | SurfaceKind::Bool
                | SurfaceKind::U(_)
                | SurfaceKind::El(_)
                | SurfaceKind::Lift(_)
        )
    }

    /// Resolves names to de Bruijn indices in the empty context.
    ///
    /// A term written where a type is expected and that is not itself a type
    /// former is read as `El` of that term, so `(A : U0) -> A` means
    /// `(A : U0) -> El A`.
    pub fn resolve(&self) -> Result<Term, ParseError> {
        self.resolve_in(&mut Vec::new())
    }

    /// Resolves in a context whose variables are named by `scope`
    /// (innermost last).
    pub fn resolve_in(&self, scope: &mut Vec<String>) -> Result<Term, ParseError> {
        self.term(scope)
    }

    /// Resolves in type position.
    pub fn resolve_type(&self) -> Result<Term, ParseError> {
        self.ty(&mut Vec::new())
    }

    fn ty(&self, scope: &mut Vec<String>) -> Result<Term, ParseError> {
        if self.is_type_former() {
            self.term(scope)
        } else {
            Ok(Term::el(self.term(scope)?))
        }
    }

    fn under<T>(
        scope: &mut Vec<String>,
        name: &str,
        f: impl FnOnce(&mut Vec<String>) -> Result<T, ParseError>,
    ) -> Result<T, ParseError> {
        scope.push(name.to_string());
        let r = f(scope);
        scope.pop();
        r
    }

    fn term(&self, scope: &mut Vec<String>) -> Result<Term, ParseError> {
        Ok(match &self.kind {
            SurfaceKind::Var(name) => {
                let pos = scope
                    .iter()
                    .rev()
                    .position(|n| n == name && n != "_")
                    .ok_or_else(|| {
                        ParseError::new(self.span, format!("unknown identifier `{name}`"))
                    })?;
                Term::Var(pos)
            }
            SurfaceKind::Lam(name, body) => {
                Term::lam(Self::under(scope, name, |s| body.term(s))?)
            }
            SurfaceKind::App(f, a) => Term::app(f.term(scope)?, a.term(scope)?),
            SurfaceKind::Pi(name, dom, cod) => {
                let dom = dom.ty(scope)?;
                Term::pi(dom, Self::under(scope, name, |s| cod.ty(s))?)
            }
            SurfaceKind::Bool => Term::Bool,
            SurfaceKind::True => Term::True,
            SurfaceKind::False => Term::False,
            SurfaceKind::Elim {
                scrut,
                binder,
                motive,
                tcase,
                fcase,
            } => {
                let scrut = scrut.term(scope)?;
                let motive = Self::under(scope, binder, |s| motive.ty(s))?;
                Term::elim_bool(motive, tcase.term(scope)?, fcase.term(scope)?, scrut)
            }
            SurfaceKind::U(i) => Term::U(*i),
            SurfaceKind::El(c) => Term::el(c.term(scope)?),
            SurfaceKind::Code(a) => Term::code(a.ty(scope)?),
            SurfaceKind::Lift(a) => Term::lift(a.ty(scope)?),
            SurfaceKind::LiftTm(a) => Term::lift_tm(a.term(scope)?),
            SurfaceKind::Unlift(a) => Term::unlift_tm(a.term(scope)?),
        })
    }
}

/// The contents of an input file: a term and an optional ascribed type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub term: SurfaceTerm,
    pub ty: Option<SurfaceTerm>,
}

impl Document {
    pub fn resolve(&self) -> Result<(Term, Option<Term>), ParseError> {
        let term = self.term.resolve()?;
        let ty = self.ty.as_ref().map(|t| t.resolve_type()).transpose()?;
        Ok((term, ty))
    }
}
