//! Named surface syntax: parsing, name resolution and printing.

mod parse;
mod print;
mod syntax;

pub use parse::{parse, parse_document, ParseError};
pub use print::{print_term, show};
pub use syntax::{Document, Span, SurfaceKind, SurfaceTerm};

use crate::kernel::Term;

/// Parses and resolves a closed term.
pub fn read_term(src: &str) -> Result<Term, ParseError> {
    parse(src)?.resolve()
}

/// Parses and resolves a closed type.
pub fn read_type(src: &str) -> Result<Term, ParseError> {
    parse(src)?.resolve_type()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_constants() {
        assert_eq!(read_term("true"), Ok(Term::True));
        assert_eq!(read_type("U1"), Ok(Term::U(1)));
    }

    #[test]
    fn reads_negation() {
        assert_eq!(
            read_term("fun b => elim b at _ => Bool | false | true"),
            Ok(Term::negation())
        );
    }

    #[test]
    fn reads_polymorphic_identity_type() {
        let expected = Term::pi(
            Term::U(0),
            Term::arrow(Term::el(Term::Var(0)), Term::el(Term::Var(0))),
        );
        assert_eq!(read_type("(A : U0) -> A -> A"), Ok(expected));
    }

    #[test]
    fn reads_document_with_ascription() {
        let doc = parse_document("-- identity\nfun A x => x\n  : (A : U0) -> A -> A\n").unwrap();
        let (t, ty) = doc.resolve().unwrap();
        assert_eq!(t, Term::lam(Term::lam(Term::Var(0))));
        assert!(ty.is_some());
    }

    #[test]
    fn unknown_identifier_has_position() {
        let err = read_term("fun x =>\n  y").unwrap_err();
        assert_eq!((err.span.line, err.span.col), (2, 3));
        assert!(err.message.contains("unknown identifier"));
    }

    #[test]
    fn syntax_error_has_position() {
        let err = parse("fun x => (x").unwrap_err();
        assert_eq!(err.span.line, 1);
        assert_eq!(err.span.col, 12);
        let err = parse("true )").unwrap_err();
        assert_eq!(err.to_string(), "1:6: expected end of input, found `)`");
    }

    #[test]
    fn prefix_operators_take_atoms() {
        assert_eq!(
            read_term("lift (unlift (lift true))"),
            Ok(Term::lift_tm(Term::unlift_tm(Term::lift_tm(Term::True))))
        );
        assert_eq!(
            read_type("El (code Bool) -> Lift Bool"),
            Ok(Term::arrow(Term::el(Term::code(Term::Bool)), Term::lift(Term::Bool)))
        );
    }

    #[test]
    fn shadowing_picks_innermost() {
        assert_eq!(read_term("fun x x => x"), Ok(Term::lam(Term::lam(Term::Var(0)))));
        assert_eq!(read_term("fun x y => x"), Ok(Term::lam(Term::lam(Term::Var(1)))));
    }

    #[test]
    fn print_parse_fixpoint() {
        let src = "fun f => elim f true at z => Bool -> Bool | fun q => q | fun q => f q";
        let printed = print_term(&read_term(src).unwrap());
        assert_eq!(print_term(&read_term(&printed).unwrap()), printed);
        assert_eq!(read_term(&printed).unwrap(), read_term(src).unwrap());
    }
}
