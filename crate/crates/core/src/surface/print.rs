use std::fmt::Write;

use crate::kernel::Term;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Prec {
    Expr,
    App,
    Atom,
}

/// Prints a closed term (free variables get names as if bound outside).
pub fn print_term(t: &Term) -> String {
    show(0, t)
}

/// Prints `t` in a context of length `depth`. The binder at depth `d` is
/// named `x{d}`, so names are determined by position alone.
pub fn show(depth: usize, t: &Term) -> String {
    let depth = depth.max(t.free_var_bound());
    let mut out = String::new();
    write_term(&mut out, depth, t, Prec::Expr);
    out
}

fn name(level: usize) -> String {
    format!("x{level}")
}

fn prec_of(t: &Term) -> Prec {
    match t {
        Term::Lam(_) | Term::Pi(..) | Term::ElimBool { .. } => Prec::Expr,
        Term::App(..)
        | Term::El(_)
        | Term::Code(_)
        | Term::Lift(_)
        | Term::LiftTm(_)
        | Term::UnliftTm(_) => Prec::App,
        Term::Var(_) | Term::Bool | Term::True | Term::False | Term::U(_) => Prec::Atom,
    }
}

fn write_term(out: &mut String, depth: usize, t: &Term, ctx: Prec) {
    let own = prec_of(t);
    let parens = own < ctx;
    if parens {
        out.push('(');
    }
    match t {
        Term::Var(i) => out.push_str(&name(depth - 1 - i)),
        Term::Lam(body) => {
            let _ = write!(out, "fun {} => ", name(depth));
            write_term(out, depth + 1, body, Prec::Expr);
        }
        Term::App(f, a) => {
            // prefix forms in head position need their own parentheses
            let head_prec = if matches!(**f, Term::App(..)) {
                Prec::App
            } else {
                Prec::Atom
            };
            write_term(out, depth, f, head_prec);
            out.push(' ');
            write_term(out, depth, a, Prec::Atom);
        }
        Term::Pi(a, b) => {
            if b.mentions(0) {
                let _ = write!(out, "({} : ", name(depth));
                write_term(out, depth, a, Prec::Expr);
                out.push_str(") -> ");
            } else {
                write_term(out, depth, a, Prec::App);
                out.push_str(" -> ");
            }
            write_term(out, depth + 1, b, Prec::Expr);
        }
        Term::Bool => out.push_str("Bool"),
        Term::True => out.push_str("true"),
        Term::False => out.push_str("false"),
        Term::ElimBool {
            motive,
            tcase,
            fcase,
            scrut,
        } => {
            out.push_str("elim ");
            write_term(out, depth, scrut, Prec::App);
            let _ = write!(out, " at {} => ", name(depth));
            write_term(out, depth + 1, motive, Prec::Expr);
            out.push_str(" | ");
            write_term(out, depth, tcase, Prec::Expr);
            out.push_str(" | ");
            write_term(out, depth, fcase, Prec::Expr);
        }
        Term::U(i) => {
            let _ = write!(out, "U{i}");
        }
        Term::El(x) => prefix(out, depth, "El", x),
        Term::Code(x) => prefix(out, depth, "code", x),
        Term::Lift(x) => prefix(out, depth, "Lift", x),
        Term::LiftTm(x) => prefix(out, depth, "lift", x),
        Term::UnliftTm(x) => prefix(out, depth, "unlift", x),
    }
    if parens {
        out.push(')');
    }
}

fn prefix(out: &mut String, depth: usize, op: &str, arg: &Term) {
    out.push_str(op);
    out.push(' ');
    write_term(out, depth, arg, Prec::Atom);
}
