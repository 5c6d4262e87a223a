use std::fmt;

use crate::kernel::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Beta,
    ElimBoolTrue,
    ElimBoolFalse,
    ElCode,
    CodeEl,
    LiftRoundtrip,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Beta => "beta",
            Rule::ElimBoolTrue => "elimBool-true",
            Rule::ElimBoolFalse => "elimBool-false",
            Rule::ElCode => "el-code",
            Rule::CodeEl => "code-el",
            Rule::LiftRoundtrip => "lift-roundtrip",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One contraction. `path` lists child positions (in the order of
/// [`Term::children`]) from the root to the redex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub path: Vec<usize>,
    pub rule: Rule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<Step>,
    pub result: Term,
    pub fuel_exhausted: bool,
}

/// Contracts `t` if it is itself a redex.
pub fn contract(t: &Term) -> Option<(Rule, Term)> {
    match t {
        Term::App(f, a) => match &**f {
            Term::Lam(body) => Some((Rule::Beta, body.instantiate(a))),
            _ => None,
        },
        Term::ElimBool {
            tcase,
            fcase,
            scrut,
            ..
        } => match &**scrut {
            Term::True => Some((Rule::ElimBoolTrue, (**tcase).clone())),
            Term::False => Some((Rule::ElimBoolFalse, (**fcase).clone())),
            _ => None,
        },
        Term::El(c) => match &**c {
            Term::Code(a) => Some((Rule::ElCode, (**a).clone())),
            _ => None,
        },
        Term::Code(a) => match &**a {
            Term::El(c) => Some((Rule::CodeEl, (**c).clone())),
            _ => None,
        },
        Term::UnliftTm(x) => match &**x {
            Term::LiftTm(a) => Some((Rule::LiftRoundtrip, (**a).clone())),
            _ => None,
        },
        Term::LiftTm(x) => match &**x {
            Term::UnliftTm(a) => Some((Rule::LiftRoundtrip, (**a).clone())),
            _ => None,
        },
        _ => None,
    }
}

/// Contracts the leftmost-outermost redex.
pub fn step(t: &Term) -> Option<(Step, Term)> {
    if let Some((rule, out)) = contract(t) {
        return Some((Step { path: vec![], rule }, out));
    }
    let kids: Vec<&Term> = t.children().map(|(_, c)| c).collect();
    for (k, child) in kids.iter().enumerate() {
        if let Some((mut s, reduced)) = step(child) {
            s.path.insert(0, k);
            let mut new_kids: Vec<Term> = kids.iter().map(|c| (*c).clone()).collect();
            new_kids[k] = reduced;
            return Some((s, t.with_children(new_kids)));
        }
    }
    None
}

pub(super) fn reduce(t: &Term, fuel: usize) -> ReductionTrace {
    let mut steps = Vec::new();
    let mut cur = t.clone();
    loop {
        let Some((s, next)) = step(&cur) else {
            return ReductionTrace {
                steps,
                result: cur,
                fuel_exhausted: false,
            };
        };
        if steps.len() == fuel {
            return ReductionTrace {
                steps,
                result: cur,
                fuel_exhausted: true,
            };
        }
        steps.push(s);
        cur = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negation_trace() {
        let t = Term::app(Term::negation(), Term::True);
        let trace = reduce(&t, 100);
        let rules: Vec<Rule> = trace.steps.iter().map(|s| s.rule).collect();
        assert_eq!(rules, vec![Rule::Beta, Rule::ElimBoolTrue]);
        assert_eq!(trace.result, Term::False);
        assert!(!trace.fuel_exhausted);
    }

    #[test]
    fn outermost_first() {
        // (fun x => x) ((fun y => y) true): the outer redex fires first
        let inner = Term::app(Term::lam(Term::Var(0)), Term::True);
        let t = Term::app(Term::lam(Term::Var(0)), inner);
        let trace = reduce(&t, 100);
        assert_eq!(trace.steps[0].path, Vec::<usize>::new());
        assert_eq!(trace.steps.len(), 2);
    }

    #[test]
    fn path_points_into_children() {
        let t = Term::lam(Term::app(Term::lam(Term::Var(0)), Term::Var(0)));
        let (s, out) = step(&t).unwrap();
        assert_eq!(s.path, vec![0]);
        assert_eq!(out, Term::lam(Term::Var(0)));
    }

    #[test]
    fn universe_and_lift_rules() {
        assert_eq!(contract(&Term::el(Term::code(Term::Bool))).unwrap().0, Rule::ElCode);
        assert_eq!(contract(&Term::code(Term::el(Term::Var(0)))).unwrap().0, Rule::CodeEl);
        let t = Term::unlift_tm(Term::lift_tm(Term::True));
        assert_eq!(contract(&t), Some((Rule::LiftRoundtrip, Term::True)));
        let t = Term::lift_tm(Term::unlift_tm(Term::Var(0)));
        assert_eq!(contract(&t), Some((Rule::LiftRoundtrip, Term::Var(0))));
    }

    #[test]
    fn fuel_limits_steps() {
        let t = Term::app(Term::negation(), Term::True);
        let trace = reduce(&t, 1);
        assert!(trace.fuel_exhausted);
        assert_eq!(trace.steps.len(), 1);
    }
}
