use sconekit::kernel::{check, Context, Term};
use sconekit::nbe;
use sconekit::nbe::Nf;
use sconekit::oracle::gen::{gen_nf, gen_term};
use sconekit::oracle::{step, GenBudget, Generator, Oracle};
use sconekit::surface::show;

fn corpus(seed: u64, n: usize) -> Vec<(Context, Term, Term)> {
    let mut g = Generator::new(GenBudget::default().with_seed(seed)).unwrap();
    let mut out = Vec::new();
    while out.len() < n {
        let ctx = g.gen_context().unwrap();
        let ty = g.gen_type(&ctx, 3).unwrap();
        if let Ok(t) = g.gen_term(&ctx, &ty) {
            out.push((ctx, ty, t));
        }
    }
    out
}

#[test]
fn generated_terms_typecheck_in_the_kernel() {
    for (ctx, ty, t) in corpus(1, 300) {
        assert_eq!(check(&ctx, &t, &ty), Ok(()), "{} : {}", show(ctx.len(), &t), show(ctx.len(), &ty));
    }
}

#[test]
fn oracle_and_nbe_agree() {
    let o = Oracle::default();
    for (ctx, ty, t) in corpus(2, 300) {
        let by_nbe = nbe::norm(&ctx, &ty, &t).unwrap();
        let by_oracle = o.norm_nf(&ctx, &ty, &t).unwrap();
        assert_eq!(by_nbe, by_oracle, "{} : {}", show(ctx.len(), &t), show(ctx.len(), &ty));
    }
}

#[test]
fn every_trace_step_preserves_the_type() {
    for (ctx, ty, t) in corpus(3, 300) {
        let mut cur = t;
        while let Some((_, next)) = step(&cur) {
            assert_eq!(check(&ctx, &next, &ty), Ok(()), "{}", show(ctx.len(), &next));
            cur = next;
        }
    }
}

#[test]
fn generation_is_deterministic() {
    assert_eq!(corpus(17, 50), corpus(17, 50));
    let budget = GenBudget::default().with_seed(4);
    let ty = Term::arrow(Term::Bool, Term::Bool);
    let a = gen_nf(budget, &Context::empty(), &ty).unwrap();
    assert_eq!(a, gen_nf(budget, &Context::empty(), &ty).unwrap());
    assert!(matches!(a, Nf::Lam(_)));
    let b = gen_term(budget, &Context::empty(), &Term::Bool).unwrap();
    assert_eq!(check(&Context::empty(), &b, &Term::Bool), Ok(()));
}

#[test]
fn traces_name_their_rules() {
    let t = Term::app(Term::negation(), Term::True);
    let trace = Oracle::default().reduce(&t);
    let names: Vec<_> = trace.steps.iter().map(|s| s.rule.name()).collect();
    assert_eq!(names, ["beta", "elimBool-true"]);
    assert_eq!(trace.result, Term::False);
    assert!(!trace.fuel_exhausted);
}

#[test]
fn invalid_budgets_are_rejected() {
    let budget = GenBudget {
        max_term_size: 0,
        ..GenBudget::default()
    };
    assert!(Generator::new(budget).is_err());
}
