mod common;

use proptest::prelude::*;
use sconekit::kernel::{check, rename, Context, Term};
use sconekit::nbe::{self, eval, reflect_context, LevelRenaming, Ne, Neutral, Nf, SemTy, Value};
use sconekit::oracle::Oracle;
use sconekit::surface::show;

use common::{generator, renaming_into, typed_nf, typed_term};

fn bool_to_bool() -> Term {
    Term::arrow(Term::Bool, Term::Bool)
}

#[test]
fn unquoted_function_applies_its_spine() {
    let sem = SemTy(Value::Pi(
        std::sync::Arc::new(Value::Bool),
        nbe::Closure {
            env: nbe::Env::new(),
            body: std::sync::Arc::new(Term::Bool),
        },
    ));
    let f = sem.unquote(Neutral::Var(0));
    let applied = nbe::apply(f.clone(), Value::True);
    assert_eq!(
        nbe::quote(1, &Value::Bool, &applied),
        Nf::NeAtBool(Ne::App(Box::new(Ne::Var(0)), Box::new(Nf::True)))
    );
    assert_eq!(
        sem.quote(1, &f),
        Nf::Lam(Box::new(Nf::NeAtBool(Ne::App(
            Box::new(Ne::Var(1)),
            Box::new(Nf::NeAtBool(Ne::Var(0)))
        ))))
    );
}

#[test]
fn reflected_variables_are_unquoted_neutrals() {
    let ctx = Context::empty().extend(Term::Bool);
    let env = reflect_context(&ctx);
    assert_eq!(eval(&env, &Term::Var(0)), SemTy(Value::Bool).unquote(Neutral::Var(0)));
    assert_eq!(eval(&nbe::Env::new(), &Term::True), Value::True);
}

#[test]
fn function_variable_is_eta_expanded() {
    let ctx = Context::empty().extend(bool_to_bool());
    let nf = nbe::norm(&ctx, &bool_to_bool(), &Term::Var(0)).unwrap();
    let by_oracle = Oracle::default().norm_nf(&ctx, &bool_to_bool(), &Term::Var(0)).unwrap();
    assert_eq!(nf, by_oracle);
    assert_eq!(nf.embed(), Term::lam(Term::app(Term::Var(1), Term::Var(0))));
}

#[test]
fn embedding_examples() {
    assert_eq!(Nf::True.embed(), Term::True);
    assert_eq!(Nf::Lam(Box::new(Nf::NeAtBool(Ne::Var(0)))).embed(), Term::lam(Term::Var(0)));
}

#[test]
fn redexes_evaluate_like_their_contracta() {
    let o = Oracle::default();
    let mut g = generator(0xbeef);
    let mut count = 0;
    while count < 200 {
        let (ctx, ty, t) = typed_term(&mut g);
        let redex = Term::app(Term::lam(t.shift(1)), Term::True);
        if check(&ctx, &redex, &ty).is_err() {
            continue;
        }
        let nf = nbe::norm(&ctx, &ty, &redex).unwrap();
        assert_eq!(nf, o.norm_nf(&ctx, &ty, &t).unwrap());
        count += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn stability(seed in any::<u64>()) {
        let mut g = generator(seed);
        let (ctx, ty, nf) = typed_nf(&mut g, 5);
        let t = nf.embed();
        prop_assert_eq!(check(&ctx, &t, &ty), Ok(()));
        prop_assert_eq!(nbe::norm(&ctx, &ty, &t).unwrap(), nf);
    }

    #[test]
    fn idempotence(seed in any::<u64>()) {
        let mut g = generator(seed);
        let (ctx, ty, t) = typed_term(&mut g);
        let once = nbe::norm(&ctx, &ty, &t).unwrap();
        prop_assert_eq!(nbe::norm(&ctx, &ty, &once.embed()).unwrap(), once);
    }

    #[test]
    fn soundness(seed in any::<u64>()) {
        let mut g = generator(seed);
        let (ctx, ty, t) = typed_term(&mut g);
        let nf = nbe::norm(&ctx, &ty, &t).unwrap();
        prop_assert_eq!(Oracle::default().conv(&ctx, &ty, &t, &nf.embed()), Ok(true));
    }

    #[test]
    fn completeness_on_pairs(seed in any::<u64>()) {
        let mut g = generator(seed);
        let (ctx, ty, a) = typed_term(&mut g);
        let b = g.gen_variant(&ctx, &ty, &a).unwrap();
        let by_oracle = Oracle::default().conv(&ctx, &ty, &a, &b).unwrap();
        let by_nbe = nbe::norm(&ctx, &ty, &a).unwrap() == nbe::norm(&ctx, &ty, &b).unwrap();
        prop_assert_eq!(by_oracle, by_nbe, "{} vs {}", show(ctx.len(), &a), show(ctx.len(), &b));
    }

    #[test]
    fn norm_commutes_with_renaming(seed in any::<u64>()) {
        let mut g = generator(seed);
        let (ctx, ty, t) = typed_term(&mut g);
        let r = renaming_into(&mut g, &ctx);
        let before = rename(&r, &nbe::norm(&ctx, &ty, &t).unwrap().embed()).unwrap();
        let after = nbe::norm(r.source(), &rename(&r, &ty).unwrap(), &rename(&r, &t).unwrap()).unwrap();
        prop_assert_eq!(before, after.embed());
    }

    #[test]
    fn quote_is_natural_in_renamings(seed in any::<u64>()) {
        let mut g = generator(seed);
        let (ctx, ty, t) = typed_term(&mut g);
        let r = renaming_into(&mut g, &ctx);
        let env = reflect_context(&ctx);
        let (ty_v, v) = (eval(&env, &ty), eval(&env, &t));
        let lr = LevelRenaming::from_renaming(&r);
        let restricted = nbe::quote(r.source().len(), &ty_v.restrict(&lr), &v.restrict(&lr));
        let renamed = rename(&r, &nbe::quote(ctx.len(), &ty_v, &v).embed()).unwrap();
        prop_assert_eq!(restricted.embed(), renamed);
    }

    #[test]
    fn normal_forms_are_unique(seed in any::<u64>()) {
        let mut g = generator(seed);
        let (ctx, ty, a) = typed_nf(&mut g, 5);
        let Ok(b) = g.gen_nf(&ctx, &ty, 5) else { return Ok(()) };
        let o = Oracle::default();
        if o.conv(&ctx, &ty, &a.embed(), &b.embed()).unwrap() {
            prop_assert_eq!(a, b);
        }
    }
}
