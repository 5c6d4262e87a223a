mod common;

use std::sync::Arc;

use proptest::prelude::*;
use rand::Rng;
use sconekit::kernel::{subst, Context, Term};
use sconekit::model::{self, eval, eval_subst, eval_type, Environment, ModelSignature, StdTy, StdVal, TypeShape};
use sconekit::oracle::Oracle;

use common::{closed_bools, generator, standard_env, substitution_into, typed_term};

fn std_env_shape(ctx: &Context, env: &Environment<model::StandardModel>) -> Vec<model::Observation> {
    let m = model::standard_model();
    let mut prefix = Environment::empty();
    let mut out = Vec::new();
    for (entry, v) in ctx.entries().iter().zip(env.values()) {
        out.push(eval_type(&m, &prefix, entry).observe(v));
        prefix = prefix.extended(v.clone());
    }
    out
}

#[test]
fn environment_lookup_and_basic_types() {
    let m = model::standard_model();
    let env = Environment::empty().extended(StdVal::Bool(true));
    assert_eq!(eval(&m, &env, &Term::Var(0)).as_bool(), Some(true));
    let e = Environment::empty();
    assert_eq!(eval_type(&m, &e, &Term::Bool).shape(), TypeShape::Bool);
    assert!(matches!(eval_type(&m, &e, &Term::arrow(Term::Bool, Term::Bool)), StdTy::Pi(..)));
    assert_eq!(eval_type(&m, &e, &Term::el(Term::code(Term::Bool))).shape(), TypeShape::Bool);
}

#[test]
fn negation_example() {
    let m = model::standard_model();
    let t = Term::elim_bool(Term::Bool, Term::False, Term::True, Term::True);
    assert_eq!(eval(&m, &Environment::empty(), &t).as_bool(), Some(false));
    let id = m.lam(Arc::new(|x| x));
    assert_eq!(m.app(id, m.tt()).as_bool(), Some(true));
}

#[test]
fn closed_booleans_agree_with_reduction() {
    let m = model::standard_model();
    let o = Oracle::default();
    for b in closed_bools(7, 400).into_iter().filter(|b| b.size() <= 7) {
        let expected = match o.beta_normal(&b).unwrap() {
            Term::True => true,
            Term::False => false,
            other => panic!("closed boolean reduced to {other:?}"),
        };
        assert_eq!(eval(&m, &Environment::empty(), &b).as_bool(), Some(expected));
    }
}

#[test]
fn beta_eta_and_roundtrips_on_samples() {
    let m = model::standard_model();
    let mut g = generator(99);
    let mut samples = 0;
    while samples < 300 {
        let (ctx, ty, t) = typed_term(&mut g);
        let env = standard_env(&mut g, &ctx);
        let ty_v = eval_type(&m, &env, &ty);
        let v = eval(&m, &env, &t);
        match &ty_v {
            StdTy::Pi(dom, _) => {
                // η: lam(a ↦ app(f, a)) = f
                let f = v.clone();
                let m2 = m;
                let eta = m.lam(Arc::new(move |a| m2.app(f.clone(), a)));
                assert_eq!(ty_v.observe(&eta), ty_v.observe(&v));
                // β: app(lam b, a) = b(a), with b the body of the generated value
                for a in dom.samples() {
                    let v2 = v.clone();
                    let body = m.lam(Arc::new(move |x| m2.app(v2.clone(), x)));
                    let StdTy::Pi(_, cod) = &ty_v else { unreachable!() };
                    assert_eq!(cod(a.clone()).observe(&m.app(body, a.clone())), cod(a.clone()).observe(&m.app(v.clone(), a)));
                }
            }
            StdTy::U(_) => {
                let back = m.code(m.el(v.clone()));
                assert_eq!(ty_v.observe(&back), ty_v.observe(&v));
                let StdVal::Code(inner) = &v else { panic!("code expected") };
                assert_eq!(m.el(m.code((**inner).clone())).shape(), inner.shape());
            }
            StdTy::Lift(a) => {
                assert_eq!(ty_v.observe(&m.lift_tm(m.unlift_tm(v.clone()))), ty_v.observe(&v));
                assert_eq!(a.observe(&m.unlift_tm(m.lift_tm(m.unlift_tm(v.clone())))), a.observe(&m.unlift_tm(v.clone())));
            }
            StdTy::Bool => {
                let (x, y) = (m.tt(), m.ff());
                let motive: model::Binder<StdVal, StdTy> = Arc::new(|_| StdTy::Bool);
                let pick_t = m.elim_bool(motive.clone(), x.clone(), y.clone(), m.tt());
                let pick_f = m.elim_bool(motive, x, y, m.ff());
                assert_eq!((pick_t.as_bool(), pick_f.as_bool()), (Some(true), Some(false)));
            }
        }
        samples += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn substitution_law(seed in any::<u64>()) {
        let m = model::standard_model();
        let mut g = generator(seed);
        let (ctx, ty, t) = typed_term(&mut g);
        let s = substitution_into(&mut g, &ctx);
        let env = standard_env(&mut g, s.source());
        let moved = eval_subst(&m, &env, &s);
        let lhs_ty = eval_type(&m, &env, &subst(&s, &ty).unwrap());
        let rhs_ty = eval_type(&m, &moved, &ty);
        prop_assert_eq!(lhs_ty.shape(), rhs_ty.shape());
        let lhs = eval(&m, &env, &subst(&s, &t).unwrap());
        let rhs = eval(&m, &moved, &t);
        prop_assert_eq!(lhs_ty.observe(&lhs), rhs_ty.observe(&rhs));
    }

    #[test]
    fn context_extension_is_pairing(seed in any::<u64>()) {
        let m = model::standard_model();
        let mut g = generator(seed);
        let (ctx, ty, a) = typed_term(&mut g);
        let s = substitution_into(&mut g, &ctx);
        let env = standard_env(&mut g, s.source());
        let a_moved = subst(&s, &a).unwrap();
        let extended = s.extend(ty.clone(), a_moved.clone());
        let paired = eval_subst(&m, &env, &s).extended(eval(&m, &env, &a_moved));
        let direct = eval_subst(&m, &env, &extended);
        prop_assert_eq!(
            std_env_shape(extended.target(), &direct),
            std_env_shape(extended.target(), &paired)
        );
    }

    #[test]
    fn environments_are_telescopic(seed in any::<u64>()) {
        let m = model::standard_model();
        let mut g = generator(seed);
        let ctx = g.gen_context().unwrap();
        let env = standard_env(&mut g, &ctx);
        prop_assert_eq!(env.len(), ctx.len());
        if !ctx.is_empty() {
            let k = g.rng().gen_range(0..ctx.len());
            let inner = Environment::<model::StandardModel>::from_values(env.values()[..ctx.len() - 1 - k].to_vec());
            let ty = eval_type(&m, &inner, &ctx.entries()[ctx.len() - 1 - k]);
            let _ = ty.observe(env.lookup(k));
        }
    }
}
