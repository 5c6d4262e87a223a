mod common;

use proptest::prelude::*;
use sconekit::canonicity::{canon, glued_eval, Canonical, GluedValue, Witness};
use sconekit::kernel::{conv, Context, Substitution, Term};
use sconekit::nbe::{self, Nf};
use sconekit::oracle::{Generator, Oracle};

use common::{closed_bools, generator, typed_term};

fn oracle_value(b: &Term) -> Canonical {
    match Oracle::default().norm(&Context::empty(), &Term::Bool, b).unwrap() {
        Term::True => Canonical::IsTrue,
        Term::False => Canonical::IsFalse,
        other => panic!("closed boolean normalized to {other:?}"),
    }
}

/// A closing substitution for a generated context, or `None` when some
/// entry has no closed inhabitant within budget.
fn closing(g: &mut Generator, ctx: &Context) -> Option<Substitution> {
    let mut terms: Vec<Term> = Vec::new();
    for level in 0..ctx.len() {
        let so_far = Substitution::new_unchecked(Context::empty(), ctx.prefix(level), terms.clone());
        let ty = so_far.apply(&ctx.entries()[level]).unwrap();
        terms.insert(0, g.gen_inferable_term(&Context::empty(), &ty).ok()?);
    }
    Some(Substitution::new_unchecked(Context::empty(), ctx.clone(), terms))
}

#[test]
fn worked_example() {
    let t = Term::app(Term::negation(), Term::True);
    assert_eq!(canon(&t), Ok(Canonical::IsFalse));
    assert_eq!(oracle_value(&t), Canonical::IsFalse);
}

#[test]
fn true_and_false_are_distinct() {
    assert_eq!(conv(&Context::empty(), &Term::Bool, &Term::True, &Term::False), Ok(false));
}

#[test]
fn nested_scrutinee_matches_oracle() {
    let inner = Term::app(Term::negation(), Term::app(Term::negation(), Term::False));
    let t = Term::elim_bool(Term::Bool, Term::True, Term::False, inner);
    assert_eq!(canon(&t).unwrap(), oracle_value(&t));
}

#[test]
fn totality_and_agreement() {
    for b in closed_bools(11, 600) {
        let c = canon(&b).unwrap();
        assert_eq!(c, oracle_value(&b));
        let nf = nbe::norm(&Context::empty(), &Term::Bool, &b).unwrap();
        assert_eq!(nf == Nf::True, c.as_bool());
        assert_eq!(nf == Nf::False, !c.as_bool());
    }
}

#[test]
fn glue_projection_on_generated_instances() {
    let o = Oracle::default();
    let mut g = generator(21);
    let mut checked = 0;
    while checked < 100 {
        let (ctx, ty, t) = typed_term(&mut g);
        let Some(s) = closing(&mut g, &ctx) else { continue };
        let env: Vec<GluedValue> = s.terms().iter().rev().map(|c| glued_eval(&[], c)).collect();
        let glued = glued_eval(&env, &t);
        let expected = s.apply(&t).unwrap();
        let closed_ty = s.apply(&ty).unwrap();
        assert!(o.conv(&Context::empty(), &closed_ty, &glued.term, &expected).unwrap());
        if let Witness::Bool(c) = glued.witness {
            assert_eq!(o.conv(&Context::empty(), &Term::Bool, &glued.term, &c.term()), Ok(true));
        }
        checked += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exactly_one_answer(seed in any::<u64>()) {
        let b = closed_bools(seed, 1).pop().unwrap();
        let c = canon(&b).unwrap();
        let o = Oracle::default();
        let is_true = o.conv(&Context::empty(), &Term::Bool, &b, &Term::True).unwrap();
        let is_false = o.conv(&Context::empty(), &Term::Bool, &b, &Term::False).unwrap();
        prop_assert!(is_true != is_false);
        prop_assert_eq!(c.as_bool(), is_true);
    }
}
