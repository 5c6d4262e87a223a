#![allow(dead_code)]

use rand::Rng;
use sconekit::kernel::{Context, Renaming, Substitution, Term};
use sconekit::model::{self, Environment, StandardModel};
use sconekit::nbe::Nf;
use sconekit::oracle::{Fragment, GenBudget, Generator};

pub fn generator(seed: u64) -> Generator {
    Generator::new(GenBudget::default().with_seed(seed)).unwrap()
}

pub fn fragment_generator(seed: u64) -> Generator {
    generator(seed).with_fragment(Fragment::PiUniverse)
}

/// A well-typed `(ctx, ty, t)`, retrying until the goal type is inhabited.
pub fn typed_term(g: &mut Generator) -> (Context, Term, Term) {
    loop {
        let ctx = g.gen_context().unwrap();
        let size = g.rng().gen_range(1..=4);
        let ty = g.gen_type(&ctx, size).unwrap();
        if let Ok(t) = g.gen_term(&ctx, &ty) {
            return (ctx, ty, t);
        }
    }
}

pub fn corpus(seed: u64, n: usize) -> Vec<(Context, Term, Term)> {
    let mut g = generator(seed);
    (0..n).map(|_| typed_term(&mut g)).collect()
}

/// A well-typed normal form `(ctx, ty, nf)` of depth at most `depth`.
pub fn typed_nf(g: &mut Generator, depth: usize) -> (Context, Term, Nf) {
    loop {
        let ctx = g.gen_context().unwrap();
        let ty_depth = g.rng().gen_range(1..=3);
        let Ok(ty) = g.gen_type_nf(&ctx, ty_depth) else { continue };
        let ty = ty.embed();
        if let Ok(nf) = g.gen_nf(&ctx, &ty, depth) {
            if nf.depth() <= depth {
                return (ctx, ty, nf);
            }
        }
    }
}

pub fn closed_bools(seed: u64, n: usize) -> Vec<Term> {
    let mut g = generator(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        if let Ok(t) = g.gen_term(&Context::empty(), &Term::Bool) {
            out.push(t);
        }
    }
    out
}

/// A substitution into `target`: a random renaming with some components
/// replaced by generated inferable terms of the substituted type. A renaming
/// variable is only used while every earlier component is still the
/// renaming's.
pub fn substitution_into(g: &mut Generator, target: &Context) -> Substitution {
    'attempt: loop {
        let r = g.gen_renaming(target).unwrap();
        let source = r.source().clone();
        let n = target.len();
        let mut terms: Vec<Term> = Vec::with_capacity(n);
        let mut faithful = true;
        for level in 0..n {
            let var = Term::Var(r.map()[n - 1 - level]);
            let t = if !faithful || g.rng().gen_bool(0.5) {
                let so_far = Substitution::new_unchecked(source.clone(), target.prefix(level), terms.clone());
                let ty = so_far.apply(&target.entries()[level]).unwrap();
                match g.gen_inferable_term(&source, &ty) {
                    Ok(t) => t,
                    Err(_) if faithful => var,
                    Err(_) => continue 'attempt,
                }
            } else {
                var
            };
            faithful &= t == Term::Var(r.map()[n - 1 - level]);
            terms.insert(0, t);
        }
        return Substitution::new_unchecked(source, target.clone(), terms);
    }
}

pub fn renaming_into(g: &mut Generator, target: &Context) -> Renaming {
    g.gen_renaming(target).unwrap()
}

/// An environment of standard-model values for `ctx`, each drawn from the
/// samples of its interpreted type.
pub fn standard_env(g: &mut Generator, ctx: &Context) -> Environment<StandardModel> {
    let m = model::standard_model();
    let mut env = Environment::empty();
    for entry in ctx.entries() {
        let mut samples = model::eval_type(&m, &env, entry).samples();
        let k = g.rng().gen_range(0..samples.len());
        env = env.extended(samples.swap_remove(k));
    }
    env
}
