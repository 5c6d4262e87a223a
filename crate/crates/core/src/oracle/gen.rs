//! Seeded generators for well-typed syntax.
//!
//! Every candidate is built by type-directed search and then confirmed by
//! the oracle's own checker, so a generated term is well typed by
//! construction and again by check. Goal types are matched up to oracle
//! normal forms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::kernel::{is_inferable, Context, Renaming, Term};
use crate::nbe::{Ne, Nf};
use crate::surface::show;

use super::{Oracle, OracleError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenBudget {
    pub max_term_size: usize,
    pub max_context_length: usize,
    /// Universes `U(i)` are generated for `i < universe_max`.
    pub universe_max: usize,
    pub seed: u64,
}

impl Default for GenBudget {
    fn default() -> Self {
        GenBudget {
            max_term_size: 9,
            max_context_length: 3,
            universe_max: 1,
            seed: 0,
        }
    }
}

impl GenBudget {
    pub fn with_seed(self, seed: u64) -> GenBudget {
        GenBudget { seed, ..self }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.max_term_size == 0 || self.max_context_length == 0 || self.universe_max == 0 {
            return Err(GenError::InvalidBudget(format!("{self:?}")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid budget: {0} (all bounds must be at least 1)")]
    InvalidBudget(String),
    #[error("no inhabitant of {ty} found within budget")]
    NoInhabitant { ty: String },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Which formers the generator may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fragment {
    Full,
    /// Π, universes and lifts; no booleans.
    PiUniverse,
}

/// Work allowed per top-level request, counted in candidate attempts.
const WORK_LIMIT: usize = 4000;

pub struct Generator {
    rng: ChaCha8Rng,
    budget: GenBudget,
    oracle: Oracle,
    fragment: Fragment,
    work: usize,
}

type GResult<T> = Result<Option<T>, GenError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Intro,
    Var,
    Spine,
    Elim,
    DepElim,
    Redex,
    LiftRound,
}

impl Generator {
    pub fn new(budget: GenBudget) -> Result<Generator, GenError> {
        budget.validate()?;
        Ok(Generator {
            rng: ChaCha8Rng::seed_from_u64(budget.seed),
            budget,
            oracle: Oracle::default(),
            fragment: Fragment::Full,
            work: 0,
        })
    }

    pub fn with_fragment(mut self, fragment: Fragment) -> Generator {
        self.fragment = fragment;
        self
    }

    pub fn budget(&self) -> &GenBudget {
        &self.budget
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn full(&self) -> bool {
        self.fragment == Fragment::Full
    }

    fn universe_limit(&self) -> usize {
        self.budget.universe_max.min(self.oracle.max_level)
    }

    fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    fn split(&mut self, total: usize, parts: usize) -> Vec<usize> {
        let mut out = vec![1; parts];
        for _ in parts..total.max(parts) {
            let k = self.rng.gen_range(0..parts);
            out[k] += 1;
        }
        out
    }

    fn tick(&mut self) -> bool {
        self.work += 1;
        self.work <= WORK_LIMIT
    }

    /// A well-formed context of length at most `max_context_length`.
    pub fn gen_context(&mut self) -> Result<Context, GenError> {
        let len = self.rng.gen_range(0..=self.budget.max_context_length);
        let mut ctx = Context::empty();
        for _ in 0..len {
            let size = self.rng.gen_range(1..=4);
            let ty = self.gen_type(&ctx, size)?;
            ctx = ctx.extend(ty);
        }
        Ok(ctx)
    }

    /// A well-formed type of size roughly `size`.
    pub fn gen_type(&mut self, ctx: &Context, size: usize) -> Result<Term, GenError> {
        for _ in 0..8 {
            if let Some(ty) = self.ty(ctx, size)? {
                if self.oracle.level(ctx, &ty).is_ok() {
                    return Ok(ty);
                }
            }
        }
        self.fallback_type(ctx)
            .ok_or_else(|| GenError::NoInhabitant { ty: "a type".into() })
    }

    fn fallback_type(&self, ctx: &Context) -> Option<Term> {
        if self.full() {
            Some(Term::Bool)
        } else if self.universe_limit() > 0 {
            Some(Term::U(0))
        } else {
            self.code_vars(ctx, 0).first().map(|&i| Term::el(Term::Var(i)))
        }
    }

    /// Variables whose type is the universe `U(level)`.
    fn code_vars(&self, ctx: &Context, level: usize) -> Vec<usize> {
        (0..ctx.len())
            .filter(|&i| {
                ctx.type_of(i)
                    .and_then(|t| self.oracle.beta_normal(&t).ok())
                    .is_some_and(|t| t == Term::U(level))
            })
            .collect()
    }

    fn ty(&mut self, ctx: &Context, size: usize) -> GResult<Term> {
        let mut options: Vec<u8> = Vec::new();
        if self.full() {
            options.push(0);
        }
        if self.universe_limit() > 0 {
            options.push(1);
        }
        if (0..self.universe_limit()).any(|l| !self.code_vars(ctx, l).is_empty()) {
            options.extend([2, 2]);
        }
        if size >= 3 {
            options.extend([3, 3, 3]);
        }
        if size >= 2 {
            options.push(4);
        }
        if size >= 3 && self.full() {
            options.push(5);
        }
        if size >= 3 && self.universe_limit() > 0 {
            options.push(6);
        }
        let Some(&choice) = options.choose(&mut self.rng) else {
            return Ok(None);
        };
        Ok(match choice {
            0 => Some(Term::Bool),
            1 => {
                let limit = self.universe_limit();
                Some(Term::U(self.rng.gen_range(0..limit)))
            }
            2 => {
                let mut vars: Vec<usize> = Vec::new();
                for l in 0..self.universe_limit() {
                    vars.extend(self.code_vars(ctx, l));
                }
                vars.choose(&mut self.rng).map(|&i| Term::el(Term::Var(i)))
            }
            3 => {
                let parts = self.split(size - 1, 2);
                let dom = self.gen_type(ctx, parts[0])?;
                let cod = self.gen_type(&ctx.extend(dom.clone()), parts[1])?;
                Some(Term::pi(dom, cod))
            }
            4 => Some(Term::lift(self.gen_type(ctx, size - 1)?)),
            5 => {
                // a type that only becomes recognisable after reduction
                let inner = self.gen_type(ctx, size - 2)?;
                match self.oracle.level(ctx, &inner) {
                    Ok(l) if l < self.oracle.max_level => Some(Term::el(Term::code(inner))),
                    _ => None,
                }
            }
            _ => {
                let limit = self.universe_limit();
                let level = self.rng.gen_range(0..limit);
                self.neutral_code(ctx, level, size - 1)?.map(Term::el)
            }
        })
    }

    /// A non-variable neutral code, built from a spine.
    fn neutral_code(&mut self, ctx: &Context, level: usize, size: usize) -> GResult<Term> {
        let goal = Term::U(level);
        let goal_nf = self.oracle.type_nf(ctx, &goal)?;
        self.spine(ctx, &goal, &goal_nf, size, false)
    }

    /// A type of universe level exactly `level`.
    fn type_at_level(&mut self, ctx: &Context, level: usize, size: usize) -> GResult<Term> {
        for _ in 0..6 {
            let s = self.rng.gen_range(1..=size.max(1));
            let ty = self.gen_type(ctx, s)?;
            if ty.size() <= size && self.oracle.level(ctx, &ty).ok() == Some(level) {
                return Ok(Some(ty));
            }
        }
        Ok(match level {
            0 if self.full() => Some(Term::Bool),
            0 => self.code_vars(ctx, 0).first().map(|&i| Term::el(Term::Var(i))),
            l => (l - 1 < self.oracle.max_level).then(|| Term::U(l - 1)),
        })
    }

    /// A term of type `ty` in `ctx` of size at most `max_term_size`.
    pub fn gen_term(&mut self, ctx: &Context, ty: &Term) -> Result<Term, GenError> {
        self.gen_term_sized(ctx, ty, self.budget.max_term_size)
    }

    /// A term of type `ty` whose type can be synthesized. Outside the full fragment only
    /// terms that are already inferable qualify.
    pub fn gen_inferable_term(&mut self, ctx: &Context, ty: &Term) -> Result<Term, GenError> {
        for _ in 0..6 {
            let t = self.gen_term(ctx, ty)?;
            if let Some(t) = self.inferable(t, ty) {
                return Ok(t);
            }
        }
        Err(GenError::NoInhabitant {
            ty: show(ctx.len(), ty),
        })
    }

    pub fn gen_term_sized(&mut self, ctx: &Context, ty: &Term, size: usize) -> Result<Term, GenError> {
        for _ in 0..4 {
            self.work = 0;
            let target = self.rng.gen_range(size.div_ceil(2)..=size);
            let ty_bn = self.oracle.beta_normal(ty)?;
            if let Some(t) = self.term(ctx, &ty_bn, target)? {
                if t.size() <= size && self.oracle.check(ctx, &t, ty).is_ok() {
                    return Ok(t);
                }
            }
        }
        Err(GenError::NoInhabitant {
            ty: show(ctx.len(), ty),
        })
    }

    fn term(&mut self, ctx: &Context, ty: &Term, size: usize) -> GResult<Term> {
        if size == 0 || !self.tick() {
            return Ok(None);
        }
        let goal = self.oracle.type_nf(ctx, ty)?;
        let mut kinds = vec![Kind::Intro, Kind::Intro, Kind::Var, Kind::Spine, Kind::Spine];
        if size >= 5 && self.full() {
            kinds.push(Kind::Elim);
        }
        if size >= 12 && self.full() {
            kinds.push(Kind::DepElim);
        }
        if size >= 4 {
            kinds.extend([Kind::Redex, Kind::Redex]);
        }
        if size >= 3 {
            kinds.push(Kind::LiftRound);
        }
        kinds.shuffle(&mut self.rng);
        if size >= 4 && self.coin(0.8) {
            // leaves are easy to reach; spend large budgets on structure
            kinds.sort_by_key(|k| matches!(k, Kind::Intro | Kind::Var));
        }
        kinds.dedup();
        for kind in kinds {
            let candidate = match kind {
                Kind::Intro => self.intro(ctx, ty, size)?,
                Kind::Var => self.variable(ctx, &goal)?,
                Kind::Spine => self.spine(ctx, ty, &goal, size, true)?,
                Kind::Elim => self.elim(ctx, ty, size)?,
                Kind::DepElim => self.dep_elim(ctx, ty, size)?,
                Kind::Redex => self.redex(ctx, ty, size)?,
                Kind::LiftRound => self.lift_round(ctx, ty, size)?,
            };
            if let Some(t) = candidate {
                if t.size() <= size {
                    return Ok(Some(t));
                }
            }
        }
        Ok(None)
    }

    fn intro(&mut self, ctx: &Context, ty: &Term, size: usize) -> GResult<Term> {
        Ok(match ty {
            Term::Pi(a, b) => self
                .term(&ctx.extend((**a).clone()), b, size - 1)?
                .map(Term::lam),
            Term::Bool => Some(if self.coin(0.5) { Term::True } else { Term::False }),
            Term::U(i) if size >= 2 => self.type_at_level(ctx, *i, size - 1)?.map(Term::code),
            Term::Lift(a) if size >= 2 => self.term(ctx, a, size - 1)?.map(Term::lift_tm),
            _ => None,
        })
    }

    fn variable(&mut self, ctx: &Context, goal: &Nf) -> GResult<Term> {
        let mut hits = Vec::new();
        for i in 0..ctx.len() {
            let ty = ctx.type_of(i).expect("in scope");
            if self.oracle.type_nf(ctx, &ty)? == *goal {
                hits.push(i);
            }
        }
        Ok(hits.choose(&mut self.rng).map(|&i| Term::Var(i)))
    }

    /// A variable applied to a spine of eliminations until the goal is
    /// reached; a boolean head may be eliminated straight into the goal.
    fn spine(
        &mut self,
        ctx: &Context,
        ty: &Term,
        goal: &Nf,
        size: usize,
        allow_bare: bool,
    ) -> GResult<Term> {
        if ctx.is_empty() {
            return Ok(None);
        }
        let head = self.rng.gen_range(0..ctx.len());
        let mut t = Term::Var(head);
        let mut t_ty = self.oracle.beta_normal(&ctx.type_of(head).expect("in scope"))?;
        let mut left = size.saturating_sub(1);
        for round in 0..4 {
            if (round > 0 || allow_bare) && self.oracle.type_nf(ctx, &t_ty)? == *goal && self.coin(0.7) {
                return Ok(Some(t));
            }
            match t_ty.clone() {
                Term::Pi(a, b) => {
                    if left < 2 {
                        return Ok(None);
                    }
                    let arg_size = self.rng.gen_range(1..left);
                    let Some(arg) = self.term(ctx, &a, arg_size)? else {
                        return Ok(None);
                    };
                    left = left.saturating_sub(1 + arg.size());
                    t_ty = self.oracle.beta_normal(&b.instantiate(&arg))?;
                    t = Term::app(t, arg);
                }
                Term::Lift(a) => {
                    if left < 1 {
                        return Ok(None);
                    }
                    left -= 1;
                    t = Term::unlift_tm(t);
                    t_ty = (*a).clone();
                }
                Term::Bool if self.full() => {
                    let motive = ty.shift(1);
                    let need = 1 + motive.size();
                    if left < need + 2 {
                        return Ok(None);
                    }
                    let parts = self.split(left - need, 2);
                    let Some(tc) = self.term(ctx, ty, parts[0])? else {
                        return Ok(None);
                    };
                    let Some(fc) = self.term(ctx, ty, parts[1])? else {
                        return Ok(None);
                    };
                    return Ok(Some(Term::elim_bool(motive, tc, fc, t)));
                }
                _ => break,
            }
        }
        if self.oracle.type_nf(ctx, &t_ty)? == *goal && (allow_bare || !matches!(t, Term::Var(_))) {
            Ok(Some(t))
        } else {
            Ok(None)
        }
    }

    fn elim(&mut self, ctx: &Context, ty: &Term, size: usize) -> GResult<Term> {
        let motive = ty.shift(1);
        let need = 1 + motive.size();
        if size < need + 3 {
            return Ok(None);
        }
        let parts = self.split(size - need, 3);
        let Some(scrut) = self.term(ctx, &Term::Bool, parts[0])? else {
            return Ok(None);
        };
        let Some(tc) = self.term(ctx, ty, parts[1])? else {
            return Ok(None);
        };
        let Some(fc) = self.term(ctx, ty, parts[2])? else {
            return Ok(None);
        };
        Ok(Some(Term::elim_bool(motive, tc, fc, scrut)))
    }

    /// A large elimination whose motive computes the goal type from a closed
    /// scrutinee.
    fn dep_elim(&mut self, ctx: &Context, ty: &Term, size: usize) -> GResult<Term> {
        if self.oracle.level(ctx, ty).ok() != Some(0) {
            return Ok(None);
        }
        let Some(scrut) = self.term(&Context::empty(), &Term::Bool, 3)? else {
            return Ok(None);
        };
        let value = self.oracle.beta_normal(&scrut)?;
        let other = if self.coin(0.5) {
            Term::Bool
        } else {
            Term::arrow(Term::Bool, Term::Bool)
        };
        let (on_true, on_false) = if value == Term::True {
            (ty.clone(), other.clone())
        } else {
            (other.clone(), ty.clone())
        };
        let motive = Term::el(Term::elim_bool(
            Term::U(0),
            Term::code(on_true.shift(1)),
            Term::code(on_false.shift(1)),
            Term::Var(0),
        ));
        let rest = size.saturating_sub(1 + motive.size() + scrut.size());
        if rest < 2 {
            return Ok(None);
        }
        let parts = self.split(rest, 2);
        let Some(tc) = self.term(ctx, &on_true, parts[0])? else {
            return Ok(None);
        };
        let Some(fc) = self.term(ctx, &on_false, parts[1])? else {
            return Ok(None);
        };
        Ok(Some(Term::elim_bool(motive, tc, fc, scrut)))
    }

    fn redex(&mut self, ctx: &Context, ty: &Term, size: usize) -> GResult<Term> {
        let s = self.rng.gen_range(1..=2);
        let dom = self.gen_type(ctx, s)?;
        let rest = size.saturating_sub(2);
        if rest < 2 {
            return Ok(None);
        }
        let parts = self.split(rest, 2);
        let Some(arg) = self.term(ctx, &dom, parts[0])? else {
            return Ok(None);
        };
        let Some(arg) = self.inferable(arg, &dom) else {
            return Ok(None);
        };
        let inner = ctx.extend(dom);
        let Some(body) = self.term(&inner, &ty.shift(1), parts[1])? else {
            return Ok(None);
        };
        Ok(Some(Term::app(Term::lam(body), arg)))
    }

    fn lift_round(&mut self, ctx: &Context, ty: &Term, size: usize) -> GResult<Term> {
        let Some(t) = self.term(ctx, ty, size - 2)? else {
            return Ok(None);
        };
        Ok(self
            .inferable(t, ty)
            .map(|t| Term::unlift_tm(Term::lift_tm(t))))
    }

    /// Makes `t : ty` inferable by passing it through a trivial elimination.
    fn inferable(&self, t: Term, ty: &Term) -> Option<Term> {
        if is_inferable(&t) {
            Some(t)
        } else if self.full() {
            Some(Term::elim_bool(ty.shift(1), t.clone(), t, Term::True))
        } else {
            None
        }
    }

    /// A normal form of type `ty` with [`Nf::depth`] at most `depth`.
    pub fn gen_nf(&mut self, ctx: &Context, ty: &Term, depth: usize) -> Result<Nf, GenError> {
        for _ in 0..6 {
            self.work = 0;
            let ty_bn = self.oracle.beta_normal(ty)?;
            if let Some(nf) = self.nf(ctx, &ty_bn, depth)? {
                if nf.depth() <= depth && self.oracle.check(ctx, &nf.embed(), ty).is_ok() {
                    return Ok(nf);
                }
            }
        }
        Err(GenError::NoInhabitant {
            ty: show(ctx.len(), ty),
        })
    }

    fn nf(&mut self, ctx: &Context, ty: &Term, depth: usize) -> GResult<Nf> {
        if depth == 0 || !self.tick() {
            return Ok(None);
        }
        let neutral_first = self.coin(0.4);
        match ty {
            Term::Pi(a, b) => Ok(self
                .nf(&ctx.extend((**a).clone()), b, depth - 1)?
                .map(|b| Nf::Lam(Box::new(b)))),
            Term::Bool => {
                if neutral_first {
                    if let Some(ne) = self.ne(ctx, ty, depth - 1)? {
                        return Ok(Some(Nf::NeAtBool(ne)));
                    }
                }
                Ok(Some(if self.coin(0.5) { Nf::True } else { Nf::False }))
            }
            Term::U(i) => {
                if neutral_first {
                    if let Some(ne) = self.ne(ctx, ty, depth - 1)? {
                        return Ok(Some(Nf::NeAtU(ne)));
                    }
                }
                Ok(self.type_nf_at_level(ctx, *i, depth - 1)?.map(|t| match t {
                    Nf::El(ne) => Nf::NeAtU(ne),
                    t => Nf::Code(Box::new(t)),
                }))
            }
            Term::Lift(a) => Ok(self.nf(ctx, a, depth - 1)?.map(|x| Nf::LiftTm(Box::new(x)))),
            Term::El(_) => Ok(self.ne(ctx, ty, depth - 1)?.map(Nf::NeAtEl)),
            _ => Ok(None),
        }
    }

    fn type_nf_at_level(&mut self, ctx: &Context, level: usize, depth: usize) -> GResult<Nf> {
        for _ in 0..6 {
            if let Some(t) = self.type_nf(ctx, depth)? {
                if self.oracle.level(ctx, &t.embed()).ok() == Some(level) {
                    return Ok(Some(t));
                }
            }
        }
        Ok(match level {
            0 if self.full() => Some(Nf::Bool),
            0 => None,
            l => Some(Nf::U(l - 1)),
        })
    }

    /// A type normal form.
    pub fn gen_type_nf(&mut self, ctx: &Context, depth: usize) -> Result<Nf, GenError> {
        self.work = 0;
        for _ in 0..6 {
            if let Some(t) = self.type_nf(ctx, depth)? {
                if self.oracle.level(ctx, &t.embed()).is_ok() {
                    return Ok(t);
                }
            }
        }
        Err(GenError::NoInhabitant { ty: "a type".into() })
    }

    fn type_nf(&mut self, ctx: &Context, depth: usize) -> GResult<Nf> {
        if depth == 0 || !self.tick() {
            return Ok(None);
        }
        let mut options: Vec<u8> = Vec::new();
        if self.full() {
            options.push(0);
        }
        if self.universe_limit() > 0 {
            options.push(1);
        }
        if depth >= 2 {
            options.extend([2, 2, 3, 4]);
        }
        let Some(&choice) = options.choose(&mut self.rng) else {
            return Ok(None);
        };
        Ok(match choice {
            0 => Some(Nf::Bool),
            1 => {
                let limit = self.universe_limit();
                Some(Nf::U(self.rng.gen_range(0..limit)))
            }
            2 => {
                let Some(dom) = self.type_nf(ctx, depth - 1)? else {
                    return Ok(None);
                };
                let inner = ctx.extend(dom.embed());
                self.type_nf(&inner, depth - 1)?
                    .map(|cod| Nf::Pi(Box::new(dom), Box::new(cod)))
            }
            3 => self.type_nf(ctx, depth - 1)?.map(|a| Nf::Lift(Box::new(a))),
            _ => {
                if self.universe_limit() == 0 {
                    return Ok(None);
                }
                let limit = self.universe_limit();
                let level = self.rng.gen_range(0..limit);
                self.ne(ctx, &Term::U(level), depth - 1)?.map(Nf::El)
            }
        })
    }

    /// A neutral of type `ty` (β-normal).
    fn ne(&mut self, ctx: &Context, ty: &Term, depth: usize) -> GResult<Ne> {
        if ctx.is_empty() || depth == 0 {
            return Ok(None);
        }
        let goal = self.oracle.type_nf(ctx, ty)?;
        let head = self.rng.gen_range(0..ctx.len());
        let mut ne = Ne::Var(head);
        let mut ne_ty = self.oracle.beta_normal(&ctx.type_of(head).expect("in scope"))?;
        for _ in 0..depth {
            if self.oracle.type_nf(ctx, &ne_ty)? == goal && self.coin(0.75) {
                return Ok(Some(ne));
            }
            match ne_ty.clone() {
                Term::Pi(a, b) => {
                    let Some(arg) = self.nf(ctx, &a, depth - 1)? else {
                        return Ok(None);
                    };
                    ne_ty = self.oracle.beta_normal(&b.instantiate(&arg.embed()))?;
                    ne = Ne::App(Box::new(ne), Box::new(arg));
                }
                Term::Lift(a) => {
                    ne = Ne::Unlift(Box::new(ne));
                    ne_ty = (*a).clone();
                }
                Term::Bool if self.full() => {
                    let motive = self.oracle.type_nf(&ctx.extend(Term::Bool), &ty.shift(1))?;
                    let Some(tc) = self.nf(ctx, ty, depth - 1)? else {
                        return Ok(None);
                    };
                    let Some(fc) = self.nf(ctx, ty, depth - 1)? else {
                        return Ok(None);
                    };
                    return Ok(Some(Ne::ElimBool {
                        motive: Box::new(motive),
                        tcase: Box::new(tc),
                        fcase: Box::new(fc),
                        scrut: Box::new(ne),
                    }));
                }
                _ => break,
            }
        }
        if self.oracle.type_nf(ctx, &ne_ty)? == goal {
            Ok(Some(ne))
        } else {
            Ok(None)
        }
    }

    /// A renaming into `target`: its entries in a random dependency-respecting
    /// order, interleaved with fresh entries.
    pub fn gen_renaming(&mut self, target: &Context) -> Result<Renaming, GenError> {
        let n = target.len();
        let entries = target.entries();
        // deps[j]: levels that entry j mentions
        let deps: Vec<Vec<usize>> = (0..n)
            .map(|j| (0..j).filter(|&l| entries[j].mentions(j - 1 - l)).collect())
            .collect();
        let mut placed_at: Vec<Option<usize>> = vec![None; n];
        let mut source: Vec<Term> = Vec::new();
        let mut remaining: Vec<usize> = (0..n).collect();
        while !remaining.is_empty() || (source.len() < n + 2 && self.coin(0.2)) {
            if remaining.is_empty() || self.coin(0.25) {
                let fresh = self.gen_type(&Context::from_entries(source.clone()), 2)?;
                source.push(fresh);
                continue;
            }
            let ready: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&j| deps[j].iter().all(|&l| placed_at[l].is_some()))
                .collect();
            let &j = ready.choose(&mut self.rng).expect("dependencies are acyclic");
            remaining.retain(|&k| k != j);
            let p = source.len();
            let moved = entries[j]
                .map_free_vars(&mut |i, d| -> Result<Term, ()> {
                    let level = j - 1 - i;
                    let to = placed_at[level].expect("placed");
                    Ok(Term::Var(p - 1 - to + d))
                })
                .expect("infallible");
            source.push(moved);
            placed_at[j] = Some(p);
        }
        let m = source.len();
        let map = (0..n)
            .map(|ix| m - 1 - placed_at[n - 1 - ix].expect("placed"))
            .collect();
        Renaming::new(Context::from_entries(source), target.clone(), map)
            .map_err(|e| GenError::Oracle(OracleError::IllTyped(e.to_string())))
    }

    /// A term conv-equal to `t : ty` built by a reducible wrapper, or a term
    /// that usually differs from it.
    pub fn gen_variant(&mut self, ctx: &Context, ty: &Term, t: &Term) -> Result<Term, GenError> {
        let ty_bn = self.oracle.beta_normal(ty)?;
        let choice = self.rng.gen_range(0..6);
        let inferable_t = self.inferable(t.clone(), ty);
        Ok(match (choice, &ty_bn, inferable_t) {
            // β-wrap: (fun _ => t↑) true
            (0, _, _) if self.full() => Term::app(Term::lam(t.shift(1)), Term::True),
            (1, _, Some(it)) => Term::unlift_tm(Term::lift_tm(it)),
            (2, Term::Pi(..), Some(it)) => Term::lam(Term::app(it.shift(1), Term::Var(0))),
            (3, _, _) if self.full() && !ctx.is_empty() => {
                let s = self.gen_term_sized(ctx, &Term::Bool, 3)?;
                Term::elim_bool(ty.shift(1), t.clone(), t.clone(), s)
            }
            _ => self.gen_term(ctx, ty)?,
        })
    }
}

/// [`Generator::gen_term`] on a fresh generator.
pub fn gen_term(budget: GenBudget, ctx: &Context, ty: &Term) -> Result<Term, GenError> {
    Generator::new(budget)?.gen_term(ctx, ty)
}

/// [`Generator::gen_nf`] on a fresh generator, with depth bounded by the
/// term size budget.
pub fn gen_nf(budget: GenBudget, ctx: &Context, ty: &Term) -> Result<Nf, GenError> {
    Generator::new(budget)?.gen_nf(ctx, ty, budget.max_term_size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::check;

    #[test]
    fn closed_booleans_typecheck() {
        let mut g = Generator::new(GenBudget::default().with_seed(7)).unwrap();
        for _ in 0..50 {
            let t = g.gen_term(&Context::empty(), &Term::Bool).unwrap();
            assert!(t.size() <= 9);
            assert_eq!(check(&Context::empty(), &t, &Term::Bool), Ok(()), "{t:?}");
        }
    }

    #[test]
    fn deterministic_from_seed() {
        let b = GenBudget::default().with_seed(42);
        let ty = Term::arrow(Term::Bool, Term::Bool);
        assert_eq!(
            gen_term(b, &Context::empty(), &ty),
            gen_term(b, &Context::empty(), &ty)
        );
    }

    #[test]
    fn nf_at_function_type_is_a_lambda() {
        let ty = Term::arrow(Term::Bool, Term::Bool);
        for seed in 0..20 {
            let nf = gen_nf(GenBudget::default().with_seed(seed), &Context::empty(), &ty).unwrap();
            assert!(matches!(nf, Nf::Lam(_)));
        }
    }

    #[test]
    fn empty_goal_reports_no_inhabitant() {
        let ctx = Context::empty().extend(Term::U(0));
        let err = gen_term(GenBudget::default(), &ctx, &Term::el(Term::Var(0))).unwrap_err();
        assert!(matches!(err, GenError::NoInhabitant { .. }));
    }

    #[test]
    fn zero_budget_is_invalid() {
        let b = GenBudget {
            max_term_size: 0,
            ..GenBudget::default()
        };
        assert!(matches!(Generator::new(b), Err(GenError::InvalidBudget(_))));
    }

    #[test]
    fn renamings_are_well_typed() {
        let mut g = Generator::new(GenBudget::default().with_seed(3)).unwrap();
        for _ in 0..30 {
            let ctx = g.gen_context().unwrap();
            let r = g.gen_renaming(&ctx).unwrap();
            assert!(r.source().len() >= ctx.len());
        }
    }
}
