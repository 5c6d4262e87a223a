//! Contexts as telescopes, renamings and substitutions between them.

use super::check::Checker;
use super::error::TypeError;
use super::term::Term;

/// A telescope of types. `entries[k]` is well formed in `entries[..k]`; the
/// last entry is bound by de Bruijn index 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Context {
    entries: Vec<Term>,
}

impl Context {
    pub fn empty() -> Context {
        Context::default()
    }

    pub fn from_entries(entries: Vec<Term>) -> Context {
        Context { entries }
    }

    pub fn entries(&self) -> &[Term] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `self.ty`, the context extended by one entry.
    pub fn extend(&self, ty: Term) -> Context {
        let mut entries = self.entries.clone();
        entries.push(ty);
        Context { entries }
    }

    /// The first `len` entries.
    pub fn prefix(&self, len: usize) -> Context {
        Context {
            entries: self.entries[..len].to_vec(),
        }
    }

    /// Type of `Var(ix)`, weakened to live in the whole context.
    pub fn type_of(&self, ix: usize) -> Option<Term> {
        let n = self.entries.len();
        (ix < n).then(|| self.entries[n - 1 - ix].shift(ix + 1))
    }
}

/// A context morphism built from variables: terms of `target` are moved into
/// `source`. `map[j]` is the source index that target index `j` is sent to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Renaming {
    source: Context,
    target: Context,
    map: Vec<usize>,
}

impl Renaming {
    /// Builds a renaming, checking that every mapped variable has exactly the
    /// renamed type of the entry it replaces.
    pub fn new(source: Context, target: Context, map: Vec<usize>) -> Result<Renaming, TypeError> {
        if map.len() != target.len() {
            return Err(TypeError::BadMorphism(format!(
                "renaming has {} entries for a target of length {}",
                map.len(),
                target.len()
            )));
        }
        if let Some(&ix) = map.iter().find(|&&ix| ix >= source.len()) {
            return Err(TypeError::Scope {
                index: ix,
                len: source.len(),
            });
        }
        let r = Renaming {
            source,
            target,
            map,
        };
        for j in 0..r.target.len() {
            let want = r.apply(&r.target.type_of(j).unwrap())?;
            let have = r.source.type_of(r.map[j]).unwrap();
            if want != have {
                return Err(TypeError::BadMorphism(format!(
                    "variable {j} is sent to {}, whose type does not match",
                    r.map[j]
                )));
            }
        }
        Ok(r)
    }

    pub fn identity(ctx: &Context) -> Renaming {
        Renaming {
            source: ctx.clone(),
            target: ctx.clone(),
            map: (0..ctx.len()).collect(),
        }
    }

    /// The projection `ctx.ty -> ctx`.
    pub fn weakening(ctx: &Context, ty: Term) -> Renaming {
        Renaming {
            source: ctx.extend(ty),
            target: ctx.clone(),
            map: (1..=ctx.len()).collect(),
        }
    }

    pub fn source(&self) -> &Context {
        &self.source
    }

    pub fn target(&self) -> &Context {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `self ∘ inner`: renaming by the result equals renaming by `inner`
    /// and then by `self`. Requires `inner.source == self.target`.
    pub fn compose(&self, inner: &Renaming) -> Renaming {
        debug_assert_eq!(inner.source, self.target);
        Renaming {
            source: self.source.clone(),
            target: inner.target.clone(),
            map: inner.map.iter().map(|&k| self.map[k]).collect(),
        }
    }

    /// Moves a term from `target` to `source`.
    pub fn apply(&self, t: &Term) -> Result<Term, TypeError> {
        let len = self.map.len();
        t.map_free_vars(&mut |i, depth| match self.map.get(i) {
            Some(&k) => Ok(Term::Var(k + depth)),
            None => Err(TypeError::Scope { index: i, len }),
        })
    }

    /// The same morphism as a substitution of variables.
    pub fn to_substitution(&self) -> Substitution {
        Substitution {
            source: self.source.clone(),
            target: self.target.clone(),
            terms: self.map.iter().map(|&k| Term::Var(k)).collect(),
        }
    }
}

/// A simultaneous substitution: `terms[j]`, a term of `source`, replaces
/// target index `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    source: Context,
    target: Context,
    terms: Vec<Term>,
}

impl Substitution {
    /// Builds a substitution, typechecking every component against the
    /// substituted entry type.
    pub fn new(
        checker: &Checker,
        source: Context,
        target: Context,
        terms: Vec<Term>,
    ) -> Result<Substitution, TypeError> {
        if terms.len() != target.len() {
            return Err(TypeError::BadMorphism(format!(
                "substitution has {} terms for a target of length {}",
                terms.len(),
                target.len()
            )));
        }
        let s = Substitution {
            source,
            target,
            terms,
        };
        for j in 0..s.target.len() {
            let ty = s.apply(&s.target.type_of(j).unwrap())?;
            checker.check(&s.source, &s.terms[j], &ty)?;
        }
        Ok(s)
    }

    /// Builds a substitution without typechecking the components.
    pub fn new_unchecked(source: Context, target: Context, terms: Vec<Term>) -> Substitution {
        debug_assert_eq!(terms.len(), target.len());
        Substitution {
            source,
            target,
            terms,
        }
    }

    pub fn identity(ctx: &Context) -> Substitution {
        Renaming::identity(ctx).to_substitution()
    }

    /// `⟨self, term⟩ : source -> target.ty`.
    pub fn extend(&self, ty: Term, term: Term) -> Substitution {
        let mut terms = Vec::with_capacity(self.terms.len() + 1);
        terms.push(term);
        terms.extend(self.terms.iter().cloned());
        Substitution {
            source: self.source.clone(),
            target: self.target.extend(ty),
            terms,
        }
    }

    pub fn source(&self) -> &Context {
        &self.source
    }

    pub fn target(&self) -> &Context {
        &self.target
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Substitute by `self`, then by `then`. Requires `then.target == self.source`.
    pub fn compose(&self, then: &Substitution) -> Result<Substitution, TypeError> {
        debug_assert_eq!(then.target, self.source);
        let terms = self
            .terms
            .iter()
            .map(|t| then.apply(t))
            .collect::<Result<_, _>>()?;
        Ok(Substitution {
            source: then.source.clone(),
            target: self.target.clone(),
            terms,
        })
    }

    pub fn apply(&self, t: &Term) -> Result<Term, TypeError> {
        let len = self.terms.len();
        t.map_free_vars(&mut |i, depth| match self.terms.get(i) {
            Some(u) => Ok(u.shift(depth)),
            None => Err(TypeError::Scope { index: i, len }),
        })
    }
}

/// Moves `t` along a renaming.
pub fn rename(r: &Renaming, t: &Term) -> Result<Term, TypeError> {
    r.apply(t)
}

/// Capture-avoiding simultaneous substitution.
pub fn subst(s: &Substitution, t: &Term) -> Result<Term, TypeError> {
    s.apply(t)
}
