//! Lifting properties and iterated orthogonals over any finitely enumerable category.

mod closure;
mod eval;
mod expr;
mod laws;
mod verdict;

use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

pub use closure::{check_closure_laws, ClosureCheck, ClosureReport, Construction, FiniteLimits};
pub use eval::{enumerate_class, is_member_one_step, member, prepare, EvalError, EvalOptions, Oracle, OracleSet, PreparedClass};
pub use expr::{OrthExpr, Side, Step};
pub use laws::{antitone, inherits_terminal_map, lifts_against_all, reflexive_bounded};
pub use verdict::{Approx, StepRecord, StepSource, Verdict, VerdictKind, Witness};

/// A commuting square `i ; g = f ; j` for `f: A → B`, `g: X → Y`.
#[derive(Clone, Debug, PartialEq)]
pub struct Square<M> {
    /// `i: A → X`
    pub top: M,
    /// `j: B → Y`
    pub bottom: M,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LiftWitness<M> {
    /// No commuting square exists.
    Vacuous,
    /// A diagonal for the first square in enumeration order.
    Diagonal { square: Square<M>, diagonal: M },
    /// A square with no diagonal.
    Counterexample(Square<M>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct LiftResult<M> {
    pub holds: bool,
    pub witness: LiftWitness<M>,
}

impl<M> LiftResult<M> {
    pub fn counterexample(&self) -> Option<&Square<M>> {
        match &self.witness {
            LiftWitness::Counterexample(sq) => Some(sq),
            _ => None,
        }
    }
}

/// A category whose objects can be listed up to a size bound and whose hom-sets are finite.
pub trait Category: Sync {
    type Object: Clone + Debug + Send + Sync;
    type Morphism: Clone + PartialEq + Debug + Send + Sync;
    /// Canonical form of a morphism up to isomorphism in the arrow category.
    type Key: Clone + Ord + Hash + Debug + Send + Sync;

    /// One object per isomorphism class, sizes `0..=max_size`.
    fn objects(&self, max_size: usize) -> Vec<Self::Object>;
    /// Every morphism `a → b`, deterministic and duplicate-free.
    fn homs(&self, a: &Self::Object, b: &Self::Object) -> Vec<Self::Morphism>;
    fn domain(&self, f: &Self::Morphism) -> Self::Object;
    fn codomain(&self, f: &Self::Morphism) -> Self::Object;
    /// `f` followed by `g`.
    fn compose(&self, f: &Self::Morphism, g: &Self::Morphism) -> Self::Morphism;
    fn identity(&self, a: &Self::Object) -> Self::Morphism;
    fn object_size(&self, a: &Self::Object) -> usize;
    fn morphism_key(&self, f: &Self::Morphism) -> Self::Key;
    fn render(&self, f: &Self::Morphism) -> String;
    fn is_mono(&self, f: &Self::Morphism) -> bool;
    /// The unique map to the terminal object.
    fn to_terminal(&self, a: &Self::Object) -> Self::Morphism;

    /// Largest of the endpoint sizes; `C_{<n}` keeps morphisms with `size < n`.
    fn morphism_size(&self, f: &Self::Morphism) -> usize {
        self.object_size(&self.domain(f)).max(self.object_size(&self.codomain(f)))
    }

    /// Report order: total endpoint size, then canonical key.
    fn order_key(&self, f: &Self::Morphism) -> (usize, Self::Key) {
        let total = self.object_size(&self.domain(f)) + self.object_size(&self.codomain(f));
        (total, self.morphism_key(f))
    }

    fn is_iso(&self, f: &Self::Morphism) -> bool {
        let (a, b) = (self.domain(f), self.codomain(f));
        let (ida, idb) = (self.identity(&a), self.identity(&b));
        self.homs(&b, &a)
            .iter()
            .any(|g| self.compose(f, g) == ida && self.compose(g, f) == idb)
    }

    /// One morphism per isomorphism class among maps between objects of size `≤ max_size`,
    /// sorted by [`Category::order_key`].
    fn universe(&self, max_size: usize) -> Arc<Vec<Self::Morphism>> {
        let objects = self.objects(max_size);
        let mut seen = std::collections::BTreeMap::new();
        for a in &objects {
            for b in &objects {
                for f in self.homs(a, b) {
                    seen.entry(self.order_key(&f)).or_insert(f);
                }
            }
        }
        Arc::new(seen.into_values().collect())
    }

    /// Decides `f ⧄ g`. The default enumerates squares and searches `hom(B, X)`.
    fn lift(&self, f: &Self::Morphism, g: &Self::Morphism) -> LiftResult<Self::Morphism> {
        generic_lift(self, f, g)
    }
}

/// Exhaustive `f ⧄ g`: every commuting square, every candidate diagonal.
pub fn generic_lift<C: Category + ?Sized>(cat: &C, f: &C::Morphism, g: &C::Morphism) -> LiftResult<C::Morphism> {
    let (a, b) = (cat.domain(f), cat.codomain(f));
    let (x, y) = (cat.domain(g), cat.codomain(g));
    let tops = cat.homs(&a, &x);
    if tops.is_empty() {
        return LiftResult { holds: true, witness: LiftWitness::Vacuous };
    }
    let bottoms = cat.homs(&b, &y);
    let diagonals = cat.homs(&b, &x);
    let mut first = None;
    for i in &tops {
        let ig = cat.compose(i, g);
        for j in &bottoms {
            if cat.compose(f, j) != ig {
                continue;
            }
            let d = diagonals
                .iter()
                .find(|d| cat.compose(f, d) == *i && cat.compose(d, g) == *j);
            let square = Square { top: i.clone(), bottom: j.clone() };
            match d {
                None => return LiftResult { holds: false, witness: LiftWitness::Counterexample(square) },
                Some(d) if first.is_none() => first = Some((square, d.clone())),
                Some(_) => {}
            }
        }
    }
    let witness = match first {
        Some((square, diagonal)) => LiftWitness::Diagonal { square, diagonal },
        None => LiftWitness::Vacuous,
    };
    LiftResult { holds: true, witness }
}

/// Decides `f ⧄ g` in `cat`.
pub fn check_lifting<C: Category>(f: &C::Morphism, g: &C::Morphism, cat: &C) -> LiftResult<C::Morphism> {
    cat.lift(f, g)
}
