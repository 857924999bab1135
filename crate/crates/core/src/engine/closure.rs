//! Empirical closure properties of one-step orthogonal classes.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::eval::in_orthogonal;
use super::{Category, OrthExpr, Side};

/// The (co)limit constructions closure checks need.
pub trait FiniteLimits: Category {
    /// For `h: X → Z` and `g: Y → Z`, the pulled-back map `X ×_Z Y → Y`.
    fn pull_back(&self, h: &Self::Morphism, along: &Self::Morphism) -> Self::Morphism;
    /// For `h: Z → X` and `g: Z → Y`, the pushed-out map `Y → X ⊔_Z Y`.
    fn push_out(&self, h: &Self::Morphism, along: &Self::Morphism) -> Self::Morphism;
    fn product_of(&self, h1: &Self::Morphism, h2: &Self::Morphism) -> Self::Morphism;
    fn coproduct_of(&self, h1: &Self::Morphism, h2: &Self::Morphism) -> Self::Morphism;
    fn retracts_of(&self, h: &Self::Morphism) -> Vec<Self::Morphism>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Construction {
    Composition,
    Retract,
    Pullback,
    Pushout,
    Product,
    Coproduct,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Composition => "composition",
            Construction::Retract => "retracts",
            Construction::Pullback => "pullbacks",
            Construction::Pushout => "pushouts",
            Construction::Product => "products",
            Construction::Coproduct => "coproducts",
        })
    }
}

impl Construction {
    /// Whether the standard theory guarantees stability for a class on `side`.
    pub fn standard_for(self, side: Side) -> bool {
        match self {
            Construction::Composition | Construction::Retract => true,
            Construction::Pullback | Construction::Product => side == Side::Right,
            Construction::Pushout | Construction::Coproduct => side == Side::Left,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClosureCheck {
    pub construction: Construction,
    /// Predicted by the standard theory for this side.
    pub expected: bool,
    pub instances: usize,
    pub violations: usize,
    /// `(input, constructed)` of the first violation, rendered.
    pub first_violation: Option<(String, String)>,
}

impl ClosureCheck {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub side: Side,
    pub bound: usize,
    pub members: usize,
    pub checks: Vec<ClosureCheck>,
}

impl ClosureReport {
    pub fn check(&self, c: Construction) -> &ClosureCheck {
        self.checks.iter().find(|k| k.construction == c).expect("every construction is checked")
    }
}

struct Tally<'c, C: Category> {
    cat: &'c C,
    instances: usize,
    violations: usize,
    first: Option<(String, String)>,
}

impl<'c, C: Category> Tally<'c, C> {
    fn new(cat: &'c C) -> Self {
        Tally { cat, instances: 0, violations: 0, first: None }
    }

    fn merge(mut self, other: Self) -> Self {
        self.instances += other.instances;
        self.violations += other.violations;
        if self.first.is_none() {
            self.first = other.first;
        }
        self
    }

    fn record(&mut self, input: &C::Morphism, out: &C::Morphism, ok: bool) {
        self.instances += 1;
        if !ok {
            self.violations += 1;
            if self.first.is_none() {
                self.first = Some((self.cat.render(input), self.cat.render(out)));
            }
        }
    }

    fn finish(self, construction: Construction, side: Side) -> ClosureCheck {
        ClosureCheck {
            construction,
            expected: construction.standard_for(side),
            instances: self.instances,
            violations: self.violations,
            first_violation: self.first,
        }
    }
}

/// Checks which constructions keep `(gens)^side` closed, on all instances built from
/// members of size `≤ bound`. Products and coproducts use members of size `≤ 2`.
pub fn check_closure_laws<C: FiniteLimits>(expr: &OrthExpr<C::Morphism>, cat: &C, bound: usize) -> ClosureReport {
    assert_eq!(expr.steps.len(), 1, "closure laws are checked for one-step classes");
    let side = expr.steps[0].side;
    let gens = &expr.generators;
    let is_member = |h: &C::Morphism| in_orthogonal(cat, h, gens, side);
    let objects = cat.objects(bound);
    let members: Vec<C::Morphism> = cat.universe(bound).par_iter().filter(|h| is_member(h)).cloned().collect();

    let run = |construction: Construction, each: &(dyn Fn(&C::Morphism, &mut Tally<'_, C>) + Sync)| {
        members
            .par_iter()
            .fold(|| Tally::new(cat), |mut t, h| {
                each(h, &mut t);
                t
            })
            .reduce(|| Tally::new(cat), Tally::merge)
            .finish(construction, side)
    };

    let composition = run(Construction::Composition, &|h, t| {
        let b = cat.codomain(h);
        for c in objects.iter() {
            for k in cat.homs(&b, c) {
                if is_member(&k) {
                    let hk = cat.compose(h, &k);
                    t.record(h, &hk, is_member(&hk));
                }
            }
        }
    });
    let retract = run(Construction::Retract, &|h, t| {
        for r in cat.retracts_of(h) {
            t.record(h, &r, is_member(&r));
        }
    });
    let pullback = run(Construction::Pullback, &|h, t| {
        let z = cat.codomain(h);
        for y in objects.iter() {
            for g in cat.homs(y, &z) {
                let p = cat.pull_back(h, &g);
                t.record(h, &p, is_member(&p));
            }
        }
    });
    let pushout = run(Construction::Pushout, &|h, t| {
        let z = cat.domain(h);
        for y in objects.iter() {
            for g in cat.homs(&z, y) {
                let p = cat.push_out(h, &g);
                t.record(h, &p, is_member(&p));
            }
        }
    });
    let small: Vec<&C::Morphism> = members.iter().filter(|h| cat.morphism_size(h) <= 2).collect();
    let pairs = |construction: Construction, build: &(dyn Fn(&C::Morphism, &C::Morphism) -> C::Morphism + Sync)| {
        small
            .par_iter()
            .fold(|| Tally::new(cat), |mut t, h1| {
                for h2 in &small {
                    let p = build(h1, h2);
                    t.record(h1, &p, is_member(&p));
                }
                t
            })
            .reduce(|| Tally::new(cat), Tally::merge)
            .finish(construction, side)
    };
    let product = pairs(Construction::Product, &|a, b| cat.product_of(a, b));
    let coproduct = pairs(Construction::Coproduct, &|a, b| cat.coproduct_of(a, b));
    ClosureReport {
        side,
        bound,
        members: members.len(),
        checks: vec![composition, retract, pullback, pushout, product, coproduct],
    }
}
