//! Evaluation of iterated orthogonals by (bounded) enumeration.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use super::verdict::{Approx, StepRecord, StepSource, Verdict, VerdictKind, Witness};
use super::{Category, OrthExpr, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("the expression has no generators")]
    NoGenerators,
    #[error("the expression has no steps")]
    NoSteps,
    #[error("expected a single-step expression, found {0} steps")]
    NotOneStep(usize),
    #[error(
        "step {step} quantifies over an unbounded class: add `_{{<N}}` to it, \
         pass an inner bound, or use a class with a verified oracle"
    )]
    Unbounded { step: usize },
    #[error("output bound must be at least 1")]
    OutputBound,
}

pub type Predicate<M> = Arc<dyn Fn(&M) -> bool + Send + Sync>;

/// An exact description of the class `(generators)^{sides}` by a direct predicate.
pub struct Oracle<C: Category> {
    pub name: String,
    pub expr: OrthExpr<C::Morphism>,
    pub predicate: Predicate<C::Morphism>,
    /// Largest size at which the predicate was checked against lifting, if any.
    pub verified_to: Option<usize>,
}

impl<C: Category> fmt::Debug for Oracle<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Oracle")
            .field("name", &self.name)
            .field("sides", &self.expr.sides())
            .field("verified_to", &self.verified_to)
            .finish()
    }
}

/// Registered oracles; only verified ones are ever substituted.
pub struct OracleSet<C: Category> {
    oracles: Vec<Oracle<C>>,
}

impl<C: Category> Default for OracleSet<C> {
    fn default() -> Self {
        OracleSet { oracles: Vec::new() }
    }
}

impl<C: Category> OracleSet<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(
        &mut self,
        name: &str,
        expr: OrthExpr<C::Morphism>,
        predicate: impl Fn(&C::Morphism) -> bool + Send + Sync + 'static,
    ) {
        assert!(expr.steps.iter().all(|s| s.bound.is_none()), "oracles describe unbounded classes");
        self.oracles.push(Oracle { name: name.to_string(), expr, predicate: Arc::new(predicate), verified_to: None });
    }

    pub fn oracles(&self) -> &[Oracle<C>] {
        &self.oracles
    }

    /// Compares every oracle with lifting-based evaluation on all morphisms of size
    /// `≤ bound`. Returns, per oracle, the number checked and the first disagreement.
    pub fn verify(&mut self, cat: &C, bound: usize) -> Vec<(String, usize, Option<C::Morphism>)> {
        let universe = cat.universe(bound);
        let mut out = Vec::new();
        for oracle in &mut self.oracles {
            let plain = EvalOptions { inner_bound: Some(bound), oracles: None };
            let prepared = prepare(cat, &oracle.expr, &plain).expect("oracle expressions are well formed");
            let exact = prepared.records.iter().all(|r| r.approx == Approx::Exact);
            let bad = universe
                .par_iter()
                .find_first(|h| prepared.member(h).is_yes() != (oracle.predicate)(h))
                .cloned();
            if bad.is_none() && exact {
                oracle.verified_to = Some(oracle.verified_to.map_or(bound, |b| b.max(bound)));
            }
            out.push((oracle.name.clone(), universe.len(), bad));
        }
        out
    }

    fn lookup(&self, cat: &C, expr: &OrthExpr<C::Morphism>, steps: usize) -> Option<&Oracle<C>> {
        if expr.steps[..steps].iter().any(|s| s.bound.is_some()) {
            return None;
        }
        let keys = |gens: &[C::Morphism]| {
            let mut k: Vec<_> = gens.iter().map(|g| cat.morphism_key(g)).collect();
            k.sort();
            k.dedup();
            k
        };
        let wanted = keys(&expr.generators);
        self.oracles.iter().find(|o| {
            o.verified_to.is_some()
                && o.expr.steps.len() == steps
                && o.expr.steps.iter().zip(&expr.steps).all(|(a, b)| a.side == b.side)
                && keys(&o.expr.generators) == wanted
        })
    }
}

pub struct EvalOptions<'a, C: Category> {
    /// Working bound for inner steps that carry no explicit bound.
    pub inner_bound: Option<usize>,
    pub oracles: Option<&'a OracleSet<C>>,
}

impl<C: Category> Default for EvalOptions<'_, C> {
    fn default() -> Self {
        EvalOptions { inner_bound: None, oracles: None }
    }
}

impl<C: Category> Clone for EvalOptions<'_, C> {
    fn clone(&self) -> Self {
        EvalOptions { inner_bound: self.inner_bound, oracles: self.oracles }
    }
}

/// Is `h` in `set^side`? Returns the first opposing morphism that fails, with its square.
pub(crate) fn first_failure<C: Category>(
    cat: &C,
    h: &C::Morphism,
    set: &[C::Morphism],
    side: Side,
) -> Option<Witness<C::Morphism>> {
    set.iter().find_map(|s| {
        let res = match side {
            Side::Left => cat.lift(h, s),
            Side::Right => cat.lift(s, h),
        };
        res.counterexample().map(|sq| Witness { against: s.clone(), square: sq.clone() })
    })
}

pub(crate) fn in_orthogonal<C: Category>(cat: &C, h: &C::Morphism, set: &[C::Morphism], side: Side) -> bool {
    set.iter().all(|s| match side {
        Side::Left => cat.lift(h, s).holds,
        Side::Right => cat.lift(s, h).holds,
    })
}

/// An expression with its inner steps materialised, ready for membership queries.
pub struct PreparedClass<'c, C: Category> {
    cat: &'c C,
    side: Side,
    bound: Option<usize>,
    opposing: Vec<C::Morphism>,
    approx: Approx,
    records: Vec<StepRecord>,
    exact: Option<(String, Predicate<C::Morphism>)>,
}

impl<C: Category> PreparedClass<'_, C> {
    pub fn records(&self) -> &[StepRecord] {
        &self.records
    }

    /// The set the outermost step lifts against.
    pub fn opposing(&self) -> &[C::Morphism] {
        &self.opposing
    }

    pub fn opposing_approx(&self) -> Approx {
        self.approx
    }

    pub fn member(&self, h: &C::Morphism) -> Verdict<C::Morphism> {
        let cat = self.cat;
        if let Some((_, pred)) = &self.exact {
            let kind = if pred(h) { VerdictKind::ExactYes } else { VerdictKind::ExactNo };
            return Verdict { kind, definitive: true, steps: self.records.clone(), witness: None, note: None };
        }
        if let Some(n) = self.bound {
            if cat.morphism_size(h) >= n {
                return Verdict {
                    kind: VerdictKind::ExactNo,
                    definitive: true,
                    steps: self.records.clone(),
                    witness: None,
                    note: Some(format!("outside the step bound <{n}")),
                };
            }
        }
        let witness = first_failure(cat, h, &self.opposing, self.side);
        let (kind, definitive) = match (witness.is_some(), self.approx) {
            (false, Approx::Exact) => (VerdictKind::ExactYes, true),
            (true, Approx::Exact) => (VerdictKind::ExactNo, true),
            (false, Approx::Over) => (VerdictKind::BoundedYes, true),
            (false, _) => (VerdictKind::BoundedYes, false),
            (true, Approx::Under) => (VerdictKind::BoundedNo, true),
            (true, _) => (VerdictKind::BoundedNo, false),
        };
        Verdict { kind, definitive, steps: self.records.clone(), witness, note: None }
    }
}

/// Materialises every step but the last.
pub fn prepare<'c, C: Category>(
    cat: &'c C,
    expr: &OrthExpr<C::Morphism>,
    opts: &EvalOptions<'_, C>,
) -> Result<PreparedClass<'c, C>, EvalError> {
    if expr.generators.is_empty() {
        return Err(EvalError::NoGenerators);
    }
    let n = expr.steps.len();
    if n == 0 {
        return Err(EvalError::NoSteps);
    }
    let last = expr.steps[n - 1];
    if let Some(oracles) = opts.oracles {
        if n > 1 {
            if let Some(o) = oracles.lookup(cat, expr, n) {
                let record = StepRecord {
                    side: last.side,
                    max_size: o.verified_to.unwrap_or(0),
                    source: StepSource::Oracle(o.name.clone()),
                    approx: Approx::Exact,
                    members: 0,
                };
                return Ok(PreparedClass {
                    cat,
                    side: last.side,
                    bound: None,
                    opposing: Vec::new(),
                    approx: Approx::Exact,
                    records: vec![record],
                    exact: Some((o.name.clone(), o.predicate.clone())),
                });
            }
        }
    }

    let mut current: Vec<C::Morphism> = expr.generators.clone();
    current.sort_by_cached_key(|g| cat.order_key(g));
    let mut approx = Approx::Exact;
    let mut records = Vec::new();
    let mut start = 0;
    if let Some(oracles) = opts.oracles {
        for k in (1..n).rev() {
            if let Some(o) = oracles.lookup(cat, expr, k) {
                let verified = o.verified_to.expect("lookup only returns verified oracles");
                let m = opts.inner_bound.unwrap_or(verified).min(verified);
                let pred = o.predicate.clone();
                current = cat.universe(m).par_iter().filter(|h| pred(h)).cloned().collect();
                approx = Approx::Under;
                records.push(StepRecord {
                    side: expr.steps[k - 1].side,
                    max_size: m,
                    source: StepSource::Oracle(o.name.clone()),
                    approx,
                    members: current.len(),
                });
                start = k;
                break;
            }
        }
    }
    for (idx, step) in expr.steps.iter().enumerate().take(n - 1).skip(start) {
        let (max_size, next) = match step.bound {
            Some(0) => (None, approx.through_explicit_bound()),
            Some(b) => (Some(b - 1), approx.through_explicit_bound()),
            None => match opts.inner_bound {
                Some(m) => (Some(m), approx.through_truncation()),
                None => return Err(EvalError::Unbounded { step: idx }),
            },
        };
        let prev = std::mem::take(&mut current);
        if let Some(m) = max_size {
            let side = step.side;
            current = cat
                .universe(m)
                .par_iter()
                .filter(|h| in_orthogonal(cat, h, &prev, side))
                .cloned()
                .collect();
        }
        approx = next;
        records.push(StepRecord {
            side: step.side,
            max_size: max_size.unwrap_or(0),
            source: StepSource::Lifting,
            approx,
            members: current.len(),
        });
    }
    Ok(PreparedClass { cat, side: last.side, bound: last.bound, opposing: current, approx, records, exact: None })
}

pub fn member<C: Category>(
    expr: &OrthExpr<C::Morphism>,
    h: &C::Morphism,
    cat: &C,
    opts: &EvalOptions<'_, C>,
) -> Result<Verdict<C::Morphism>, EvalError> {
    Ok(prepare(cat, expr, opts)?.member(h))
}

pub fn is_member_one_step<C: Category>(
    expr: &OrthExpr<C::Morphism>,
    h: &C::Morphism,
    cat: &C,
) -> Result<Verdict<C::Morphism>, EvalError> {
    if expr.steps.len() != 1 {
        return Err(EvalError::NotOneStep(expr.steps.len()));
    }
    member(expr, h, cat, &EvalOptions::default())
}

/// Every representative of size `≤ output_bound`, tagged with its verdict, in canonical order.
pub fn enumerate_class<C: Category>(
    expr: &OrthExpr<C::Morphism>,
    cat: &C,
    output_bound: usize,
    opts: &EvalOptions<'_, C>,
) -> Result<Vec<(C::Morphism, Verdict<C::Morphism>)>, EvalError> {
    if output_bound == 0 {
        return Err(EvalError::OutputBound);
    }
    let prepared = prepare(cat, expr, opts)?;
    Ok(cat
        .universe(output_bound)
        .par_iter()
        .map(|h| (h.clone(), prepared.member(h)))
        .collect())
}
