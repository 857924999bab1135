//! Generic checks of the basic algebra of orthogonals.

use rayon::prelude::*;

use super::eval::in_orthogonal;
use super::{Category, Side};

/// Is `h` in `set^side`?
pub fn lifts_against_all<C: Category>(cat: &C, h: &C::Morphism, set: &[C::Morphism], side: Side) -> bool {
    in_orthogonal(cat, h, set, side)
}

/// For `small ⊆ large`, every member of `large^side` of size `≤ bound` lies in `small^side`.
/// Returns the number of members checked and the first violation.
pub fn antitone<C: Category>(
    cat: &C,
    small: &[C::Morphism],
    large: &[C::Morphism],
    side: Side,
    bound: usize,
) -> (usize, Option<C::Morphism>) {
    let universe = cat.universe(bound);
    let members: Vec<&C::Morphism> = universe.par_iter().filter(|h| in_orthogonal(cat, h, large, side)).collect();
    let bad = members
        .par_iter()
        .find_first(|h| !in_orthogonal(cat, h, small, side))
        .map(|h| (*h).clone());
    (members.len(), bad)
}

/// `C ⊆ C^{side, opposite}` at bounded scale: each generator lifts against every member of
/// `C^side` of size `≤ bound`. Returns the size of the computed inner class and the first
/// generator that fails.
pub fn reflexive_bounded<C: Category>(
    cat: &C,
    generators: &[C::Morphism],
    side: Side,
    bound: usize,
) -> (usize, Option<C::Morphism>) {
    let inner: Vec<C::Morphism> = cat
        .universe(bound)
        .par_iter()
        .filter(|h| in_orthogonal(cat, h, generators, side))
        .cloned()
        .collect();
    let outer = match side {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    };
    let bad = generators.iter().find(|g| !in_orthogonal(cat, g, &inner, outer)).cloned();
    (inner.len(), bad)
}

/// The inheritance rule for a mono `m: A → X`: if `X → *` and `m` are in `set^l` then
/// so is `A → *`. Returns `None` when the premises fail, otherwise whether the conclusion holds.
pub fn inherits_terminal_map<C: Category>(cat: &C, set: &[C::Morphism], m: &C::Morphism) -> Option<bool> {
    if !cat.is_mono(m) {
        return None;
    }
    let x_term = cat.to_terminal(&cat.codomain(m));
    if !in_orthogonal(cat, &x_term, set, Side::Left) || !in_orthogonal(cat, m, set, Side::Left) {
        return None;
    }
    let a_term = cat.to_terminal(&cat.domain(m));
    Some(in_orthogonal(cat, &a_term, set, Side::Left))
}
