use std::collections::BTreeSet;
use std::sync::Arc;

use super::canon::canonical_form;
use super::map::SpaceMap;
use super::search::all_monotone;
use super::space::{bit, default_label, FiniteSpace};
use super::SpaceError;

/// Largest size accepted by space enumeration up to homeomorphism.
pub const ENUMERATION_LIMIT: usize = 7;
/// Largest size accepted by labelled enumeration (9 535 241 preorders live on 7 points).
pub const LABELED_LIMIT: usize = 6;

/// Every way of adding a last point to a preorder on `succ.len()` points.
///
/// The new point `p` gets successors `S` (a closed set) and predecessors `P`
/// (an open set); transitivity additionally needs `x↘y` for all `x ∈ P`, `y ∈ S`.
fn extensions(base: &FiniteSpace, mut emit: impl FnMut(Vec<u64>)) {
    let n = base.len();
    let p = n;
    let closed = base.closed_sets();
    let open = base.open_sets();
    for &s in &closed {
        for &o in &open {
            if super::space::points_of(o).any(|x| base.succ(x) & s != s) {
                continue;
            }
            let mut succ: Vec<u64> = (0..n)
                .map(|x| if o & bit(x) != 0 { base.succ(x) | bit(p) } else { base.succ(x) })
                .collect();
            succ.push(s | bit(p));
            emit(succ);
        }
    }
}

fn labels(n: usize) -> Vec<String> {
    (0..n).map(default_label).collect()
}

/// All spaces with exactly `n` points, labelled or one per homeomorphism class.
///
/// Both lists come out in a fixed order: labelled spaces in extension order,
/// homeomorphism classes sorted by canonical form.
pub fn spaces_of_size(n: usize, up_to_homeomorphism: bool) -> Result<Vec<FiniteSpace>, SpaceError> {
    let limit = if up_to_homeomorphism { ENUMERATION_LIMIT } else { LABELED_LIMIT };
    if n > limit {
        return Err(SpaceError::TooLarge { size: n, limit });
    }
    let mut current = vec![FiniteSpace::empty()];
    for k in 1..=n {
        if up_to_homeomorphism {
            let mut forms = BTreeSet::new();
            for base in &current {
                extensions(base, |succ| {
                    let s = FiniteSpace::from_closed(labels(k), succ);
                    forms.insert(canonical_form(&s).expect("size within canonical limit"));
                });
            }
            current = forms.into_iter().map(|f| f.to_space()).collect();
        } else {
            let mut next = Vec::new();
            for base in &current {
                extensions(base, |succ| next.push(FiniteSpace::from_closed(labels(k), succ)));
            }
            current = next;
        }
    }
    Ok(current)
}

/// All spaces with at most `max_size` points (the empty space included), smallest first.
pub fn enumerate_spaces(max_size: usize, up_to_homeomorphism: bool) -> Result<Vec<FiniteSpace>, SpaceError> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        out.extend(spaces_of_size(n, up_to_homeomorphism)?);
    }
    Ok(out)
}

/// All continuous maps `a → b` in lexicographic order of their assignments.
pub fn enumerate_maps(a: &Arc<FiniteSpace>, b: &Arc<FiniteSpace>) -> Vec<SpaceMap> {
    all_monotone(a, b)
        .into_iter()
        .map(|points| SpaceMap::new_unchecked(a.clone(), b.clone(), points))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fintop::canon::is_homeomorphic;

    #[test]
    fn homeomorphism_classes_of_two_points() {
        let spaces = spaces_of_size(2, true).unwrap();
        assert_eq!(spaces.len(), 3);
        let disc = FiniteSpace::discrete(2);
        let sier = FiniteSpace::sierpinski();
        let anti = FiniteSpace::antidiscrete(2);
        for named in [&disc, &sier, &anti] {
            assert_eq!(spaces.iter().filter(|s| is_homeomorphic(s, named).unwrap()).count(), 1);
        }
    }

    #[test]
    fn labelled_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| spaces_of_size(n, false).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 4, 29, 355]);
    }

    #[test]
    fn unlabelled_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| spaces_of_size(n, true).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 9, 33, 139]);
    }

    #[test]
    fn size_guard() {
        assert!(matches!(spaces_of_size(8, true), Err(SpaceError::TooLarge { .. })));
        assert!(matches!(spaces_of_size(7, false), Err(SpaceError::TooLarge { .. })));
    }

    #[test]
    fn map_counts() {
        let s = Arc::new(FiniteSpace::sierpinski());
        assert_eq!(enumerate_maps(&s, &s).len(), 3);
        let d = Arc::new(FiniteSpace::discrete(2));
        assert_eq!(enumerate_maps(&d, &s).len(), 4);
        let pt = Arc::new(FiniteSpace::point());
        for sp in enumerate_spaces(3, true).unwrap() {
            assert_eq!(enumerate_maps(&Arc::new(sp), &pt).len(), 1);
        }
    }
}
