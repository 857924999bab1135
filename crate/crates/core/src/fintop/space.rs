use std::collections::HashMap;
use std::fmt;

use super::SpaceError;

/// Hard cap on the number of points a space may carry (one `u64` row each).
pub const MAX_POINTS: usize = 64;

/// A finite topological space, stored as its specialization preorder.
///
/// `succ[x]` has bit `y` set iff `x↘y`, i.e. `y ∈ cl{x}`. Closed sets are the
/// subsets closed under `↘`-successors, open sets those closed under
/// `↘`-predecessors. The relation is always reflexive and transitive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    labels: Vec<String>,
    succ: Vec<u64>,
    pred: Vec<u64>,
}

#[inline]
pub(crate) fn bit(x: usize) -> u64 {
    1u64 << x
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn points_of(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let x = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(x)
        }
    })
}

/// Default display labels: `a`, `b`, ..., `z`, `a1`, `b1`, ...
pub fn default_label(i: usize) -> String {
    let letter = (b'a' + (i % 26) as u8) as char;
    if i < 26 {
        letter.to_string()
    } else {
        format!("{letter}{}", i / 26)
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(default_label).collect()
}

fn transitive_closure(succ: &mut [u64]) {
    let n = succ.len();
    for k in 0..n {
        let row_k = succ[k];
        for row in succ.iter_mut() {
            if *row & bit(k) != 0 {
                *row |= row_k;
            }
        }
    }
}

impl FiniteSpace {
    /// Builds a space from a relation, closing it reflexively and transitively.
    pub fn from_relation(labels: Vec<String>, mut succ: Vec<u64>) -> Result<Self, SpaceError> {
        let n = labels.len();
        if n > MAX_POINTS {
            return Err(SpaceError::TooLarge { size: n, limit: MAX_POINTS });
        }
        if succ.len() != n {
            return Err(SpaceError::Shape(format!(
                "{} labels but {} relation rows",
                n,
                succ.len()
            )));
        }
        let mask = full_mask(n);
        if succ.iter().any(|r| r & !mask != 0) {
            return Err(SpaceError::Shape("relation refers to a point out of range".into()));
        }
        for (x, row) in succ.iter_mut().enumerate() {
            *row |= bit(x);
        }
        transitive_closure(&mut succ);
        Ok(Self::from_closed(labels, succ))
    }

    /// Trusts that `succ` is already a preorder.
    pub(crate) fn from_closed(labels: Vec<String>, succ: Vec<u64>) -> Self {
        let n = succ.len();
        let mut pred = vec![0u64; n];
        for (x, &row) in succ.iter().enumerate() {
            for y in points_of(row) {
                pred[y] |= bit(x);
            }
        }
        debug_assert_eq!(labels.len(), n);
        FiniteSpace { labels, succ, pred }
    }

    /// Builds a space from named points and a list of arrows `x↘y`.
    pub fn from_arrows(points: &[&str], arrows: &[(&str, &str)]) -> Result<Self, SpaceError> {
        let mut index = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if p.is_empty() {
                return Err(SpaceError::EmptyLabel);
            }
            if index.insert(*p, i).is_some() {
                return Err(SpaceError::DuplicateLabel((*p).to_string()));
            }
        }
        let mut succ = vec![0u64; points.len()];
        for (from, to) in arrows {
            let x = *index.get(from).ok_or_else(|| SpaceError::UnknownPoint((*from).to_string()))?;
            let y = *index.get(to).ok_or_else(|| SpaceError::UnknownPoint((*to).to_string()))?;
            succ[x] |= bit(y);
        }
        Self::from_relation(points.iter().map(|s| s.to_string()).collect(), succ)
    }

    pub fn empty() -> Self {
        Self::from_closed(Vec::new(), Vec::new())
    }

    pub fn point() -> Self {
        Self::from_closed(vec!["*".into()], vec![1])
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_closed(default_labels(n), (0..n).map(bit).collect())
    }

    pub fn antidiscrete(n: usize) -> Self {
        Self::from_closed(default_labels(n), vec![full_mask(n); n])
    }

    /// `{a↘b}`: `a` open, `b` closed.
    pub fn sierpinski() -> Self {
        Self::from_closed(default_labels(2), vec![0b11, 0b10])
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `x↘y`, i.e. `y ∈ cl{x}`.
    #[inline]
    pub fn arrow(&self, x: usize, y: usize) -> bool {
        self.succ[x] & bit(y) != 0
    }

    /// Closure of the point `x` as a mask.
    #[inline]
    pub fn succ(&self, x: usize) -> u64 {
        self.succ[x]
    }

    /// Smallest open neighbourhood of `x` as a mask.
    #[inline]
    pub fn pred(&self, x: usize) -> u64 {
        self.pred[x]
    }

    pub fn all(&self) -> u64 {
        full_mask(self.len())
    }

    pub fn closure(&self, mask: u64) -> u64 {
        points_of(mask).fold(0, |acc, x| acc | self.succ[x])
    }

    pub fn interior(&self, mask: u64) -> u64 {
        points_of(mask).filter(|&x| self.pred[x] & !mask == 0).fold(0, |acc, x| acc | bit(x))
    }

    /// Upward closure along `↘`-predecessors: the smallest open set containing `mask`.
    pub fn open_hull(&self, mask: u64) -> u64 {
        points_of(mask).fold(0, |acc, x| acc | self.pred[x])
    }

    pub fn is_closed(&self, mask: u64) -> bool {
        self.closure(mask) == mask
    }

    pub fn is_open(&self, mask: u64) -> bool {
        self.open_hull(mask) == mask
    }

    /// All open sets, in increasing mask order.
    pub fn open_sets(&self) -> Vec<u64> {
        self.subsets().filter(|&m| self.is_open(m)).collect()
    }

    pub fn closed_sets(&self) -> Vec<u64> {
        self.subsets().filter(|&m| self.is_closed(m)).collect()
    }

    pub fn clopen_sets(&self) -> Vec<u64> {
        self.subsets().filter(|&m| self.is_open(m) && self.is_closed(m)).collect()
    }

    /// Every subset as a mask; only sensible for small spaces.
    pub fn subsets(&self) -> impl Iterator<Item = u64> {
        assert!(self.len() <= 24, "subset enumeration on {} points", self.len());
        0..(1u64 << self.len())
    }

    /// Number of pairs `(x, y)` with `x↘y`, including the diagonal.
    pub fn arrow_count(&self) -> usize {
        self.succ.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// The same relation with point `x` moved to position `inverse[x]`,
    /// where `perm[k]` names the point placed at position `k`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut pos = vec![0usize; n];
        for (k, &x) in perm.iter().enumerate() {
            pos[x] = k;
        }
        let mut succ = vec![0u64; n];
        for (k, &x) in perm.iter().enumerate() {
            succ[k] = points_of(self.succ[x]).fold(0, |acc, y| acc | bit(pos[y]));
        }
        let labels = perm.iter().map(|&x| self.labels[x].clone()).collect();
        Self::from_closed(labels, succ)
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self, SpaceError> {
        if labels.len() != self.len() {
            return Err(SpaceError::Shape("label count does not match point count".into()));
        }
        Ok(Self::from_closed(labels, self.succ.clone()))
    }

    pub fn with_default_labels(&self) -> Self {
        Self::from_closed(default_labels(self.len()), self.succ.clone())
    }

    /// Same relation, ignoring labels.
    pub fn same_relation(&self, other: &Self) -> bool {
        self.succ == other.succ
    }

    /// The subspace on `mask` with the induced relation, plus the inclusion indices.
    pub fn subspace(&self, mask: u64) -> (Self, Vec<usize>) {
        let idx: Vec<usize> = points_of(mask & self.all()).collect();
        let succ = idx
            .iter()
            .map(|&x| {
                idx.iter()
                    .enumerate()
                    .filter(|&(_, &y)| self.arrow(x, y))
                    .fold(0, |acc, (k, _)| acc | bit(k))
            })
            .collect();
        let labels = idx.iter().map(|&x| self.labels[x].clone()).collect();
        (Self::from_closed(labels, succ), idx)
    }

    /// Rows of the relation matrix, `1` where `x↘y`, joined by `/`.
    pub fn matrix_string(&self) -> String {
        let n = self.len();
        (0..n)
            .map(|x| (0..n).map(|y| if self.arrow(x, y) { '1' } else { '0' }).collect::<String>())
            .collect::<Vec<_>>()
            .join("/")
    }

    pub fn is_preorder(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| self.arrow(x, x))
            && (0..n).all(|x| points_of(self.succ[x]).all(|y| self.succ[y] & !self.succ[x] == 0))
    }
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::notation::render_space(self))
    }
}

impl fmt::Display for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::notation::render_space(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_open_sets() {
        let s = FiniteSpace::from_arrows(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(s.open_sets(), vec![0b00, 0b01, 0b11]);
        assert_eq!(s.closed_sets(), vec![0b00, 0b10, 0b11]);
        assert!(s.is_open(0b01));
        assert!(s.is_closed(0b10));
    }

    #[test]
    fn one_point_space() {
        let s = FiniteSpace::from_arrows(&["a"], &[]).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.open_sets(), vec![0, 1]);
    }

    #[test]
    fn normality_test_space() {
        let s = FiniteSpace::from_arrows(
            &["a", "U", "x", "V", "b"],
            &[("U", "a"), ("U", "x"), ("V", "x"), ("V", "b")],
        )
        .unwrap();
        assert!(s.arrow(1, 0) && s.arrow(1, 2) && s.arrow(3, 2) && s.arrow(3, 4));
        assert!(!s.arrow(1, 4));
        assert_eq!(s.arrow_count(), 5 + 4);
    }

    #[test]
    fn duplicate_and_unknown_labels() {
        assert_eq!(
            FiniteSpace::from_arrows(&["a", "a"], &[]),
            Err(SpaceError::DuplicateLabel("a".into()))
        );
        assert_eq!(
            FiniteSpace::from_arrows(&["a"], &[("a", "q")]),
            Err(SpaceError::UnknownPoint("q".into()))
        );
    }

    #[test]
    fn transitive_closure_of_chain() {
        let s = FiniteSpace::from_arrows(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(s.arrow(0, 2));
        assert!(!s.arrow(2, 0));
        assert_eq!(s.closure(0b001), 0b111);
        assert_eq!(s.interior(0b011), 0b011);
        assert_eq!(s.interior(0b110), 0);
    }

    #[test]
    fn closing_a_closed_relation_is_identity() {
        let s = FiniteSpace::from_arrows(&["a", "b", "c"], &[("a", "b"), ("c", "b")]).unwrap();
        let again = FiniteSpace::from_relation(s.labels().to_vec(), (0..s.len()).map(|x| s.succ(x)).collect()).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn open_closed_duality_up_to_five_points() {
        for n in 0..=5 {
            for space in crate::fintop::spaces_of_size(n, false).unwrap() {
                for m in space.subsets() {
                    assert_eq!(space.is_open(m), space.is_closed(space.all() & !m));
                }
            }
        }
    }

    #[test]
    fn permuted_relabels_consistently() {
        let s = FiniteSpace::from_arrows(&["a", "b", "c"], &[("a", "b")]).unwrap();
        let p = s.permuted(&[2, 1, 0]);
        assert_eq!(p.labels(), &["c", "b", "a"]);
        assert!(p.arrow(2, 1));
        assert!(!p.arrow(0, 1));
    }
}
