use std::fmt;
use std::sync::Arc;

use super::search::is_monotone;
use super::space::{bit, points_of, FiniteSpace};
use super::SpaceError;

/// A continuous (monotone) map between finite spaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpaceMap {
    dom: Arc<FiniteSpace>,
    cod: Arc<FiniteSpace>,
    points: Vec<usize>,
}

impl SpaceMap {
    pub fn new(
        dom: impl Into<Arc<FiniteSpace>>,
        cod: impl Into<Arc<FiniteSpace>>,
        points: Vec<usize>,
    ) -> Result<Self, SpaceError> {
        let (dom, cod) = (dom.into(), cod.into());
        if points.len() != dom.len() {
            return Err(SpaceError::Shape(format!(
                "assignment has {} entries for a {}-point domain",
                points.len(),
                dom.len()
            )));
        }
        if let Some(&y) = points.iter().find(|&&y| y >= cod.len()) {
            return Err(SpaceError::Shape(format!("point {y} is outside the codomain")));
        }
        if !is_monotone(&dom, &cod, &points) {
            return Err(SpaceError::NotMonotone);
        }
        Ok(SpaceMap { dom, cod, points })
    }

    pub(crate) fn new_unchecked(dom: Arc<FiniteSpace>, cod: Arc<FiniteSpace>, points: Vec<usize>) -> Self {
        debug_assert!(is_monotone(&dom, &cod, &points));
        SpaceMap { dom, cod, points }
    }

    pub fn identity(space: impl Into<Arc<FiniteSpace>>) -> Self {
        let space = space.into();
        let points = (0..space.len()).collect();
        SpaceMap { dom: space.clone(), cod: space, points }
    }

    /// The unique map into the one-point space.
    pub fn to_point(space: impl Into<Arc<FiniteSpace>>) -> Self {
        let space = space.into();
        let points = vec![0; space.len()];
        SpaceMap { dom: space, cod: Arc::new(FiniteSpace::point()), points }
    }

    /// The unique map out of the empty space.
    pub fn from_empty(space: impl Into<Arc<FiniteSpace>>) -> Self {
        SpaceMap { dom: Arc::new(FiniteSpace::empty()), cod: space.into(), points: Vec::new() }
    }

    pub fn domain(&self) -> &Arc<FiniteSpace> {
        &self.dom
    }

    pub fn codomain(&self) -> &Arc<FiniteSpace> {
        &self.cod
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.points[x]
    }

    /// `self` followed by `then`.
    pub fn then(&self, then: &SpaceMap) -> SpaceMap {
        debug_assert!(self.cod.same_relation(&then.dom), "composing non-matching maps");
        let points = self.points.iter().map(|&y| then.points[y]).collect();
        SpaceMap { dom: self.dom.clone(), cod: then.cod.clone(), points }
    }

    pub fn image(&self) -> u64 {
        self.points.iter().fold(0, |acc, &y| acc | bit(y))
    }

    pub fn image_of(&self, mask: u64) -> u64 {
        points_of(mask).fold(0, |acc, x| acc | bit(self.points[x]))
    }

    pub fn preimage(&self, mask: u64) -> u64 {
        self.points
            .iter()
            .enumerate()
            .filter(|&(_, &y)| mask & bit(y) != 0)
            .fold(0, |acc, (x, _)| acc | bit(x))
    }

    pub fn fibre(&self, y: usize) -> u64 {
        self.preimage(bit(y))
    }

    pub fn is_injective(&self) -> bool {
        self.image().count_ones() as usize == self.points.len()
    }

    pub fn is_surjective(&self) -> bool {
        self.image() == self.cod.all()
    }

    /// Bijective with monotone inverse.
    pub fn is_iso(&self) -> bool {
        self.is_injective()
            && self.is_surjective()
            && (0..self.dom.len()).all(|x| {
                (0..self.dom.len()).all(|y| self.dom.arrow(x, y) == self.cod.arrow(self.points[x], self.points[y]))
            })
    }

    /// Replaces the endpoint objects by spaces with identical relations
    /// (typically relabelled copies).
    pub fn with_endpoints(&self, dom: Arc<FiniteSpace>, cod: Arc<FiniteSpace>) -> Result<SpaceMap, SpaceError> {
        if !dom.same_relation(&self.dom) || !cod.same_relation(&self.cod) {
            return Err(SpaceError::Shape("replacement endpoints differ in structure".into()));
        }
        Ok(SpaceMap { dom, cod, points: self.points.clone() })
    }

    pub fn size(&self) -> usize {
        self.dom.len().max(self.cod.len())
    }
}

impl fmt::Debug for SpaceMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::notation::render_map(self))
    }
}

impl fmt::Display for SpaceMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::notation::render_map(self))
    }
}
