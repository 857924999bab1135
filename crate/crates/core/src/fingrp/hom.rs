use std::fmt;
use std::sync::Arc;

use super::group::FiniteGroup;
use super::GroupError;

/// Largest domain order [`enumerate_homs`] accepts.
pub const HOM_LIMIT: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupHom {
    dom: Arc<FiniteGroup>,
    cod: Arc<FiniteGroup>,
    images: Vec<usize>,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `DOM->COD:i0,i1,...`, the image of every element in order.
impl fmt::Display for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.images.iter().map(|i| i.to_string()).collect();
        write!(f, "{}->{}:{}", self.dom.name(), self.cod.name(), imgs.join(","))
    }
}

impl GroupHom {
    pub fn new(dom: Arc<FiniteGroup>, cod: Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self, GroupError> {
        if images.len() != dom.order() || images.iter().any(|&y| y >= cod.order()) {
            return Err(GroupError::NotAHom(format!("expected {} images below {}", dom.order(), cod.order())));
        }
        for a in dom.elements() {
            for b in dom.elements() {
                if images[dom.mul(a, b)] != cod.mul(images[a], images[b]) {
                    return Err(GroupError::NotAHom(format!("f({a}*{b}) != f({a})*f({b})")));
                }
            }
        }
        Ok(GroupHom { dom, cod, images })
    }

    pub(crate) fn new_unchecked(dom: Arc<FiniteGroup>, cod: Arc<FiniteGroup>, images: Vec<usize>) -> Self {
        GroupHom { dom, cod, images }
    }

    pub fn identity(g: Arc<FiniteGroup>) -> Self {
        let images = g.all();
        GroupHom { dom: g.clone(), cod: g, images }
    }

    pub fn trivial(dom: Arc<FiniteGroup>, cod: Arc<FiniteGroup>) -> Self {
        let images = vec![cod.identity(); dom.order()];
        GroupHom { dom, cod, images }
    }

    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.dom
    }

    pub fn codomain(&self) -> &Arc<FiniteGroup> {
        &self.cod
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &GroupHom) -> GroupHom {
        assert_eq!(self.cod, g.dom, "composition needs matching groups");
        let images = self.images.iter().map(|&y| g.images[y]).collect();
        GroupHom { dom: self.dom.clone(), cod: g.cod.clone(), images }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.order()];
        self.images.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.order()];
        for &y in &self.images {
            seen[y] = true;
        }
        seen.iter().all(|&s| s)
    }

    pub fn kernel(&self) -> Vec<usize> {
        self.dom.elements().filter(|&a| self.images[a] == self.cod.identity()).collect()
    }
}

/// Every homomorphism `g → h`, sorted by image vector.
///
/// Images are chosen for a generating set of `g` (each of order dividing its generator's)
/// and propagated along the Cayley graph; any clash discards the choice.
pub fn enumerate_homs(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Result<Vec<GroupHom>, GroupError> {
    if g.order() > HOM_LIMIT {
        return Err(GroupError::TooLarge { order: g.order(), limit: HOM_LIMIT });
    }
    let gens = g.generators();
    let cands: Vec<Vec<usize>> = gens
        .iter()
        .map(|&a| {
            let k = g.element_order(a);
            h.elements().filter(|&y| k % h.element_order(y) == 0).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        let imgs: Vec<usize> = choice.iter().zip(&cands).map(|(&c, cs)| cs[c]).collect();
        if let Some(images) = propagate(g, h, &gens, &imgs) {
            out.push(GroupHom::new_unchecked(g.clone(), h.clone(), images));
        }
        for k in (0..choice.len()).rev() {
            choice[k] += 1;
            if choice[k] < cands[k].len() {
                continue 'outer;
            }
            choice[k] = 0;
        }
        break;
    }
    out.sort_by(|a, b| a.images.cmp(&b.images));
    Ok(out)
}

fn propagate(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; g.order()];
    map[g.identity()] = h.identity();
    let mut queue = vec![g.identity()];
    let mut next = 0;
    while next < queue.len() {
        let x = queue[next];
        next += 1;
        for (&a, &ia) in gens.iter().zip(imgs) {
            let y = g.mul(x, a);
            let val = h.mul(map[x], ia);
            if map[y] == UNSET {
                map[y] = val;
                queue.push(y);
            } else if map[y] != val {
                return None;
            }
        }
    }
    Some(map)
}

/// An isomorphism `g → h`, if any: invariants first, then a search over homomorphisms.
pub fn find_isomorphism(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Option<GroupHom> {
    if g.order() != h.order() || g.order_profile() != h.order_profile() || g.is_abelian() != h.is_abelian() {
        return None;
    }
    enumerate_homs(g, h).ok()?.into_iter().find(|f| f.is_injective())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingrp::group::{by_name, catalog};

    fn grp(name: &str) -> Arc<FiniteGroup> {
        Arc::new(by_name(name).unwrap())
    }

    #[test]
    fn spec_counts() {
        assert_eq!(enumerate_homs(&grp("Z2"), &grp("Z4")).unwrap().len(), 2);
        for h in catalog(12) {
            let h = Arc::new(h);
            assert_eq!(enumerate_homs(&h, &grp("0")).unwrap().len(), 1);
            for p in [2, 3, 5] {
                let expected = h.elements().filter(|&y| p % h.element_order(y) == 0).count();
                assert_eq!(enumerate_homs(&grp(&format!("Z{p}")), &h).unwrap().len(), expected);
            }
        }
    }

    #[test]
    fn automorphism_counts() {
        for (name, n) in [("S3", 6), ("V4", 6), ("Q8", 24), ("D4", 8), ("Z2xZ2xZ2", 168), ("A4", 24)] {
            let g = grp(name);
            let autos = enumerate_homs(&g, &g).unwrap().into_iter().filter(|f| f.is_injective()).count();
            assert_eq!(autos, n, "{name}");
        }
    }

    #[test]
    fn catalog_is_pairwise_non_isomorphic() {
        let all: Vec<Arc<FiniteGroup>> = catalog(16).into_iter().map(Arc::new).collect();
        for (i, g) in all.iter().enumerate() {
            for h in &all[i + 1..] {
                assert!(find_isomorphism(g, h).is_none(), "{} ~ {}", g.name(), h.name());
            }
        }
    }

    #[test]
    fn size_guard() {
        let big = Arc::new(crate::fingrp::group::direct_product(&grp("Z2"), &grp("Z16")));
        assert!(matches!(enumerate_homs(&big, &grp("Z2")), Err(GroupError::TooLarge { .. })));
    }
}
