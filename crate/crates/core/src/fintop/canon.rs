//! Canonical forms of finite spaces and of maps between them.
//!
//! The relation matrix of a space on `n` points is serialized position by
//! position: when position `k` is placed, the entries `(i,k)` and `(k,i)` for
//! `i < k` are appended. The canonical form is the lexicographically smallest
//! serialization over all point permutations. Because each serialized prefix
//! depends only on the points placed so far, the minimum can be found layer by
//! layer, keeping only the placements that tie for the smallest prefix.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::map::SpaceMap;
use super::space::{bit, FiniteSpace};
use super::SpaceError;

/// Spaces larger than this have no canonical form (the code must fit in 64 bits).
pub const CANONICAL_LIMIT: usize = 8;

/// Canonical relation encoding of a space; equal iff the spaces are homeomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    size: u8,
    code: u64,
}

fn serialized_bits(n: usize) -> usize {
    n * n.saturating_sub(1)
}

impl CanonicalForm {
    pub fn size(&self) -> usize {
        self.size as usize
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    /// The canonical relation matrix, `matrix[i][j]` meaning `i↘j`.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        let n = self.size();
        let mut m = vec![vec![false; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = true;
        }
        let mut remaining = serialized_bits(n);
        let mut take = || {
            remaining -= 1;
            self.code >> remaining & 1 == 1
        };
        for k in 1..n {
            for i in 0..k {
                m[i][k] = take();
                m[k][i] = take();
            }
        }
        m
    }

    /// The canonical representative, labelled `a`, `b`, ...
    pub fn to_space(&self) -> FiniteSpace {
        let m = self.matrix();
        let succ = m
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, &b)| b).fold(0, |acc, (j, _)| acc | bit(j)))
            .collect();
        FiniteSpace::from_closed((0..self.size()).map(super::space::default_label).collect(), succ)
    }
}

impl fmt::Display for CanonicalForm {
    /// Matrix rows as bit strings joined by `/`; `-` for the empty space.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size == 0 {
            return write!(f, "-");
        }
        let rows: Vec<String> = self
            .matrix()
            .iter()
            .map(|row| row.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Canonical form together with every placement (`perm[k]` = point at position `k`)
/// achieving it.
pub(crate) fn canonical_placements(space: &FiniteSpace) -> Result<(CanonicalForm, Vec<Vec<usize>>), SpaceError> {
    let n = space.len();
    if n > CANONICAL_LIMIT {
        return Err(SpaceError::TooLarge { size: n, limit: CANONICAL_LIMIT });
    }
    if n == 0 {
        return Ok((CanonicalForm { size: 0, code: 0 }, vec![Vec::new()]));
    }
    let mut states: Vec<(Vec<usize>, u64)> = (0..n).map(|x| (vec![x], bit(x))).collect();
    let mut code = 0u64;
    for k in 1..n {
        let mut best: Option<u64> = None;
        let mut next: Vec<(Vec<usize>, u64)> = Vec::new();
        for (perm, used) in &states {
            for v in (0..n).filter(|&v| used & bit(v) == 0) {
                let mut ext = 0u64;
                for &p in perm.iter() {
                    ext = (ext << 1) | space.arrow(p, v) as u64;
                    ext = (ext << 1) | space.arrow(v, p) as u64;
                }
                match best {
                    Some(b) if ext > b => continue,
                    Some(b) if ext == b => {}
                    _ => {
                        best = Some(ext);
                        next.clear();
                    }
                }
                let mut p2 = perm.clone();
                p2.push(v);
                next.push((p2, used | bit(v)));
            }
        }
        code = (code << (2 * k)) | best.expect("unplaced point exists");
        states = next;
    }
    let perms = states.into_iter().map(|(p, _)| p).collect();
    Ok((CanonicalForm { size: n as u8, code }, perms))
}

pub fn canonical_form(space: &FiniteSpace) -> Result<CanonicalForm, SpaceError> {
    canonical_placements(space).map(|(c, _)| c)
}

pub fn is_homeomorphic(a: &FiniteSpace, b: &FiniteSpace) -> Result<bool, SpaceError> {
    Ok(a.len() == b.len() && canonical_form(a)? == canonical_form(b)?)
}

/// The canonical representative of the homeomorphism class of `space`, with default labels.
pub fn canonical_space(space: &FiniteSpace) -> Result<FiniteSpace, SpaceError> {
    canonical_form(space).map(|c| c.to_space())
}

/// Automorphisms as point maps `sigma[x]`.
pub fn automorphisms(space: &FiniteSpace) -> Result<Vec<Vec<usize>>, SpaceError> {
    let (_, perms) = canonical_placements(space)?;
    let base = &perms[0];
    Ok(perms
        .iter()
        .map(|p| {
            let mut sigma = vec![0; base.len()];
            for k in 0..base.len() {
                sigma[base[k]] = p[k];
            }
            sigma
        })
        .collect())
}

/// Canonical key of a map up to isomorphism in the arrow category.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MapKey {
    pub dom: CanonicalForm,
    pub cod: CanonicalForm,
    pub points: Vec<u8>,
}

impl MapKey {
    pub fn size(&self) -> usize {
        self.dom.size().max(self.cod.size())
    }

    pub fn total_size(&self) -> usize {
        self.dom.size() + self.cod.size()
    }
}

impl fmt::Display for MapKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        write!(f, "{} -> {} [{}]", self.dom, self.cod, pts.join(","))
    }
}

/// Placement data reused across many key computations for the same endpoints.
pub(crate) struct Placements {
    pub form: CanonicalForm,
    /// For each canonical placement, `pos[x]` = position of point `x`.
    pub positions: Vec<Vec<usize>>,
    pub perms: Vec<Vec<usize>>,
}

impl Placements {
    pub fn of(space: &FiniteSpace) -> Result<Self, SpaceError> {
        let (form, perms) = canonical_placements(space)?;
        let positions = perms
            .iter()
            .map(|p| {
                let mut pos = vec![0; p.len()];
                for (k, &x) in p.iter().enumerate() {
                    pos[x] = k;
                }
                pos
            })
            .collect();
        Ok(Placements { form, positions, perms })
    }
}

/// Smallest relabelled assignment over all canonical placements of both endpoints.
pub(crate) fn min_assignment(points: &[usize], dom: &Placements, cod: &Placements) -> Vec<u8> {
    let n = points.len();
    let mut best: Option<Vec<u8>> = None;
    let mut cand = vec![0u8; n];
    for perm in &dom.perms {
        for pos_b in &cod.positions {
            let mut state = std::cmp::Ordering::Equal;
            let mut dominated = false;
            for k in 0..n {
                let v = pos_b[points[perm[k]]] as u8;
                cand[k] = v;
                if state == std::cmp::Ordering::Equal {
                    if let Some(b) = &best {
                        state = v.cmp(&b[k]);
                        if state == std::cmp::Ordering::Greater {
                            dominated = true;
                            break;
                        }
                    } else {
                        state = std::cmp::Ordering::Less;
                    }
                }
            }
            if !dominated && state == std::cmp::Ordering::Less {
                best = Some(cand.clone());
            }
        }
    }
    best.unwrap_or_default()
}

pub fn map_key(f: &SpaceMap) -> Result<MapKey, SpaceError> {
    let dom = Placements::of(f.domain())?;
    let cod = Placements::of(f.codomain())?;
    let points = min_assignment(f.points(), &dom, &cod);
    Ok(MapKey { dom: dom.form, cod: cod.form, points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_canonical(space: &FiniteSpace) -> u64 {
        let n = space.len();
        perms(n)
            .into_iter()
            .map(|p| {
                let mut code = 0u64;
                for k in 1..n {
                    for i in 0..k {
                        code = (code << 1) | space.arrow(p[i], p[k]) as u64;
                        code = (code << 1) | space.arrow(p[k], p[i]) as u64;
                    }
                }
                code
            })
            .min()
            .unwrap()
    }

    #[test]
    fn layered_search_finds_global_minimum() {
        for n in 0..=4 {
            for s in crate::fintop::spaces_of_size(n, false).unwrap() {
                assert_eq!(canonical_form(&s).unwrap().code(), brute_canonical(&s), "{s}");
            }
        }
    }

    #[test]
    fn sierpinski_relabelling_is_homeomorphic() {
        let s = FiniteSpace::from_arrows(&["a", "b"], &[("a", "b")]).unwrap();
        let t = FiniteSpace::from_arrows(&["x", "y"], &[("x", "y")]).unwrap();
        let u = FiniteSpace::from_arrows(&["x", "y"], &[("y", "x")]).unwrap();
        assert!(is_homeomorphic(&s, &t).unwrap());
        assert!(is_homeomorphic(&s, &u).unwrap());
        let anti = FiniteSpace::from_arrows(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        assert!(!is_homeomorphic(&s, &anti).unwrap());
    }

    #[test]
    fn symmetric_arrow_lists_share_a_form() {
        let s = FiniteSpace::from_arrows(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        let t = FiniteSpace::from_arrows(&["a", "b", "c"], &[("a", "c"), ("a", "b")]).unwrap();
        assert_eq!(canonical_form(&s).unwrap(), canonical_form(&t).unwrap());
        assert_eq!(canonical_form(&s).unwrap().to_string(), canonical_form(&t).unwrap().to_string());
    }

    #[test]
    fn canonical_space_round_trip() {
        for s in crate::fintop::spaces_of_size(4, false).unwrap() {
            let c = canonical_space(&s).unwrap();
            assert_eq!(canonical_form(&c).unwrap(), canonical_form(&s).unwrap());
            assert!(c.is_preorder());
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&FiniteSpace::discrete(3)).unwrap().len(), 6);
        assert_eq!(automorphisms(&FiniteSpace::sierpinski()).unwrap().len(), 1);
        let v = FiniteSpace::from_arrows(&["a", "o", "b"], &[("a", "o"), ("b", "o")]).unwrap();
        assert_eq!(automorphisms(&v).unwrap().len(), 2);
    }

    #[test]
    fn map_keys_identify_isomorphic_maps() {
        let two = Arc::new(FiniteSpace::discrete(2));
        let pt = Arc::new(FiniteSpace::point());
        let left = SpaceMap::new(pt.clone(), two.clone(), vec![0]).unwrap();
        let right = SpaceMap::new(pt, two, vec![1]).unwrap();
        assert_eq!(map_key(&left).unwrap(), map_key(&right).unwrap());
        let s = Arc::new(FiniteSpace::sierpinski());
        let open_pt = SpaceMap::new(Arc::new(FiniteSpace::point()), s.clone(), vec![0]).unwrap();
        let closed_pt = SpaceMap::new(Arc::new(FiniteSpace::point()), s, vec![1]).unwrap();
        assert_ne!(map_key(&open_pt).unwrap(), map_key(&closed_pt).unwrap());
    }
}
