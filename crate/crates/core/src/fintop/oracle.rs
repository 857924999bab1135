//! Direct (textbook) decision procedures for properties of finite spaces and maps.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::map::SpaceMap;
use super::search::find_monotone;
use super::space::{bit, points_of, FiniteSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpaceProperty {
    T0,
    R0,
    T1,
    Hausdorff,
    Urysohn,
    Regular,
    Normal,
    CompletelyNormal,
    ExtremallyDisconnected,
    Connected,
    TotallyDisconnected,
    Discrete,
    Antidiscrete,
    Empty,
    NonEmpty,
}

impl SpaceProperty {
    pub const ALL: [SpaceProperty; 15] = [
        SpaceProperty::T0,
        SpaceProperty::R0,
        SpaceProperty::T1,
        SpaceProperty::Hausdorff,
        SpaceProperty::Urysohn,
        SpaceProperty::Regular,
        SpaceProperty::Normal,
        SpaceProperty::CompletelyNormal,
        SpaceProperty::ExtremallyDisconnected,
        SpaceProperty::Connected,
        SpaceProperty::TotallyDisconnected,
        SpaceProperty::Discrete,
        SpaceProperty::Antidiscrete,
        SpaceProperty::Empty,
        SpaceProperty::NonEmpty,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpaceProperty::T0 => "T0",
            SpaceProperty::R0 => "R0",
            SpaceProperty::T1 => "T1",
            SpaceProperty::Hausdorff => "Hausdorff",
            SpaceProperty::Urysohn => "Urysohn",
            SpaceProperty::Regular => "regular",
            SpaceProperty::Normal => "normal",
            SpaceProperty::CompletelyNormal => "completely normal",
            SpaceProperty::ExtremallyDisconnected => "extremally disconnected",
            SpaceProperty::Connected => "connected",
            SpaceProperty::TotallyDisconnected => "totally disconnected",
            SpaceProperty::Discrete => "discrete",
            SpaceProperty::Antidiscrete => "antidiscrete",
            SpaceProperty::Empty => "empty",
            SpaceProperty::NonEmpty => "non-empty",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        let norm = |s: &str| s.to_ascii_lowercase().replace([' ', '_'], "-");
        Self::ALL.into_iter().find(|p| norm(p.name()) == norm(name))
    }
}

impl fmt::Display for SpaceProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MapProperty {
    Surjective,
    Injective,
    DenseImage,
    SubspaceEmbedding,
    ClosedInclusion,
    ClosedMap,
    OpenMap,
    InducedTopology,
    FibrewiseT0,
    FibrewiseT1,
    ClopenImageLaw,
}

impl MapProperty {
    pub const ALL: [MapProperty; 11] = [
        MapProperty::Surjective,
        MapProperty::Injective,
        MapProperty::DenseImage,
        MapProperty::SubspaceEmbedding,
        MapProperty::ClosedInclusion,
        MapProperty::ClosedMap,
        MapProperty::OpenMap,
        MapProperty::InducedTopology,
        MapProperty::FibrewiseT0,
        MapProperty::FibrewiseT1,
        MapProperty::ClopenImageLaw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapProperty::Surjective => "surjective",
            MapProperty::Injective => "injective",
            MapProperty::DenseImage => "dense image",
            MapProperty::SubspaceEmbedding => "subspace embedding",
            MapProperty::ClosedInclusion => "closed inclusion",
            MapProperty::ClosedMap => "closed map",
            MapProperty::OpenMap => "open map",
            MapProperty::InducedTopology => "induced topology",
            MapProperty::FibrewiseT0 => "fibrewise T0",
            MapProperty::FibrewiseT1 => "fibrewise T1",
            MapProperty::ClopenImageLaw => "every non-empty clopen meets the image",
        }
    }
}

impl fmt::Display for MapProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y))).filter(|(x, y)| x != y)
}

fn disjoint_opens_around(x: &FiniteSpace, a: u64, b: u64) -> bool {
    // smallest open sets containing `a` and `b`
    x.open_hull(a) & x.open_hull(b) == 0
}

fn closed_neighbourhoods(x: &FiniteSpace, a: u64) -> Vec<u64> {
    x.closed_sets().into_iter().filter(|&c| x.interior(c) & a == a).collect()
}

fn components(x: &FiniteSpace) -> Vec<u64> {
    let mut left = x.all();
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        loop {
            let grown = points_of(comp).fold(comp, |acc, p| acc | x.succ(p) | x.pred(p));
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

/// `A` and `B` are separated: neither meets the closure of the other.
pub fn separated(x: &FiniteSpace, a: u64, b: u64) -> bool {
    a & x.closure(b) == 0 && b & x.closure(a) == 0
}

/// Some open set contains exactly one of the two points.
pub fn distinguishable(x: &FiniteSpace, p: usize, q: usize) -> bool {
    x.open_sets().into_iter().any(|u| (u & bit(p) == 0) != (u & bit(q) == 0))
}

/// Disjoint open sets `U ⊇ A`, `V ⊇ B` exist.
pub fn separated_by_neighbourhoods(x: &FiniteSpace, a: u64, b: u64) -> bool {
    let opens = x.open_sets();
    opens
        .iter()
        .any(|&u| u & a == a && opens.iter().any(|&v| v & b == b && u & v == 0))
}

/// Disjoint closed neighbourhoods of `A` and `B` exist.
pub fn separated_by_closed_neighbourhoods(x: &FiniteSpace, a: u64, b: u64) -> bool {
    let na = closed_neighbourhoods(x, a);
    let nb = closed_neighbourhoods(x, b);
    na.iter().any(|&u| nb.iter().any(|&v| u & v == 0))
}

pub fn space_has(x: &FiniteSpace, prop: SpaceProperty) -> bool {
    let n = x.len();
    match prop {
        SpaceProperty::T0 => pairs(n).all(|(p, q)| x.succ(p) != x.succ(q)),
        SpaceProperty::R0 => pairs(n).all(|(p, q)| {
            !distinguishable(x, p, q) || separated(x, bit(p), bit(q))
        }),
        SpaceProperty::T1 => pairs(n).all(|(p, q)| !x.arrow(p, q)),
        SpaceProperty::Hausdorff => pairs(n).all(|(p, q)| separated_by_neighbourhoods(x, bit(p), bit(q))),
        SpaceProperty::Urysohn => pairs(n).all(|(p, q)| separated_by_closed_neighbourhoods(x, bit(p), bit(q))),
        SpaceProperty::Regular => x.closed_sets().into_iter().all(|f| {
            (0..n)
                .filter(|&p| f & bit(p) == 0)
                .all(|p| separated_by_neighbourhoods(x, bit(p), f))
        }),
        SpaceProperty::Normal => {
            let closed = x.closed_sets();
            closed.iter().all(|&e| {
                closed
                    .iter()
                    .filter(|&&f| e & f == 0)
                    .all(|&f| disjoint_opens_around(x, e, f))
            })
        }
        SpaceProperty::CompletelyNormal => {
            let subsets: Vec<u64> = x.subsets().collect();
            subsets.iter().all(|&a| {
                subsets
                    .iter()
                    .filter(|&&b| separated(x, a, b))
                    .all(|&b| disjoint_opens_around(x, a, b))
            })
        }
        SpaceProperty::ExtremallyDisconnected => x.open_sets().into_iter().all(|u| x.is_open(x.closure(u))),
        SpaceProperty::Connected => x.clopen_sets().len() <= 2,
        SpaceProperty::TotallyDisconnected => components(x).iter().all(|c| c.count_ones() == 1),
        SpaceProperty::Discrete => (0..n).all(|p| x.succ(p) == bit(p)),
        SpaceProperty::Antidiscrete => (0..n).all(|p| x.succ(p) == x.all()),
        SpaceProperty::Empty => n == 0,
        SpaceProperty::NonEmpty => n > 0,
    }
}

pub fn space_properties(x: &FiniteSpace) -> Vec<(SpaceProperty, bool)> {
    SpaceProperty::ALL.iter().map(|&p| (p, space_has(x, p))).collect()
}

fn fibre_space(f: &SpaceMap, y: usize) -> FiniteSpace {
    f.domain().subspace(f.fibre(y)).0
}

pub fn map_has(f: &SpaceMap, prop: MapProperty) -> bool {
    let (a, b) = (f.domain(), f.codomain());
    match prop {
        MapProperty::Surjective => f.is_surjective(),
        MapProperty::Injective => f.is_injective(),
        MapProperty::DenseImage => b.closure(f.image()) == b.all(),
        MapProperty::InducedTopology => (0..a.len())
            .all(|p| (0..a.len()).all(|q| a.arrow(p, q) == b.arrow(f.apply(p), f.apply(q)))),
        MapProperty::SubspaceEmbedding => f.is_injective() && map_has(f, MapProperty::InducedTopology),
        MapProperty::ClosedInclusion => map_has(f, MapProperty::SubspaceEmbedding) && b.is_closed(f.image()),
        MapProperty::ClosedMap => a.closed_sets().into_iter().all(|c| b.is_closed(f.image_of(c))),
        MapProperty::OpenMap => a.open_sets().into_iter().all(|u| b.is_open(f.image_of(u))),
        MapProperty::FibrewiseT0 => (0..b.len()).all(|y| space_has(&fibre_space(f, y), SpaceProperty::T0)),
        MapProperty::FibrewiseT1 => (0..b.len()).all(|y| space_has(&fibre_space(f, y), SpaceProperty::T1)),
        MapProperty::ClopenImageLaw => b.clopen_sets().into_iter().all(|c| c == 0 || c & f.image() != 0),
    }
}

/// Induced map on connected components is injective.
pub fn pi0_injective(f: &SpaceMap) -> bool {
    let b = f.codomain();
    let comps = components(f.domain());
    let target = |c: u64| {
        let y = f.apply(c.trailing_zeros() as usize);
        components(b).into_iter().position(|d| d & bit(y) != 0)
    };
    let images: Vec<_> = comps.iter().map(|&c| target(c)).collect();
    let mut dedup = images.clone();
    dedup.sort();
    dedup.dedup();
    dedup.len() == images.len()
}

/// Images of distinct clopen subsets that are complementary stay disjoint clopen-separated:
/// for every clopen `C ⊆ A` the images of `C` and `A∖C` lie in complementary clopens of `B`.
pub fn separates_clopen_images(f: &SpaceMap) -> bool {
    let (a, b) = (f.domain(), f.codomain());
    let target_clopens = b.clopen_sets();
    a.clopen_sets().into_iter().all(|c| {
        let (ic, irest) = (f.image_of(c), f.image_of(a.all() & !c));
        target_clopens.iter().any(|&d| ic & !d == 0 && irest & d == 0)
    })
}

/// `f` has a section `s` with `f ∘ s = id`.
pub fn has_section(f: &SpaceMap) -> bool {
    let (a, b) = (f.domain(), f.codomain());
    let cands: Vec<u64> = (0..b.len()).map(|y| f.fibre(y)).collect();
    find_monotone(b, a, &cands).is_some()
}

/// `f` has a retraction `r` with `r ∘ f = id`.
pub fn has_retraction(f: &SpaceMap) -> bool {
    let (a, b) = (f.domain(), f.codomain());
    if !f.is_injective() {
        return false;
    }
    let cands: Vec<u64> = (0..b.len())
        .map(|y| match f.points().iter().position(|&v| v == y) {
            Some(x) => bit(x),
            None => a.all(),
        })
        .collect();
    find_monotone(b, a, &cands).is_some()
}

/// An embedding onto a clopen subspace whose complement is discrete, i.e. `B ≅ A ⊔ D` with `D` discrete.
pub fn isolated_complement_embedding(f: &SpaceMap) -> bool {
    let b = f.codomain();
    let rest = b.all() & !f.image();
    map_has(f, MapProperty::SubspaceEmbedding) && points_of(rest).all(|y| b.succ(y) == bit(y) && b.pred(y) == bit(y))
}

/// Factorisation test: does `i: X → T` exist with `g ∘ i = target`? Candidates are the fibres of `g`.
pub(crate) fn factors_through(target: &SpaceMap, g: &SpaceMap) -> bool {
    let x = target.domain();
    let cands: Vec<u64> = (0..x.len()).map(|p| g.fibre(target.apply(p))).collect();
    find_monotone(x, g.domain(), &cands).is_some()
}

/// The preliminary predicates again, phrased as factorisation problems through small
/// gadget maps; used to cross-check the direct versions.
pub mod via_lifting {
    use super::*;
    use crate::notation::parse_map;

    fn classify(x: &Arc<FiniteSpace>, cod: &Arc<FiniteSpace>, a: u64, b: u64, la: &str, lb: &str, lx: &str) -> SpaceMap {
        let find = |l: &str| {
            cod.labels()
                .iter()
                .position(|name| name.split('=').any(|part| part == l))
                .expect("gadget label")
        };
        let (ia, ib, ix) = (find(la), find(lb), find(lx));
        let points = (0..x.len())
            .map(|p| if a & bit(p) != 0 { ia } else if b & bit(p) != 0 { ib } else { ix })
            .collect();
        SpaceMap::new(x.clone(), cod.clone(), points).expect("antidiscrete target")
    }

    /// Does `i_AB: X → {A↔x↔B}` factor through the gadget map (given in notation,
    /// with codomain points named by `A`, `B` and `x`)?
    pub fn factors(x: &Arc<FiniteSpace>, a: u64, b: u64, gadget: &str) -> bool {
        let g = parse_map(gadget).expect("gadget parses");
        let cod = g.codomain().clone();
        let target = classify(x, &cod, a, b, "A", "B", "x");
        factors_through(&target, &g)
    }

    /// Points outside `A ∪ B` may land on `U` or `x`; the preimage of `{x, B}` is then a
    /// closed set around `B` missing `A`.
    pub const SEPARATED: &str = "{A<->U->x<->B}->{A<->U=x<->B}";
    pub const BY_NEIGHBOURHOODS: &str = "{A<->U->x<-V<->B}->{A<->U=x=V<->B}";
    pub const BY_CLOSED_NEIGHBOURHOODS: &str = "{A<->U->P<-x->Q<-V<->B}->{A<->U=P=x=Q=V<->B}";
    /// Variants that keep `U` apart from `x` in the codomain; they force `A` itself to be open.
    pub const SEPARATED_UNMERGED: &str = "{A<->U->x<->B}->{A=U<->x<->B}";
    pub const BY_NEIGHBOURHOODS_UNMERGED: &str = "{A<->U->x<-V<->B}->{A=U<->x<->V=B}";

    /// `{x↔y} → X`, `x ↦ p`, `y ↦ q` fails to be continuous.
    pub fn distinguishable(x: &FiniteSpace, p: usize, q: usize) -> bool {
        let pair = FiniteSpace::antidiscrete(2);
        SpaceMap::new(pair, x.clone(), vec![p, q]).is_err()
    }

    pub fn separated(x: &Arc<FiniteSpace>, a: u64, b: u64) -> bool {
        factors(x, a, b, SEPARATED) && factors(x, b, a, SEPARATED)
    }

    pub fn separated_by_neighbourhoods(x: &Arc<FiniteSpace>, a: u64, b: u64) -> bool {
        factors(x, a, b, BY_NEIGHBOURHOODS)
    }

    pub fn separated_by_closed_neighbourhoods(x: &Arc<FiniteSpace>, a: u64, b: u64) -> bool {
        factors(x, a, b, BY_CLOSED_NEIGHBOURHOODS)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fintop::enumerate_spaces;

    fn spaces(n: usize) -> Vec<Arc<FiniteSpace>> {
        enumerate_spaces(n, true).unwrap().into_iter().map(Arc::new).collect()
    }

    #[test]
    fn finite_separation_collapses() {
        // finite T1 spaces are discrete, and so are finite Hausdorff spaces
        for x in spaces(5) {
            let t1 = space_has(&x, SpaceProperty::T1);
            assert_eq!(t1, space_has(&x, SpaceProperty::Discrete));
            assert_eq!(t1, space_has(&x, SpaceProperty::Hausdorff));
            assert!(!t1 || space_has(&x, SpaceProperty::T0));
        }
    }

    #[test]
    fn sierpinski_profile() {
        let s = FiniteSpace::sierpinski();
        assert!(space_has(&s, SpaceProperty::T0));
        assert!(!space_has(&s, SpaceProperty::T1));
        assert!(space_has(&s, SpaceProperty::Normal));
        assert!(space_has(&s, SpaceProperty::Connected));
        assert!(!space_has(&s, SpaceProperty::Regular));
    }

    #[test]
    fn preliminary_predicates_agree_with_gadgets() {
        for x in spaces(4) {
            let n = x.len();
            for p in 0..n {
                for q in 0..n {
                    if p != q {
                        assert_eq!(distinguishable(&x, p, q), via_lifting::distinguishable(&x, p, q));
                    }
                }
            }
            let all = x.all();
            for a in x.subsets() {
                let mut b = all & !a;
                loop {
                    assert_eq!(separated(&x, a, b), via_lifting::separated(&x, a, b), "{x} {a:b} {b:b}");
                    assert_eq!(
                        separated_by_neighbourhoods(&x, a, b),
                        via_lifting::separated_by_neighbourhoods(&x, a, b)
                    );
                    assert_eq!(
                        separated_by_closed_neighbourhoods(&x, a, b),
                        via_lifting::separated_by_closed_neighbourhoods(&x, a, b)
                    );
                    if b == 0 {
                        break;
                    }
                    b = (b - 1) & (all & !a);
                }
            }
        }
    }

    #[test]
    fn sections_and_retractions() {
        let s = Arc::new(FiniteSpace::sierpinski());
        let pt = Arc::new(FiniteSpace::point());
        assert!(has_section(&SpaceMap::to_point(s.clone())));
        let open_pt = SpaceMap::new(pt.clone(), s.clone(), vec![0]).unwrap();
        assert!(has_retraction(&open_pt));
        assert!(!has_section(&SpaceMap::from_empty(s)));
        assert!(isolated_complement_embedding(&SpaceMap::from_empty(Arc::new(FiniteSpace::discrete(2)))));
        assert!(!isolated_complement_embedding(&open_pt));
    }
}
