use std::collections::{BTreeMap, HashMap};
use std::ops::ControlFlow;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use super::canon::{min_assignment, MapKey, Placements};
use super::construct;
use super::enumerate::{enumerate_maps, spaces_of_size};
use super::map::SpaceMap;
use super::search::{find_monotone, for_each_monotone};
use super::space::{bit, FiniteSpace};
use crate::engine::{Category, FiniteLimits, LiftResult, LiftWitness, Square};

/// Finite spaces and continuous maps, with cached enumerations.
///
/// Objects listed by [`Category::objects`] are the canonical representatives of each
/// homeomorphism class; [`Category::universe`] lists maps between them whose assignment
/// is already the canonical one.
#[derive(Default)]
pub struct FinTop {
    by_size: Mutex<HashMap<usize, Arc<Vec<Arc<FiniteSpace>>>>>,
    placements: Mutex<HashMap<FiniteSpace, Arc<Placements>>>,
    universes: Mutex<HashMap<usize, Arc<Vec<SpaceMap>>>>,
}

impl FinTop {
    pub fn new() -> Self {
        Self::default()
    }

    /// Canonical spaces with exactly `n` points.
    pub fn spaces(&self, n: usize) -> Arc<Vec<Arc<FiniteSpace>>> {
        if let Some(s) = self.by_size.lock().unwrap().get(&n) {
            return s.clone();
        }
        let list: Vec<Arc<FiniteSpace>> = spaces_of_size(n, true)
            .unwrap_or_else(|e| panic!("cannot enumerate spaces: {e}"))
            .into_iter()
            .map(Arc::new)
            .collect();
        let list = Arc::new(list);
        self.by_size.lock().unwrap().entry(n).or_insert(list).clone()
    }

    fn placements(&self, space: &FiniteSpace) -> Arc<Placements> {
        if let Some(p) = self.placements.lock().unwrap().get(space) {
            return p.clone();
        }
        let p = Arc::new(Placements::of(space).unwrap_or_else(|e| panic!("no canonical form: {e}")));
        self.placements.lock().unwrap().entry(space.clone()).or_insert(p).clone()
    }

    fn key(&self, f: &SpaceMap) -> MapKey {
        let dom = self.placements(f.domain());
        let cod = self.placements(f.codomain());
        MapKey { dom: dom.form, cod: cod.form, points: min_assignment(f.points(), &dom, &cod) }
    }

    fn build_universe(&self, max_size: usize) -> Vec<SpaceMap> {
        let objects = self.objects(max_size);
        let pairs: Vec<(&Arc<FiniteSpace>, &Arc<FiniteSpace>)> =
            objects.iter().flat_map(|a| objects.iter().map(move |b| (a, b))).collect();
        let mut reps: Vec<((usize, MapKey), SpaceMap)> = pairs
            .par_iter()
            .flat_map_iter(|(a, b)| {
                let (pa, pb) = (self.placements(a), self.placements(b));
                let total = a.len() + b.len();
                enumerate_maps(a, b).into_iter().filter_map(move |f| {
                    let points = min_assignment(f.points(), &pa, &pb);
                    let canonical = points.iter().zip(f.points()).all(|(&p, &q)| p as usize == q);
                    canonical.then(|| ((total, MapKey { dom: pa.form, cod: pb.form, points }), f))
                })
            })
            .collect();
        reps.sort_by(|x, y| x.0.cmp(&y.0));
        reps.into_iter().map(|(_, f)| f).collect()
    }
}

/// `f ⧄ g` by constraint propagation.
///
/// Squares are visited with `i` outermost. Commutativity pins `j` on the image of `f`;
/// a diagonal must agree with `i` on that image and land in the `g`-fibre over `j`
/// everywhere, so its candidate sets are known before the monotone search starts.
pub fn lift_maps(f: &SpaceMap, g: &SpaceMap) -> LiftResult<SpaceMap> {
    let (a, b) = (f.domain(), f.codomain());
    let (x, y) = (g.domain(), g.codomain());
    let fibres: Vec<u64> = (0..y.len()).map(|t| g.fibre(t)).collect();
    let mut failure: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut first: Option<(Vec<usize>, Vec<usize>, Vec<usize>)> = None;
    let free = vec![x.all(); a.len()];
    let _ = for_each_monotone(a, x, &free, |i| {
        let mut jc = vec![y.all(); b.len()];
        let mut dc = vec![x.all(); b.len()];
        for (p, &q) in f.points().iter().enumerate() {
            jc[q] &= bit(g.apply(i[p]));
            dc[q] &= bit(i[p]);
        }
        // `i` not constant on a fibre of `f`: any square through it has no diagonal
        let split_fibre = dc.contains(&0);
        for_each_monotone(b, y, &jc, |j| {
            let cands: Vec<u64> = (0..b.len()).map(|q| dc[q] & fibres[j[q]]).collect();
            let d = if split_fibre { None } else { find_monotone(b, x, &cands) };
            match d {
                None => {
                    failure = Some((i.to_vec(), j.to_vec()));
                    ControlFlow::Break(())
                }
                Some(d) => {
                    if first.is_none() {
                        first = Some((i.to_vec(), j.to_vec(), d));
                    }
                    ControlFlow::Continue(())
                }
            }
        })
    });
    let square = |i: Vec<usize>, j: Vec<usize>| Square {
        top: SpaceMap::new_unchecked(a.clone(), x.clone(), i),
        bottom: SpaceMap::new_unchecked(b.clone(), y.clone(), j),
    };
    if let Some((i, j)) = failure {
        return LiftResult { holds: false, witness: LiftWitness::Counterexample(square(i, j)) };
    }
    let witness = match first {
        Some((i, j, d)) => LiftWitness::Diagonal {
            square: square(i, j),
            diagonal: SpaceMap::new_unchecked(b.clone(), x.clone(), d),
        },
        None => LiftWitness::Vacuous,
    };
    LiftResult { holds: true, witness }
}

impl Category for FinTop {
    type Object = Arc<FiniteSpace>;
    type Morphism = SpaceMap;
    type Key = MapKey;

    fn objects(&self, max_size: usize) -> Vec<Arc<FiniteSpace>> {
        (0..=max_size).flat_map(|n| self.spaces(n).iter().cloned().collect::<Vec<_>>()).collect()
    }

    fn homs(&self, a: &Arc<FiniteSpace>, b: &Arc<FiniteSpace>) -> Vec<SpaceMap> {
        enumerate_maps(a, b)
    }

    fn domain(&self, f: &SpaceMap) -> Arc<FiniteSpace> {
        f.domain().clone()
    }

    fn codomain(&self, f: &SpaceMap) -> Arc<FiniteSpace> {
        f.codomain().clone()
    }

    fn compose(&self, f: &SpaceMap, g: &SpaceMap) -> SpaceMap {
        f.then(g)
    }

    fn identity(&self, a: &Arc<FiniteSpace>) -> SpaceMap {
        SpaceMap::identity(a.clone())
    }

    fn object_size(&self, a: &Arc<FiniteSpace>) -> usize {
        a.len()
    }

    fn morphism_key(&self, f: &SpaceMap) -> MapKey {
        self.key(f)
    }

    fn render(&self, f: &SpaceMap) -> String {
        crate::notation::render_map(f)
    }

    fn is_mono(&self, f: &SpaceMap) -> bool {
        f.is_injective()
    }

    fn to_terminal(&self, a: &Arc<FiniteSpace>) -> SpaceMap {
        SpaceMap::to_point(a.clone())
    }

    fn is_iso(&self, f: &SpaceMap) -> bool {
        f.is_iso()
    }

    fn universe(&self, max_size: usize) -> Arc<Vec<SpaceMap>> {
        if let Some(u) = self.universes.lock().unwrap().get(&max_size) {
            return u.clone();
        }
        let u = Arc::new(self.build_universe(max_size));
        self.universes.lock().unwrap().entry(max_size).or_insert(u).clone()
    }

    fn lift(&self, f: &SpaceMap, g: &SpaceMap) -> LiftResult<SpaceMap> {
        lift_maps(f, g)
    }
}

impl FiniteLimits for FinTop {
    fn pull_back(&self, h: &SpaceMap, along: &SpaceMap) -> SpaceMap {
        construct::pullback(h, along).2
    }

    fn push_out(&self, h: &SpaceMap, along: &SpaceMap) -> SpaceMap {
        construct::pushout(h, along).2
    }

    fn product_of(&self, h1: &SpaceMap, h2: &SpaceMap) -> SpaceMap {
        construct::product_map(h1, h2)
    }

    fn coproduct_of(&self, h1: &SpaceMap, h2: &SpaceMap) -> SpaceMap {
        construct::coproduct_map(h1, h2)
    }

    fn retracts_of(&self, h: &SpaceMap) -> Vec<SpaceMap> {
        construct::retracts(h)
    }
}

/// Counts of representatives per `(domain size, codomain size)`, for diagnostics.
pub fn universe_profile(cat: &FinTop, max_size: usize) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    for f in cat.universe(max_size).iter() {
        *out.entry((f.domain().len(), f.codomain().len())).or_insert(0) += 1;
    }
    out
}
