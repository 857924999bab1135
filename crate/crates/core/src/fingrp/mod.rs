//! Finite groups and homomorphisms, as a second category for the engine.

mod group;
mod hom;
pub mod oracle;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::engine::Category;

pub use group::{by_name, catalog, direct_product, FiniteGroup, MAX_ORDER};
pub use hom::{enumerate_homs, find_isomorphism, GroupHom, HOM_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a homomorphism: {0}")]
    NotAHom(String),
    #[error("group of order {order} exceeds the limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("cannot read Cayley table: {0}")]
    Parse(String),
    #[error("unknown group {0:?}")]
    Unknown(String),
}

/// Canonical form of a homomorphism up to automorphisms of both ends.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomKey {
    pub dom: (usize, String),
    pub cod: (usize, String),
    pub images: Vec<usize>,
}

/// Groups and homomorphisms; objects are the catalog groups.
///
/// Keys identify groups by name, so they are canonical only for groups taken from the
/// catalog.
#[derive(Default)]
pub struct FinGrp {
    autos: Mutex<HashMap<FiniteGroup, Arc<Vec<Vec<usize>>>>>,
    universes: Mutex<HashMap<usize, Arc<Vec<GroupHom>>>>,
}

impl FinGrp {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn automorphisms(&self, g: &Arc<FiniteGroup>) -> Arc<Vec<Vec<usize>>> {
        if let Some(a) = self.autos.lock().unwrap().get(g.as_ref()) {
            return a.clone();
        }
        let autos: Vec<Vec<usize>> = enumerate_homs(g, g)
            .unwrap_or_else(|e| panic!("{e}"))
            .into_iter()
            .filter(|f| f.is_injective())
            .map(|f| f.images().to_vec())
            .collect();
        let autos = Arc::new(autos);
        self.autos.lock().unwrap().entry(g.as_ref().clone()).or_insert(autos).clone()
    }

    /// The trivial group.
    pub fn zero(&self) -> Arc<FiniteGroup> {
        Arc::new(by_name("0").expect("the catalog lists the trivial group"))
    }
}

fn id(g: &FiniteGroup) -> (usize, String) {
    (g.order(), g.name().to_string())
}

impl Category for FinGrp {
    type Object = Arc<FiniteGroup>;
    type Morphism = GroupHom;
    type Key = HomKey;

    fn objects(&self, max_size: usize) -> Vec<Arc<FiniteGroup>> {
        catalog(max_size).into_iter().map(Arc::new).collect()
    }

    fn homs(&self, a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Vec<GroupHom> {
        enumerate_homs(a, b).unwrap_or_else(|e| panic!("{e}"))
    }

    fn domain(&self, f: &GroupHom) -> Arc<FiniteGroup> {
        f.domain().clone()
    }

    fn codomain(&self, f: &GroupHom) -> Arc<FiniteGroup> {
        f.codomain().clone()
    }

    fn compose(&self, f: &GroupHom, g: &GroupHom) -> GroupHom {
        f.then(g)
    }

    fn identity(&self, a: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom::identity(a.clone())
    }

    fn object_size(&self, a: &Arc<FiniteGroup>) -> usize {
        a.order()
    }

    fn morphism_key(&self, f: &GroupHom) -> HomKey {
        let (da, ca) = (self.automorphisms(f.domain()), self.automorphisms(f.codomain()));
        let mut best: Option<Vec<usize>> = None;
        for alpha in da.iter() {
            for beta in ca.iter() {
                let cand: Vec<usize> = alpha.iter().map(|&x| beta[f.apply(x)]).collect();
                if best.as_ref().map_or(true, |b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        HomKey { dom: id(f.domain()), cod: id(f.codomain()), images: best.expect("identity is an automorphism") }
    }

    fn render(&self, f: &GroupHom) -> String {
        f.to_string()
    }

    fn is_mono(&self, f: &GroupHom) -> bool {
        f.is_injective()
    }

    fn to_terminal(&self, a: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom::trivial(a.clone(), self.zero())
    }

    fn is_iso(&self, f: &GroupHom) -> bool {
        f.is_injective() && f.is_surjective()
    }

    fn universe(&self, max_size: usize) -> Arc<Vec<GroupHom>> {
        if let Some(u) = self.universes.lock().unwrap().get(&max_size) {
            return u.clone();
        }
        let objects = self.objects(max_size);
        let mut seen = std::collections::BTreeMap::new();
        for a in &objects {
            for b in &objects {
                for f in self.homs(a, b) {
                    seen.entry(self.order_key(&f)).or_insert(f);
                }
            }
        }
        let u = Arc::new(seen.into_values().collect::<Vec<_>>());
        self.universes.lock().unwrap().entry(max_size).or_insert(u).clone()
    }
}

/// Parses `DOM->COD`, `DOM->COD#k` (the `k`-th homomorphism in enumeration order) or
/// `DOM->COD:i0,i1,...` (all images), with catalog group names.
pub fn parse_hom(text: &str) -> Result<GroupHom, GroupError> {
    let (dom, rest) = text
        .split_once("->")
        .ok_or_else(|| GroupError::Parse(format!("expected DOM->COD, found {text:?}")))?;
    let (cod, sel) = match rest.find([':', '#']) {
        Some(i) => (&rest[..i], Some(&rest[i..])),
        None => (rest, None),
    };
    let lookup = |n: &str| by_name(n.trim()).map(Arc::new).ok_or_else(|| GroupError::Unknown(n.trim().to_string()));
    let (g, h) = (lookup(dom)?, lookup(cod)?);
    match sel {
        Some(s) if s.starts_with(':') => {
            let images = s[1..]
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| GroupError::Parse(format!("bad image {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            GroupHom::new(g, h, images)
        }
        Some(s) => {
            let k: usize = s[1..].trim().parse().map_err(|_| GroupError::Parse(format!("bad index {s:?}")))?;
            let all = enumerate_homs(&g, &h)?;
            let count = all.len();
            all.into_iter()
                .nth(k)
                .ok_or_else(|| GroupError::Parse(format!("index {k} out of range: there are {count} homomorphisms")))
        }
        None => {
            let mut all = enumerate_homs(&g, &h)?;
            if all.len() != 1 {
                return Err(GroupError::Parse(format!(
                    "{} homomorphisms {}->{}: select one with #k or list images with :i0,i1,...",
                    all.len(),
                    g.name(),
                    h.name()
                )));
            }
            Ok(all.pop().expect("one element"))
        }
    }
}
