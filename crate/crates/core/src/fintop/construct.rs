//! Limits and colimits of finite spaces.

use std::sync::Arc;

use super::map::SpaceMap;
use super::space::{bit, default_label, points_of, FiniteSpace};

fn fresh_labels(n: usize) -> Vec<String> {
    (0..n).map(default_label).collect()
}

/// `A × B` with the componentwise relation; point `(x, y)` sits at `x * |B| + y`.
pub fn product(a: &Arc<FiniteSpace>, b: &Arc<FiniteSpace>) -> (Arc<FiniteSpace>, SpaceMap, SpaceMap) {
    let (na, nb) = (a.len(), b.len());
    let n = na * nb;
    assert!(n <= super::MAX_POINTS, "product of {na} and {nb} points is too large");
    let succ = (0..n)
        .map(|p| {
            let (x, y) = (p / nb, p % nb);
            (0..n)
                .filter(|&q| a.arrow(x, q / nb) && b.arrow(y, q % nb))
                .fold(0, |acc, q| acc | bit(q))
        })
        .collect();
    let space = Arc::new(FiniteSpace::from_closed(fresh_labels(n), succ));
    let left = SpaceMap::new_unchecked(space.clone(), a.clone(), (0..n).map(|p| p / nb).collect());
    let right = SpaceMap::new_unchecked(space.clone(), b.clone(), (0..n).map(|p| p % nb).collect());
    (space, left, right)
}

/// Disjoint union `A ⊔ B`, with `A` first.
pub fn coproduct(a: &Arc<FiniteSpace>, b: &Arc<FiniteSpace>) -> (Arc<FiniteSpace>, SpaceMap, SpaceMap) {
    let (na, nb) = (a.len(), b.len());
    let n = na + nb;
    assert!(n <= super::MAX_POINTS, "coproduct too large");
    let mut succ: Vec<u64> = (0..na).map(|x| a.succ(x)).collect();
    succ.extend((0..nb).map(|y| b.succ(y) << na));
    let space = Arc::new(FiniteSpace::from_closed(fresh_labels(n), succ));
    let left = SpaceMap::new_unchecked(a.clone(), space.clone(), (0..na).collect());
    let right = SpaceMap::new_unchecked(b.clone(), space.clone(), (na..n).collect());
    (space, left, right)
}

/// Pullback of `f: X → Z` and `g: Y → Z`: the subspace `{(x, y) : f(x) = g(y)}` of `X × Y`.
pub fn pullback(f: &SpaceMap, g: &SpaceMap) -> (Arc<FiniteSpace>, SpaceMap, SpaceMap) {
    let (x, y) = (f.domain(), g.domain());
    let pairs: Vec<(usize, usize)> = (0..x.len())
        .flat_map(|p| (0..y.len()).map(move |q| (p, q)))
        .filter(|&(p, q)| f.apply(p) == g.apply(q))
        .collect();
    assert!(pairs.len() <= super::MAX_POINTS, "pullback too large");
    let succ = pairs
        .iter()
        .map(|&(p, q)| {
            pairs
                .iter()
                .enumerate()
                .filter(|&(_, &(p2, q2))| x.arrow(p, p2) && y.arrow(q, q2))
                .fold(0, |acc, (k, _)| acc | bit(k))
        })
        .collect();
    let space = Arc::new(FiniteSpace::from_closed(fresh_labels(pairs.len()), succ));
    let left = SpaceMap::new_unchecked(space.clone(), x.clone(), pairs.iter().map(|&(p, _)| p).collect());
    let right = SpaceMap::new_unchecked(space.clone(), y.clone(), pairs.iter().map(|&(_, q)| q).collect());
    (space, left, right)
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = x;
    while parent[c] != r {
        let next = parent[c];
        parent[c] = r;
        c = next;
    }
    r
}

/// Pushout of `f: Z → X` and `g: Z → Y`: glue `f(z)` to `g(z)` in `X ⊔ Y`; the relation
/// is generated by the images of both relations.
pub fn pushout(f: &SpaceMap, g: &SpaceMap) -> (Arc<FiniteSpace>, SpaceMap, SpaceMap) {
    let (x, y) = (f.codomain(), g.codomain());
    let (nx, ny) = (x.len(), y.len());
    let mut parent: Vec<usize> = (0..nx + ny).collect();
    for z in 0..f.domain().len() {
        let (a, b) = (find(&mut parent, f.apply(z)), find(&mut parent, nx + g.apply(z)));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            parent[hi] = lo;
        }
    }
    let mut class = vec![usize::MAX; nx + ny];
    let mut count = 0;
    for p in 0..nx + ny {
        let r = find(&mut parent, p);
        if class[r] == usize::MAX {
            class[r] = count;
            count += 1;
        }
        class[p] = class[r];
    }
    let mut succ = vec![0u64; count];
    for p in 0..nx {
        for q in points_of(x.succ(p)) {
            succ[class[p]] |= bit(class[q]);
        }
    }
    for p in 0..ny {
        for q in points_of(y.succ(p)) {
            succ[class[nx + p]] |= bit(class[nx + q]);
        }
    }
    let space = Arc::new(
        FiniteSpace::from_relation(fresh_labels(count), succ).expect("pushout relation is well formed"),
    );
    let left = SpaceMap::new_unchecked(x.clone(), space.clone(), (0..nx).map(|p| class[p]).collect());
    let right = SpaceMap::new_unchecked(y.clone(), space.clone(), (0..ny).map(|p| class[nx + p]).collect());
    (space, left, right)
}

/// `h1 × h2 : A1 × A2 → B1 × B2`.
pub fn product_map(h1: &SpaceMap, h2: &SpaceMap) -> SpaceMap {
    let (dom, _, _) = product(h1.domain(), h2.domain());
    let (cod, _, _) = product(h1.codomain(), h2.codomain());
    let (n2, m2) = (h2.domain().len(), h2.codomain().len());
    let points = (0..dom.len()).map(|p| h1.apply(p / n2) * m2 + h2.apply(p % n2)).collect();
    SpaceMap::new_unchecked(dom, cod, points)
}

/// `h1 ⊔ h2 : A1 ⊔ A2 → B1 ⊔ B2`.
pub fn coproduct_map(h1: &SpaceMap, h2: &SpaceMap) -> SpaceMap {
    let (dom, _, _) = coproduct(h1.domain(), h2.domain());
    let (cod, _, _) = coproduct(h1.codomain(), h2.codomain());
    let (n1, m1) = (h1.domain().len(), h1.codomain().len());
    let points = (0..dom.len())
        .map(|p| if p < n1 { h1.apply(p) } else { m1 + h2.apply(p - n1) })
        .collect();
    SpaceMap::new_unchecked(dom, cod, points)
}

fn idempotents(space: &Arc<FiniteSpace>) -> Vec<SpaceMap> {
    super::enumerate_maps(space, space)
        .into_iter()
        .filter(|e| e.points().iter().all(|&p| e.apply(p) == p))
        .collect()
}

/// Retracts of `h` in the arrow category obtained from commuting pairs of idempotents:
/// `h` restricted to `Im e_A → Im e_B`, each image carrying the induced relation.
pub fn retracts(h: &SpaceMap) -> Vec<SpaceMap> {
    let (a, b) = (h.domain(), h.codomain());
    let ea = idempotents(a);
    let eb = idempotents(b);
    let mut out = Vec::new();
    for e in &ea {
        for k in &eb {
            if h.then(k) != e.then(h) {
                continue;
            }
            let (sa, ia) = a.subspace(e.image());
            let (sb, ib) = b.subspace(k.image());
            let points = ia
                .iter()
                .map(|&p| ib.iter().position(|&q| q == h.apply(p)).expect("h maps Im e_A into Im e_B"))
                .collect();
            out.push(SpaceMap::new_unchecked(Arc::new(sa), Arc::new(sb), points));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fintop::{enumerate_maps, enumerate_spaces};

    #[test]
    fn sierpinski_squared() {
        let s = Arc::new(FiniteSpace::sierpinski());
        let (p, _, _) = product(&s, &s);
        // (a,a)=0, (a,b)=1, (b,a)=2, (b,b)=3
        assert!(p.arrow(0, 1) && p.arrow(0, 2) && p.arrow(1, 3) && p.arrow(2, 3) && p.arrow(0, 3));
        assert!(!p.arrow(1, 2) && !p.arrow(2, 1));
        assert_eq!(p.open_sets().len(), 6);
        // brute-force open-set count agrees with the componentwise order
        let opens = (0u64..16)
            .filter(|&m| (0..4).all(|x| m & bit(x) == 0 || p.pred(x) & !m == 0))
            .count();
        assert_eq!(opens, 6);
    }

    #[test]
    fn pullback_of_points_is_a_point() {
        let pt = Arc::new(FiniteSpace::point());
        let f = SpaceMap::to_point(Arc::new(FiniteSpace::point()));
        let g = SpaceMap::new(pt.clone(), pt, vec![0]).unwrap();
        let (space, _, _) = pullback(&f, &g);
        assert_eq!(space.len(), 1);
    }

    #[test]
    fn pushout_of_two_empty_inclusions() {
        let f = SpaceMap::from_empty(Arc::new(FiniteSpace::point()));
        let (space, _, _) = pushout(&f, &f);
        assert_eq!(space.len(), 2);
        assert!(!space.arrow(0, 1) && !space.arrow(1, 0));
    }

    #[test]
    fn product_universal_property() {
        let spaces: Vec<Arc<FiniteSpace>> = enumerate_spaces(3, true).unwrap().into_iter().map(Arc::new).collect();
        for a in spaces.iter().filter(|s| s.len() <= 2) {
            for b in spaces.iter().filter(|s| s.len() <= 3) {
                let (p, pa, pb) = product(a, b);
                for w in &spaces {
                    let pairs: Vec<_> = enumerate_maps(w, &p)
                        .iter()
                        .map(|u| (u.then(&pa).points().to_vec(), u.then(&pb).points().to_vec()))
                        .collect();
                    let expected = enumerate_maps(w, a).len() * enumerate_maps(w, b).len();
                    let distinct: std::collections::HashSet<_> = pairs.iter().cloned().collect();
                    assert_eq!(pairs.len(), expected);
                    assert_eq!(distinct.len(), expected);
                }
            }
        }
    }

    #[test]
    fn pullback_universal_property() {
        let spaces: Vec<Arc<FiniteSpace>> = enumerate_spaces(2, true).unwrap().into_iter().map(Arc::new).collect();
        let ws: Vec<Arc<FiniteSpace>> = enumerate_spaces(3, true).unwrap().into_iter().map(Arc::new).collect();
        for z in &spaces {
            for x in &spaces {
                for y in &spaces {
                    for f in enumerate_maps(x, z) {
                        for g in enumerate_maps(y, z) {
                            let (p, px, py) = pullback(&f, &g);
                            for w in &ws {
                                let cones = enumerate_maps(w, x)
                                    .into_iter()
                                    .flat_map(|u| enumerate_maps(w, y).into_iter().map(move |v| (u.clone(), v)))
                                    .filter(|(u, v)| u.then(&f) == v.then(&g))
                                    .count();
                                let factors: std::collections::HashSet<_> = enumerate_maps(w, &p)
                                    .iter()
                                    .map(|m| (m.then(&px).points().to_vec(), m.then(&py).points().to_vec()))
                                    .collect();
                                assert_eq!(factors.len(), cones);
                                assert_eq!(enumerate_maps(w, &p).len(), cones);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn retracts_of_identity_are_identities() {
        let s = Arc::new(FiniteSpace::from_arrows(&["a", "b", "c"], &[("a", "b")]).unwrap());
        for r in retracts(&SpaceMap::identity(s)) {
            assert!(r.is_iso());
        }
    }
}
