//! Randomised invariants.

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use proptest::sample::Index;

use liftkit_core::engine::Category;
use liftkit_core::fintop::{canonical_form, is_homeomorphic, lift_maps, FinTop, FiniteSpace, SpaceMap};
use liftkit_core::notation::{parse_map, parse_space, render_map, render_space};

fn universe() -> &'static [SpaceMap] {
    static U: OnceLock<Arc<Vec<SpaceMap>>> = OnceLock::new();
    U.get_or_init(|| FinTop::new().universe(3))
}

fn spaces() -> &'static [Arc<FiniteSpace>] {
    static S: OnceLock<Vec<Arc<FiniteSpace>>> = OnceLock::new();
    S.get_or_init(|| FinTop::new().objects(5))
}

fn arb_map() -> impl Strategy<Value = SpaceMap> {
    any::<Index>().prop_map(|i| i.get(universe()).clone())
}

fn arb_space() -> impl Strategy<Value = Arc<FiniteSpace>> {
    any::<Index>().prop_map(|i| i.get(spaces()).clone())
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// A space with its points shuffled and renamed.
fn arb_relabelled() -> impl Strategy<Value = (Arc<FiniteSpace>, FiniteSpace)> {
    arb_space().prop_flat_map(|x| {
        let n = x.len();
        (Just(x), arb_perm(n)).prop_map(move |(x, p)| {
            let y = x.permuted(&p);
            let labels = (0..n).map(|i| format!("p{}", (i * 7 + 3) % 11)).collect();
            let y = y.with_labels(labels).unwrap();
            (x, y)
        })
    })
}

/// `f` transported along point permutations of its endpoints.
fn relabel(f: &SpaceMap, p: &[usize], q: &[usize]) -> SpaceMap {
    let dom = f.domain().permuted(p);
    let cod = f.codomain().permuted(q);
    let mut pos = vec![0; q.len()];
    for (k, &y) in q.iter().enumerate() {
        pos[y] = k;
    }
    let points = p.iter().map(|&x| pos[f.apply(x)]).collect();
    SpaceMap::new(dom, cod, points).expect("a relabelling of a continuous map is continuous")
}

fn arb_relabelled_map() -> impl Strategy<Value = (SpaceMap, SpaceMap)> {
    arb_map().prop_flat_map(|f| {
        let (n, m) = (f.domain().len(), f.codomain().len());
        (Just(f), arb_perm(n), arb_perm(m)).prop_map(|(f, p, q)| {
            let g = relabel(&f, &p, &q);
            (f, g)
        })
    })
}

fn arrow_brute_homeomorphic(a: &FiniteSpace, b: &FiniteSpace) -> bool {
    fn go(a: &FiniteSpace, b: &FiniteSpace, m: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let k = m.len();
        if k == a.len() {
            return true;
        }
        for y in 0..b.len() {
            if used[y] {
                continue;
            }
            if (0..k).all(|i| a.arrow(i, k) == b.arrow(m[i], y) && a.arrow(k, i) == b.arrow(y, m[i])) && a.arrow(k, k) {
                m.push(y);
                used[y] = true;
                if go(a, b, m, used) {
                    return true;
                }
                m.pop();
                used[y] = false;
            }
        }
        false
    }
    a.len() == b.len() && go(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn lifting_is_invariant_under_isomorphism((f, f2) in arb_relabelled_map(), (g, g2) in arb_relabelled_map()) {
        prop_assert_eq!(lift_maps(&f, &g).holds, lift_maps(&f2, &g2).holds);
    }

    #[test]
    fn identities_lift_against_everything(g in arb_map()) {
        let id = SpaceMap::identity(g.domain().clone());
        prop_assert!(lift_maps(&id, &g).holds);
        prop_assert!(lift_maps(&g, &SpaceMap::identity(g.codomain().clone())).holds);
    }

    #[test]
    fn self_lifting_means_isomorphism(h in arb_map()) {
        prop_assert_eq!(lift_maps(&h, &h).holds, h.is_iso());
    }

    #[test]
    fn diagonals_commute(f in arb_map(), g in arb_map()) {
        use liftkit_core::engine::LiftWitness;
        if let LiftWitness::Diagonal { square, diagonal } = lift_maps(&f, &g).witness {
            let (upper, lower) = (f.then(&diagonal), diagonal.then(&g));
            prop_assert_eq!(upper.points(), square.top.points());
            prop_assert_eq!(lower.points(), square.bottom.points());
        }
    }

    #[test]
    fn render_parse_round_trip(x in arb_space()) {
        let text = render_space(&x);
        let y = parse_space(&text).unwrap();
        prop_assert_eq!(canonical_form(&x).unwrap(), canonical_form(&y).unwrap());
    }

    #[test]
    fn map_render_parse_round_trip(f in arb_map()) {
        let g = parse_map(&render_map(&f)).unwrap();
        let cat = FinTop::new();
        prop_assert_eq!(cat.morphism_key(&f), cat.morphism_key(&g));
    }

    #[test]
    fn relabelled_text_parses_to_a_homeomorphic_space((x, y) in arb_relabelled()) {
        let z = parse_space(&render_space(&y)).unwrap();
        prop_assert!(is_homeomorphic(&x, &z).unwrap());
    }

    #[test]
    fn canonical_form_matches_brute_force(x in arb_space(), (_, y) in arb_relabelled()) {
        prop_assert_eq!(is_homeomorphic(&x, &y).unwrap(), arrow_brute_homeomorphic(&x, &y));
    }

    #[test]
    fn open_iff_complement_closed(x in arb_space(), s in any::<u64>()) {
        let s = s & x.all();
        prop_assert_eq!(x.is_open(s), x.is_closed(x.all() & !s));
        prop_assert_eq!(x.closure(s), x.all() & !x.interior(x.all() & !s));
    }

    #[test]
    fn relation_closure_is_idempotent(x in arb_space()) {
        let succ = (0..x.len()).map(|i| x.succ(i)).collect();
        let y = FiniteSpace::from_relation(x.labels().to_vec(), succ).unwrap();
        prop_assert!(y.same_relation(&x));
    }
}
