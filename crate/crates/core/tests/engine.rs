use std::collections::HashSet;

use liftkit_core::engine::{
    check_closure_laws, check_lifting, enumerate_class, generic_lift, is_member_one_step, member, Approx, Category,
    Construction, EvalError, EvalOptions, LiftWitness, OrthExpr, Side, Step, VerdictKind,
};
use liftkit_core::fintop::{map_has, FinTop, MapProperty, SpaceMap};
use liftkit_core::notation::{parse_class_expr, parse_map};

fn m(text: &str) -> SpaceMap {
    parse_map(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn e(text: &str) -> OrthExpr<SpaceMap> {
    parse_class_expr(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

#[test]
fn lifting_examples() {
    let cat = FinTop::new();
    assert!(check_lifting(&m("{}->{*}"), &m("{a,b}->{*}"), &cat).holds);
    let r = check_lifting(&m("{}->{*}"), &m("{}->{*}"), &cat);
    assert!(!r.holds);
    let sq = r.counterexample().unwrap();
    assert!(sq.bottom.is_iso());
    // Sierpinski space is connected: it lifts on the left of the collapse, not the right
    assert!(check_lifting(&m("{a->b}->{*}"), &m("{a,b}->{a=b}"), &cat).holds);
    let r = check_lifting(&m("{a,b}->{a=b}"), &m("{a->b}->{*}"), &cat);
    assert!(!r.holds);
    assert!(r.counterexample().unwrap().top.is_injective());
}

/// Every diagonal, found the slow way.
fn brute_diagonal(cat: &FinTop, f: &SpaceMap, g: &SpaceMap, top: &SpaceMap, bottom: &SpaceMap) -> bool {
    cat.homs(f.codomain(), g.domain())
        .iter()
        .any(|d| f.then(d).points() == top.points() && d.then(g).points() == bottom.points())
}

#[test]
fn lift_results_are_sound_and_complete_at_two_points() {
    let cat = FinTop::new();
    let u = cat.universe(2);
    for f in u.iter() {
        for g in u.iter() {
            let fast = cat.lift(f, g);
            assert_eq!(fast.holds, generic_lift(&cat, f, g).holds);
            let mut any_square = false;
            let mut all_lift = true;
            for top in cat.homs(f.domain(), g.domain()) {
                for bottom in cat.homs(f.codomain(), g.codomain()) {
                    if top.then(g).points() != f.then(&bottom).points() {
                        continue;
                    }
                    any_square = true;
                    all_lift &= brute_diagonal(&cat, f, g, &top, &bottom);
                }
            }
            assert_eq!(fast.holds, all_lift);
            match fast.witness {
                LiftWitness::Vacuous => assert!(!any_square),
                LiftWitness::Diagonal { square, diagonal } => {
                    assert_eq!(f.then(&diagonal).points(), square.top.points());
                    assert_eq!(diagonal.then(g).points(), square.bottom.points());
                }
                LiftWitness::Counterexample(sq) => {
                    assert_eq!(sq.top.then(g).points(), f.then(&sq.bottom).points());
                    assert!(!brute_diagonal(&cat, f, g, &sq.top, &sq.bottom));
                }
            }
        }
    }
}

#[test]
fn composition_is_associative_and_unital() {
    let cat = FinTop::new();
    let objs = cat.objects(2);
    for a in &objs {
        assert!(cat.homs(a, a).contains(&cat.identity(a)));
        for b in &objs {
            let ab = cat.homs(a, b);
            let set: HashSet<Vec<usize>> = ab.iter().map(|f| f.points().to_vec()).collect();
            assert_eq!(set.len(), ab.len(), "duplicate-free");
            assert_eq!(ab, cat.homs(a, b), "deterministic");
            for f in &ab {
                assert_eq!(&cat.compose(&cat.identity(a), f), f);
                assert_eq!(&cat.compose(f, &cat.identity(b)), f);
                for c in &objs {
                    for g in cat.homs(b, c) {
                        for d in &objs {
                            for h in cat.homs(c, d) {
                                let left = cat.compose(&cat.compose(f, &g), &h);
                                let right = cat.compose(f, &cat.compose(&g, &h));
                                assert_eq!(left, right);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn unit_law_at_four_points() {
    let cat = FinTop::new();
    for g in cat.universe(4).iter() {
        assert!(cat.lift(&cat.identity(g.domain()), g).holds);
        assert!(cat.lift(g, &cat.identity(g.codomain())).holds);
    }
}

#[test]
fn self_lifting_is_isomorphism_at_three_points() {
    let cat = FinTop::new();
    for h in cat.universe(3).iter() {
        assert_eq!(cat.lift(h, h).holds, cat.is_iso(h), "{}", cat.render(h));
    }
}

#[test]
fn one_step_examples() {
    let cat = FinTop::new();
    let yes = |x: &str, h: &str| is_member_one_step(&e(x), &m(h), &cat).unwrap();
    assert_eq!(yes("({}->{*})^r", "{a<->b}->{a=b}").kind, VerdictKind::ExactYes);
    assert_eq!(yes("({a,b}->{a=b})^r", "{a}->{a,b}").kind, VerdictKind::ExactYes);
    let v = yes("({b}->{a->b})^l", "{b}->{a->b}");
    assert_eq!(v.kind, VerdictKind::ExactNo);
    assert!(v.witness.is_some());
    assert!(matches!(is_member_one_step(&e("({}->{*})^rl"), &m("{a}->{a}"), &cat), Err(EvalError::NotOneStep(2))));
}

#[test]
fn member_examples() {
    let cat = FinTop::new();
    let opts = EvalOptions::default();
    assert_eq!(member(&e("({}->{*})^r"), &m("{a->b}->{*}"), &cat, &opts).unwrap().kind, VerdictKind::ExactYes);
    assert_eq!(member(&e("({a,b}->{a=b})^l"), &m("{a->b}->{*}"), &cat, &opts).unwrap().kind, VerdictKind::ExactYes);

    let proper = e("({a}->{a->b})^r_{<5}^l^r");
    assert!(matches!(member(&proper, &m("{b}->{a->b}"), &cat, &opts), Err(EvalError::Unbounded { step: 1 })));
    let bounded = EvalOptions { inner_bound: Some(3), oracles: None };
    let v = member(&proper, &m("{b}->{a->b}"), &cat, &bounded).unwrap();
    assert_eq!(v.kind, VerdictKind::BoundedYes);
    assert_eq!(v.steps.len(), 2);
    assert_eq!(v.steps[0].approx, Approx::Exact);
    assert_eq!(v.steps[1].approx, Approx::Under);
}

#[test]
fn bounded_no_carries_a_witness() {
    let cat = FinTop::new();
    let opts = EvalOptions { inner_bound: Some(2), oracles: None };
    let expr = e("({}->{*})^rl");
    for h in cat.universe(2).iter() {
        let v = member(&expr, h, &cat, &opts).unwrap();
        assert!(!v.kind.is_exact());
        if v.kind == VerdictKind::BoundedNo {
            let w = v.witness.expect("BoundedNo has a witness");
            assert!(!cat.lift(h, &w.against).holds);
            assert!(map_has(&w.against, MapProperty::Surjective), "witness lies in the true inner class");
        }
    }
}

#[test]
fn enumerate_class_examples() {
    let cat = FinTop::new();
    let opts = EvalOptions::default();
    let listing = enumerate_class(&e("({}->{*})^r"), &cat, 2, &opts).unwrap();
    assert_eq!(listing.len(), cat.universe(2).len());
    for (h, v) in &listing {
        assert!(v.kind.is_exact());
        assert_eq!(v.is_yes(), map_has(h, MapProperty::Surjective));
    }

    let all: Vec<SpaceMap> = cat.universe(2).to_vec();
    let everything = OrthExpr::new(all, vec![Step { side: Side::Right, bound: None }]);
    for (h, v) in enumerate_class(&everything, &cat, 2, &opts).unwrap() {
        assert_eq!(v.is_yes(), cat.is_iso(&h));
    }

    for (h, v) in enumerate_class(&e("({b}->{a->b})^l"), &cat, 3, &opts).unwrap() {
        if cat.is_iso(&h) {
            assert!(v.is_yes());
        }
    }
    assert!(matches!(enumerate_class(&e("({}->{*})^r"), &cat, 0, &opts), Err(EvalError::OutputBound)));
}

#[test]
fn closure_examples() {
    let cat = FinTop::new();
    let surj = check_closure_laws(&e("({}->{*})^r"), &cat, 3);
    assert!(surj.check(Construction::Composition).holds());
    assert!(surj.check(Construction::Retract).holds());
    let inj = check_closure_laws(&e("({a,b}->{a=b})^r"), &cat, 3);
    assert!(inj.check(Construction::Pullback).holds());
    assert!(inj.check(Construction::Pullback).instances > 0);
    assert!(inj.check(Construction::Pullback).expected);
    assert!(!inj.check(Construction::Pushout).expected);
}
