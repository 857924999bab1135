//! Direct group-theoretic predicates.

use std::sync::Arc;

use super::group::FiniteGroup;
use super::hom::{enumerate_homs, GroupHom};

pub fn order_prime_to(g: &FiniteGroup, p: usize) -> bool {
    g.order() % p != 0
}

pub fn is_p_group(g: &FiniteGroup, p: usize) -> bool {
    let mut n = g.order();
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Lower central series reaches the trivial group.
pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    let all = g.all();
    let mut gamma = all.clone();
    loop {
        let next = g.commutator_subgroup(&gamma, &all);
        if next.len() == 1 {
            return true;
        }
        if next.len() == gamma.len() {
            return false;
        }
        gamma = next;
    }
}

/// Derived series reaches the trivial group.
pub fn is_solvable(g: &FiniteGroup) -> bool {
    let mut d = g.all();
    loop {
        let next = g.commutator_subgroup(&d, &d);
        if next.len() == 1 {
            return true;
        }
        if next.len() == d.len() {
            return false;
        }
        d = next;
    }
}

/// A homomorphism `s` with `s ; f = id`.
pub fn section(f: &GroupHom) -> Option<GroupHom> {
    let id = GroupHom::identity(f.codomain().clone());
    enumerate_homs(f.codomain(), f.domain())
        .ok()?
        .into_iter()
        .find(|s| s.then(f) == id)
}

pub fn has_section(f: &GroupHom) -> bool {
    section(f).is_some()
}

/// The diagonal `H → H × H`.
pub fn diagonal(h: &Arc<FiniteGroup>) -> GroupHom {
    let hh = Arc::new(super::group::direct_product(h, h));
    let n = h.order();
    let images = h.elements().map(|a| a * n + a).collect();
    GroupHom::new_unchecked(h.clone(), hh, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingrp::group::by_name;

    #[test]
    fn series() {
        let g = |n: &str| by_name(n).unwrap();
        assert!(is_nilpotent(&g("Q8")) && is_nilpotent(&g("D4")) && is_nilpotent(&g("Z6")));
        assert!(!is_nilpotent(&g("S3")) && !is_nilpotent(&g("A4")));
        assert!(catalogue_solvable());
        assert!(is_p_group(&g("Q8"), 2) && !is_p_group(&g("Z6"), 2) && is_p_group(&g("0"), 3));
    }

    fn catalogue_solvable() -> bool {
        // every group of order < 60 is solvable
        crate::fingrp::catalog(16).iter().all(is_solvable)
    }

    #[test]
    fn sections() {
        let z4 = Arc::new(by_name("Z4").unwrap());
        let z2 = Arc::new(by_name("Z2").unwrap());
        let red = GroupHom::new(z4, z2.clone(), vec![0, 1, 0, 1]).unwrap();
        assert!(!has_section(&red));
        let v4 = Arc::new(by_name("V4").unwrap());
        let proj = enumerate_homs(&v4, &z2).unwrap().into_iter().find(|f| f.is_surjective()).unwrap();
        assert!(has_section(&proj));
        let d = diagonal(&z2);
        assert!(d.is_injective() && GroupHom::new(d.domain().clone(), d.codomain().clone(), d.images().to_vec()).is_ok());
    }
}
