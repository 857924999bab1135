use crate::engine::{Construction, Side};
use crate::fintop::dictionary::{lifting_dictionary, Entry, Formula, Group, Status};

use super::Suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawStatus {
    Asserted,
    Experimental(&'static str),
}

/// Separation preliminaries, each compared with its lifting gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preliminary {
    Distinguishable,
    Separated,
    ByNeighbourhoods,
    ByClosedNeighbourhoods,
    SeparatedUnmerged,
    ByNeighbourhoodsUnmerged,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupClass {
    /// `H → H × H ∈ {0 → G}^lr`
    Nilpotent,
    /// `0 → H ∈ {0 → A : A abelian}^lr`
    Solvable,
    /// `H → 0 ∈ {Z/p → 0}^rr`
    PGroup(usize),
}

#[derive(Clone, Debug)]
pub enum Check {
    /// A dictionary row against its direct predicate.
    Dictionary(&'static Entry),
    Preliminary(Preliminary),
    /// Members of `({a}→{a↘b})^r_{<5}` are closed maps.
    ClosedMembers,
    /// The generators of `C_T` are closed maps.
    GeneratorsClosed,
    /// `h ⧄ h` iff `h` is an isomorphism.
    IsoSelfLifting,
    /// `(all morphisms)^l = (all morphisms)^r = isomorphisms`, at bounded scale.
    AllMorphisms,
    /// Identities belong to every registry class.
    IdentityMembership,
    Antitone,
    Reflexive,
    /// The inheritance rule along monomorphisms.
    Inheritance,
    /// `((G)^r_{<m})^lr ⊆ ((G)^r_{<n})^lr` for `m < n`, with equal working bounds.
    BoundMonotone,
    /// Whether the previous inclusion is strict for `m = 4`, `n = 5`.
    BoundStrictness,
    Closure { class: String, construction: Construction },
    /// Which of the two attributions of pullback/pushout stability the closure rows support.
    ClosureDirection,
    PrimeToP(usize),
    Split,
    HomCompleteness,
    GroupClass(GroupClass),
    /// `((G)^r_{<5})^lr` on all maps, compared with closed maps.
    ProperMaps,
    /// `K → {*}` in `((G)^r_{<5})^lr` for every finite `K`.
    ProperSpaces,
    /// A class whose extension is computed and listed.
    Extension(&'static str),
}

#[derive(Clone, Debug)]
pub struct Law {
    pub id: String,
    pub citation: String,
    pub suite: Suite,
    pub status: LawStatus,
    pub check: Check,
}

fn law(id: &str, citation: &str, suite: Suite, status: LawStatus, check: Check) -> Law {
    Law { id: id.to_string(), citation: citation.to_string(), suite, status, check }
}

/// Generators of the properness approximation.
pub const PROPER_GENERATOR: &str = "({a}->{a->b})^r_{<5}";
pub const C_T: &str = "({a<->b}->{a=b}, {a->b}->{a=b}, {b}->{a->b}, {a<-o->b}->{a=o=b})";

/// One-step classes named by the dictionary, as `(generators text, side)`.
pub fn registry_classes() -> Vec<(String, Side)> {
    let mut out: Vec<(String, Side)> = Vec::new();
    for e in lifting_dictionary() {
        let text = match e.formula {
            Formula::MapIn(t) | Formula::TerminalIn(t) | Formula::SomePointIn(t) | Formula::InitialIn(t) => t,
            _ => continue,
        };
        let Some(split) = text.rfind(")^") else { continue };
        let steps = &text[split + 2..];
        if steps.len() != 1 {
            continue;
        }
        let side = if steps == "l" { Side::Left } else { Side::Right };
        let class = (text[..=split].to_string(), side);
        if !out.contains(&class) {
            out.push(class);
        }
    }
    out
}

const EXTENSIONS: &[(&str, &str)] = &[
    ("problem.open-point-lr", "(({b}->{a->b})^r_{<5})^lr"),
    ("problem.open-point-lrr", "({b}->{a->b})^lrr"),
    ("problem.normal-gadget-lr", "({a<-U->x<-V->b}->{a<-U=x=V->b})^lr"),
];

pub fn registry() -> Vec<Law> {
    use LawStatus::*;
    let mut out = Vec::new();
    let dict = |e: &'static Entry| match (e.group, e.status) {
        (Group::Separation, Status::Asserted) => (Suite::AppendixA, Asserted),
        (Group::Separation, Status::Experimental(w)) => (Suite::AppendixA, Experimental(w)),
        (Group::Classes, Status::Asserted) => (Suite::Topology, Asserted),
        (Group::Classes, Status::Experimental(w)) => (Suite::Experimental, Experimental(w)),
    };
    for e in lifting_dictionary() {
        let (suite, status) = dict(e);
        out.push(law(e.id, e.citation, suite, status, Check::Dictionary(e)));
    }

    let t = Suite::Topology;
    out.push(law("proper.members-closed", "each map in ({a}→{a↘b})^r_{<5} is closed", t, Asserted, Check::ClosedMembers));
    out.push(law("proper.ct-closed", "the maps listed in C_T are closed", t, Asserted, Check::GeneratorsClosed));
    out.push(law("engine.iso-self-lifting", "h ⧄ h iff h is an isomorphism", t, Asserted, Check::IsoSelfLifting));
    out.push(law("engine.all-morphisms", "(all morphisms)^l = (all morphisms)^r = isomorphisms", t, Asserted, Check::AllMorphisms));
    out.push(law("engine.identities", "identities belong to every orthogonal", t, Asserted, Check::IdentityMembership));
    out.push(law("engine.antitone", "C ⊆ D implies D^l ⊆ C^l and D^r ⊆ C^r", t, Asserted, Check::Antitone));
    out.push(law("engine.reflexive", "C ⊆ C^lr and C ⊆ C^rl", t, Asserted, Check::Reflexive));
    out.push(law("engine.inheritance", "X→{*}, A↪X in C^l imply A→{*} in C^l, for any class", t, Asserted, Check::Inheritance));
    out.push(law("engine.bound-monotone", "((G)^r_{<m})^lr ⊆ ((G)^r_{<n})^lr for m < n", t, Asserted, Check::BoundMonotone));

    let a = Suite::AppendixA;
    for (id, cite, p, status) in [
        ("prelim.distinguishable", "x, y distinguishable iff {x↔y}→X, x↦x, y↦y is not continuous", Preliminary::Distinguishable, Asserted),
        ("prelim.separated", "A, B separated: i_AB factors through {A↔U↘x↔B}→{A↔U=x↔B}, both ways", Preliminary::Separated, Asserted),
        ("prelim.by-neighbourhoods", "separated by neighbourhoods: factors through {A↔U↘x↙V↔B}→{A↔U=x=V↔B}", Preliminary::ByNeighbourhoods, Asserted),
        ("prelim.by-closed-neighbourhoods", "separated by closed neighbourhoods: factors through {A↔U↘P↙x↘Q↙V↔B}→{A↔U=P=x=Q=V↔B}", Preliminary::ByClosedNeighbourhoods, Asserted),
        ("prelim.separated.unmerged", "separated, gadget with U kept apart from x", Preliminary::SeparatedUnmerged, Experimental("literal gadget: forces A to be open")),
        ("prelim.by-neighbourhoods.unmerged", "separated by neighbourhoods, gadget with U, V kept apart from x", Preliminary::ByNeighbourhoodsUnmerged, Experimental("literal gadget: forces A and B to be open")),
    ] {
        out.push(law(id, cite, a, status, Check::Preliminary(p)));
    }

    let c = Suite::Closure;
    for (class, side) in registry_classes() {
        let expr = format!("{class}^{}", side.letter());
        for construction in [
            Construction::Composition,
            Construction::Retract,
            Construction::Pullback,
            Construction::Pushout,
            Construction::Product,
            Construction::Coproduct,
        ] {
            let status = if construction.standard_for(side) {
                Asserted
            } else {
                Experimental("opposite direction; reported to settle which attribution holds")
            };
            out.push(law(
                &format!("closure.{expr}.{construction}"),
                &format!("{expr} is closed under {construction}"),
                c,
                status,
                Check::Closure { class: expr.clone(), construction },
            ));
        }
    }

    out.push(law(
        "closure.direction",
        "C^l stable under retracts, pullbacks, products; C^r under retracts, pushouts, coproducts (as stated) vs. the dual",
        c,
        Experimental("summary of both directions; the standard direction is asserted row by row above"),
        Check::ClosureDirection,
    ));

    let g = Suite::Groups;
    for p in [2, 3, 5] {
        out.push(law(
            &format!("groups.prime-to-{p}"),
            &format!("H of order prime to {p} iff H→0 ∈ {{Z/{p}→0}}^r"),
            g,
            Asserted,
            Check::PrimeToP(p),
        ));
    }
    out.push(law("groups.split", "f is split iff f ∈ {0→G : G arbitrary}^r", g, Asserted, Check::Split));
    out.push(law("groups.hom-enumeration", "generator search finds every homomorphism", g, Asserted, Check::HomCompleteness));

    let x = Suite::Experimental;
    const GROUP_BOUND: &str = "\"G arbitrary\" is replaced by the catalog up to order 8";
    out.push(law("groups.nilpotent", "H nilpotent iff H→H×H ∈ {0→G}^lr", x, Experimental(GROUP_BOUND), Check::GroupClass(GroupClass::Nilpotent)));
    out.push(law("groups.solvable", "H solvable iff 0→H ∈ {0→A : A abelian}^lr", x, Experimental(GROUP_BOUND), Check::GroupClass(GroupClass::Solvable)));
    for p in [2, 3] {
        out.push(law(
            &format!("groups.{p}-group"),
            &format!("H is a {p}-group iff H→0 ∈ {{Z/{p}→0}}^rr"),
            x,
            Experimental("the inner class is infinite; truncated to the catalog up to order 8"),
            Check::GroupClass(GroupClass::PGroup(p)),
        ));
    }
    out.push(law("proper.maps", "(({a}→{a↘b})^r_{<5})^lr compared with closed maps", x, Experimental("conjectural characterisation; inner step truncated"), Check::ProperMaps));
    out.push(law("proper.spaces", "K→{*} ∈ (({a}→{a↘b})^r_{<5})^lr for finite K", x, Experimental("conjectural characterisation; inner step truncated"), Check::ProperSpaces));
    out.push(law("proper.bound-strict", "is ((G)^r_{<4})^lr ⊊ ((G)^r_{<5})^lr", x, Experimental("open question"), Check::BoundStrictness));
    for (id, expr) in EXTENSIONS {
        out.push(law(id, &format!("calculate {expr}"), x, Experimental("open problem; extension listed at bounded scale"), Check::Extension(expr)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let laws = registry();
        let mut ids: Vec<&str> = laws.iter().map(|l| l.id.as_str()).collect();
        ids.sort_unstable();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn every_suite_is_populated() {
        let laws = registry();
        for s in Suite::ALL {
            assert!(laws.iter().any(|l| l.suite == s), "{s}");
        }
    }

    #[test]
    fn classes_are_one_step() {
        let classes = registry_classes();
        assert!(classes.contains(&("({}->{*})".to_string(), Side::Right)));
        assert!(classes.contains(&("({b}->{a->b})".to_string(), Side::Left)));
        assert!(!classes.iter().any(|(c, _)| c.contains('^')));
    }
}
