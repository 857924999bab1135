use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::registry::{registry_classes, Check, GroupClass, Preliminary, C_T, PROPER_GENERATOR};
use crate::engine::{
    antitone, check_closure_laws, inherits_terminal_map, lifts_against_all, prepare, reflexive_bounded, Category,
    Construction, EvalOptions, OracleSet, OrthExpr, Side, Step, VerdictKind,
};
use crate::fingrp::{self, oracle as gro, FinGrp, FiniteGroup, GroupHom};
use crate::fintop::dictionary::{disjoint_pairs, map_oracles, Entry, Subject};
use crate::fintop::oracle::{self as top, via_lifting, MapProperty};
use crate::fintop::{lift_maps, FinTop, SpaceMap};
use crate::notation::{parse_class_expr, render_map, render_space};

/// Working bound for inner steps without an explicit bound.
const INNER_BOUND: usize = 3;
/// Catalog order standing in for "all groups" in bounded group laws.
const GROUP_BOUND: usize = 8;

#[derive(Default)]
pub(super) struct Outcome {
    pub checked: usize,
    pub failures: usize,
    pub first: Option<(String, String)>,
    pub notes: Vec<String>,
}

impl Outcome {
    fn record(&mut self, ok: bool, left: impl FnOnce() -> String, right: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some((left(), right()));
            }
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub(super) struct Context {
    bound: usize,
    top: FinTop,
    grp: FinGrp,
    oracles: OnceLock<OracleSet<FinTop>>,
    /// Smallest cap applied by the law currently running.
    capped: Mutex<Option<usize>>,
}

impl Context {
    pub fn new(bound: usize) -> Self {
        Context { bound, top: FinTop::new(), grp: FinGrp::new(), oracles: OnceLock::new(), capped: Mutex::new(None) }
    }

    fn small(&self, cap: usize) -> usize {
        self.bound.min(cap)
    }

    /// Size of the objects a law ranges over, at most `cap`; a cap below the suite bound is
    /// noted in the report.
    fn scope(&self, cap: usize) -> usize {
        if cap < self.bound {
            let mut c = self.capped.lock().unwrap();
            *c = Some(c.map_or(cap, |old| old.min(cap)));
        }
        self.small(cap)
    }

    /// One-step map characterisations, verified against lifting at the suite bound before
    /// they may stand in for inner steps.
    fn oracles(&self) -> &OracleSet<FinTop> {
        self.oracles.get_or_init(|| {
            let mut set = map_oracles();
            set.verify(&self.top, self.small(4));
            set
        })
    }

    fn opts(&self) -> EvalOptions<'_, FinTop> {
        EvalOptions { inner_bound: Some(self.small(INNER_BOUND)), oracles: Some(self.oracles()) }
    }

    pub fn run(&self, check: &Check) -> Outcome {
        *self.capped.lock().unwrap() = None;
        let mut out = self.dispatch(check);
        if let Some(cap) = *self.capped.lock().unwrap() {
            out.notes.push(format!("ranges over at most {cap} points, below the suite bound {}", self.bound));
        }
        out
    }

    fn dispatch(&self, check: &Check) -> Outcome {
        match check {
            Check::Dictionary(e) => self.dictionary(e),
            Check::Preliminary(p) => self.preliminary(*p),
            Check::ClosedMembers => self.closed_members(),
            Check::GeneratorsClosed => self.generators_closed(),
            Check::IsoSelfLifting => self.iso_self_lifting(),
            Check::AllMorphisms => self.all_morphisms(),
            Check::IdentityMembership => self.identities(),
            Check::Antitone => self.antitone(),
            Check::Reflexive => self.reflexive(),
            Check::Inheritance => self.inheritance(),
            Check::BoundMonotone => self.bound_monotone(),
            Check::BoundStrictness => self.bound_strictness(),
            Check::ClosureDirection => self.closure_direction(),
            Check::Closure { class, construction } => self.closure(class, *construction),
            Check::PrimeToP(p) => self.prime_to_p(*p),
            Check::Split => self.split(),
            Check::HomCompleteness => self.hom_completeness(),
            Check::GroupClass(k) => self.group_class(*k),
            Check::ProperMaps => self.proper_maps(),
            Check::ProperSpaces => self.proper_spaces(),
            Check::Extension(expr) => self.extension(expr),
        }
    }

    fn dictionary(&self, e: &'static Entry) -> Outcome {
        let compiled = e.compile(&self.top, &self.opts()).expect("dictionary rows are evaluable");
        let rows: Vec<(String, crate::fintop::dictionary::Outcome, bool)> = match e.subject {
            Subject::Map(_) => self
                .top
                .universe(self.bound)
                .par_iter()
                .map(|h| (render_map(h), compiled.map(h), e.oracle_map(h)))
                .collect(),
            Subject::Space(_) => self
                .top
                .objects(self.bound)
                .par_iter()
                .map(|x| (render_space(x), compiled.space(x), e.oracle_space(x)))
                .collect(),
        };
        let mut out = Outcome::default();
        let mut kinds: BTreeMap<String, usize> = BTreeMap::new();
        let mut definitive_bad = 0;
        for (left, got, want) in rows {
            *kinds.entry(got.kind.to_string()).or_default() += 1;
            let ok = got.holds == want;
            if !ok && got.definitive {
                definitive_bad += 1;
            }
            out.record(
                ok,
                || left,
                || {
                    let mut s = format!("lifting {}, predicate {}", yes_no(got.holds), yes_no(want));
                    if let Some(w) = &got.witness {
                        s.push_str(&format!(" ({w})"));
                    }
                    s
                },
            );
        }
        for r in compiled.records() {
            out.notes.push(format!("step {r}"));
        }
        if kinds.len() > 1 || !kinds.contains_key("ExactYes") && !kinds.contains_key("ExactNo") {
            let parts: Vec<String> = kinds.iter().map(|(k, n)| format!("{k} {n}")).collect();
            out.notes.push(format!("verdicts: {}", parts.join(", ")));
        }
        if out.failures > 0 && e.is_multi_step() {
            out.notes.push(format!("definitive disagreements: {definitive_bad}"));
        }
        out
    }

    fn preliminary(&self, p: Preliminary) -> Outcome {
        let spaces = self.top.objects(self.bound);
        let results: Vec<Vec<Option<(String, String)>>> = spaces
            .par_iter()
            .map(|x| {
                let mut bad = Vec::new();
                if p == Preliminary::Distinguishable {
                    for a in 0..x.len() {
                        for b in 0..x.len() {
                            if a != b {
                                let (got, want) = (via_lifting::distinguishable(x, a, b), top::distinguishable(x, a, b));
                                bad.push((got != want).then(|| {
                                    (format!("{} with {}, {}", render_space(x), x.label(a), x.label(b)), format!("lifting {}, predicate {}", yes_no(got), yes_no(want)))
                                }));
                            }
                        }
                    }
                    return bad;
                }
                for (a, b) in disjoint_pairs(x) {
                    let (got, want) = match p {
                        Preliminary::Separated => (via_lifting::separated(x, a, b), top::separated(x, a, b)),
                        Preliminary::ByNeighbourhoods => {
                            (via_lifting::separated_by_neighbourhoods(x, a, b), top::separated_by_neighbourhoods(x, a, b))
                        }
                        Preliminary::ByClosedNeighbourhoods => (
                            via_lifting::separated_by_closed_neighbourhoods(x, a, b),
                            top::separated_by_closed_neighbourhoods(x, a, b),
                        ),
                        Preliminary::SeparatedUnmerged => (
                            via_lifting::factors(x, a, b, via_lifting::SEPARATED_UNMERGED)
                                && via_lifting::factors(x, b, a, via_lifting::SEPARATED_UNMERGED),
                            top::separated(x, a, b),
                        ),
                        Preliminary::ByNeighbourhoodsUnmerged => (
                            via_lifting::factors(x, a, b, via_lifting::BY_NEIGHBOURHOODS_UNMERGED),
                            top::separated_by_neighbourhoods(x, a, b),
                        ),
                        Preliminary::Distinguishable => unreachable!(),
                    };
                    bad.push((got != want).then(|| {
                        let set = |m: u64| {
                            let names: Vec<&str> = (0..x.len()).filter(|&i| m >> i & 1 == 1).map(|i| x.label(i)).collect();
                            format!("{{{}}}", names.join(","))
                        };
                        (
                            format!("{} with A={}, B={}", render_space(x), set(a), set(b)),
                            format!("lifting {}, predicate {}", yes_no(got), yes_no(want)),
                        )
                    }));
                }
                bad
            })
            .collect();
        let mut out = Outcome::default();
        for r in results.into_iter().flatten() {
            let ok = r.is_none();
            let (l, rr) = r.unwrap_or_default();
            out.record(ok, || l, || rr);
        }
        out
    }

    fn closed_members(&self) -> Outcome {
        let expr = parse_class_expr(PROPER_GENERATOR).expect("fixed expression");
        let class = prepare(&self.top, &expr, &EvalOptions::default()).expect("one explicit step");
        let universe = self.top.universe(self.scope(4));
        let rows: Vec<(bool, bool, String)> = universe
            .par_iter()
            .map(|h| (class.member(h).is_yes(), top::map_has(h, MapProperty::ClosedMap), render_map(h)))
            .collect();
        let mut out = Outcome::default();
        let mut members = 0;
        for (member, closed, left) in rows {
            if member {
                members += 1;
                out.record(closed, || left, || "member, but not a closed map".into());
            }
        }
        out.notes.push(format!("{members} members among {} maps", universe.len()));
        out
    }

    fn generators_closed(&self) -> Outcome {
        let mut out = Outcome::default();
        for g in parse_class_expr(&format!("{C_T}^lr")).expect("fixed expression").generators {
            out.record(top::map_has(&g, MapProperty::ClosedMap), || render_map(&g), || "not a closed map".into());
        }
        out
    }

    fn iso_self_lifting(&self) -> Outcome {
        let u = self.top.universe(self.scope(3));
        let results: Vec<Option<(String, String)>> = u
            .par_iter()
            .map(|h| {
                let (lifts, iso) = (lift_maps(h, h).holds, h.is_iso());
                (lifts != iso).then(|| (render_map(h), format!("h ⧄ h {}, iso {}", yes_no(lifts), yes_no(iso))))
            })
            .collect();
        collect_pairs(results)
    }

    fn all_morphisms(&self) -> Outcome {
        let u = self.top.universe(self.scope(3));
        let mut out = Outcome::default();
        for side in [Side::Left, Side::Right] {
            let results: Vec<Option<(String, String)>> = u
                .par_iter()
                .map(|h| {
                    let member = lifts_against_all(&self.top, h, &u, side);
                    (member != h.is_iso())
                        .then(|| (render_map(h), format!("member of (all)^{side} {}, iso {}", yes_no(member), yes_no(h.is_iso()))))
                })
                .collect();
            out = merge(out, collect_pairs(results));
        }
        out
    }

    fn class_generators(&self) -> Vec<(String, Vec<SpaceMap>, Side)> {
        registry_classes()
            .into_iter()
            .map(|(text, side)| {
                let gens = parse_class_expr(&format!("{text}^{}", side.letter())).expect("registry classes parse").generators;
                (text, gens, side)
            })
            .collect()
    }

    fn identities(&self) -> Outcome {
        let mut out = Outcome::default();
        let objects = self.top.objects(self.bound);
        for (text, gens, side) in self.class_generators() {
            for x in &objects {
                let id = SpaceMap::identity(x.clone());
                let ok = lifts_against_all(&self.top, &id, &gens, side);
                out.record(ok, || format!("id of {}", render_space(x)), || format!("not in {text}^{side}"));
            }
        }
        out
    }

    fn antitone(&self) -> Outcome {
        let classes = self.class_generators();
        let mut sets: Vec<(String, Vec<SpaceMap>)> = Vec::new();
        for (text, gens, _) in &classes {
            if !sets.iter().any(|(t, _)| t == text) {
                sets.push((text.clone(), gens.clone()));
            }
        }
        let mut out = Outcome::default();
        let bound = self.scope(3);
        for (ct, c) in &sets {
            for (dt, d) in &sets {
                if ct == dt {
                    continue;
                }
                let mut large = c.clone();
                large.extend(d.iter().cloned());
                for side in [Side::Left, Side::Right] {
                    let (checked, bad) = antitone(&self.top, c, &large, side, bound);
                    out.checked += checked;
                    if let Some(h) = bad {
                        out.failures += 1;
                        out.first.get_or_insert_with(|| {
                            (render_map(&h), format!("in ({ct} ∪ {dt})^{side} but not in {ct}^{side}"))
                        });
                    }
                }
            }
        }
        out.notes.push(format!("{} generator-set pairs, both sides, maps up to {bound} points", sets.len() * (sets.len() - 1)));
        out
    }

    fn reflexive(&self) -> Outcome {
        let mut out = Outcome::default();
        let bound = self.scope(4);
        let mut seen: Vec<String> = Vec::new();
        for (text, gens, _) in self.class_generators() {
            if seen.contains(&text) {
                continue;
            }
            seen.push(text.clone());
            for side in [Side::Left, Side::Right] {
                let (inner, bad) = reflexive_bounded(&self.top, &gens, side, bound);
                let other = if side == Side::Left { Side::Right } else { Side::Left };
                out.record(
                    bad.is_none(),
                    || render_map(bad.as_ref().expect("failure")),
                    || format!("not in ({text}^{side}_{{<{}}})^{other} ({inner} inner members)", bound + 1),
                );
            }
        }
        out
    }

    fn inheritance(&self) -> Outcome {
        let u = self.top.universe(self.scope(4));
        let monos: Vec<&SpaceMap> = u.iter().filter(|m| m.is_injective()).collect();
        let mut out = Outcome::default();
        let mut premises = 0;
        let mut seen: Vec<String> = Vec::new();
        for (text, gens, _) in self.class_generators() {
            if seen.contains(&text) {
                continue;
            }
            seen.push(text.clone());
            let results: Vec<Option<bool>> = monos.par_iter().map(|m| inherits_terminal_map(&self.top, &gens, m)).collect();
            for (m, r) in monos.iter().zip(results) {
                if r.is_some() {
                    premises += 1;
                }
                out.record(r != Some(false), || render_map(m), || format!("A→{{*}} not in {text}^l"));
            }
        }
        out.notes.push(format!("{} monomorphisms per class; premises held in {premises} cases", monos.len()));
        out
    }

    fn proper_class(&self, bound: usize) -> crate::engine::PreparedClass<'_, FinTop> {
        let expr = parse_class_expr(&format!("({{a}}->{{a->b}})^r_{{<{bound}}}^lr")).expect("fixed expression");
        prepare(&self.top, &expr, &self.opts()).expect("inner steps are bounded")
    }

    fn bound_monotone(&self) -> Outcome {
        let u = self.top.universe(self.scope(4));
        let mut out = Outcome::default();
        let big = self.proper_class(5);
        let big_members: Vec<bool> = u.par_iter().map(|h| big.member(h).is_yes()).collect();
        for m in [3, 4] {
            let small = self.proper_class(m);
            let results: Vec<Option<(String, String)>> = u
                .par_iter()
                .zip(&big_members)
                .map(|(h, &in_big)| {
                    let in_small = small.member(h).is_yes();
                    (in_small && !in_big).then(|| (render_map(h), format!("in the <{m} class, not in the <5 class")))
                })
                .collect();
            out = merge(out, collect_pairs(results));
        }
        out
    }

    fn bound_strictness(&self) -> Outcome {
        let u = self.top.universe(self.scope(4));
        let (small, big) = (self.proper_class(4), self.proper_class(5));
        let extra: Vec<&SpaceMap> = u
            .par_iter()
            .filter(|h| big.member(h).is_yes() && !small.member(h).is_yes())
            .collect();
        let mut out = Outcome { checked: u.len(), ..Default::default() };
        out.notes.push(format!("{} maps in the <5 class but not in the <4 class", extra.len()));
        if let Some(h) = extra.first() {
            out.notes.push(format!("first: {}", render_map(h)));
        }
        out
    }

    fn proper_maps(&self) -> Outcome {
        let class = self.proper_class(5);
        let u = self.top.universe(self.scope(4));
        let rows: Vec<(VerdictKind, bool)> =
            u.par_iter().map(|h| (class.member(h).kind, top::map_has(h, MapProperty::ClosedMap))).collect();
        let mut out = Outcome::default();
        let mut kinds: BTreeMap<String, usize> = BTreeMap::new();
        for (h, (kind, closed)) in u.iter().zip(rows) {
            *kinds.entry(kind.to_string()).or_default() += 1;
            out.record(kind.is_yes() == closed, || render_map(h), || format!("{kind}, closed map {}", yes_no(closed)));
        }
        for r in class.records() {
            out.notes.push(format!("step {r}"));
        }
        let parts: Vec<String> = kinds.iter().map(|(k, n)| format!("{k} {n}")).collect();
        out.notes.push(format!("verdicts: {}", parts.join(", ")));
        out
    }

    fn proper_spaces(&self) -> Outcome {
        let class = self.proper_class(5);
        let mut out = Outcome::default();
        let mut kinds: BTreeMap<String, usize> = BTreeMap::new();
        for x in self.top.objects(self.scope(4)) {
            let v = class.member(&SpaceMap::to_point(x.clone()));
            *kinds.entry(v.kind.to_string()).or_default() += 1;
            out.record(v.is_yes(), || render_space(&x), || format!("{}", v.kind));
        }
        for r in class.records() {
            out.notes.push(format!("step {r}"));
        }
        let parts: Vec<String> = kinds.iter().map(|(k, n)| format!("{k} {n}")).collect();
        out.notes.push(format!("verdicts: {}", parts.join(", ")));
        out
    }

    fn extension(&self, text: &str) -> Outcome {
        let expr = parse_class_expr(text).expect("fixed expression");
        let class = prepare(&self.top, &expr, &self.opts()).expect("inner steps bounded or truncated");
        let u = self.top.universe(self.scope(4));
        let kinds: Vec<VerdictKind> = u.par_iter().map(|h| class.member(h).kind).collect();
        let mut out = Outcome { checked: u.len(), ..Default::default() };
        for r in class.records() {
            out.notes.push(format!("step {r}"));
        }
        let members: Vec<&SpaceMap> = u.iter().zip(&kinds).filter(|(_, k)| k.is_yes()).map(|(h, _)| h).collect();
        out.notes.push(format!("{} of {} maps are members", members.len(), u.len()));
        let spaces: Vec<String> = members
            .iter()
            .filter(|h| h.codomain().len() == 1 && !h.domain().is_empty())
            .map(|h| render_space(h.domain()))
            .collect();
        out.notes.push(format!("spaces K with K→{{*}} a member: {}", spaces.join(" ")));
        let props: Vec<String> = MapProperty::ALL
            .iter()
            .filter(|&&p| members.iter().all(|h| top::map_has(h, p)))
            .map(|p| p.name().to_string())
            .collect();
        out.notes.push(format!("properties shared by all members: {}", if props.is_empty() { "none".into() } else { props.join(", ") }));
        out
    }

    fn closure(&self, class: &str, construction: Construction) -> Outcome {
        let expr = parse_class_expr(class).expect("registry classes parse");
        let bound = self.scope(3);
        let report = closure_report(&self.top, class, &expr, bound);
        let c = report.check(construction);
        let mut out = Outcome { checked: c.instances, failures: c.violations, first: c.first_violation.clone(), notes: Vec::new() };
        if c.expected {
            out.notes.push(format!("{} members up to {bound} points", report.members));
        } else {
            out.notes.push(if c.holds() { "holds at this bound".into() } else { "fails".into() });
        }
        out
    }

    fn closure_direction(&self) -> Outcome {
        use crate::engine::Construction::*;
        let bound = self.scope(3);
        let mut out = Outcome::default();
        // (side, construction) -> (classes where it holds, classes checked)
        let mut tally: BTreeMap<(char, String), (usize, usize)> = BTreeMap::new();
        for (class, side) in registry_classes() {
            let text = format!("{class}^{}", side.letter());
            let expr = parse_class_expr(&text).expect("registry classes parse");
            let report = closure_report(&self.top, &text, &expr, bound);
            for c in [Pullback, Pushout, Product, Coproduct] {
                let check = report.check(c);
                out.checked += check.instances;
                let e = tally.entry((side.letter(), c.to_string())).or_default();
                e.0 += usize::from(check.holds());
                e.1 += 1;
            }
        }
        let line = |side: char, cs: [&str; 2]| {
            cs.iter()
                .map(|c| {
                    let (ok, n) = tally[&(side, c.to_string())];
                    format!("{c} {ok}/{n}")
                })
                .collect::<Vec<_>>()
                .join(", ")
        };
        out.notes.push(format!("left classes:  {} | {}", line('l', ["pushouts", "coproducts"]), line('l', ["pullbacks", "products"])));
        out.notes.push(format!("right classes: {} | {}", line('r', ["pullbacks", "products"]), line('r', ["pushouts", "coproducts"])));
        let all = |side: char, c: &str| {
            let (ok, n) = tally[&(side, c.to_string())];
            ok == n
        };
        let standard = all('l', "pushouts") && all('l', "coproducts") && all('r', "pullbacks") && all('r', "products");
        let stated = all('l', "pullbacks") && all('l', "products") && all('r', "pushouts") && all('r', "coproducts");
        out.notes.push(format!(
            "confirmed: {}",
            match (standard, stated) {
                (true, false) => "left classes are stable under pushouts and coproducts, right classes under pullbacks and products; the stated attribution fails",
                (true, true) => "both attributions hold at this bound",
                (false, true) => "the stated attribution holds and the dual fails",
                (false, false) => "neither attribution holds in full",
            }
        ));
        out
    }

    fn prime_to_p(&self, p: usize) -> Outcome {
        let zp = Arc::new(fingrp::by_name(&format!("Z{p}")).expect("cyclic groups are catalogued"));
        let expr = OrthExpr::new(vec![self.grp.to_terminal(&zp)], vec![Step::right()]);
        let class = prepare(&self.grp, &expr, &EvalOptions::default()).expect("one step");
        let mut out = Outcome::default();
        for h in self.grp.objects(16) {
            let v = class.member(&self.grp.to_terminal(&h));
            let want = gro::order_prime_to(&h, p);
            out.record(v.kind.is_exact() && v.is_yes() == want, || format!("{}->0", h.name()), || {
                format!("{}, order {} prime to {p}: {}", v.kind, h.order(), yes_no(want))
            });
        }
        out
    }

    fn split(&self) -> Outcome {
        let groups: Vec<Arc<FiniteGroup>> = self.grp.objects(8);
        let zero = self.grp.zero();
        let mut out = Outcome::default();
        for a in &groups {
            for b in &groups {
                let gens: Vec<GroupHom> = groups
                    .iter()
                    .filter(|g| g.order() <= b.order())
                    .map(|g| GroupHom::trivial(zero.clone(), g.clone()))
                    .collect();
                for f in self.grp.homs(a, b).into_iter().filter(|f| f.is_surjective()) {
                    let member = lifts_against_all(&self.grp, &f, &gens, Side::Right);
                    let section = gro::has_section(&f);
                    out.record(member == section, || f.to_string(), || {
                        format!("lifting {}, section {}", yes_no(member), yes_no(section))
                    });
                }
            }
        }
        out
    }

    fn hom_completeness(&self) -> Outcome {
        let groups = self.grp.objects(6);
        let mut out = Outcome::default();
        for g in &groups {
            for h in &groups {
                let fast = self.grp.homs(g, h).len();
                let naive = naive_hom_count(g, h);
                out.record(fast == naive, || format!("{} -> {}", g.name(), h.name()), || format!("search {fast}, naive {naive}"));
            }
        }
        out
    }

    fn group_class(&self, kind: GroupClass) -> Outcome {
        let cat = &self.grp;
        let zero = cat.zero();
        let catalog = cat.objects(GROUP_BOUND);
        let (gens, steps, subjects): (Vec<GroupHom>, Vec<Step>, Vec<Arc<FiniteGroup>>) = match kind {
            GroupClass::Nilpotent => (
                catalog.iter().map(|g| GroupHom::trivial(zero.clone(), g.clone())).collect(),
                vec![Step::left(), Step::right()],
                cat.objects(GROUP_BOUND),
            ),
            GroupClass::Solvable => (
                catalog.iter().filter(|g| g.is_abelian()).map(|g| GroupHom::trivial(zero.clone(), g.clone())).collect(),
                vec![Step::left(), Step::right()],
                cat.objects(16),
            ),
            GroupClass::PGroup(p) => {
                let zp = Arc::new(fingrp::by_name(&format!("Z{p}")).expect("catalogued"));
                (vec![cat.to_terminal(&zp)], vec![Step::right(), Step::right()], cat.objects(16))
            }
        };
        let opts = EvalOptions { inner_bound: Some(GROUP_BOUND), oracles: None };
        let class = prepare(cat, &OrthExpr::new(gens, steps), &opts).expect("inner step truncated");
        let mut out = Outcome::default();
        for h in subjects {
            let (subject, want) = match kind {
                GroupClass::Nilpotent => (gro::diagonal(&h), gro::is_nilpotent(&h)),
                GroupClass::Solvable => (GroupHom::trivial(zero.clone(), h.clone()), gro::is_solvable(&h)),
                GroupClass::PGroup(p) => (cat.to_terminal(&h), gro::is_p_group(&h, p)),
            };
            let v = class.member(&subject);
            out.record(v.is_yes() == want, || subject.to_string(), || {
                format!("{}{}, predicate {}", v.kind, if v.definitive { " (definitive)" } else { "" }, yes_no(want))
            });
        }
        for r in class.records() {
            out.notes.push(format!("step {r}"));
        }
        out
    }
}

fn collect_pairs(results: Vec<Option<(String, String)>>) -> Outcome {
    let mut out = Outcome::default();
    for r in results {
        let ok = r.is_none();
        let (l, rr) = r.unwrap_or_default();
        out.record(ok, || l, || rr);
    }
    out
}

fn merge(mut a: Outcome, b: Outcome) -> Outcome {
    a.checked += b.checked;
    a.failures += b.failures;
    if a.first.is_none() {
        a.first = b.first;
    }
    a.notes.extend(b.notes);
    a
}

/// Closure reports are shared by the six laws of one class.
fn closure_report(cat: &FinTop, key: &str, expr: &OrthExpr<SpaceMap>, bound: usize) -> Arc<crate::engine::ClosureReport> {
    use std::collections::HashMap;
    use std::sync::Mutex;
    static CACHE: OnceLock<Mutex<HashMap<(String, usize), Arc<crate::engine::ClosureReport>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(r) = cache.lock().unwrap().get(&(key.to_string(), bound)) {
        return r.clone();
    }
    let r = Arc::new(check_closure_laws(expr, cat, bound));
    cache.lock().unwrap().entry((key.to_string(), bound)).or_insert(r).clone()
}

/// Counts homomorphisms by filtering every function.
fn naive_hom_count(g: &FiniteGroup, h: &FiniteGroup) -> usize {
    let (n, m) = (g.order(), h.order());
    let mut f = vec![0usize; n];
    let mut count = 0;
    loop {
        if g.elements().all(|a| g.elements().all(|b| f[g.mul(a, b)] == h.mul(f[a], f[b]))) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            f[k] += 1;
            if f[k] < m {
                break;
            }
            f[k] = 0;
            k += 1;
        }
    }
}
