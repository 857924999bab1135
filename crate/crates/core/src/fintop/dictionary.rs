//! The table of lifting characterisations of space and map properties.
//!
//! Every row pairs a formula (as text in the arrow notation) with the direct predicate it
//! is claimed to match. Rows are data: the harness turns each into a law.

use std::fmt;
use std::sync::Arc;

use super::category::{lift_maps, FinTop};
use super::map::SpaceMap;
use super::oracle::{self, MapProperty, SpaceProperty};
use super::space::FiniteSpace;
use crate::engine::{prepare, EvalError, EvalOptions, OracleSet, PreparedClass, StepRecord, VerdictKind};
use crate::notation::{parse_class_expr, parse_map, render_map};

/// What a row's formula is compared against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subject {
    /// Conjunction of space properties.
    Space(&'static [SpaceProperty]),
    Map(MapTest),
}

/// Direct predicates on maps, including the readings some rows are compared with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapTest {
    Has(MapProperty),
    /// `A = B = ∅` or `A ≠ ∅`.
    NonEmptyOrBothEmpty,
    /// `A = ∅` or the map is an isomorphism.
    EmptyDomainOrIso,
    /// `A = ∅` or the map is surjective.
    EmptyDomainOrSurjective,
    /// Has a section.
    Split,
    /// Has a retraction.
    SplitMono,
    /// `A → A ⊔ D` with `D` discrete.
    IsolatedComplement,
    /// Injective on connected components.
    Pi0Injective,
    /// Complementary clopen subsets of the domain have images in complementary clopens.
    DisjointClopenImages,
    /// The literal reading: distinct clopen subsets have disjoint images.
    DisjointImagesOfDistinctClopens,
    Iso,
}

impl MapTest {
    pub fn name(self) -> String {
        match self {
            MapTest::Has(p) => p.name().to_string(),
            MapTest::NonEmptyOrBothEmpty => "domain non-empty, or both ends empty".into(),
            MapTest::EmptyDomainOrIso => "domain empty, or isomorphism".into(),
            MapTest::EmptyDomainOrSurjective => "domain empty, or surjective".into(),
            MapTest::Split => "has a section".into(),
            MapTest::SplitMono => "has a retraction".into(),
            MapTest::IsolatedComplement => "of the form A -> A + D, D discrete".into(),
            MapTest::Pi0Injective => "injective on connected components".into(),
            MapTest::DisjointClopenImages => "complementary clopens have separated images".into(),
            MapTest::DisjointImagesOfDistinctClopens => "distinct clopens have disjoint images".into(),
            MapTest::Iso => "isomorphism".into(),
        }
    }

    pub fn eval(self, f: &SpaceMap) -> bool {
        let (a, b) = (f.domain(), f.codomain());
        match self {
            MapTest::Has(p) => oracle::map_has(f, p),
            MapTest::NonEmptyOrBothEmpty => !a.is_empty() || b.is_empty(),
            MapTest::EmptyDomainOrIso => a.is_empty() || f.is_iso(),
            MapTest::EmptyDomainOrSurjective => a.is_empty() || f.is_surjective(),
            MapTest::Split => oracle::has_section(f),
            MapTest::SplitMono => oracle::has_retraction(f),
            MapTest::IsolatedComplement => oracle::isolated_complement_embedding(f),
            MapTest::Pi0Injective => oracle::pi0_injective(f),
            MapTest::DisjointClopenImages => oracle::separates_clopen_images(f),
            MapTest::DisjointImagesOfDistinctClopens => {
                let clopens = a.clopen_sets();
                clopens.iter().all(|&u| {
                    clopens
                        .iter()
                        .all(|&v| u == v || f.image_of(u) & f.image_of(v) == 0)
                })
            }
            MapTest::Iso => f.is_iso(),
        }
    }
}

/// How a formula is applied to a space `X` (or a map `h`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formula {
    /// `X → {*}` belongs to the class.
    TerminalIn(&'static str),
    /// `∅ → X` belongs to the class.
    InitialIn(&'static str),
    /// Some `{*} → X` belongs to the class.
    SomePointIn(&'static str),
    /// `∅ → X ⧄ g`.
    EmptyLifts(&'static str),
    /// `{x} → X ⧄ g` for every point.
    PointsLift(&'static str),
    /// `{x,y} ↪ X ⧄ g` for every injective pair.
    PairsLift(&'static str),
    /// `g ⧄ X → {*}`.
    AgainstTerminal(&'static str),
    /// The map itself belongs to the class.
    MapIn(&'static str),
}

impl Formula {
    pub fn text(&self) -> &'static str {
        match *self {
            Formula::TerminalIn(t)
            | Formula::InitialIn(t)
            | Formula::SomePointIn(t)
            | Formula::EmptyLifts(t)
            | Formula::PointsLift(t)
            | Formula::PairsLift(t)
            | Formula::AgainstTerminal(t)
            | Formula::MapIn(t) => t,
        }
    }

    fn is_class(&self) -> bool {
        matches!(self, Formula::TerminalIn(_) | Formula::InitialIn(_) | Formula::SomePointIn(_) | Formula::MapIn(_))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::TerminalIn(t) => write!(f, "X->{{*}} in {t}"),
            Formula::InitialIn(t) => write!(f, "{{}}->X in {t}"),
            Formula::SomePointIn(t) => write!(f, "some {{*}}->X in {t}"),
            Formula::EmptyLifts(t) => write!(f, "{{}}->X lifts against {t}"),
            Formula::PointsLift(t) => write!(f, "each {{x}}->X lifts against {t}"),
            Formula::PairsLift(t) => write!(f, "each injective {{x,y}}->X lifts against {t}"),
            Formula::AgainstTerminal(t) => write!(f, "{t} lifts against X->{{*}}"),
            Formula::MapIn(t) => write!(f, "h in {t}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Asserted,
    /// Reported but never counted as a failure; the reason is shown with the report.
    Experimental(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    /// Characterisations of classes of maps and of space properties by short formulas.
    Classes,
    /// Separation axioms and their preliminaries.
    Separation,
}

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub id: &'static str,
    pub citation: &'static str,
    pub subject: Subject,
    pub formula: Formula,
    pub status: Status,
    pub group: Group,
}

const fn row(
    id: &'static str,
    citation: &'static str,
    subject: Subject,
    formula: Formula,
    status: Status,
    group: Group,
) -> Entry {
    Entry { id, citation, subject, formula, status, group }
}

use Formula::*;
use Group::*;
use MapTest::*;
use Status::*;
use Subject::{Map, Space};

const MULTI: &str = "iterated orthogonal: inner classes are truncated to the working bound";

static ENTRIES: &[Entry] = &[
    // classes of maps
    row("map.surjective", "(∅→{*})^r is the class of surjections", Map(Has(MapProperty::Surjective)), MapIn("({}->{*})^r"), Asserted, Classes),
    row("map.surjective.point-pair", "(∅→{*})^r = ({0}→{0↔1})^l", Map(Has(MapProperty::Surjective)), MapIn("({0}->{0<->1})^l"), Asserted, Classes),
    row("map.injective.discrete-pair", "({a,b}→{a=b})^r is the class of injections", Map(Has(MapProperty::Injective)), MapIn("({a,b}->{a=b})^r"), Asserted, Classes),
    row("map.injective.antidiscrete-pair", "({a↔b}→{a=b})^l is the class of injections", Map(Has(MapProperty::Injective)), MapIn("({a<->b}->{a=b})^l"), Asserted, Classes),
    row("map.dense-image", "({b}→{a↘b})^l: maps with dense image", Map(Has(MapProperty::DenseImage)), MapIn("({b}->{a->b})^l"), Asserted, Classes),
    row("map.induced", "({a↘b}→{a=b})^l: topology on X induced from Y", Map(Has(MapProperty::InducedTopology)), MapIn("({a->b}->{a=b})^l"), Asserted, Classes),
    row("map.fibres-t0", "({a↔b}→{a=b})^r: fibres are T0", Map(Has(MapProperty::FibrewiseT0)), MapIn("({a<->b}->{a=b})^r"), Asserted, Classes),
    row("map.fibres-t1", "({a↘b}→{a=b})^r: fibres are T1", Map(Has(MapProperty::FibrewiseT1)), MapIn("({a->b}->{a=b})^r"), Asserted, Classes),
    row("map.clopen-image", "({a}→{a,b})^l: each non-empty clopen meets the image", Map(Has(MapProperty::ClopenImageLaw)), MapIn("({a}->{a,b})^l"), Asserted, Classes),
    row("map.non-empty", "(∅→{*})^l: A=B=∅ or A≠∅", Map(NonEmptyOrBothEmpty), MapIn("({}->{*})^l"), Asserted, Classes),
    row("map.clopen-image.alt", "({a}→{a,b})^l: X empty or f surjective", Map(EmptyDomainOrSurjective), MapIn("({a}->{a,b})^l"), Experimental("conflicts with the clopen-image reading of the same class"), Classes),
    row("map.connected.literal", "({a,b}→{a=b})^l: f(U)∩f(V)=∅ for distinct clopens U≠V", Map(DisjointImagesOfDistinctClopens), MapIn("({a,b}->{a=b})^l"), Experimental("reading of the connectedness line under test"), Classes),
    row("map.connected.clopen-sets", "({a,b}→{a=b})^l: complementary clopens have separated images", Map(DisjointClopenImages), MapIn("({a,b}->{a=b})^l"), Experimental("reading of the connectedness line under test"), Classes),
    row("map.connected.pi0", "({a,b}→{a=b})^l: π0(X) → π0(Y) injective", Map(Pi0Injective), MapIn("({a,b}->{a=b})^l"), Experimental("reading of the connectedness line under test"), Classes),
    row("map.point-to-pair.left", "({a}→{a↔b})^l is the class of surjections", Map(Has(MapProperty::Surjective)), MapIn("({a}->{a<->b})^l"), Experimental("stated without proof"), Classes),
    row("map.point-to-pair.right", "({a}→{a↔b})^r is the class of surjections", Map(Has(MapProperty::Surjective)), MapIn("({a}->{a<->b})^r"), Experimental("stated without proof"), Classes),
    row("map.open-map", "({b}→{a↘b})^r: open maps", Map(Has(MapProperty::OpenMap)), MapIn("({b}->{a->b})^r"), Experimental("not a listed characterisation; recorded for comparison"), Classes),
    row("map.closed-map", "({a}→{a↘b})^r: closed maps", Map(Has(MapProperty::ClosedMap)), MapIn("({a}->{a->b})^r"), Experimental("only one inclusion is claimed"), Classes),
    row("map.rl", "(∅→{*})^rl: maps A→A∪D, D discrete", Map(IsolatedComplement), MapIn("({}->{*})^rl"), Experimental(MULTI), Classes),
    row("map.rll", "(∅→{*})^rll = ({a}→{a,b})^l", Map(Has(MapProperty::ClopenImageLaw)), MapIn("({}->{*})^rll"), Experimental(MULTI), Classes),
    row("map.ll", "(∅→{*})^ll: A=∅ or isomorphism", Map(EmptyDomainOrIso), MapIn("({}->{*})^ll"), Experimental(MULTI), Classes),
    row("map.lll.section", "(∅→{*})^lll: maps which split (section)", Map(Split), MapIn("({}->{*})^lll"), Experimental("\"split\" is not defined for spaces; reading under test"), Classes),
    row("map.lll.retraction", "(∅→{*})^lll: maps which split (retraction)", Map(SplitMono), MapIn("({}->{*})^lll"), Experimental("\"split\" is not defined for spaces; reading under test"), Classes),
    row("map.rr", "(∅→{*})^rr: subspace embeddings", Map(Has(MapProperty::SubspaceEmbedding)), MapIn("({}->{*})^rr"), Experimental(MULTI), Classes),
    row("map.closed-inclusion", "({b}→{a↘b})^lr: closed inclusions", Map(Has(MapProperty::ClosedInclusion)), MapIn("({b}->{a->b})^lr"), Experimental(MULTI), Classes),
    // properties of spaces
    row("space.t0", "K is T0 iff K→{*} ∈ ({a↔b}→{a=b})^r", Space(&[SpaceProperty::T0]), TerminalIn("({a<->b}->{a=b})^r"), Asserted, Classes),
    row("space.t1", "K is T1 iff K→{*} ∈ ({a↘b}→{a=b})^r", Space(&[SpaceProperty::T1]), TerminalIn("({a->b}->{a=b})^r"), Asserted, Classes),
    row("space.hausdorff", "Hausdorff: {x,y}↪X ⧄ {x↘o↙y}→{x=o=y}", Space(&[SpaceProperty::Hausdorff]), PairsLift("{x->o<-y}->{x=o=y}"), Asserted, Classes),
    row("space.regular", "regular: {x}→X ⧄ {x↘X↙U↘F}→{x=X=U↘F}", Space(&[SpaceProperty::Regular]), PointsLift("{x->X<-U->F}->{x=X=U->F}"), Asserted, Classes),
    row("space.normal", "normal: ∅→X ⧄ {a↙U↘x↙V↘b}→{a↙U=x=V↘b}", Space(&[SpaceProperty::Normal]), EmptyLifts("{a<-U->x<-V->b}->{a<-U=x=V->b}"), Asserted, Classes),
    row("space.connected-or-empty", "K connected or empty iff K→{*} ∈ ({a,b}→{a=b})^l", Space(&[SpaceProperty::Connected]), TerminalIn("({a,b}->{a=b})^l"), Asserted, Classes),
    row("space.non-empty", "K non-empty iff K→{*} ∈ (∅→{*})^l", Space(&[SpaceProperty::NonEmpty]), TerminalIn("({}->{*})^l"), Asserted, Classes),
    row("space.connected-non-empty", "K connected and non-empty iff some {*}→K ∈ ({a}→{a,b})^l", Space(&[SpaceProperty::Connected, SpaceProperty::NonEmpty]), SomePointIn("({a}->{a,b})^l"), Asserted, Classes),
    row("space.connected-non-empty.rll", "K connected and non-empty iff some {*}→K ∈ (∅→{*})^rll", Space(&[SpaceProperty::Connected, SpaceProperty::NonEmpty]), SomePointIn("({}->{*})^rll"), Experimental(MULTI), Classes),
    row("space.empty", "K empty iff K→{*} ∈ (∅→{*})^ll", Space(&[SpaceProperty::Empty]), TerminalIn("({}->{*})^ll"), Experimental(MULTI), Classes),
    row("space.discrete", "D discrete iff ∅→D ∈ (∅→{*})^rl", Space(&[SpaceProperty::Discrete]), InitialIn("({}->{*})^rl"), Experimental(MULTI), Classes),
    row("space.antidiscrete.rr", "D antidiscrete iff D→{*} ∈ ({a,b}→{a=b})^rr", Space(&[SpaceProperty::Antidiscrete]), TerminalIn("({a,b}->{a=b})^rr"), Experimental(MULTI), Classes),
    row("space.antidiscrete.lr", "D antidiscrete iff D→{*} ∈ ({a↔b}→{a=b})^lr", Space(&[SpaceProperty::Antidiscrete]), TerminalIn("({a<->b}->{a=b})^lr"), Experimental(MULTI), Classes),
    row("space.totally-disconnected", "K totally disconnected and non-empty iff K→{*} ∈ ({a,b}→{a=b})^lr", Space(&[SpaceProperty::TotallyDisconnected, SpaceProperty::NonEmpty]), TerminalIn("({a,b}->{a=b})^lr"), Experimental(MULTI), Classes),
    // separation axioms
    row("sep.t0", "T0: {x↔y}→{x=y} ⧄ X→{*}", Space(&[SpaceProperty::T0]), AgainstTerminal("{x<->y}->{x=y}"), Asserted, Separation),
    row("sep.r0", "R0: {x↘y}→{x↔y} ⧄ X→{*}", Space(&[SpaceProperty::R0]), AgainstTerminal("{x->y}->{x<->y}"), Asserted, Separation),
    row("sep.t1", "T1: {x↘y}→{x=y} ⧄ X→{*}", Space(&[SpaceProperty::T1]), AgainstTerminal("{x->y}->{x=y}"), Asserted, Separation),
    row("sep.hausdorff", "T2: {x,y}↪X ⧄ {x↘X↙y}→{x=X=y}", Space(&[SpaceProperty::Hausdorff]), PairsLift("{x->X<-y}->{x=X=y}"), Asserted, Separation),
    row("sep.urysohn", "T2½: {x,y}↪X ⧄ {x↘x'↙X↘y'↙y}→{x=x'=X=y'=y}", Space(&[SpaceProperty::Urysohn]), PairsLift("{x->x'<-X->y'<-y}->{x=x'=X=y'=y}"), Asserted, Separation),
    row("sep.regular", "regular: {x}→X ⧄ {x↘X↙U↘F}→{x=X=U↘F}", Space(&[SpaceProperty::Regular]), PointsLift("{x->X<-U->F}->{x=X=U->F}"), Asserted, Separation),
    row("sep.normal", "normal: ∅→X ⧄ {x↙x'↘X↙y'↘y}→{x↙x'=X=y'↘y}", Space(&[SpaceProperty::Normal]), EmptyLifts("{x<-x'->X<-y'->y}->{x<-x'=X=y'->y}"), Asserted, Separation),
    row("sep.extremally-disconnected", "extremally disconnected: ∅→X ⧄ {U↘Z',Z↙V}→{U↘Z'=Z↙V}", Space(&[SpaceProperty::ExtremallyDisconnected]), EmptyLifts("{U->Z', Z<-V}->{U->Z'=Z<-V}"), Asserted, Separation),
    row("sep.extremally-disconnected.alt", "extremally disconnected: ∅→X ⧄ {U↘Z',Z↙V}→{Z'=Z}", Space(&[SpaceProperty::ExtremallyDisconnected]), EmptyLifts("{U->Z', Z<-V}->{Z'=Z}"), Asserted, Separation),
    row("sep.completely-normal", "completely normal: ∅→X ⧄ {X↙A↔U↘U'↙W↘V'↙V↔B↘X}→{U=U',V'=V}", Space(&[SpaceProperty::CompletelyNormal]), EmptyLifts("{X<-A<->U->U'<-W->V'<-V<->B->X}->{U=U', V'=V}"), Experimental("the formula is marked as doubtful where it is stated"), Separation),
];

/// The full table, in a fixed order.
pub fn lifting_dictionary() -> &'static [Entry] {
    ENTRIES
}

pub fn entry(id: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.id == id)
}

/// Result of applying a formula to one space or map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub holds: bool,
    pub kind: VerdictKind,
    pub definitive: bool,
    /// Why the formula fails, rendered.
    pub witness: Option<String>,
}

impl Outcome {
    fn exact(holds: bool, witness: Option<String>) -> Self {
        let kind = if holds { VerdictKind::ExactYes } else { VerdictKind::ExactNo };
        Outcome { holds, kind, definitive: true, witness }
    }
}

enum Compiled<'c> {
    Class(PreparedClass<'c, FinTop>),
    Gadget(SpaceMap),
}

/// A row made executable against one category instance.
pub struct CompiledEntry<'c> {
    pub entry: &'static Entry,
    compiled: Compiled<'c>,
}

impl Entry {
    pub fn is_multi_step(&self) -> bool {
        self.formula.is_class()
            && parse_class_expr(self.formula.text()).map(|e| e.steps.len() > 1).unwrap_or(false)
    }

    pub fn compile<'c>(
        &'static self,
        cat: &'c FinTop,
        opts: &EvalOptions<'_, FinTop>,
    ) -> Result<CompiledEntry<'c>, EvalError> {
        let text = self.formula.text();
        let compiled = if self.formula.is_class() {
            let expr = parse_class_expr(text).unwrap_or_else(|e| panic!("dictionary row {}: {e}", self.id));
            Compiled::Class(prepare(cat, &expr, opts)?)
        } else {
            Compiled::Gadget(parse_map(text).unwrap_or_else(|e| panic!("dictionary row {}: {e}", self.id)))
        };
        Ok(CompiledEntry { entry: self, compiled })
    }

    /// The direct predicate for a space row.
    pub fn oracle_space(&self, x: &FiniteSpace) -> bool {
        match self.subject {
            Space(props) => props.iter().all(|&p| oracle::space_has(x, p)),
            Map(_) => panic!("row {} is about maps", self.id),
        }
    }

    pub fn oracle_map(&self, f: &SpaceMap) -> bool {
        match self.subject {
            Map(t) => t.eval(f),
            Space(_) => panic!("row {} is about spaces", self.id),
        }
    }
}

fn class_outcome(class: &PreparedClass<'_, FinTop>, h: &SpaceMap) -> Outcome {
    let v = class.member(h);
    let witness = v.witness.as_ref().map(|w| format!("fails against {}", render_map(&w.against)));
    Outcome { holds: v.is_yes(), kind: v.kind, definitive: v.definitive, witness }
}

impl CompiledEntry<'_> {
    /// How the inner steps were computed; empty for gadget rows.
    pub fn records(&self) -> &[StepRecord] {
        match &self.compiled {
            Compiled::Class(c) => c.records(),
            Compiled::Gadget(_) => &[],
        }
    }

    fn class(&self) -> &PreparedClass<'_, FinTop> {
        match &self.compiled {
            Compiled::Class(c) => c,
            Compiled::Gadget(_) => unreachable!("formula kind checked"),
        }
    }

    fn gadget(&self) -> &SpaceMap {
        match &self.compiled {
            Compiled::Gadget(g) => g,
            Compiled::Class(_) => unreachable!("formula kind checked"),
        }
    }

    /// Applies a space row to `x`.
    pub fn space(&self, x: &Arc<FiniteSpace>) -> Outcome {
        match self.entry.formula {
            TerminalIn(_) => class_outcome(self.class(), &SpaceMap::to_point(x.clone())),
            InitialIn(_) => class_outcome(self.class(), &SpaceMap::from_empty(x.clone())),
            SomePointIn(_) => {
                let pt = Arc::new(FiniteSpace::point());
                let mut last = Outcome::exact(false, Some("no point".into()));
                for p in 0..x.len() {
                    let inc = SpaceMap::new(pt.clone(), x.clone(), vec![p]).expect("a point maps anywhere");
                    let o = class_outcome(self.class(), &inc);
                    if o.holds {
                        return o;
                    }
                    last = o;
                }
                last
            }
            EmptyLifts(_) => {
                let r = lift_maps(&SpaceMap::from_empty(x.clone()), self.gadget());
                let w = r.counterexample().map(|sq| format!("no lift of {}", render_map(&sq.bottom)));
                Outcome::exact(r.holds, w)
            }
            PointsLift(_) => {
                let pt = Arc::new(FiniteSpace::point());
                for p in 0..x.len() {
                    let inc = SpaceMap::new(pt.clone(), x.clone(), vec![p]).expect("a point maps anywhere");
                    let r = lift_maps(&inc, self.gadget());
                    if let Some(sq) = r.counterexample() {
                        return Outcome::exact(false, Some(format!("point {} with {}", x.label(p), render_map(&sq.bottom))));
                    }
                }
                Outcome::exact(true, None)
            }
            PairsLift(_) => {
                let pair = Arc::new(FiniteSpace::discrete(2));
                for p in 0..x.len() {
                    for q in 0..x.len() {
                        if p == q {
                            continue;
                        }
                        let inc = SpaceMap::new(pair.clone(), x.clone(), vec![p, q]).expect("discrete domain");
                        let r = lift_maps(&inc, self.gadget());
                        if r.counterexample().is_some() {
                            return Outcome::exact(false, Some(format!("points {}, {}", x.label(p), x.label(q))));
                        }
                    }
                }
                Outcome::exact(true, None)
            }
            AgainstTerminal(_) => {
                let r = lift_maps(self.gadget(), &SpaceMap::to_point(x.clone()));
                let w = r.counterexample().map(|sq| format!("no lift of {}", render_map(&sq.top)));
                Outcome::exact(r.holds, w)
            }
            MapIn(_) => panic!("row {} is about maps", self.entry.id),
        }
    }

    /// Applies a map row to `h`.
    pub fn map(&self, h: &SpaceMap) -> Outcome {
        match self.entry.formula {
            MapIn(_) => class_outcome(self.class(), h),
            _ => panic!("row {} is about spaces", self.entry.id),
        }
    }
}

/// The asserted one-step map rows as (unverified) oracles, for substitution into inner
/// steps once [`OracleSet::verify`] has confirmed them.
pub fn map_oracles() -> OracleSet<FinTop> {
    let mut set = OracleSet::new();
    for e in ENTRIES {
        if let (Asserted, Map(t), MapIn(text)) = (e.status, e.subject, e.formula) {
            let expr = parse_class_expr(text).expect("dictionary rows parse");
            if expr.steps.len() == 1 && expr.steps[0].bound.is_none() {
                set.register(e.id, expr, move |h: &SpaceMap| t.eval(h));
            }
        }
    }
    set
}

/// Subsets `A`, `B` of `X` given as masks, for the separation preliminaries.
pub fn disjoint_pairs(x: &FiniteSpace) -> Vec<(u64, u64)> {
    let all = x.all();
    let mut out = Vec::new();
    for a in x.subsets() {
        let rest = all & !a;
        let mut b = rest;
        loop {
            out.push((a, b));
            if b == 0 {
                break;
            }
            b = (b - 1) & rest;
        }
    }
    out.sort();
    out
}
