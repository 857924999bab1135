use std::fmt;

use serde::Serialize;

use super::{Side, Square};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictKind {
    ExactYes,
    ExactNo,
    BoundedYes,
    BoundedNo,
}

impl VerdictKind {
    pub fn is_yes(self) -> bool {
        matches!(self, VerdictKind::ExactYes | VerdictKind::BoundedYes)
    }

    pub fn is_exact(self) -> bool {
        matches!(self, VerdictKind::ExactYes | VerdictKind::ExactNo)
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::ExactYes => "ExactYes",
            VerdictKind::ExactNo => "ExactNo",
            VerdictKind::BoundedYes => "BoundedYes",
            VerdictKind::BoundedNo => "BoundedNo",
        })
    }
}

/// How a computed (truncated) morphism set relates to the class it stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Approx {
    Exact,
    /// Every computed member is a true member.
    Under,
    /// Every true member (within the listed sizes) was computed, possibly with extras.
    Over,
    Unknown,
}

impl Approx {
    /// Effect of an orthogonal whose bound is part of the expression: the operator is
    /// antitone, so errors flip direction.
    pub fn through_explicit_bound(self) -> Approx {
        match self {
            Approx::Exact => Approx::Exact,
            Approx::Under => Approx::Over,
            Approx::Over => Approx::Under,
            Approx::Unknown => Approx::Unknown,
        }
    }

    /// Effect of an orthogonal truncated to a working bound: the truncation drops members.
    pub fn through_truncation(self) -> Approx {
        match self {
            Approx::Exact | Approx::Over => Approx::Under,
            Approx::Under | Approx::Unknown => Approx::Unknown,
        }
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Approx::Exact => "exact",
            Approx::Under => "under-approximation",
            Approx::Over => "over-approximation",
            Approx::Unknown => "unknown direction",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum StepSource {
    /// Computed by lifting checks against the previous set.
    Lifting,
    /// Listed by a verified oracle predicate in place of the steps up to this one.
    Oracle(String),
}

/// How one inner step of an expression was materialised.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub side: Side,
    /// Largest endpoint size enumerated for this step.
    pub max_size: usize,
    pub source: StepSource,
    pub approx: Approx,
    /// Number of representatives found.
    pub members: usize,
}

impl fmt::Display for StepRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "^{} sizes <= {}: {} representatives, {}", self.side, self.max_size, self.members, self.approx)?;
        if let StepSource::Oracle(name) = &self.source {
            write!(f, " (oracle: {name})")?;
        }
        Ok(())
    }
}

/// Refutation of membership: `against` is a member of the opposing set and
/// `square` a commuting square with no diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<M> {
    pub against: M,
    pub square: Square<M>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict<M> {
    pub kind: VerdictKind,
    /// The answer holds for the unbounded class. Always true for exact verdicts and
    /// for `BoundedNo` over an under-approximated opposing set.
    pub definitive: bool,
    pub steps: Vec<StepRecord>,
    pub witness: Option<Witness<M>>,
    pub note: Option<String>,
}

impl<M> Verdict<M> {
    pub fn is_yes(&self) -> bool {
        self.kind.is_yes()
    }
}
