//! The verification harness: a registry of laws, grouped in suites, and their reports.
//!
//! Every law compares a lifting-based computation with a direct predicate (or checks a
//! general fact about orthogonals) exhaustively up to a size bound. Asserted laws decide
//! the exit status; experimental laws are computed and reported only.

mod checks;
mod registry;

use std::fmt::{self, Write as _};

use serde::Serialize;

pub use registry::{registry, Check, Law, LawStatus};

/// Default bound of `verify`, and the limits with and without `--extended`.
pub const DEFAULT_BOUND: usize = 4;
pub const MAX_BOUND: usize = 5;
pub const MAX_EXTENDED_BOUND: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Suite {
    #[serde(rename = "topology")]
    Topology,
    #[serde(rename = "appendixA")]
    AppendixA,
    #[serde(rename = "closure")]
    Closure,
    #[serde(rename = "groups")]
    Groups,
    #[serde(rename = "experimental")]
    Experimental,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Topology, Suite::AppendixA, Suite::Closure, Suite::Groups, Suite::Experimental];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Topology => "topology",
            Suite::AppendixA => "appendixA",
            Suite::Closure => "closure",
            Suite::Groups => "groups",
            Suite::Experimental => "experimental",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name().eq_ignore_ascii_case(name))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordStatus {
    Pass,
    Fail,
    Experimental,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub left: String,
    pub right: String,
}

/// The outcome of one law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawRecord {
    pub id: String,
    pub citation: String,
    pub status: RecordStatus,
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
    /// Extra lines for the text report: disagreement counts, computed extensions, reasons.
    #[serde(skip)]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub bound: usize,
    pub laws: Vec<LawRecord>,
}

impl Report {
    /// No asserted law failed.
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.status != RecordStatus::Fail)
    }

    pub fn count(&self, status: RecordStatus) -> usize {
        self.laws.iter().filter(|l| l.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} at bound {} (liftkit {})", self.suite, self.bound, env!("CARGO_PKG_VERSION"));
        for law in &self.laws {
            let tag = match law.status {
                RecordStatus::Pass => "PASS",
                RecordStatus::Fail => "FAIL",
                RecordStatus::Experimental => "EXPT",
            };
            let _ = writeln!(out, "{tag}  {:<40} checked {:>7}  {}", law.id, law.checked, law.citation);
            if let Some(c) = &law.counterexample {
                let _ = writeln!(out, "        counterexample: {}  |  {}", c.left, c.right);
            }
            for n in &law.notes {
                let _ = writeln!(out, "        {n}");
            }
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} experimental",
            self.count(RecordStatus::Pass),
            self.count(RecordStatus::Fail),
            self.count(RecordStatus::Experimental)
        );
        out
    }
}

/// Runs every law of `suite` at `bound`, in registry order.
pub fn run_suite(suite: Suite, bound: usize) -> Report {
    let ctx = checks::Context::new(bound);
    let laws = registry()
        .into_iter()
        .filter(|l| l.suite == suite)
        .map(|law| run_law(&ctx, &law))
        .collect();
    Report { suite, bound, laws }
}

/// Runs a single law by id.
pub fn run_law_by_id(id: &str, bound: usize) -> Option<LawRecord> {
    let law = registry().into_iter().find(|l| l.id == id)?;
    Some(run_law(&checks::Context::new(bound), &law))
}

fn run_law(ctx: &checks::Context, law: &Law) -> LawRecord {
    let out = ctx.run(&law.check);
    let status = match law.status {
        LawStatus::Experimental(_) => RecordStatus::Experimental,
        LawStatus::Asserted if out.failures == 0 => RecordStatus::Pass,
        LawStatus::Asserted => RecordStatus::Fail,
    };
    let mut notes = Vec::new();
    if let LawStatus::Experimental(why) = law.status {
        notes.push(format!("not asserted: {why}"));
    }
    if out.failures > 0 {
        notes.push(format!("{} of {} disagree", out.failures, out.checked));
    }
    notes.extend(out.notes);
    LawRecord {
        id: law.id.clone(),
        citation: law.citation.clone(),
        status,
        checked: out.checked,
        counterexample: out.first.map(|(left, right)| Counterexample { left, right }),
        notes,
    }
}
