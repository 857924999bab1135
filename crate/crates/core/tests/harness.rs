use std::collections::BTreeSet;

use liftkit_core::harness::{registry, run_law_by_id, run_suite, LawStatus, RecordStatus, Suite};
use serde_json::Value;

fn keys(v: &Value) -> BTreeSet<&str> {
    v.as_object().expect("an object").keys().map(String::as_str).collect()
}

#[test]
fn reports_are_deterministic_across_thread_counts() {
    for suite in [Suite::Topology, Suite::Closure, Suite::Groups] {
        let a = run_suite(suite, 3).to_json();
        let b = run_suite(suite, 3).to_json();
        assert_eq!(a, b, "{suite}");
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let c = pool.install(|| run_suite(suite, 3).to_json());
        assert_eq!(a, c, "{suite} on one thread");
    }
}

#[test]
fn json_has_exactly_the_report_fields() {
    let report = run_suite(Suite::AppendixA, 3);
    let v: Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(keys(&v), BTreeSet::from(["suite", "bound", "laws"]));
    assert_eq!(v["suite"], "appendixA");
    assert_eq!(v["bound"], 3);
    let laws = v["laws"].as_array().unwrap();
    assert!(!laws.is_empty());
    for law in laws {
        assert_eq!(keys(law), BTreeSet::from(["id", "citation", "status", "checked", "counterexample"]));
        assert!(matches!(law["status"].as_str(), Some("pass" | "fail" | "experimental")));
        let c = &law["counterexample"];
        assert!(c.is_null() || keys(c) == BTreeSet::from(["left", "right"]));
    }
}

#[test]
fn ids_are_unique_and_each_belongs_to_one_suite() {
    let laws = registry();
    let ids: BTreeSet<&str> = laws.iter().map(|l| l.id.as_str()).collect();
    assert_eq!(ids.len(), laws.len());
    for suite in Suite::ALL {
        assert_eq!(Suite::from_name(suite.name()), Some(suite));
        assert!(laws.iter().any(|l| l.suite == suite), "{suite} is empty");
    }
}

#[test]
fn experimental_laws_say_why() {
    for law in registry() {
        if let LawStatus::Experimental(why) = law.status {
            assert!(!why.trim().is_empty(), "{}", law.id);
        }
        if law.suite == Suite::Experimental {
            assert!(matches!(law.status, LawStatus::Experimental(_)), "{} is asserted in the experimental suite", law.id);
        }
    }
}

#[test]
fn asserted_laws_pass_at_small_bounds() {
    for suite in [Suite::Topology, Suite::AppendixA, Suite::Closure, Suite::Groups] {
        let report = run_suite(suite, 3);
        assert!(report.passed(), "{}", report.to_text());
        assert!(report.count(RecordStatus::Pass) > 0);
        let text = report.to_text();
        assert!(text.starts_with(&format!("suite {suite} at bound 3")));
    }
}

#[test]
fn single_laws_run_by_id() {
    let r = run_law_by_id("space.t0", 3).unwrap();
    assert_eq!(r.status, RecordStatus::Pass);
    assert!(r.checked > 0);
    assert!(r.counterexample.is_none());
    assert!(run_law_by_id("no.such.law", 3).is_none());
    let e = run_law_by_id("groups.2-group", 3).unwrap();
    assert_eq!(e.status, RecordStatus::Experimental);
    assert!(e.notes.iter().any(|n| n.starts_with("not asserted:")));
}
