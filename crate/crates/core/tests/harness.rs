use distideal::graph::{Atlas, Graph};
use distideal::harness::{Harness, Outcome, Source, LEMMA_IDS};

fn with_bull(edges: &[(usize, usize)]) -> Harness {
    let bull = Graph::from_edges(5, edges).unwrap();
    Harness { atlas: Atlas::standard().with_override("bull", bull).unwrap(), ..Harness::default() }
}

#[test]
fn every_lemma_routine_runs() {
    let h = Harness::default();
    for id in LEMMA_IDS {
        let r = h.lemma(id).unwrap();
        assert_eq!(r.lemma, id);
        assert!(!r.checks.is_empty(), "{id}");
        assert_eq!(r.inconclusive().count(), 0, "{id}");
    }
    assert!(h.lemma("G99").is_err());
}

#[test]
fn lemma_routines_pass_except_the_misquoted_c7_minor() {
    let h = Harness::default();
    for id in LEMMA_IDS {
        let r = h.lemma(id).unwrap();
        let failures: Vec<_> = r.failures().map(|c| c.description.clone()).collect();
        if id == "odd-holes" {
            assert_eq!(failures.len(), 1, "{failures:?}");
            assert!(failures[0].starts_with("±det(M[[3, 4, 5],[0, 1, 2]])"));
        } else {
            assert!(r.passed, "{id}: {failures:?}");
        }
    }
}

#[test]
fn a_corrupted_atlas_entry_fails_the_bull_routine() {
    // Both pendant edges on one triangle vertex: the cricket, not the bull.
    let h = with_bull(&[(0, 4), (1, 4), (2, 3), (2, 4), (3, 4)]);
    let r = h.verify_bull();
    assert!(!r.passed);
    assert!(r.failures().any(|c| c.description.contains("bull-M is D(bull, X)")));
}

#[test]
fn an_exhausted_budget_is_inconclusive_never_a_pass() {
    let h = Harness::with_budget(1);
    let r = h.lemma("G67").unwrap();
    assert!(!r.passed);
    let inconclusive: Vec<_> = r.inconclusive().collect();
    assert!(!inconclusive.is_empty());
    for c in inconclusive {
        assert!(c.computed.contains("budget"), "{}", c.computed);
    }
    let full = Harness::default().lemma("G67").unwrap();
    for (small, big) in r.checks.iter().zip(&full.checks) {
        if small.outcome == Outcome::Pass {
            assert_eq!(big.outcome, Outcome::Pass, "{}", small.description);
        }
    }
}

#[test]
fn golden_checks_are_labelled() {
    let r = Harness::default().lemma("diameter2").unwrap();
    assert_eq!(r.checks.iter().filter(|c| c.source == Source::DerivedGolden).count(), 16);
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["checks"][0]["source"], "paper");
}

#[test]
fn theorem_check_on_small_corpus() {
    let h = Harness { theorem_order: 5, ..Harness::default() };
    let t = h.theorem_check().unwrap();
    assert!(t.summary.passed());
    assert!(t.summary.inconclusive.is_empty());
    assert_eq!(t.extra_graphs.len(), 2);
}
