//! Mechanical re-verification of the computational claims behind the
//! classification of graphs with at most two trivial distance ideals.
//!
//! Every routine returns a [`LemmaReport`]: a list of checks, each comparing
//! an exactly computed object with an expected value. Expected values come
//! from the published statements ([`Source::Paper`]), from independent
//! arithmetic ([`Source::Derived`]) or, where the statement gives no value,
//! from this repository's own golden record ([`Source::DerivedGolden`]).
//! A Gröbner budget running out makes a check inconclusive, never a pass.

mod lemmas;
pub mod transcripts;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Atlas, Graph};
use crate::ideals::IdealOptions;
use crate::scan::{corpus, verify_forbidden_contrapositive, ContrapositiveSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Paper,
    Derived,
    DerivedGolden,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub description: String,
    pub source: Source,
    pub expected: String,
    pub computed: String,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub checks: Vec<Check>,
    /// True iff every check passed.
    pub passed: bool,
    pub elapsed_ms: f64,
}

impl LemmaReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.outcome == Outcome::Fail)
    }

    pub fn inconclusive(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.outcome == Outcome::Inconclusive)
    }
}

/// Accumulates checks for one report.
pub(crate) struct Recorder {
    lemma: String,
    checks: Vec<Check>,
    start: Instant,
}

impl Recorder {
    pub(crate) fn new(lemma: &str) -> Recorder {
        Recorder { lemma: lemma.to_string(), checks: Vec::new(), start: Instant::now() }
    }

    /// Records `computed == expected`; a budget error is inconclusive and
    /// any other error a failure.
    pub(crate) fn check(
        &mut self,
        description: impl Into<String>,
        source: Source,
        expected: impl Into<String>,
        computed: Result<String>,
    ) {
        let expected = expected.into();
        let (computed, outcome) = match computed {
            Ok(c) => {
                let outcome = if c == expected { Outcome::Pass } else { Outcome::Fail };
                (c, outcome)
            }
            Err(Error::BudgetExceeded(b)) => (format!("budget of {b} pair reductions exhausted"), Outcome::Inconclusive),
            Err(e) => (format!("error: {e}"), Outcome::Fail),
        };
        self.checks.push(Check { description: description.into(), source, expected, computed, outcome });
    }

    pub(crate) fn finish(self) -> LemmaReport {
        LemmaReport {
            passed: self.checks.iter().all(|c| c.outcome == Outcome::Pass),
            lemma: self.lemma,
            checks: self.checks,
            elapsed_ms: self.start.elapsed().as_secs_f64() * 1e3,
        }
    }
}

/// Identifiers accepted by [`Harness::lemma`], in report order.
pub const LEMMA_IDS: [&str; 10] =
    ["diameter2", "bull", "G65", "5pan", "G67", "G69", "cotwinhouse", "G612", "G615", "odd-holes"];

/// Verification context: the atlas the graphs are read from and the ideal
/// options (budget, evaluation seed).
#[derive(Debug, Clone)]
pub struct Harness {
    pub atlas: Atlas,
    pub opts: IdealOptions,
    /// Odd cycles `C_{2n+1}` are checked for `n = 4..=odd_hole_order`.
    pub odd_hole_order: usize,
    /// The theorem check of [`Harness::run_all`] covers connected graphs on
    /// at most this many vertices.
    pub theorem_order: usize,
}

impl Default for Harness {
    fn default() -> Self {
        Harness { atlas: Atlas::standard(), opts: IdealOptions::default(), odd_hole_order: 10, theorem_order: 6 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremCheck {
    pub order: usize,
    /// Extra graphs beyond the enumerated corpus, by graph6.
    pub extra_graphs: Vec<String>,
    #[serde(flatten)]
    pub summary: ContrapositiveSummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConformanceReport {
    pub lemmas: Vec<LemmaReport>,
    pub theorem: TheoremCheck,
    pub failed_checks: usize,
    pub inconclusive_checks: usize,
    /// No failed and no inconclusive check, no theorem violation and no
    /// inconclusive theorem entry.
    pub passed: bool,
}

impl ConformanceReport {
    pub fn has_failures(&self) -> bool {
        self.failed_checks > 0 || !self.theorem.summary.violations.is_empty()
    }
}

/// A 7-cycle with a pendant vertex: contains an odd hole.
fn c7_with_pendant() -> Graph {
    Graph::cycle(7).with_new_vertex(1).expect("small graph")
}

impl Harness {
    pub fn with_budget(budget: u64) -> Harness {
        let mut h = Harness::default();
        h.opts.budget = budget;
        h
    }

    /// Runs one lemma routine by identifier (see [`LEMMA_IDS`]).
    pub fn lemma(&self, id: &str) -> Result<LemmaReport> {
        Ok(match id {
            "diameter2" => self.verify_diameter2_members(),
            "bull" => self.verify_bull(),
            "G65" => self.verify_g65(),
            "5pan" => self.verify_5pan(),
            "G67" => self.verify_g67(),
            "G69" => self.verify_g69(),
            "cotwinhouse" => self.verify_cotwinhouse(),
            "G612" => self.verify_g612(),
            "G615" => self.verify_g615(),
            "odd-holes" => self.verify_odd_holes(self.odd_hole_order),
            _ => return Err(Error::UnknownLemma(id.to_string())),
        })
    }

    /// The contrapositive of the forbidden-subgraph theorem on the corpus
    /// plus a few larger graphs with odd holes.
    pub fn theorem_check(&self) -> Result<TheoremCheck> {
        let mut graphs = corpus(self.theorem_order)?;
        let extra = vec![c7_with_pendant(), Graph::cycle(9)];
        let extra_graphs = extra.iter().map(crate::graph::emit_graph6).collect::<Result<_>>()?;
        graphs.extend(extra);
        let summary = verify_forbidden_contrapositive(&graphs, &self.atlas, &self.opts)?;
        Ok(TheoremCheck { order: self.theorem_order, extra_graphs, summary })
    }

    /// Every lemma report plus the theorem check.
    pub fn run_all(&self) -> Result<ConformanceReport> {
        let lemmas: Vec<LemmaReport> = LEMMA_IDS.par_iter().map(|id| self.lemma(id)).collect::<Result<_>>()?;
        let theorem = self.theorem_check()?;
        let failed_checks = lemmas.iter().map(|l| l.failures().count()).sum();
        let inconclusive_checks = lemmas.iter().map(|l| l.inconclusive().count()).sum();
        let passed = failed_checks == 0
            && inconclusive_checks == 0
            && theorem.summary.passed()
            && theorem.summary.inconclusive.is_empty();
        Ok(ConformanceReport { lemmas, theorem, failed_checks, inconclusive_checks, passed })
    }
}

/// [`Harness::run_all`] with the standard atlas and the given budget.
pub fn run_all(budget: u64) -> Result<ConformanceReport> {
    Harness::with_budget(budget).run_all()
}
