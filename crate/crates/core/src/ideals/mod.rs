//! Distance ideals, triviality certificates, Φ(G) and Λ_k membership.
//!
//! Triviality of `I_i(G)` is decided in layers, cheapest first:
//!
//! 1. a constant minor equal to ±1 (over ℚ: any nonzero constant minor);
//! 2. constant minors whose gcd is 1;
//! 3. evaluation at `X = 0` and at pseudorandom points in `{-3..3}^n`: the
//!    gcd of the evaluated `i`-minors is `∏_{j<=i} f_j` of `D(G, d)`, so a
//!    gcd other than 1 (over ℚ: gcd 0) proves the ideal proper;
//! 4. over ℤ, a Gröbner basis modulo a large prime: an ideal proper modulo
//!    a prime is proper over ℤ, and the modular completion has no
//!    coefficient growth;
//! 5. a Gröbner basis over the target domain, which decides the remaining
//!    cases unless its budget runs out.
//!
//! Constant minors are exactly those whose row and column sets are disjoint
//! (no diagonal entry is selected); they are computed over the integers.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::combin::lex_subsets;
use crate::error::{Error, Result};
use crate::graph::{bits, emit_graph6, Graph};
use crate::groebner::{modular_groebner, rational_groebner, strong_groebner, Domain, DEFAULT_PRIME, GroebnerBasis, MonomialOrder, DEFAULT_BUDGET};
use crate::int::Int;
use crate::linalg::{minors_on_rows, snf, IntMatrix};
use crate::poly::{generalized_distance_matrix, Poly};

/// Seed of the evaluation points unless overridden.
pub const DEFAULT_SEED: u64 = 0x00D1_57A7;

/// Number of pseudorandom evaluation points besides `X = 0`.
pub const RANDOM_POINTS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealOptions {
    /// Pair-reduction budget of each Gröbner completion.
    pub budget: u64,
    pub seed: u64,
    pub random_points: usize,
    pub domain: Domain,
}

impl Default for IdealOptions {
    fn default() -> Self {
        IdealOptions { budget: DEFAULT_BUDGET, seed: DEFAULT_SEED, random_points: RANDOM_POINTS, domain: Domain::Integers }
    }
}

impl IdealOptions {
    pub fn over(mut self, domain: Domain) -> Self {
        self.domain = domain;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    Trivial,
    NonTrivial,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The minor on `rows` x `cols` is the constant `value` (±1, or nonzero over ℚ).
    UnitMinor { rows: Vec<usize>, cols: Vec<usize>, value: Int },
    /// Constant minors whose gcd is 1.
    ConstantGcdOne { constants: Vec<Int> },
    /// Every generator evaluated at `assignment` is divisible by `gcd` (≠ 1).
    EvaluationObstruction { assignment: Vec<Int>, gcd: Int },
    GroebnerContainsOne { pairs_reduced: u64 },
    /// A Gröbner basis over `domain` without 1; properness modulo a prime
    /// implies properness over ℤ.
    GroebnerProper { domain: Domain, basis_size: usize, constant: Option<Int>, basis: Vec<String> },
    BudgetExceeded { budget: u64 },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::UnitMinor { .. } => "UnitMinor",
            Certificate::ConstantGcdOne { .. } => "ConstantGcdOne",
            Certificate::EvaluationObstruction { .. } => "EvaluationObstruction",
            Certificate::GroebnerContainsOne { .. } => "GroebnerContainsOne",
            Certificate::GroebnerProper { .. } => "GroebnerProper",
            Certificate::BudgetExceeded { .. } => "BudgetExceeded",
        }
    }

    pub fn data(&self) -> Value {
        match self {
            Certificate::UnitMinor { rows, cols, value } => json!({"rows": rows, "cols": cols, "value": value}),
            Certificate::ConstantGcdOne { constants } => json!({"constants": constants}),
            Certificate::EvaluationObstruction { assignment, gcd } => json!({"assignment": assignment, "gcd": gcd}),
            Certificate::GroebnerContainsOne { pairs_reduced } => json!({"pairs_reduced": pairs_reduced}),
            Certificate::GroebnerProper { domain, basis_size, constant, basis } => {
                json!({"domain": domain, "basis_size": basis_size, "constant": constant, "basis": basis})
            }
            Certificate::BudgetExceeded { budget } => json!({"budget": budget}),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialityVerdict {
    pub decision: Decision,
    pub certificate: Certificate,
}

impl TrivialityVerdict {
    fn trivial(certificate: Certificate) -> Self {
        TrivialityVerdict { decision: Decision::Trivial, certificate }
    }

    fn non_trivial(certificate: Certificate) -> Self {
        TrivialityVerdict { decision: Decision::NonTrivial, certificate }
    }

    pub fn is_trivial(&self) -> bool {
        self.decision == Decision::Trivial
    }
}

impl Serialize for TrivialityVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        json!({
            "decision": self.decision,
            "certificate_kind": self.certificate.kind(),
            "certificate_data": self.certificate.data(),
        })
        .serialize(s)
    }
}

/// One line of a verdict report.
#[derive(Debug, Clone, Serialize)]
pub struct VerdictRecord {
    pub graph: String,
    pub i: usize,
    pub decision: Decision,
    pub certificate_kind: &'static str,
    pub certificate_data: Value,
    pub elapsed_ms: f64,
}

fn check_index(g: &Graph, i: usize) -> Result<()> {
    if i == 0 || i > g.n() {
        return Err(Error::IndexOutOfRange { index: i, max: g.n() });
    }
    Ok(())
}

/// The `i x i` minors of `D(G, X)`, in lexicographic (rows, cols) order.
pub fn distance_ideal_generators(g: &Graph, i: usize) -> Result<Vec<Poly>> {
    check_index(g, i)?;
    generalized_distance_matrix(g)?.minors(i)
}

enum ConstantMinors {
    /// A minor that is a unit of the coefficient domain.
    Unit { rows: Vec<usize>, cols: Vec<usize>, value: Int },
    /// Distinct absolute values of the nonzero constant minors, ascending.
    Values(Vec<Int>),
}

/// Scans the constant minors: rows `R` and columns disjoint from `R`, in
/// lexicographic order, stopping at the first unit.
fn constant_minors(d: &IntMatrix, i: usize, is_unit: impl Fn(&Int) -> bool) -> ConstantMinors {
    let n = d.rows();
    let mut values = std::collections::BTreeSet::new();
    if 2 * i > n {
        return ConstantMinors::Values(Vec::new());
    }
    let local: Vec<usize> = (0..i).collect();
    for rows in lex_subsets(n, i) {
        let comp: Vec<usize> = (0..n).filter(|c| !rows.contains(c)).collect();
        let table = minors_on_rows(&d.submatrix(&rows, &comp), &local);
        for local_cols in lex_subsets(comp.len(), i) {
            let mask = local_cols.iter().fold(0u64, |m, &c| m | (1u64 << c));
            let value = &table[&mask];
            if is_unit(value) {
                let cols = bits(mask).map(|c| comp[c]).collect();
                return ConstantMinors::Unit { rows, cols, value: value.clone() };
            }
            if !value.is_zero() {
                values.insert(value.abs());
            }
        }
    }
    ConstantMinors::Values(values.into_iter().collect())
}

/// `D(G) + diag(d)`.
fn evaluated(d: &IntMatrix, point: &[Int]) -> IntMatrix {
    let mut m = d.clone();
    for (k, v) in point.iter().enumerate() {
        let e = m.get(k, k) + v;
        m.set(k, k, e);
    }
    m
}

fn evaluation_points(n: usize, opts: &IdealOptions) -> Vec<Vec<Int>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut points = vec![vec![Int::ZERO; n]];
    for _ in 0..opts.random_points {
        points.push((0..n).map(|_| Int::from(rng.gen_range(-3i64..=3))).collect());
    }
    points
}

/// Sign-normalized, deduplicated nonzero generators.
fn normalized_generators(gens: Vec<Poly>) -> Vec<Poly> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for p in gens {
        if p.is_zero() {
            continue;
        }
        let p = if p.terms()[0].1.is_negative() { -&p } else { p };
        if seen.insert(p.to_string()) {
            out.push(p);
        }
    }
    out
}

/// Decides whether `I_i(G)` is ⟨1⟩ (over ℤ, or over ℚ per `opts.domain`).
pub fn ideal_triviality(g: &Graph, i: usize, opts: &IdealOptions) -> Result<TrivialityVerdict> {
    check_index(g, i)?;
    let d = g.distance_matrix()?;
    let rational = opts.domain == Domain::Rationals;

    let is_unit = |v: &Int| if rational { !v.is_zero() } else { v.is_unit() };
    let values = match constant_minors(&d, i, is_unit) {
        ConstantMinors::Unit { rows, cols, value } => {
            return Ok(TrivialityVerdict::trivial(Certificate::UnitMinor { rows, cols, value }))
        }
        ConstantMinors::Values(v) => v,
    };
    let mut running = Int::ZERO;
    let mut used = Vec::new();
    for v in values {
        let next = running.gcd(&v);
        if next != running {
            used.push(v);
            running = next;
        }
        if running.is_one() {
            return Ok(TrivialityVerdict::trivial(Certificate::ConstantGcdOne { constants: used }));
        }
    }

    for point in evaluation_points(g.n(), opts) {
        let delta = snf(&evaluated(&d, &point), false).delta(i);
        let obstructs = if rational { delta.is_zero() } else { !delta.is_one() };
        if obstructs {
            return Ok(TrivialityVerdict::non_trivial(Certificate::EvaluationObstruction {
                assignment: point,
                gcd: delta,
            }));
        }
    }

    let gens = normalized_generators(distance_ideal_generators(g, i)?);
    let order = MonomialOrder::grevlex(gens[0].ring());
    if !rational {
        match modular_groebner(&gens, &order, DEFAULT_PRIME, opts.budget) {
            Ok(b) if !b.contains_one() => return Ok(TrivialityVerdict::non_trivial(proper(&b))),
            Ok(_) | Err(Error::BudgetExceeded(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let basis = if rational {
        rational_groebner(&gens, &order, opts.budget)
    } else {
        strong_groebner(&gens, &order, opts.budget)
    };
    Ok(match basis {
        Err(Error::BudgetExceeded(budget)) => TrivialityVerdict {
            decision: Decision::Inconclusive,
            certificate: Certificate::BudgetExceeded { budget },
        },
        Err(e) => return Err(e),
        Ok(b) if b.contains_one() => {
            TrivialityVerdict::trivial(Certificate::GroebnerContainsOne { pairs_reduced: b.pairs_reduced() })
        }
        Ok(b) => TrivialityVerdict::non_trivial(proper(&b)),
    })
}

fn proper(b: &GroebnerBasis) -> Certificate {
    Certificate::GroebnerProper {
        domain: b.domain(),
        basis_size: b.generators().len(),
        constant: b.constant(),
        basis: b.display().into_iter().take(8).collect(),
    }
}

/// [`ideal_triviality`] wrapped as a report line.
pub fn verdict_record(g: &Graph, i: usize, opts: &IdealOptions) -> Result<VerdictRecord> {
    let start = Instant::now();
    let v = ideal_triviality(g, i, opts)?;
    Ok(VerdictRecord {
        graph: emit_graph6(g)?,
        i,
        decision: v.decision,
        certificate_kind: v.certificate.kind(),
        certificate_data: v.certificate.data(),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct IndexVerdict {
    pub i: usize,
    #[serde(flatten)]
    pub verdict: TrivialityVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct PhiResult {
    /// Φ(G): trivial indices form the prefix `1..=phi_ideals`. When the run
    /// is incomplete this is a lower bound.
    pub phi_ideals: usize,
    /// φ(G): invariant factors of `D(G)` equal to 1.
    pub phi_snf: usize,
    pub domain: Domain,
    /// False when some index was inconclusive.
    pub complete: bool,
    pub verdicts: Vec<IndexVerdict>,
}

impl PhiResult {
    /// Φ if the ladder completed.
    pub fn value(&self) -> Option<usize> {
        self.complete.then_some(self.phi_ideals)
    }

    pub fn status(&self) -> &'static str {
        if self.complete {
            "complete"
        } else {
            "inconclusive"
        }
    }
}

fn ladder(g: &Graph, opts: &IdealOptions, bound: usize) -> Result<PhiResult> {
    let phi_snf = crate::linalg::phi_unit_count(g)?;
    let mut verdicts = Vec::new();
    let mut phi = 0;
    let mut complete = true;
    for i in 1..=bound {
        let verdict = ideal_triviality(g, i, opts)?;
        let decision = verdict.decision;
        verdicts.push(IndexVerdict { i, verdict });
        match decision {
            Decision::Trivial => phi = i,
            Decision::NonTrivial => break,
            Decision::Inconclusive => {
                complete = false;
                break;
            }
        }
    }
    Ok(PhiResult { phi_ideals: phi, phi_snf, domain: opts.domain, complete, verdicts })
}

/// Φ(G) over ℤ, ascending from `i = 1` and never past `φ(G) + 1`
/// (Φ ≤ φ because `I_i(G, 0)` is generated by `Δ_i(G)`).
pub fn phi_trivial_count(g: &Graph, opts: &IdealOptions) -> Result<PhiResult> {
    let opts = opts.clone().over(Domain::Integers);
    let phi_snf = crate::linalg::phi_unit_count(g)?;
    ladder(g, &opts, (phi_snf + 1).min(g.n()))
}

/// Φ(G) with rational coefficients.
pub fn phi_over_rationals(g: &Graph, opts: &IdealOptions) -> Result<PhiResult> {
    ladder(g, &opts.clone().over(Domain::Rationals), g.n())
}

/// Whether Φ(G) ≤ k, i.e. whether `I_{k+1}` is proper (the ideals are
/// nested, so triviality of `I_{k+1}` is equivalent to Φ ≥ k + 1).
///
/// An inconclusive verdict is returned as [`Error::BudgetExceeded`].
pub fn lambda_membership(g: &Graph, k: usize, opts: &IdealOptions) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if k >= g.n() {
        return Ok(true);
    }
    if opts.domain == Domain::Integers && crate::linalg::phi_unit_count(g)? <= k {
        return Ok(true);
    }
    let v = ideal_triviality(g, k + 1, opts)?;
    match v.decision {
        Decision::Trivial => Ok(false),
        Decision::NonTrivial => Ok(true),
        Decision::Inconclusive => Err(Error::BudgetExceeded(opts.budget)),
    }
}
