//! Corpus enumeration, forbidden-family scans and the corpus-wide checks of
//! the Λ₁ characterizations and of the Λ₂ forbidden-subgraph theorem.

mod canon;

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

pub use canon::{canonical_form, canonical_form_bruteforce};

use crate::error::{Error, Result};
use crate::graph::{
    contains_induced, emit_graph6, find_odd_hole, Atlas, Graph, FORBIDDEN_FAMILY, LAMBDA1_FAMILY,
    LAMBDA1_REAL_FAMILY,
};
use crate::groebner::Domain;
use crate::ideals::{ideal_triviality, lambda_membership, phi_trivial_count, Decision, IdealOptions};

/// Largest order enumerated exhaustively.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Largest order of the reference (all adjacency bitmasks) enumeration.
pub const MAX_BRUTEFORCE_ORDER: usize = 6;

fn sorted_by_graph6(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut keyed: Vec<(String, Graph)> =
        graphs.into_iter().map(|g| (emit_graph6(&g).expect("small graph"), g)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// One canonical representative per isomorphism class of connected graphs
/// on `n` vertices, sorted by graph6.
///
/// Graphs on `k` vertices are obtained from those on `k - 1` by adding a
/// vertex joined to a nonempty subset (every connected graph has a vertex
/// whose removal leaves it connected); duplicates are rejected by canonical
/// form.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::EnumerationRange { n, max: MAX_ENUMERATION_ORDER });
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let next: HashSet<Graph> = level
            .par_iter()
            .flat_map_iter(|g| {
                (1u64..1 << (k - 1)).map(move |mask| canonical_form(&g.with_new_vertex(mask).expect("within range")))
            })
            .collect();
        level = sorted_by_graph6(next);
    }
    Ok(level)
}

/// Reference enumeration: every adjacency bitmask on `n` vertices, filtered
/// to connected graphs and deduplicated by exhaustive canonical form.
pub fn enumerate_connected_bruteforce(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_BRUTEFORCE_ORDER {
        return Err(Error::EnumerationRange { n, max: MAX_BRUTEFORCE_ORDER });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let found: HashSet<Graph> = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|bits| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).expect("valid edges");
            g.is_connected().then(|| canonical_form_bruteforce(&g))
        })
        .collect();
    Ok(sorted_by_graph6(found))
}

/// Largest order accepted by [`enumerate_trees`].
pub const MAX_TREE_ORDER: usize = 16;

/// One canonical representative per isomorphism class of trees on `n`
/// vertices, sorted by graph6. Trees on `k` vertices are the trees on
/// `k - 1` vertices with a leaf attached somewhere.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(Error::EnumerationRange { n, max: MAX_TREE_ORDER });
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let next: HashSet<Graph> = level
            .par_iter()
            .flat_map_iter(|t| (0..k - 1).map(move |v| canonical_form(&t.with_new_vertex(1 << v).expect("within range"))))
            .collect();
        level = sorted_by_graph6(next);
    }
    Ok(level)
}

/// All connected graphs on `1..=n_max` vertices.
pub fn corpus(n_max: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 1..=n_max {
        all.extend(enumerate_connected_graphs(n)?);
    }
    Ok(all)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasHit {
    pub name: String,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanStatus {
    /// Only the structural part was computed.
    Structural,
    Complete,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub graph: String,
    pub atlas_hits: Vec<AtlasHit>,
    pub odd_hole: Option<Vec<usize>>,
    pub phi_ideals: Option<usize>,
    pub phi_snf: Option<usize>,
    /// Φ ≤ 1; unknown when an inconclusive ladder leaves it open.
    pub lambda1: Option<bool>,
    /// Φ ≤ 2.
    pub lambda2: Option<bool>,
    pub status: ScanStatus,
}

impl ScanReport {
    pub fn has_obstruction(&self) -> bool {
        !self.atlas_hits.is_empty() || self.odd_hole.is_some()
    }

    /// A member of Λ₂ contains no forbidden graph and no odd hole.
    pub fn is_consistent(&self) -> bool {
        self.lambda2 != Some(true) || !self.has_obstruction()
    }
}

/// Induced copies of the named atlas graphs and an odd hole, if any.
pub fn scan_family(g: &Graph, atlas: &Atlas, names: &[&str]) -> Result<ScanReport> {
    let mut atlas_hits = Vec::new();
    for &name in names {
        if let Some(witness) = contains_induced(g, atlas.get(name)?) {
            atlas_hits.push(AtlasHit { name: name.to_string(), witness });
        }
    }
    Ok(ScanReport {
        graph: emit_graph6(g)?,
        atlas_hits,
        odd_hole: find_odd_hole(g),
        phi_ideals: None,
        phi_snf: None,
        lambda1: None,
        lambda2: None,
        status: ScanStatus::Structural,
    })
}

/// Structural scan against the forbidden family of the standard atlas.
pub fn forbidden_scan(g: &Graph) -> Result<ScanReport> {
    scan_family(g, &Atlas::standard(), &FORBIDDEN_FAMILY)
}

/// Structural scan plus the Φ ladder (the graph must be connected).
pub fn scan_report(g: &Graph, atlas: &Atlas, opts: &IdealOptions) -> Result<ScanReport> {
    let mut report = scan_family(g, atlas, &FORBIDDEN_FAMILY)?;
    let phi = phi_trivial_count(g, opts)?;
    let flag = |k: usize| if phi.complete { Some(phi.phi_ideals <= k) } else { (phi.phi_ideals > k).then_some(false) };
    report.lambda1 = flag(1);
    report.lambda2 = flag(2);
    report.phi_ideals = Some(phi.phi_ideals);
    report.phi_snf = Some(phi.phi_snf);
    report.status = if phi.complete { ScanStatus::Complete } else { ScanStatus::Inconclusive };
    Ok(report)
}

/// Structural scan; for obstructed graphs also the Λ₂ verdict, which only
/// needs the third distance ideal (the ideals form a descending chain).
fn obstruction_report(g: &Graph, atlas: &Atlas, opts: &IdealOptions) -> Result<ScanReport> {
    let mut report = scan_family(g, atlas, &FORBIDDEN_FAMILY)?;
    if report.has_obstruction() {
        match lambda_membership(g, 2, opts) {
            Ok(member) => {
                report.lambda2 = Some(member);
                report.status = ScanStatus::Complete;
            }
            Err(Error::BudgetExceeded(_)) => report.status = ScanStatus::Inconclusive,
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct ContrapositiveSummary {
    pub graphs: usize,
    /// Graphs containing a forbidden graph or an odd hole.
    pub obstructed: usize,
    /// Obstructed graphs with Φ ≤ 2.
    pub violations: Vec<String>,
    /// Obstructed graphs whose third ideal stayed undecided on the budget.
    pub inconclusive: Vec<String>,
    /// Graphs containing each family member.
    pub member_counts: BTreeMap<String, usize>,
    pub odd_holes: usize,
    #[serde(skip)]
    pub reports: Vec<ScanReport>,
}

impl ContrapositiveSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every corpus graph containing a forbidden graph or an odd
/// hole has Φ ≥ 3. Reports are sorted by graph6.
pub fn verify_forbidden_contrapositive(
    corpus: &[Graph],
    atlas: &Atlas,
    opts: &IdealOptions,
) -> Result<ContrapositiveSummary> {
    let mut reports: Vec<ScanReport> =
        corpus.par_iter().map(|g| obstruction_report(g, atlas, opts)).collect::<Result<_>>()?;
    reports.sort_by(|a, b| a.graph.cmp(&b.graph));
    let mut summary = ContrapositiveSummary {
        graphs: reports.len(),
        obstructed: 0,
        violations: Vec::new(),
        inconclusive: Vec::new(),
        member_counts: FORBIDDEN_FAMILY.iter().map(|n| (n.to_string(), 0)).collect(),
        odd_holes: 0,
        reports: Vec::new(),
    };
    for r in &reports {
        for hit in &r.atlas_hits {
            *summary.member_counts.entry(hit.name.clone()).or_default() += 1;
        }
        summary.odd_holes += r.odd_hole.is_some() as usize;
        if !r.has_obstruction() {
            continue;
        }
        summary.obstructed += 1;
        match r.lambda2 {
            Some(true) => summary.violations.push(r.graph.clone()),
            None => summary.inconclusive.push(r.graph.clone()),
            Some(false) => {}
        }
    }
    summary.reports = reports;
    Ok(summary)
}

#[derive(Debug, Clone, Serialize)]
pub struct Lambda1Summary {
    pub graphs: usize,
    /// Members of Λ₁ over ℤ and over ℚ.
    pub members_integer: usize,
    pub members_rational: usize,
    /// Graphs where membership and freeness disagree.
    pub integer_exceptions: Vec<String>,
    pub rational_exceptions: Vec<String>,
    pub inconclusive: Vec<String>,
}

impl Lambda1Summary {
    pub fn passed(&self) -> bool {
        self.integer_exceptions.is_empty() && self.rational_exceptions.is_empty() && self.inconclusive.is_empty()
    }
}

/// Whether Φ ≤ 1 over ℚ, i.e. whether `I_2` is proper over ℚ.
fn rational_lambda1(g: &Graph, opts: &IdealOptions) -> Result<Option<bool>> {
    if g.n() < 2 {
        return Ok(Some(true));
    }
    let v = ideal_triviality(g, 2, &opts.clone().over(Domain::Rationals))?;
    Ok(match v.decision {
        Decision::Trivial => Some(false),
        Decision::NonTrivial => Some(true),
        Decision::Inconclusive => None,
    })
}

/// Compares Λ₁ membership with freeness of the obstruction families, over
/// ℤ ({P4, paw, diamond}) and over ℚ ({P4, paw, diamond, C4}).
pub fn verify_lambda1_on(corpus: &[Graph], atlas: &Atlas, opts: &IdealOptions) -> Result<Lambda1Summary> {
    let rows: Vec<(String, Option<bool>, bool, Option<bool>, bool)> = corpus
        .par_iter()
        .map(|g| {
            let free = |names: &[&str]| -> Result<bool> {
                for &n in names {
                    if contains_induced(g, atlas.get(n)?).is_some() {
                        return Ok(false);
                    }
                }
                Ok(true)
            };
            let integer = match lambda_membership(g, 1, opts) {
                Ok(b) => Some(b),
                Err(Error::BudgetExceeded(_)) => None,
                Err(e) => return Err(e),
            };
            Ok((emit_graph6(g)?, integer, free(&LAMBDA1_FAMILY)?, rational_lambda1(g, opts)?, free(&LAMBDA1_REAL_FAMILY)?))
        })
        .collect::<Result<_>>()?;
    let mut s = Lambda1Summary {
        graphs: rows.len(),
        members_integer: 0,
        members_rational: 0,
        integer_exceptions: Vec::new(),
        rational_exceptions: Vec::new(),
        inconclusive: Vec::new(),
    };
    for (id, integer, free_z, rational, free_q) in rows {
        match integer {
            None => s.inconclusive.push(id.clone()),
            Some(m) => {
                s.members_integer += m as usize;
                if m != free_z {
                    s.integer_exceptions.push(id.clone());
                }
            }
        }
        match rational {
            None => s.inconclusive.push(id),
            Some(m) => {
                s.members_rational += m as usize;
                if m != free_q {
                    s.rational_exceptions.push(id);
                }
            }
        }
    }
    s.inconclusive.sort();
    s.inconclusive.dedup();
    s.integer_exceptions.sort();
    s.rational_exceptions.sort();
    Ok(s)
}

/// [`verify_lambda1_on`] over every connected graph on at most `n_max ≤ 7`
/// vertices.
pub fn verify_lambda1_characterizations(n_max: usize, opts: &IdealOptions) -> Result<Lambda1Summary> {
    if n_max > 7 {
        return Err(Error::EnumerationRange { n: n_max, max: 7 });
    }
    verify_lambda1_on(&corpus(n_max)?, &Atlas::standard(), opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::atlas;

    #[test]
    fn tree_counts() {
        // Unlabelled trees on 1..=10 vertices.
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        for t in enumerate_trees(7).unwrap() {
            assert!(t.is_connected() && t.edge_count() == 6);
        }
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        assert!(enumerate_connected_graphs(0).is_err());
        assert!(enumerate_connected_graphs(9).is_err());
        assert_eq!(enumerate_connected_bruteforce(4).unwrap().len(), 6);
    }

    #[test]
    fn structural_examples() {
        let gem = atlas("gem").unwrap().graph;
        let r = forbidden_scan(&gem).unwrap();
        assert_eq!(r.atlas_hits, vec![AtlasHit { name: "gem".into(), witness: vec![0, 1, 2, 3, 4] }]);
        let r = forbidden_scan(&Graph::cycle(7)).unwrap();
        assert!(r.atlas_hits.is_empty());
        assert_eq!(r.odd_hole, Some((0..7).collect()));
        assert!(!forbidden_scan(&Graph::complete(4)).unwrap().has_obstruction());
    }

    #[test]
    fn bull_is_not_a_violation() {
        let bull = atlas("bull").unwrap().graph;
        let s = verify_forbidden_contrapositive(&[bull], &Atlas::standard(), &IdealOptions::default()).unwrap();
        assert!(s.passed());
        assert_eq!(s.obstructed, 1);
        assert_eq!(s.reports[0].lambda2, Some(false));
        assert_eq!(s.member_counts["bull"], 1);
    }
}
