//! Acceptance criteria for the distance-ideal toolkit.
//!
//! Runs without the libtest harness so that one status line per criterion
//! is always printed. All comparisons are exact (integers, polynomials, sets
//! and booleans); the only pinned quantities are the wall-clock limits.
//! Expected values are either the published ones or are recomputed here by
//! oracles that share no code with the library (Leibniz determinants,
//! determinantal divisors, brute-force searches).

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use distideal::combin::lex_subsets;
use distideal::graph::{
    contains_induced, contains_induced_bruteforce, emit_graph6, Atlas, Graph, ATLAS_NAMES, FORBIDDEN_FAMILY,
};
use distideal::groebner::{ideal_equal, MonomialOrder};
use distideal::harness::transcripts;
use distideal::ideals::{ideal_triviality, lambda_membership, phi_trivial_count, IdealOptions};
use distideal::int::Int;
use distideal::linalg::{snf, IntMatrix};
use distideal::poly::{generalized_distance_matrix, lemma_matrix, Poly, Ring, SymMatrix};
use distideal::scan::{
    canonical_form, corpus, enumerate_trees, verify_forbidden_contrapositive, verify_lambda1_characterizations,
};

const SEED: u64 = 0x5EED_0A11;

struct Outcome {
    passed: bool,
    /// A failure that is understood and documented: it is still reported as
    /// FAIL, but does not fail the run.
    known: Option<&'static str>,
    summary: String,
}

fn outcome(passed: bool, summary: impl Into<String>) -> Outcome {
    Outcome { passed, known: None, summary: summary.into() }
}

/// The quoted C7-M minor 3 - 2y4 is not a minor of the drawn matrix at all;
/// the stated position gives -2y4 - 1 (the lemma's conclusion is unaffected).
const MISQUOTED_C7_MINOR: &str = "C7-M[3, 4, 5][0, 1, 2] = -2*y4 - 1, quoted -2*y4 + 3";

fn within(start: Instant, limit_s: u64) -> (bool, String) {
    let t = start.elapsed();
    (t <= Duration::from_secs(limit_s), format!("{:.1} s of {limit_s} s", t.as_secs_f64()))
}

// ---------------------------------------------------------------- oracles

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i128)> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<(Vec<usize>, i128)>) {
        if prefix.len() == n {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| prefix[i] > prefix[j]).count();
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Leibniz determinant of an integer matrix given as nested vectors.
fn leibniz(m: &[Vec<i128>]) -> i128 {
    permutations(m.len()).iter().map(|(p, s)| s * p.iter().enumerate().map(|(i, &j)| m[i][j]).product::<i128>()).sum()
}

/// Leibniz determinant of a polynomial matrix.
fn leibniz_poly(m: &SymMatrix) -> Poly {
    let mut acc = Poly::zero(m.ring());
    for (p, s) in permutations(m.dim()) {
        let mut term = Poly::constant(m.ring(), s as i64);
        for (i, &j) in p.iter().enumerate() {
            term = &term * m.get(i, j);
        }
        acc = &acc + &term;
    }
    acc
}

fn to_i128(m: &IntMatrix) -> Vec<Vec<i128>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_i64().unwrap() as i128).collect()).collect()
}

/// Determinantal divisors d_1, ..., d_r (gcd of all k x k minors).
fn determinantal_divisors(m: &[Vec<i128>]) -> Vec<i128> {
    let (rows, cols) = (m.len(), m[0].len());
    (1..=rows.min(cols))
        .map(|k| {
            let mut g = 0;
            for rs in lex_subsets(rows, k) {
                for cs in lex_subsets(cols, k) {
                    let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                    g = gcd(g, leibniz(&sub));
                }
            }
            g
        })
        .collect()
}

/// Invariant factors from determinantal divisors, zeros included.
fn divisor_factors(m: &[Vec<i128>]) -> Vec<i128> {
    let d = determinantal_divisors(m);
    let mut prev = 1;
    d.iter()
        .map(|&dk| {
            let f = if dk == 0 { 0 } else { dk / prev };
            prev = dk;
            f
        })
        .collect()
}

fn snf_factors(m: &IntMatrix) -> Vec<i128> {
    let mut f: Vec<i128> = snf(m, false).invariant_factors.iter().map(|x| x.to_i64().unwrap() as i128).collect();
    f.resize(m.rows().min(m.cols()), 0);
    f
}

fn graph_order(g6: &str) -> usize {
    (g6.as_bytes()[0] - 63) as usize
}

fn proper_connected_subgraphs(g: &Graph) -> Vec<Graph> {
    let mut classes = BTreeMap::new();
    for mask in 1..g.all_vertices_mask() {
        if g.mask_connected(mask) {
            let h = canonical_form(&g.induced_by_mask(mask));
            classes.insert(emit_graph6(&h).unwrap(), h);
        }
    }
    classes.into_values().collect()
}

fn parse_set(ring: &Arc<Ring>, text: &str) -> Vec<Poly> {
    transcripts::split_set(text).into_iter().map(|t| Poly::parse(ring, t).unwrap()).collect()
}

fn product(domains: &[Vec<i64>]) -> Vec<Vec<i64>> {
    domains.iter().fold(vec![Vec::new()], |acc, d| {
        acc.iter().flat_map(|p| d.iter().map(move |&v| [p.clone(), vec![v]].concat())).collect()
    })
}

/// Vectors at which the gcd of the evaluated set differs from 1.
fn exceptional(set: &[Poly], vars: &[&str], domains: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let ring = set[0].ring().clone();
    let idx: Vec<usize> = vars.iter().map(|v| ring.index_of(v).unwrap()).collect();
    product(domains)
        .into_iter()
        .filter(|d| {
            let a: Vec<(usize, Int)> = idx.iter().zip(d).map(|(&i, &v)| (i, Int::from(v))).collect();
            let g = set.iter().fold(0i128, |g, p| gcd(g, p.evaluate(&a).constant_value().unwrap().to_i64().unwrap() as i128));
            g != 1
        })
        .collect()
}

// ---------------------------------------------------------------- criteria

fn atlas_phi_values() -> Outcome {
    let start = Instant::now();
    let atlas = Atlas::standard();
    let opts = IdealOptions::default();
    let mut bad = Vec::new();
    let mut subgraphs = 0;
    for name in FORBIDDEN_FAMILY {
        let g = atlas.get(name).unwrap();
        let phi = phi_trivial_count(g, &opts).unwrap();
        if !(phi.complete && phi.phi_ideals == 3) {
            bad.push(format!("Φ({name}) = {}", phi.phi_ideals));
        }
        for h in proper_connected_subgraphs(g) {
            subgraphs += 1;
            if !lambda_membership(&h, 2, &opts).unwrap() {
                bad.push(format!("{name} ⊃ {} with Φ ≥ 3", emit_graph6(&h).unwrap()));
            }
        }
    }
    let (fast, time) = within(start, 180);
    outcome(
        bad.is_empty() && fast,
        format!("16 graphs with Φ = 3, {subgraphs} subgraph classes with Φ ≤ 2; mismatches {bad:?}; {time}"),
    )
}

fn lambda1_characterizations() -> Outcome {
    let start = Instant::now();
    let s = verify_lambda1_characterizations(6, &IdealOptions::default()).unwrap();
    let (fast, time) = within(start, 300);
    outcome(
        s.graphs == 143 && s.passed() && s.inconclusive.is_empty() && fast,
        format!(
            "{} graphs, Λ₁ members {} (ℤ) / {} (ℚ), exceptions {:?} / {:?}, inconclusive {:?}; {time}",
            s.graphs, s.members_integer, s.members_rational, s.integer_exceptions, s.rational_exceptions, s.inconclusive
        ),
    )
}

fn theorem_contrapositive() -> Outcome {
    let start = Instant::now();
    let graphs = corpus(7).unwrap();
    let s = verify_forbidden_contrapositive(&graphs, &Atlas::standard(), &IdealOptions::default()).unwrap();
    let small_inconclusive: Vec<&String> = s.inconclusive.iter().filter(|g| graph_order(g) <= 6).collect();
    let share = s.inconclusive.len() as f64 / s.graphs as f64;
    let (fast, time) = within(start, 1800);
    outcome(
        s.graphs == 996 && s.violations.is_empty() && share < 0.02 && small_inconclusive.is_empty() && fast,
        format!(
            "{} graphs, {} obstructed ({} with odd holes), violations {:?}, inconclusive {:?}; {time}",
            s.graphs, s.obstructed, s.odd_holes, s.violations, s.inconclusive
        ),
    )
}

fn groebner_fidelity() -> Outcome {
    let budget = IdealOptions::default().budget;
    let mut lines = Vec::new();
    let mut ok = true;
    let cases = [
        ("G_{6,7}-M", transcripts::G67_I, Some(transcripts::G67_J)),
        ("co-twin-house-M", transcripts::COTWIN_I, Some(transcripts::COTWIN_J)),
        ("G_{6,15}-M", transcripts::G615_I, Some(transcripts::G615_J)),
        ("co-twin-house-M'(3,3,2)", transcripts::COTWIN_332, None),
    ];
    for (name, i_text, j_text) in cases {
        let m = lemma_matrix(name).unwrap();
        let mut listed = parse_set(m.ring(), i_text);
        if let Some(j) = j_text {
            listed.extend(parse_set(m.ring(), j));
        }
        let order = MonomialOrder::grevlex(m.ring());
        let equal = ideal_equal(&m.minors(3).unwrap(), &listed, &order, budget);
        ok &= matches!(equal, Ok(true));
        lines.push(format!("{name}: {equal:?}"));
    }
    outcome(ok, lines.join(", "))
}

fn exceptional_vectors() -> Outcome {
    let mut ok = true;
    let mut lines = Vec::new();
    let cases: [(&str, &str, &[&str], Vec<Vec<i64>>, &[[i64; 5]]); 3] = [
        (
            "G_{6,7}-M",
            transcripts::G67_I,
            &["y0", "y1", "y2", "y3", "y4"],
            vec![vec![2, 3], vec![2, 3], vec![2, 3], vec![2, 3, 4], vec![2, 3, 4]],
            &[[2, 2, 2, 2, 2], [2, 2, 3, 2, 2], [2, 2, 3, 3, 3], [3, 3, 3, 3, 3]],
        ),
        ("co-twin-house-M", transcripts::COTWIN_I, &["y0", "y1", "y2"], vec![vec![2, 3], vec![2, 3], vec![2, 3, 4]], &[
            [3, 3, 2, 0, 0],
            [3, 3, 3, 0, 0],
        ]),
        ("G_{6,15}-M", transcripts::G615_J, &["y0", "y1", "y2", "y3"], vec![vec![2, 3]; 4], &[]),
    ];
    for (name, text, vars, domains, expected) in cases {
        let m = lemma_matrix(name).unwrap();
        let found = exceptional(&parse_set(m.ring(), text), vars, &domains);
        let want: BTreeSet<Vec<i64>> = expected.iter().map(|v| v[..vars.len()].to_vec()).collect();
        ok &= found == want;
        lines.push(format!("{name}: {found:?}"));
    }
    outcome(ok, lines.join(", "))
}

fn displayed_minors() -> Outcome {
    // (matrix, rows, cols, quoted value)
    let quoted: &[(&str, [usize; 3], [usize; 3], &str)] = &[
        ("G_{6,5}-M", [1, 2, 5], [0, 3, 4], "-y_2+1"),
        ("G_{6,5}-M", [1, 2, 4], [0, 3, 5], "-y_2+4"),
        ("5-pan-M", [2, 3, 4], [1, 2, 5], "5-x_2"),
        ("5-pan-M", [2, 4, 5], [1, 2, 3], "3x_2-4"),
        ("5-pan-M", [0, 1, 2], [3, 4, 5], "-5"),
        ("G_{6,9}-M", [1, 4, 5], [1, 3, 4], "4-y_0"),
        ("G_{6,9}-M", [0, 4, 5], [1, 2, 3], "4-y_1"),
        ("G_{6,9}-M", [1, 4, 5], [0, 3, 5], "1-2x_5"),
        ("G_{6,12}-M", [0, 3, 4], [1, 2, 5], "3"),
        ("G_{6,12}-M", [0, 1, 2], [3, 4, 5], "1-y_0"),
        ("C7-M", [3, 4, 5], [0, 1, 2], "3-2y_4"),
        ("C7-M", [4, 5, 6], [0, 1, 2], "2y_3 y_4-y_3-2y_4-2"),
        ("D(C7,X)", [0, 1, 2], [4, 5, 6], "2"),
        ("D(C7,X)", [1, 2, 4], [3, 5, 6], "5"),
    ];
    let mut exact = 0;
    let mut notes = Vec::new();
    let mut missing = Vec::new();
    for &(name, rows, cols, text) in quoted {
        let m = if name == "D(C7,X)" {
            generalized_distance_matrix(&Graph::cycle(7)).unwrap()
        } else {
            lemma_matrix(name).unwrap()
        };
        let want = Poly::parse(m.ring(), text).unwrap();
        let sub = SymMatrix::from_fn(m.ring(), 3, |i, j| m.get(rows[i], cols[j]).clone());
        let got = leibniz_poly(&sub);
        if got == want {
            exact += 1;
        } else if got == -&want {
            notes.push(format!("{name}{rows:?}{cols:?} = -({want})"));
        } else {
            let elsewhere = lex_subsets(m.dim(), 3).into_iter().find_map(|rs| {
                lex_subsets(m.dim(), 3).into_iter().find(|cs| {
                    let p = m.minor(&rs, cs);
                    p == want || -&p == want
                }).map(|cs| (rs, cs))
            });
            match elsewhere {
                Some((rs, cs)) => notes.push(format!("{want} sits at {name}{rs:?}{cs:?}, not {rows:?}{cols:?}")),
                None => missing.push(format!("{name}{rows:?}{cols:?} = {got}, quoted {want}")),
            }
        }
    }
    let mut band_ok = true;
    for n in 4..=10usize {
        let c = Graph::cycle(2 * n + 1).distance_matrix().unwrap();
        let sub = to_i128(&c.submatrix(&[0, 1, 2], &[n - 1, n, n + 1]));
        let n = n as i128;
        band_ok &= sub == vec![vec![n - 1, n, n], vec![n - 2, n - 1, n], vec![n - 3, n - 2, n - 1]] && leibniz(&sub) == -1;
    }
    let only_known = band_ok && missing == [MISQUOTED_C7_MINOR];
    let mut result = outcome(
        missing.is_empty() && band_ok,
        format!(
            "{exact}/{} quoted minors exact at the stated position; up to sign or position: {notes:?}; not a minor: {missing:?}; C9..C21 band determinants -1: {band_ok}",
            quoted.len()
        ),
    );
    if only_known {
        result.known = Some("the quoted C7-M minor is a misprint");
    }
    result
}

fn tree_facts() -> Outcome {
    let start = Instant::now();
    let opts = IdealOptions::default();
    let mut count = 0;
    let mut bad = Vec::new();
    for n in 3..=10 {
        for t in enumerate_trees(n).unwrap() {
            count += 1;
            let f = snf_factors(&t.distance_matrix().unwrap());
            let phi = f.iter().filter(|&&x| x == 1).count();
            let third_ok = n < 4 || f[2] == 2;
            if phi != 2 || !third_ok || !lambda_membership(&t, 2, &opts).unwrap() {
                bad.push(emit_graph6(&t).unwrap());
            }
        }
    }
    let (fast, time) = within(start, 120);
    outcome(bad.is_empty() && count == 199 && fast, format!("{count} trees on 3..10 vertices, exceptions {bad:?}; {time}"))
}

fn structural_identities() -> Outcome {
    let start = Instant::now();
    let opts = IdealOptions::default();
    let graphs = corpus(7).unwrap();
    let mut above = Vec::new();
    let mut inconclusive = 0;
    for g in &graphs {
        let r = phi_trivial_count(g, &opts).unwrap();
        inconclusive += !r.complete as usize;
        if r.phi_ideals > r.phi_snf {
            above.push(emit_graph6(g).unwrap());
        }
    }
    // Trivial indices form a prefix: every index of every graph on at most
    // five vertices.
    let mut not_prefix = Vec::new();
    for g in corpus(5).unwrap() {
        let trivial: Vec<bool> = (1..=g.n()).map(|i| ideal_triviality(&g, i, &opts).unwrap().is_trivial()).collect();
        if trivial.windows(2).any(|w| !w[0] && w[1]) {
            not_prefix.push(emit_graph6(&g).unwrap());
        }
    }
    // Evaluating D(G, X) at integer points commutes with taking minors.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let pool: Vec<&Graph> = graphs.iter().filter(|g| g.n() >= 3 && g.n() <= 6).collect();
    let mut eval_bad = Vec::new();
    for _ in 0..20 {
        let g = pool[rng.gen_range(0..pool.len())];
        let d: Vec<i64> = (0..g.n()).map(|_| rng.gen_range(-4..=4)).collect();
        let m = generalized_distance_matrix(g).unwrap();
        let a: Vec<(usize, Int)> = d.iter().enumerate().map(|(i, &v)| (i, Int::from(v))).collect();
        let evaluated = to_i128(&m.evaluate(&a).to_int_matrix().unwrap());
        let mut plain = g.distance_matrix().unwrap();
        for (i, &v) in d.iter().enumerate() {
            plain.set(i, i, Int::from(v));
        }
        let f = snf_factors(&plain);
        let divisors = determinantal_divisors(&evaluated);
        let products: Vec<i128> = (0..f.len()).map(|i| f[..=i].iter().product()).collect();
        if divisors != products {
            eval_bad.push(format!("{} at {d:?}", emit_graph6(g).unwrap()));
        }
    }
    let (fast, time) = within(start, 1800);
    outcome(
        above.is_empty() && inconclusive == 0 && not_prefix.is_empty() && eval_bad.is_empty() && fast,
        format!(
            "Φ ≤ φ on {} graphs (exceptions {above:?}, {inconclusive} inconclusive); prefix failures {not_prefix:?}; evaluation mismatches {eval_bad:?}; {time}",
            graphs.len()
        ),
    )
}

fn engine_cross_checks() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut snf_bad = 0;
    for _ in 0..100 {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let m = IntMatrix::from_rows(&rows);
        if snf_factors(&m) != divisor_factors(&to_i128(&m)) {
            snf_bad += 1;
        }
    }
    let ring = Ring::from_names(&["a", "b", "c"]).unwrap();
    let mut det_bad = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=4);
        let m = SymMatrix::from_fn(&ring, n, |_, _| {
            let mut p = Poly::constant(&ring, rng.gen_range(-3..=3));
            for v in 0..3 {
                if rng.gen_bool(0.3) {
                    p = &p + &Poly::variable(&ring, v).scale(&Int::from(rng.gen_range(-2..=2)));
                }
            }
            p
        });
        let l = m.determinant_laplace();
        let b = m.determinant_bareiss().unwrap();
        let o = leibniz_poly(&m);
        if l != b || b != o || m.determinant() != o {
            det_bad += 1;
        }
    }
    let graphs = corpus(7).unwrap();
    let atlas = Atlas::standard();
    let mut scan_bad = 0;
    let mut hits = 0;
    for _ in 0..100 {
        let host = &graphs[rng.gen_range(0..graphs.len())];
        for name in ATLAS_NAMES {
            let pattern = atlas.get(name).unwrap();
            let fast = contains_induced(host, pattern);
            let slow = contains_induced_bruteforce(host, pattern);
            hits += fast.is_some() as usize;
            let witness_ok = fast.as_ref().is_none_or(|w| {
                w.len() == pattern.n() && permutations(w.len()).iter().any(|(p, _)| {
                    (0..w.len()).all(|i| (0..i).all(|j| host.has_edge(w[p[i]], w[p[j]]) == pattern.has_edge(i, j)))
                })
            });
            if fast.is_some() != slow.is_some() || !witness_ok {
                scan_bad += 1;
            }
        }
    }
    outcome(
        snf_bad == 0 && det_bad == 0 && scan_bad == 0,
        format!(
            "SNF vs divisors: {snf_bad}/100 mismatches; determinants (Laplace, Bareiss, memoized, Leibniz): {det_bad}/200; induced scan vs brute force: {scan_bad} mismatches over 100 hosts x {} patterns ({hits} embeddings)",
            ATLAS_NAMES.len()
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("atlas Φ values", atlas_phi_values),
        ("Λ₁ characterizations", lambda1_characterizations),
        ("forbidden-subgraph contrapositive", theorem_contrapositive),
        ("Gröbner fidelity", groebner_fidelity),
        ("exceptional vectors", exceptional_vectors),
        ("displayed minors", displayed_minors),
        ("tree facts", tree_facts),
        ("structural identities", structural_identities),
        ("engine cross-checks", engine_cross_checks),
    ];
    let filter = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let mut failed = 0;
    let mut known = 0;
    println!("acceptance: tolerance exact for every comparison (integers, polynomials, sets)");
    for (k, (name, run)) in criteria.iter().enumerate() {
        if filter.as_deref().is_some_and(|f| !name.contains(f)) {
            continue;
        }
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            outcome(false, format!("panicked: {}", msg.unwrap_or_default()))
        });
        let status = match (result.passed, result.known) {
            (true, _) => "PASS".to_string(),
            (false, None) => {
                failed += 1;
                "FAIL".to_string()
            }
            (false, Some(why)) => {
                known += 1;
                format!("FAIL (known: {why})")
            }
        };
        println!("criterion {} {status}: {name}: {}", k + 1, result.summary);
    }
    println!("acceptance: {failed} unexpected failures, {known} known failures");
    if failed > 0 {
        std::process::exit(1);
    }
}
