//! Property tests across the graph, linear-algebra, polynomial, Gröbner and
//! ideal layers. Reference values come from small oracles defined here.

use proptest::prelude::*;

use distideal::graph::{emit_graph6, isomorphic, parse_graph6, Graph};
use distideal::groebner::{
    ideal_equal, is_strong_basis, modular_groebner, rational_groebner, strong_groebner, MonomialOrder, DEFAULT_PRIME,
};
use distideal::ideals::{ideal_triviality, phi_over_rationals, phi_trivial_count, Decision, IdealOptions};
use distideal::int::Int;
use distideal::linalg::{snf, IntMatrix};
use distideal::poly::{generalized_distance_matrix, Poly, Ring};
use distideal::scan::{canonical_form, canonical_form_bruteforce, enumerate_connected_bruteforce, enumerate_connected_graphs};

const BUDGET: u64 = 200_000;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn connected_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    graph_strategy(max_n).prop_filter("connected", |g| g.is_connected())
}

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-12i64..=12, c), r))
}

fn poly_strategy(ring: std::sync::Arc<Ring>) -> impl Strategy<Value = Poly> {
    proptest::collection::vec((-4i64..=4, 0u32..=2, 0u32..=2), 1..=3).prop_map(move |terms| {
        let (x, y) = (Poly::variable(&ring, 0), Poly::variable(&ring, 1));
        terms.iter().fold(Poly::zero(&ring), |acc, &(c, a, b)| &acc + &(&x.pow(a) * &y.pow(b)).scale(&Int::from(c)))
    })
}

fn is_diagonal_with(m: &IntMatrix, factors: &[Int]) -> bool {
    (0..m.rows()).all(|i| {
        (0..m.cols()).all(|j| {
            let want = if i == j && i < factors.len() { factors[i].clone() } else { Int::ZERO };
            *m.get(i, j) == want
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trips(g in graph_strategy(12)) {
        let text = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_a_complete_invariant(g in graph_strategy(6), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(canonical_form_bruteforce(&g), canonical_form_bruteforce(&h));
        prop_assert!(isomorphic(&g, &h));
    }

    #[test]
    fn canonical_forms_decide_isomorphism(g in graph_strategy(6), h in graph_strategy(6)) {
        let same = g.n() == h.n() && isomorphic(&g, &h);
        prop_assert_eq!(canonical_form(&g) == canonical_form(&h), same);
        prop_assert_eq!(canonical_form_bruteforce(&g) == canonical_form_bruteforce(&h), same);
    }

    #[test]
    fn smith_form_transforms_diagonalize(rows in matrix_strategy()) {
        let a = IntMatrix::from_rows(&rows);
        let r = snf(&a, true);
        let (l, rt) = (r.left_transform.clone().unwrap(), r.right_transform.clone().unwrap());
        prop_assert!(is_diagonal_with(&l.mul(&a).mul(&rt), &r.invariant_factors));
        for w in r.invariant_factors.windows(2) {
            prop_assert!(w[0].divides(&w[1]));
        }
        prop_assert!(r.invariant_factors.iter().all(|f| f.is_positive()));
        // Invariant under transposition.
        prop_assert_eq!(snf(&a.transpose(), false).invariant_factors, r.invariant_factors);
    }

    #[test]
    fn polynomial_ring_laws(
        (p, q, s) in {
            let ring = Ring::from_names(&["x", "y"]).unwrap();
            (poly_strategy(ring.clone()), poly_strategy(ring.clone()), poly_strategy(ring))
        }
    ) {
        prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
        prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
        prop_assert!((&p - &p).is_zero());
        if !q.is_zero() {
            prop_assert_eq!((&p * &q).div_exact(&q).unwrap(), p.clone());
        }
        let shown = p.to_string();
        prop_assert_eq!(Poly::parse(p.ring(), &shown).unwrap(), p);
    }

    #[test]
    fn strong_basis_contains_its_generators(
        gens in {
            let ring = Ring::from_names(&["x", "y"]).unwrap();
            proptest::collection::vec(poly_strategy(ring), 1..=3)
        }
    ) {
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        let order = MonomialOrder::grevlex(gens[0].ring());
        let b = strong_groebner(&gens, &order, BUDGET).unwrap();
        prop_assert!(is_strong_basis(&b));
        for g in &gens {
            prop_assert!(b.contains(g).unwrap());
        }
        // Order independence of the ideal itself.
        let lex = MonomialOrder::lex(gens[0].ring());
        prop_assert!(ideal_equal(&gens, b.generators(), &lex, BUDGET).unwrap());
        // ⟨1⟩ over ℤ forces ⟨1⟩ over ℚ and modulo p.
        if b.contains_one() {
            prop_assert!(rational_groebner(&gens, &order, BUDGET).unwrap().contains_one());
            prop_assert!(modular_groebner(&gens, &order, DEFAULT_PRIME, BUDGET).unwrap().contains_one());
        }
    }

    #[test]
    fn phi_is_bounded_and_rationals_are_coarser(g in connected_strategy(5)) {
        let opts = IdealOptions::default();
        let z = phi_trivial_count(&g, &opts).unwrap();
        let q = phi_over_rationals(&g, &opts).unwrap();
        prop_assert!(z.complete && q.complete);
        prop_assert!(z.phi_ideals <= z.phi_snf);
        prop_assert!(z.phi_ideals <= q.phi_ideals);
        // The first ideal is always trivial (an off-diagonal entry is 1).
        prop_assert!(g.n() < 2 || z.phi_ideals >= 1);
    }

    #[test]
    fn trivial_ideals_evaluate_to_unit_gcd(g in connected_strategy(5), d in proptest::collection::vec(-3i64..=3, 5)) {
        let m = generalized_distance_matrix(&g).unwrap();
        let point: Vec<(usize, Int)> = (0..g.n()).map(|i| (i, Int::from(d[i]))).collect();
        for i in 1..=g.n() {
            if ideal_triviality(&g, i, &IdealOptions::default()).unwrap().is_trivial() {
                let values: Vec<Int> = m.minors(i).unwrap().iter().map(|p| p.evaluate(&point).constant_value().unwrap()).collect();
                prop_assert!(distideal::int::gcd_all(&values).is_one());
            }
        }
    }
}

#[test]
fn enumeration_matches_bruteforce_and_known_counts() {
    let known = [1, 1, 2, 6, 21, 112, 853];
    for (n, &count) in known.iter().enumerate().map(|(i, c)| (i + 1, c)) {
        let fast = enumerate_connected_graphs(n).unwrap();
        assert_eq!(fast.len(), count, "n = {n}");
        if n <= 6 {
            assert_eq!(enumerate_connected_bruteforce(n).unwrap().len(), count, "n = {n}");
        }
    }
}

#[test]
fn complete_graphs_and_paths() {
    let opts = IdealOptions::default();
    // D(K_n, X) = diag(X) + J - I: only the first ideal is trivial.
    for n in 2..=5 {
        let r = phi_trivial_count(&Graph::complete(n), &opts).unwrap();
        assert_eq!(r.value(), Some(1), "K_{n}");
    }
    // I_2(P_3) vanishes modulo 3 at x = (2, 2, 2).
    assert_eq!(phi_trivial_count(&Graph::path(3), &opts).unwrap().value(), Some(1));
    for n in 4..=7 {
        let r = phi_trivial_count(&Graph::path(n), &opts).unwrap();
        assert_eq!(r.value(), Some(2), "P_{n}");
    }
    let star = ideal_triviality(&Graph::star(4), 3, &opts).unwrap();
    assert_eq!(star.decision, Decision::NonTrivial);
}
