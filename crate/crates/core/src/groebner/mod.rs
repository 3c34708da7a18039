//! Gröbner bases over ℤ (strong bases) and ℚ, ideal membership and equality.
//!
//! Over ℤ the completion forms S-polynomials and gcd-polynomials of pairs,
//! selected by sugar degree. An S-pair is skipped only when both the leading
//! monomials and the leading coefficients are coprime. Generators are streamed
//! in batches so that triviality is detected as soon as a unit appears.
//!
//! Over ℚ basis elements are kept as primitive integer polynomials with
//! positive leading coefficient, i.e. integer multiples of the monic basis.
//! Modulo a prime they are monic with coefficients in `[0, p)`; an ideal that
//! is proper modulo some prime is proper over ℤ.

mod engine;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::poly::{compare_permuted, Poly, Ring};
pub use crate::poly::{MonomialOrder, OrderKind};

use engine::{Engine, Term};

/// Default limit on pair reductions per ideal.
pub const DEFAULT_BUDGET: u64 = 200_000;

/// Generators are added to the completion this many at a time.
pub const BATCH_SIZE: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    Integers,
    Rationals,
    /// The prime field of the given order.
    Prime(u64),
}

impl Domain {
    pub fn is_field(self) -> bool {
        self != Domain::Integers
    }
}

/// Default modulus of the modular properness check (`2^31 - 1`).
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Maps polynomials to and from the precedence layout of an order.
struct Layout {
    kind: OrderKind,
    perm: Vec<usize>,
    inverse: Vec<usize>,
}

impl Layout {
    fn new(order: &MonomialOrder) -> Layout {
        Layout { kind: order.kind, perm: order.permutation(), inverse: order.precedence.clone() }
    }

    fn to_terms(&self, p: &Poly) -> Vec<Term> {
        let mut t: Vec<Term> = p.terms().iter().map(|(m, c)| (m.permuted(&self.perm), c.clone())).collect();
        t.sort_by(|a, b| compare_permuted(self.kind, &b.0, &a.0));
        t
    }

    fn to_poly(&self, ring: &Arc<Ring>, t: &[Term]) -> Poly {
        Poly::from_terms(ring, t.iter().map(|(m, c)| (m.permuted(&self.inverse), c.clone())))
    }
}

fn check_order(order: &MonomialOrder, ring: &Ring) {
    let mut seen = order.precedence.clone();
    seen.sort_unstable();
    assert!(seen == (0..ring.len()).collect::<Vec<_>>(), "order precedence must list every ring variable once");
}

fn common_ring(polys: &[Poly]) -> Result<Arc<Ring>> {
    let Some(first) = polys.first() else {
        return Err(Error::PolyParse("empty generator list".into()));
    };
    let ring = first.ring().clone();
    if polys.iter().any(|p| !Ring::same(p.ring(), &ring)) {
        return Err(Error::RingMismatch);
    }
    Ok(ring)
}

/// A completed, interreduced basis.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: MonomialOrder,
    domain: Domain,
    generators: Vec<Poly>,
    terms: Vec<Vec<Term>>,
    pairs_reduced: u64,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// Basis elements sorted by ascending leading term.
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn is_interreduced(&self) -> bool {
        true
    }

    pub fn pairs_reduced(&self) -> u64 {
        self.pairs_reduced
    }

    /// True iff the ideal is ⟨1⟩.
    pub fn contains_one(&self) -> bool {
        self.terms.iter().any(|t| {
            t.len() == 1 && t[0].0.is_one() && (self.domain.is_field() || t[0].1.is_unit())
        })
    }

    /// The nonnegative generator of the ideal's intersection with ℤ, when
    /// the basis holds a constant (ℤ only).
    pub fn constant(&self) -> Option<Int> {
        self.terms.iter().find(|t| t.len() == 1 && t[0].0.is_one()).map(|t| t[0].1.abs())
    }

    /// Normal form of `p`.
    pub fn reduce(&self, p: &Poly) -> Result<Poly> {
        if !Ring::same(p.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let layout = Layout::new(&self.order);
        let reducers: Vec<&[Term]> = self.terms.iter().map(|t| t.as_slice()).collect();
        let r = engine::reduce(self.domain, self.order.kind, layout.to_terms(p), &reducers);
        Ok(layout.to_poly(&self.ring, &r))
    }

    /// Ideal membership.
    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }

    /// Displays of the generators under the basis order.
    pub fn display(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.display(&self.order)).collect()
    }
}

impl std::fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroebnerBasis")
            .field("domain", &self.domain)
            .field("order", &self.order.kind)
            .field("generators", &self.display())
            .finish()
    }
}

impl Serialize for GroebnerBasis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GroebnerBasis", 4)?;
        st.serialize_field("domain", &self.domain)?;
        st.serialize_field("order", &self.order.kind)?;
        st.serialize_field("generators", &self.display())?;
        st.serialize_field("contains_one", &self.contains_one())?;
        st.end()
    }
}

/// Reduces `p` by an arbitrary list (not necessarily a basis) over ℤ.
///
/// The remainder has no term whose monomial is divisible by a leading
/// monomial of `basis` with a nonzero Euclidean quotient of coefficients.
pub fn strong_reduce(p: &Poly, basis: &[Poly], order: &MonomialOrder) -> Result<Poly> {
    if basis.iter().any(|b| !Ring::same(b.ring(), p.ring())) {
        return Err(Error::RingMismatch);
    }
    check_order(order, p.ring());
    let layout = Layout::new(order);
    let reducers: Vec<Vec<Term>> = basis.iter().filter(|b| !b.is_zero()).map(|b| layout.to_terms(b)).collect();
    let refs: Vec<&[Term]> = reducers.iter().map(|t| t.as_slice()).collect();
    let r = engine::reduce(Domain::Integers, order.kind, layout.to_terms(p), &refs);
    Ok(layout.to_poly(p.ring(), &r))
}

fn complete(gens: &[Poly], order: &MonomialOrder, budget: u64, domain: Domain) -> Result<GroebnerBasis> {
    let ring = common_ring(gens)?;
    check_order(order, &ring);
    let layout = Layout::new(order);
    let mut engine = Engine::new(domain, order.kind, budget);
    // constants first: they make every later reduction cheaper
    let (consts, rest): (Vec<&Poly>, Vec<&Poly>) = gens.iter().partition(|p| p.is_constant());
    let mut seen = std::collections::HashSet::new();
    let ordered: Vec<&Poly> = consts.into_iter().chain(rest).filter(|p| !p.is_zero() && seen.insert(*p)).collect();
    for batch in ordered.chunks(BATCH_SIZE) {
        for p in batch {
            engine.add(layout.to_terms(p));
        }
        engine.complete()?;
        if engine.has_unit() {
            break;
        }
    }
    let pairs_reduced = engine.pairs_reduced();
    let terms = engine.finish();
    let generators = terms.iter().map(|t| layout.to_poly(&ring, t)).collect();
    Ok(GroebnerBasis { ring, order: order.clone(), domain, generators, terms, pairs_reduced })
}

/// Strong Gröbner basis over ℤ.
///
/// Fails with [`Error::BudgetExceeded`] when more than `budget` pairs are
/// reduced; the caller must treat this as inconclusive.
pub fn strong_groebner(gens: &[Poly], order: &MonomialOrder, budget: u64) -> Result<GroebnerBasis> {
    complete(gens, order, budget, Domain::Integers)
}

/// Reduced Gröbner basis over ℚ.
pub fn rational_groebner(gens: &[Poly], order: &MonomialOrder, budget: u64) -> Result<GroebnerBasis> {
    complete(gens, order, budget, Domain::Rationals)
}

pub fn contains_one(b: &GroebnerBasis) -> bool {
    b.contains_one()
}

/// Reduced Gröbner basis over the prime field of order `p`, which must be a
/// prime below `2^62`.
pub fn modular_groebner(gens: &[Poly], order: &MonomialOrder, p: u64, budget: u64) -> Result<GroebnerBasis> {
    assert!((2..1 << 62).contains(&p), "modulus out of range");
    complete(gens, order, budget, Domain::Prime(p))
}

/// Equality of the ideals generated over ℤ by `a` and `b`.
pub fn ideal_equal(a: &[Poly], b: &[Poly], order: &MonomialOrder, budget: u64) -> Result<bool> {
    let ga = strong_groebner(a, order, budget)?;
    let gb = strong_groebner(b, order, budget)?;
    if !Ring::same(ga.ring(), gb.ring()) {
        return Err(Error::RingMismatch);
    }
    for p in a {
        if !gb.contains(p)? {
            return Ok(false);
        }
    }
    for p in b {
        if !ga.contains(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the strong-basis property of a ℤ basis directly: every S- and gcd-polynomial of
/// every pair reduces to zero (no criteria applied).
pub fn is_strong_basis(b: &GroebnerBasis) -> bool {
    let kind = b.order.kind;
    let refs: Vec<&[Term]> = b.terms.iter().map(|t| t.as_slice()).collect();
    for (i, f) in b.terms.iter().enumerate() {
        for g in &b.terms[..i] {
            let ((fm, fc), (gm, gc)) = (&f[0], &g[0]);
            let l = fm.lcm(gm);
            let (uf, ug) = (l.div(fm).unwrap(), l.div(gm).unwrap());
            let lc = fc.lcm(gc);
            let fs: Vec<Term> = f.iter().map(|(m, c)| (m.mul(&uf), c * &lc.div_exact(fc))).collect();
            let s = engine::sub_mul(kind, &fs, &lc.div_exact(gc), &ug, g);
            let (_, x, y) = fc.ext_gcd(gc);
            let fx: Vec<Term> = f.iter().map(|(m, c)| (m.mul(&uf), c * &x)).collect();
            let gp = engine::sub_mul(kind, &fx, &-y, &ug, g);
            for mut p in [s, gp] {
                // A zero Bézout coefficient leaves zero terms behind.
                p.retain(|t| !t.1.is_zero());
                if !engine::reduce(b.domain, kind, p, &refs).is_empty() {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::from_names(names).unwrap()
    }

    fn polys(r: &Arc<Ring>, s: &[&str]) -> Vec<Poly> {
        s.iter().map(|t| Poly::parse(r, t).unwrap()).collect()
    }

    #[test]
    fn strong_reduce_examples() {
        let r = ring(&["x", "y"]);
        let o = MonomialOrder::lex(&r);
        let p = |s| Poly::parse(&r, s).unwrap();
        assert_eq!(strong_reduce(&p("3x"), &[p("2x")], &o).unwrap(), p("x"));
        assert!(strong_reduce(&p("x^2 + x"), &[p("x")], &o).unwrap().is_zero());
        assert_eq!(strong_reduce(&p("y - 1"), &[p("2"), p("y - 4")], &o).unwrap(), p("1"));
    }

    #[test]
    fn strong_groebner_examples() {
        let r = ring(&["x"]);
        let o = MonomialOrder::lex(&r);
        let b = strong_groebner(&polys(&r, &["2x", "3x"]), &o, DEFAULT_BUDGET).unwrap();
        assert_eq!(b.display(), vec!["x"]);
        let b = strong_groebner(&polys(&r, &["2", "x - 1"]), &o, DEFAULT_BUDGET).unwrap();
        assert_eq!(b.display(), vec!["2", "x + 1"]);
        assert!(!b.contains_one());
        assert!(b.contains(&Poly::parse(&r, "x - 1").unwrap()).unwrap());
        assert!(!b.contains(&Poly::parse(&r, "x").unwrap()).unwrap());
        let b = strong_groebner(&polys(&r, &["x"]), &o, DEFAULT_BUDGET).unwrap();
        assert!(!b.contains_one());
        let b = strong_groebner(&polys(&r, &["1"]), &o, DEFAULT_BUDGET).unwrap();
        assert!(b.contains_one());
    }

    #[test]
    fn integer_obstructions_are_found() {
        // ⟨2x+1, 3x+1⟩ contains 3(2x+1) - 2(3x+1) = 1
        let r = ring(&["x"]);
        let o = MonomialOrder::grevlex(&r);
        assert!(strong_groebner(&polys(&r, &["2x + 1", "3x + 1"]), &o, DEFAULT_BUDGET).unwrap().contains_one());
        // 2(2x+1) - 4x = 2 and (2x+1) - 2x = 1
        assert!(strong_groebner(&polys(&r, &["2x + 1", "4x"]), &o, DEFAULT_BUDGET).unwrap().contains_one());
        // ⟨x^2 + 1, 3⟩ is proper: ℤ/3[x]/(x^2+1) is a field
        let b = strong_groebner(&polys(&r, &["x^2 + 1", "3"]), &o, DEFAULT_BUDGET).unwrap();
        assert!(is_strong_basis(&b));
        assert!(!b.contains_one());
        assert_eq!(b.constant(), Some(Int::from(3)));
    }

    #[test]
    fn ideal_equality() {
        let r = ring(&["x", "y"]);
        let o = MonomialOrder::grevlex(&r);
        assert!(ideal_equal(&polys(&r, &["x", "y"]), &polys(&r, &["y", "x"]), &o, DEFAULT_BUDGET).unwrap());
        assert!(!ideal_equal(&polys(&r, &["2x"]), &polys(&r, &["x"]), &o, DEFAULT_BUDGET).unwrap());
        assert!(ideal_equal(&polys(&r, &["2", "x - 1"]), &polys(&r, &["2", "x + 1"]), &o, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn rational_examples() {
        let r = ring(&["x", "y"]);
        let o = MonomialOrder::lex(&r);
        assert!(rational_groebner(&polys(&r, &["2"]), &o, DEFAULT_BUDGET).unwrap().contains_one());
        let b = rational_groebner(&polys(&r, &["x*y - 1"]), &o, DEFAULT_BUDGET).unwrap();
        assert_eq!(b.display(), vec!["x*y - 1"]);
        let b = rational_groebner(&polys(&r, &["2x", "3y", "x + y"]), &o, DEFAULT_BUDGET).unwrap();
        assert_eq!(b.display(), vec!["y", "x"]);
        // over ℤ the same generators give a different (still proper) ideal
        let z = strong_groebner(&polys(&r, &["2x", "3y", "x + y"]), &o, DEFAULT_BUDGET).unwrap();
        assert!(!z.contains_one());
        assert!(is_strong_basis(&z));
    }

    #[test]
    fn modular_examples() {
        let r = ring(&["x", "y"]);
        let o = MonomialOrder::grevlex(&r);
        // ⟨2x+1, 3x+1⟩ = ⟨1⟩ over ℤ, hence modulo every prime
        for p in [2, 3, 5, DEFAULT_PRIME] {
            assert!(modular_groebner(&polys(&r, &["2x + 1", "3x + 1"]), &o, p, DEFAULT_BUDGET).unwrap().contains_one());
        }
        // ⟨x^2 + 1, 3⟩ collapses modulo 2 (3 is a unit) but not modulo 3
        let g = polys(&r, &["x^2 + 1", "3"]);
        assert!(modular_groebner(&g, &o, 2, DEFAULT_BUDGET).unwrap().contains_one());
        let b = modular_groebner(&g, &o, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(b.display(), vec!["x^2 + 1"]);
        // monic normalization: 2x - 1 modulo 7 is x + 3
        let b = modular_groebner(&polys(&r, &["2x - 1", "y^2"]), &o, 7, DEFAULT_BUDGET).unwrap();
        assert_eq!(b.display(), vec!["x + 3", "y^2"]);
        assert_eq!(b.domain(), Domain::Prime(7));
    }

    #[test]
    fn budget_is_enforced() {
        let r = ring(&["x", "y", "z"]);
        let o = MonomialOrder::grevlex(&r);
        let g = polys(&r, &["x^2*y - z^3 + 2", "x*y^2 - 3*z*x + y", "2*x*z^2 - y^3 + 5"]);
        assert!(matches!(strong_groebner(&g, &o, 1), Err(Error::BudgetExceeded(1))));
    }

    #[test]
    fn mismatched_rings_error() {
        let a = Poly::parse(&ring(&["x"]), "x").unwrap();
        let b = Poly::parse(&ring(&["y"]), "y").unwrap();
        assert!(matches!(
            strong_groebner(&[a.clone(), b.clone()], &MonomialOrder::lex(a.ring()), 10),
            Err(Error::RingMismatch)
        ));
    }
}
