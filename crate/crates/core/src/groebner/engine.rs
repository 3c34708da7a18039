//! Buchberger completion over ℤ (strong bases) and ℚ.
//!
//! Polynomials are handled as term vectors whose monomials have been permuted
//! into precedence layout, sorted descending under the active order kind.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::poly::{compare_permuted, Monomial, OrderKind};

use super::Domain;

pub(crate) type Term = (Monomial, Int);

/// `a - c * m * g`, merged in order.
pub(crate) fn sub_mul(kind: OrderKind, a: &[Term], c: &Int, m: &Monomial, g: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let next_g = |j: usize| -> Term { (g[j].0.mul(m), &g[j].1 * c) };
    let mut pending: Option<Term> = if g.is_empty() { None } else { Some(next_g(0)) };
    while i < a.len() || pending.is_some() {
        let ord = match (&a.get(i), &pending) {
            (Some(x), Some(y)) => compare_permuted(kind, &x.0, &y.0),
            (Some(_), None) => Ordering::Greater,
            _ => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (mm, cc) = pending.take().unwrap();
                out.push((mm, -cc));
                j += 1;
                pending = (j < g.len()).then(|| next_g(j));
            }
            Ordering::Equal => {
                let (mm, cc) = pending.take().unwrap();
                let v = &a[i].1 - &cc;
                if !v.is_zero() {
                    out.push((mm, v));
                }
                i += 1;
                j += 1;
                pending = (j < g.len()).then(|| next_g(j));
            }
        }
    }
    out
}

fn scale(p: &[Term], c: &Int, m: &Monomial) -> Vec<Term> {
    p.iter().map(|(t, x)| (t.mul(m), x * c)).collect()
}

fn content(p: &[Term]) -> Int {
    let mut g = Int::ZERO;
    for (_, c) in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Coefficients reduced into `[0, p)`, zero terms dropped.
fn reduce_mod(p: Vec<Term>, modulus: &Int) -> Vec<Term> {
    p.into_iter()
        .filter_map(|(m, c)| {
            let r = c.div_rem_euclid(modulus).1;
            (!r.is_zero()).then_some((m, r))
        })
        .collect()
}

fn inverse_mod(c: &Int, modulus: &Int) -> Int {
    let (_, s, _) = c.ext_gcd(modulus);
    s.div_rem_euclid(modulus).1
}

/// Positive leading coefficient; over ℚ also primitive; modulo a prime
/// monic with coefficients in `[0, p)`.
pub(crate) fn normalize(domain: Domain, mut p: Vec<Term>) -> Vec<Term> {
    if let Domain::Prime(q) = domain {
        let modulus = Int::from(q as i64);
        let p = reduce_mod(p, &modulus);
        let Some(lc) = p.first().map(|t| t.1.clone()) else {
            return p;
        };
        if lc.is_one() {
            return p;
        }
        let inv = inverse_mod(&lc, &modulus);
        return p.into_iter().map(|(m, c)| (m, (&c * &inv).div_rem_euclid(&modulus).1)).collect();
    }
    if domain == Domain::Rationals {
        let g = content(&p);
        if !g.is_zero() && !g.is_one() {
            for t in &mut p {
                t.1 = t.1.div_exact(&g);
            }
        }
    }
    if p.first().is_some_and(|t| t.1.is_negative()) {
        for t in &mut p {
            t.1 = -&t.1;
        }
    }
    p
}

/// Full reduction of `p` by `reducers`.
///
/// Over ℤ a term `c*m` is reduced by `g` with leading term `b*n`, `n | m`,
/// when the Euclidean quotient of `c` by `b` is nonzero; the remainder stays
/// in `[0, |b|)`. Over ℚ any reducer with `n | m` eliminates the term after
/// cross-multiplying. Modulo a prime it is eliminated by the inverse of the
/// leading coefficient.
pub(crate) fn reduce(domain: Domain, kind: OrderKind, mut p: Vec<Term>, reducers: &[&[Term]]) -> Vec<Term> {
    let modulus = match domain {
        Domain::Prime(q) => {
            let m = Int::from(q as i64);
            p = reduce_mod(p, &m);
            Some(m)
        }
        _ => None,
    };
    let mut out: Vec<Term> = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (m, c) = (&p[start].0, &p[start].1);
        let mut best: Option<(usize, Int, Int)> = None;
        for (idx, g) in reducers.iter().enumerate() {
            let (lm, lc) = &g[0];
            if !lm.divides(m) {
                continue;
            }
            match domain {
                Domain::Integers => {
                    let (q, r) = c.div_rem_euclid(lc);
                    if q.is_zero() {
                        continue;
                    }
                    let better = match &best {
                        None => true,
                        Some((bi, _, br)) => r < *br || (r == *br && g.len() < reducers[*bi].len()),
                    };
                    if better {
                        best = Some((idx, q, r));
                    }
                }
                Domain::Rationals | Domain::Prime(_) => {
                    if best.as_ref().is_none_or(|(bi, _, _)| g.len() < reducers[*bi].len()) {
                        best = Some((idx, Int::ZERO, Int::ZERO));
                    }
                }
            }
        }
        let Some((idx, q, _)) = best else {
            out.push(p[start].clone());
            start += 1;
            continue;
        };
        let g = reducers[idx];
        let (lm, lc) = &g[0];
        let mq = m.div(lm).unwrap();
        match domain {
            Domain::Integers => {
                p = sub_mul(kind, &p[start..], &q, &mq, g);
            }
            Domain::Rationals => {
                let gg = lc.gcd(c);
                let (a, b) = (lc.div_exact(&gg), c.div_exact(&gg));
                let rest = if a.is_one() { p[start..].to_vec() } else { scale(&p[start..], &a, &Monomial::ONE) };
                if !a.is_one() {
                    for t in &mut out {
                        t.1 = &t.1 * &a;
                    }
                }
                p = sub_mul(kind, &rest, &b, &mq, g);
            }
            Domain::Prime(_) => {
                let modulus = modulus.as_ref().unwrap();
                let q = (c * &inverse_mod(lc, modulus)).div_rem_euclid(modulus).1;
                p = reduce_mod(sub_mul(kind, &p[start..], &q, &mq, g), modulus);
            }
        }
        start = 0;
    }
    if domain != Domain::Integers {
        out = normalize(domain, out);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum PairKind {
    Gcd,
    S,
}

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    sugar: u32,
    lcm_degree: u32,
    kind: PairKind,
    j: usize,
    i: usize,
    /// The pair is the only record of a basis element made redundant by the
    /// other; it must be processed even though one side is inactive.
    keep: bool,
}

struct Elem {
    terms: Vec<Term>,
    sugar: u32,
    active: bool,
}

pub(crate) struct Engine {
    domain: Domain,
    kind: OrderKind,
    elems: Vec<Elem>,
    queue: BinaryHeap<Reverse<Pair>>,
    budget: u64,
    spent: u64,
    unit: bool,
}

impl Engine {
    pub(crate) fn new(domain: Domain, kind: OrderKind, budget: u64) -> Engine {
        Engine { domain, kind, elems: Vec::new(), queue: BinaryHeap::new(), budget, spent: 0, unit: false }
    }

    pub(crate) fn has_unit(&self) -> bool {
        self.unit
    }

    pub(crate) fn pairs_reduced(&self) -> u64 {
        self.spent
    }

    fn active(&self) -> Vec<&[Term]> {
        self.elems.iter().filter(|e| e.active).map(|e| e.terms.as_slice()).collect()
    }

    /// Reduces `p` by the current basis and inserts the remainder if nonzero.
    pub(crate) fn add(&mut self, p: Vec<Term>) {
        if self.unit || p.is_empty() {
            return;
        }
        let sugar = p.iter().map(|t| t.0.degree()).max().unwrap_or(0);
        let h = reduce(self.domain, self.kind, p, &self.active());
        if !h.is_empty() {
            self.insert(h, sugar);
        }
    }

    fn lead_divides(&self, a: &Term, b: &Term) -> bool {
        a.0.divides(&b.0) && (self.domain.is_field() || a.1.divides(&b.1))
    }

    fn insert(&mut self, h: Vec<Term>, sugar: u32) {
        let h = normalize(self.domain, h);
        let k = self.elems.len();
        let (hm, hc) = h[0].clone();
        if hm.is_one() && (self.domain.is_field() || hc.is_one()) {
            self.unit = true;
            self.elems.push(Elem { terms: h, sugar, active: true });
            return;
        }
        for j in 0..k {
            if !self.elems[j].active {
                continue;
            }
            let (jm, jc) = self.elems[j].terms[0].clone();
            let keep = self.lead_divides(&h[0], &self.elems[j].terms[0]);
            let l = hm.lcm(&jm);
            let pair_sugar = (sugar + l.degree() - hm.degree()).max(self.elems[j].sugar + l.degree() - jm.degree());
            let coprime = hm.coprime(&jm) && (self.domain.is_field() || hc.gcd(&jc).is_one());
            if keep || !coprime {
                self.queue.push(Reverse(Pair { sugar: pair_sugar, lcm_degree: l.degree(), kind: PairKind::S, j, i: k, keep }));
            }
            if self.domain == Domain::Integers && !hc.divides(&jc) && !jc.divides(&hc) {
                self.queue.push(Reverse(Pair {
                    sugar: pair_sugar,
                    lcm_degree: l.degree(),
                    kind: PairKind::Gcd,
                    j,
                    i: k,
                    keep: false,
                }));
            }
            if keep {
                self.elems[j].active = false;
            }
        }
        self.elems.push(Elem { terms: h, sugar, active: true });
    }

    fn pair_poly(&self, pair: &Pair) -> Vec<Term> {
        let (f, g) = (&self.elems[pair.j].terms, &self.elems[pair.i].terms);
        let ((fm, fc), (gm, gc)) = (&f[0], &g[0]);
        let l = fm.lcm(gm);
        let (uf, ug) = (l.div(fm).unwrap(), l.div(gm).unwrap());
        match pair.kind {
            PairKind::S => {
                let lc = fc.lcm(gc);
                let (a, b) = (lc.div_exact(fc), lc.div_exact(gc));
                sub_mul(self.kind, &scale(f, &a, &uf), &b, &ug, g)
            }
            PairKind::Gcd => {
                let (_, s, t) = fc.ext_gcd(gc);
                sub_mul(self.kind, &scale(f, &s, &uf), &-t, &ug, g)
            }
        }
    }

    /// Processes pairs until none remain or a unit appears.
    pub(crate) fn complete(&mut self) -> Result<()> {
        while !self.unit {
            let Some(Reverse(pair)) = self.queue.pop() else {
                break;
            };
            if !pair.keep && !(self.elems[pair.i].active && self.elems[pair.j].active) {
                continue;
            }
            self.spent += 1;
            if self.spent > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let p = self.pair_poly(&pair);
            let h = reduce(self.domain, self.kind, p, &self.active());
            if !h.is_empty() {
                self.insert(h, pair.sugar);
            }
        }
        Ok(())
    }

    /// Interreduced basis of the active elements, sorted by leading term.
    pub(crate) fn finish(self) -> Vec<Vec<Term>> {
        let (domain, kind) = (self.domain, self.kind);
        if self.unit {
            return vec![vec![(Monomial::ONE, Int::ONE)]];
        }
        let mut items: Vec<Vec<Term>> = self.elems.into_iter().filter(|e| e.active).map(|e| e.terms).collect();
        interreduce(domain, kind, &mut items);
        items
    }
}

pub(crate) fn interreduce(domain: Domain, kind: OrderKind, items: &mut Vec<Vec<Term>>) {
    let divides = |a: &Term, b: &Term| a.0.divides(&b.0) && (domain.is_field() || a.1.divides(&b.1));
    items.sort_by(|a, b| compare_permuted(kind, &a[0].0, &b[0].0).then_with(|| a[0].1.cmp(&b[0].1)));
    let mut kept: Vec<Vec<Term>> = Vec::new();
    for f in items.drain(..) {
        if !kept.iter().any(|g| divides(&g[0], &f[0])) {
            kept.push(f);
        }
    }
    for idx in 0..kept.len() {
        let others: Vec<&[Term]> =
            kept.iter().enumerate().filter(|(j, _)| *j != idx).map(|(_, g)| g.as_slice()).collect();
        let f = match domain {
            // leading terms of a strong basis are kept; only tails are reduced
            Domain::Integers => {
                let mut f = vec![kept[idx][0].clone()];
                f.extend(reduce(domain, kind, kept[idx][1..].to_vec(), &others));
                f
            }
            // no other leading monomial divides this one, so a full reduction
            // only rewrites (and rescales) the tail
            Domain::Rationals | Domain::Prime(_) => reduce(domain, kind, kept[idx].clone(), &others),
        };
        kept[idx] = normalize(domain, f);
    }
    *items = kept;
}
