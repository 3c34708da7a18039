use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::order::{compare_permuted, MonomialOrder};
use super::{Monomial, Ring};
use crate::error::{Error, Result};
use crate::int::Int;

/// A polynomial with integer coefficients over a [`Ring`].
///
/// Terms are kept sorted by descending lexicographic monomial order with no
/// zero coefficients, so structural equality is polynomial equality.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, Int)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Poly {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: impl Into<Int>) -> Poly {
        Poly::monomial(ring, Monomial::ONE, c.into())
    }

    pub fn variable(ring: &Arc<Ring>, index: usize) -> Poly {
        assert!(index < ring.len(), "variable index out of range");
        Poly::monomial(ring, Monomial::var(index), Int::ONE)
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Int) -> Poly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly { ring: ring.clone(), terms }
    }

    /// Builds from arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Int)>) -> Poly {
        let mut acc: BTreeMap<Monomial, Int> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert(Int::ZERO) += &c;
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Int)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Int)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Int> {
        match self.terms.as_slice() {
            [] => Some(Int::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_unit())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> Int {
        self.terms.iter().fold(Int::ZERO, |g, (_, c)| g.gcd(c))
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(Monomial, Int)> {
        let perm = order.permutation();
        self.terms
            .iter()
            .max_by(|a, b| compare_permuted(order.kind, &a.0.permuted(&perm), &b.0.permuted(&perm)))
            .cloned()
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Int)> {
        let perm = order.permutation();
        let mut t = self.terms.clone();
        t.sort_by(|a, b| compare_permuted(order.kind, &b.0.permuted(&perm), &a.0.permuted(&perm)));
        t
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if Ring::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.combine(other, true))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn combine(&self, other: &Poly, subtract: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => y.0.cmp(&x.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if subtract { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { ring: self.ring.clone(), terms: out }
    }

    fn product(&self, other: &Poly) -> Poly {
        let mut acc: BTreeMap<Monomial, Int> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert(Int::ZERO) += &(ca * cb);
            }
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Int) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, x)| (*m, x * c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Int) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, x)| (t.mul(m), x * c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(&self.ring, 1);
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    /// Exact division by long division in lex order.
    ///
    /// Fails with [`Error::InexactDivision`] when `divisor` does not divide
    /// `self` in ℤ[vars].
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        self.check_ring(divisor)?;
        let Some((dm, dc)) = divisor.terms.first().cloned() else {
            return Err(Error::InexactDivision);
        };
        if let Some(c) = divisor.constant_value() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, x) in &self.terms {
                if !c.divides(x) {
                    return Err(Error::InexactDivision);
                }
                terms.push((*m, x.div_exact(&c)));
            }
            return Ok(Poly { ring: self.ring.clone(), terms });
        }
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let (Some(qm), true) = (m.div(&dm), dc.divides(&c)) else {
                return Err(Error::InexactDivision);
            };
            let qc = c.div_exact(&dc);
            rem = rem.combine(&divisor.mul_monomial(&qm, &qc), true);
            quotient.push((qm, qc));
        }
        Ok(Poly { ring: self.ring.clone(), terms: quotient })
    }

    /// Substitutes the given values; unassigned variables stay symbolic.
    pub fn evaluate(&self, assignment: &[(usize, Int)]) -> Poly {
        let mut vals: Vec<Option<&Int>> = vec![None; self.ring.len()];
        for (v, x) in assignment {
            vals[*v] = Some(x);
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = *m.exponents();
            let mut c = c.clone();
            for (v, val) in vals.iter().enumerate() {
                if let Some(x) = val {
                    if exps[v] > 0 {
                        c *= &x.pow(exps[v] as u32);
                        exps[v] = 0;
                    }
                }
            }
            (Monomial::from_exponents(&exps), c)
        });
        Poly::from_terms(&self.ring, terms)
    }

    /// Full evaluation at a point given for every ring variable.
    pub fn evaluate_all(&self, point: &[Int]) -> Int {
        assert_eq!(point.len(), self.ring.len(), "point dimension mismatch");
        let mut acc = Int::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, x) in point.iter().enumerate() {
                let e = m.exponent(v);
                if e > 0 {
                    t *= &x.pow(e as u32);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Rewrites into another ring that has all the variables in use.
    pub fn in_ring(&self, target: &Arc<Ring>) -> Result<Poly> {
        if Ring::same(&self.ring, target) {
            return Ok(self.clone());
        }
        let map: Vec<usize> = (0..self.ring.len())
            .map(|i| target.index_of(self.ring.name(i)))
            .collect::<Result<_>>()?;
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = [0u8; super::MAX_VARS];
            for (i, &t) in map.iter().enumerate() {
                exps[t] = m.exponent(i);
            }
            (Monomial::from_exponents(&exps), c.clone())
        });
        Ok(Poly::from_terms(target, terms))
    }

    /// Renders with explicit `*`, terms descending under `order`.
    pub fn display(&self, order: &MonomialOrder) -> String {
        render(&self.ring, &self.sorted_terms(order))
    }
}

fn render(ring: &Ring, terms: &[(Monomial, Int)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if !a.is_one() || m.is_one() {
            factors.push(a.to_string());
        }
        for v in 0..ring.len() {
            match m.exponent(v) {
                0 => {}
                1 => factors.push(ring.name(v).to_string()),
                e => factors.push(format!("{}^{e}", ring.name(v))),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.ring, &self.terms))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl serde::Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    /// Panics on ring mismatch; see [`Poly::try_add`].
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Int::from(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<Ring> {
        Ring::from_names(&["x0", "x1", "y0"]).unwrap()
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let r = ring();
        let x = r.var("x0").unwrap();
        let y = r.var("x1").unwrap();
        let s = &(&x + &y) * &(&x - &y);
        assert_eq!(s, &(&x * &x) - &(&y * &y));
        assert!((&s - &s).is_zero());
        assert_eq!(s.to_string(), "x0^2 - x1^2");
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = ring().var("x0").unwrap();
        let other = Ring::from_names(&["x0", "z"]).unwrap();
        let b = other.var("x0").unwrap();
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch)));
        assert_eq!(b.in_ring(&ring()).unwrap_err().to_string(), Error::UnknownVariable("z".into()).to_string());
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let x = r.var("x0").unwrap();
        let y = r.var("y0").unwrap();
        let f = &(&x + &y) * &(&(&x * &y) - &Poly::constant(&r, 3));
        assert_eq!(f.div_exact(&(&x + &y)).unwrap(), &(&x * &y) - &Poly::constant(&r, 3));
        assert!(matches!(f.div_exact(&(&x - &y)), Err(Error::InexactDivision)));
        assert!(matches!(x.scale(&Int::from(3)).div_exact(&Poly::constant(&r, 2)), Err(Error::InexactDivision)));
    }

    #[test]
    fn partial_evaluation() {
        let r = ring();
        let f = &(&r.var("x0").unwrap() * &r.var("y0").unwrap()) + &Poly::constant(&r, 1);
        let g = f.evaluate(&[(2, Int::from(3))]);
        assert_eq!(g.to_string(), "3*x0 + 1");
        assert_eq!(f.evaluate_all(&[Int::from(2), Int::ZERO, Int::from(5)]), Int::from(11));
    }

    #[test]
    fn leading_terms_depend_on_order() {
        let r = ring();
        let f = &r.var("x1").unwrap().pow(2) + &r.var("x0").unwrap();
        assert_eq!(f.leading_term(&MonomialOrder::lex(&r)).unwrap().0, Monomial::var(0));
        assert_eq!(
            f.leading_term(&MonomialOrder::grevlex(&r)).unwrap().0,
            Monomial::from_exponents(&[0, 2])
        );
        assert_eq!(f.display(&MonomialOrder::grevlex(&r)), "x1^2 + x0");
    }
}
