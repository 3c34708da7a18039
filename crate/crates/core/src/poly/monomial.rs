use std::cmp::Ordering;

use super::MAX_VARS;

/// Dense exponent vector over a ring's declared variables, with cached total
/// degree. The derived ordering is lexicographic with variable 0 highest.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    deg: u16,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS], deg: 0 };

    pub fn var(index: usize) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[index] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u8]) -> Monomial {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Monomial::ONE;
        m.exps[..exps.len()].copy_from_slice(exps);
        m.deg = exps.iter().map(|&e| e as u16).sum();
        m
    }

    pub fn exponent(&self, var: usize) -> u8 {
        self.exps[var]
    }

    pub fn exponents(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        m.deg += other.deg;
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] -= other.exps[i];
        }
        m.deg -= other.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
        }
        m.deg = m.exps.iter().map(|&e| e as u16).sum();
        m
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Moves the exponent of variable `i` to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut m = Monomial::ONE;
        for (i, &p) in perm.iter().enumerate() {
            m.exps[p] = self.exps[i];
        }
        m.deg = self.deg;
        m
    }

    /// Graded reverse lexicographic comparison with variable 0 highest.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {
                for i in (0..MAX_VARS).rev() {
                    let (a, b) = (self.exps[i], other.exps[i]);
                    if a != b {
                        return b.cmp(&a);
                    }
                }
                Ordering::Equal
            }
            o => o,
        }
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_exponents(&[2, 1, 0]);
        let b = Monomial::from_exponents(&[1, 0, 0]);
        assert!(b.divides(&a));
        assert_eq!(a.div(&b), Some(Monomial::from_exponents(&[1, 1, 0])));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.lcm(&Monomial::from_exponents(&[0, 3, 1])).degree(), 6);
        assert!(Monomial::var(0).coprime(&Monomial::var(1)));
    }

    #[test]
    fn grevlex_orders_by_degree_then_reverse() {
        let x0x2 = Monomial::from_exponents(&[1, 0, 1]);
        let x1sq = Monomial::from_exponents(&[0, 2, 0]);
        // same degree; last differing variable x2: x0*x2 has more of it, so it is smaller
        assert_eq!(x0x2.cmp_grevlex(&x1sq), Ordering::Less);
        assert_eq!(Monomial::var(2).cmp_grevlex(&Monomial::ONE), Ordering::Greater);
        // lex: x0*x2 > x1^2
        assert!(x0x2 > x1sq);
    }
}
