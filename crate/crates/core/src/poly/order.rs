use std::cmp::Ordering;

use serde::Serialize;

use super::{Monomial, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    Lex,
    GradedReverseLex,
}

/// A monomial order: a kind plus a variable precedence (highest first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    /// Variable indices from highest to lowest precedence.
    pub precedence: Vec<usize>,
}

impl MonomialOrder {
    /// Declaration order of `ring` as precedence.
    pub fn new(kind: OrderKind, ring: &Ring) -> MonomialOrder {
        MonomialOrder { kind, precedence: (0..ring.len()).collect() }
    }

    pub fn grevlex(ring: &Ring) -> MonomialOrder {
        MonomialOrder::new(OrderKind::GradedReverseLex, ring)
    }

    pub fn lex(ring: &Ring) -> MonomialOrder {
        MonomialOrder::new(OrderKind::Lex, ring)
    }

    /// Lex with the `x` block first, then the remaining variables, each block
    /// in declaration order.
    pub fn lex_x_first(ring: &Ring) -> MonomialOrder {
        let (mut xs, rest): (Vec<usize>, Vec<usize>) =
            (0..ring.len()).partition(|&i| ring.name(i).starts_with('x'));
        xs.extend(rest);
        MonomialOrder { kind: OrderKind::Lex, precedence: xs }
    }

    /// Position of each variable in the precedence list; maps exponent
    /// vectors into a layout where the order compares positions directly.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm = vec![0; self.precedence.len()];
        for (pos, &v) in self.precedence.iter().enumerate() {
            perm[v] = pos;
        }
        perm
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let perm = self.permutation();
        compare_permuted(self.kind, &a.permuted(&perm), &b.permuted(&perm))
    }
}

/// Compares monomials already laid out in precedence order.
pub fn compare_permuted(kind: OrderKind, a: &Monomial, b: &Monomial) -> Ordering {
    match kind {
        OrderKind::Lex => a.cmp(b),
        OrderKind::GradedReverseLex => a.cmp_grevlex(b),
    }
}
