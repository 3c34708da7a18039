//! Determinants by cofactor expansion over column subsets.
//!
//! This path shares no code with the elimination in `snf`, so gcd-of-minors
//! computed here serves as an independent check on invariant factors.

use std::collections::HashMap;

use super::IntMatrix;
use crate::combin::k_subsets;
use crate::error::{Error, Result};
use crate::graph::bits;
use crate::int::Int;

/// All `k x k` minors on rows `rows[..k]`, keyed by column bitmask.
///
/// `level[S]` holds the determinant of rows `rows[..|S|]` and columns `S`
/// (increasing order), expanding along the last row.
pub(crate) fn minors_on_rows(a: &IntMatrix, rows: &[usize]) -> HashMap<u64, Int> {
    let mut level: HashMap<u64, Int> = HashMap::from([(0u64, Int::ONE)]);
    for (depth, &r) in rows.iter().enumerate() {
        let mut next = HashMap::new();
        for cols in k_subsets(a.cols(), depth + 1) {
            let mut acc = Int::ZERO;
            // column j at position p within `cols` carries sign (-1)^(depth + p)
            for (p, j) in bits(cols).enumerate() {
                let entry = a.get(r, j);
                if entry.is_zero() {
                    continue;
                }
                let sub = &level[&(cols & !(1u64 << j))];
                if sub.is_zero() {
                    continue;
                }
                let term = entry * sub;
                if (depth + p) % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            next.insert(cols, acc);
        }
        level = next;
    }
    level
}

/// Δ_i: gcd of all `i x i` minors (0 when they all vanish).
pub fn delta(a: &IntMatrix, i: usize) -> Result<Int> {
    let max = a.rows().min(a.cols());
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    let mut g = Int::ZERO;
    for rmask in k_subsets(a.rows(), i) {
        let rows: Vec<usize> = bits(rmask).collect();
        for det in minors_on_rows(a, &rows).values() {
            g = g.gcd(det);
            if g.is_one() {
                return Ok(g);
            }
        }
    }
    Ok(g)
}

/// Determinant of a square integer matrix.
pub fn integer_determinant(a: &IntMatrix) -> Int {
    assert_eq!(a.rows(), a.cols(), "determinant of a non-square matrix");
    let n = a.rows();
    if n == 0 {
        return Int::ONE;
    }
    let rows: Vec<usize> = (0..n).collect();
    minors_on_rows(a, &rows).remove(&a_full_mask(n)).unwrap()
}

fn a_full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_examples() {
        let p3 = IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]);
        assert_eq!(delta(&p3, 1).unwrap(), Int::ONE);
        assert_eq!(delta(&p3, 2).unwrap(), Int::ONE);
        assert_eq!(delta(&p3, 3).unwrap(), Int::from(4));
        assert!(delta(&p3, 4).is_err());
        assert!(delta(&p3, 0).is_err());
        let z = IntMatrix::zeros(2, 3);
        assert_eq!(delta(&z, 2).unwrap(), Int::ZERO);
    }

    #[test]
    fn determinant_small() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(integer_determinant(&m), Int::from(-2));
        let m = IntMatrix::from_rows(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]);
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(integer_determinant(&m), Int::ZERO);
        let p3 = IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]);
        assert_eq!(integer_determinant(&p3), Int::from(4));
    }
}
