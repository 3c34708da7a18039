use serde::Serialize;

use super::IntMatrix;
use crate::int::Int;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnfResult {
    /// Positive invariant factors `f_1 | f_2 | ... | f_r`, `r` = rank.
    pub invariant_factors: Vec<Int>,
    /// Unimodular `L`, `R` with `L * A * R = diag(f_1, .., f_r, 0, ..)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_transform: Option<IntMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_transform: Option<IntMatrix>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Number of invariant factors equal to one.
    pub fn unit_count(&self) -> usize {
        self.invariant_factors.iter().filter(|f| f.is_one()).count()
    }

    /// `∏_{j<=i} f_j` for `i <= rank`, else 0.
    pub fn delta(&self, i: usize) -> Int {
        if i > self.rank() {
            return Int::ZERO;
        }
        self.invariant_factors[..i].iter().fold(Int::ONE, |acc, f| &acc * f)
    }
}

struct Work {
    m: IntMatrix,
    left: Option<IntMatrix>,
    right: Option<IntMatrix>,
}

impl Work {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        if let Some(l) = &mut self.left {
            l.swap_rows(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.m.swap_cols(a, b);
        if let Some(r) = &mut self.right {
            r.swap_cols(a, b);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, f: &Int) {
        self.m.add_row_multiple(dst, src, f);
        if let Some(l) = &mut self.left {
            l.add_row_multiple(dst, src, f);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, f: &Int) {
        self.m.add_col_multiple(dst, src, f);
        if let Some(r) = &mut self.right {
            r.add_col_multiple(dst, src, f);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.m.negate_row(i);
        if let Some(l) = &mut self.left {
            l.negate_row(i);
        }
    }

    /// Smallest nonzero |entry| in the trailing block starting at `(t, t)`.
    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(Int, usize, usize)> = None;
        for i in t..self.m.rows() {
            for j in t..self.m.cols() {
                let v = self.m.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let a = v.abs();
                if best.as_ref().is_none_or(|(b, _, _)| a < *b) {
                    let unit = a.is_one();
                    best = Some((a, i, j));
                    if unit {
                        return best.map(|(_, i, j)| (i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    /// Smallest nonzero |entry| among the pivot, its column below and its row
    /// to the right.
    fn smallest_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (self.m.get(t, t).abs(), t, t);
        let mut consider = |v: &Int, i: usize, j: usize| {
            if !v.is_zero() && (best.0.is_zero() || v.abs() < best.0) {
                best = (v.abs(), i, j);
            }
        };
        for i in t + 1..self.m.rows() {
            consider(self.m.get(i, t), i, t);
        }
        for j in t + 1..self.m.cols() {
            consider(self.m.get(t, j), t, j);
        }
        (best.1, best.2)
    }

    /// Reduces column `t` below and row `t` right of the pivot by Euclidean
    /// division; returns true when both are entirely zero.
    fn eliminate_cross(&mut self, t: usize) -> bool {
        let mut clear = true;
        let p = self.m.get(t, t).clone();
        for i in t + 1..self.m.rows() {
            let v = self.m.get(i, t);
            if v.is_zero() {
                continue;
            }
            let (q, r) = v.div_rem_euclid(&p);
            self.add_row(i, t, &-q);
            clear &= r.is_zero();
        }
        for j in t + 1..self.m.cols() {
            let v = self.m.get(t, j);
            if v.is_zero() {
                continue;
            }
            let (q, r) = v.div_rem_euclid(&p);
            self.add_col(j, t, &-q);
            clear &= r.is_zero();
        }
        clear
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let p = self.m.get(t, t);
        (t + 1..self.m.rows())
            .find(|&i| (t + 1..self.m.cols()).any(|j| !p.divides(self.m.get(i, j))))
    }
}

/// Smith normal form by pivoting on the smallest nonzero entry.
///
/// Each step moves the smallest remaining |entry| to the diagonal, clears its
/// row and column by Euclidean division (re-pivoting whenever a remainder is
/// smaller), and repairs divisibility by adding an offending row into the
/// pivot row. Signs are absorbed into the left transform.
pub fn snf(a: &IntMatrix, want_transforms: bool) -> SnfResult {
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = Work {
        m: a.clone(),
        left: want_transforms.then(|| IntMatrix::identity(rows)),
        right: want_transforms.then(|| IntMatrix::identity(cols)),
    };
    let mut factors = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((i, j)) = w.smallest_in_block(t) else {
            break;
        };
        w.swap_rows(t, i);
        w.swap_cols(t, j);
        loop {
            if !w.eliminate_cross(t) {
                let (i, j) = w.smallest_in_cross(t);
                w.swap_rows(t, i);
                w.swap_cols(t, j);
                continue;
            }
            match w.non_divisible_row(t) {
                Some(i) => w.add_row(t, i, &Int::ONE),
                None => break,
            }
        }
        if w.m.get(t, t).is_negative() {
            w.negate_row(t);
        }
        factors.push(w.m.get(t, t).clone());
    }
    SnfResult {
        invariant_factors: factors,
        left_transform: w.left,
        right_transform: w.right,
    }
}
