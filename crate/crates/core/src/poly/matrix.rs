use std::collections::HashMap;
use std::sync::Arc;

use super::{Poly, Ring};
use crate::combin::{k_subsets, lex_subsets};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::int::Int;
use crate::linalg::IntMatrix;

/// A square matrix of polynomials over one ring.
#[derive(Clone, PartialEq, Eq)]
pub struct SymMatrix {
    ring: Arc<Ring>,
    n: usize,
    entries: Vec<Poly>,
}

impl SymMatrix {
    pub fn from_fn(ring: &Arc<Ring>, n: usize, mut f: impl FnMut(usize, usize) -> Poly) -> SymMatrix {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let p = f(i, j);
                assert!(Ring::same(p.ring(), ring), "entry from a foreign ring");
                entries.push(p);
            }
        }
        SymMatrix { ring: ring.clone(), n, entries }
    }

    /// Parses a whitespace-separated table, one row per line.
    pub fn parse(ring: &Arc<Ring>, table: &str) -> Result<SymMatrix> {
        let rows: Vec<Vec<&str>> = table
            .lines()
            .map(|l| l.split_whitespace().collect::<Vec<_>>())
            .filter(|r| !r.is_empty())
            .collect();
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::PolyParse(format!("matrix table is not square ({n} rows)")));
        }
        let mut entries = Vec::with_capacity(n * n);
        for r in &rows {
            for cell in r {
                entries.push(Poly::parse(ring, cell)?);
            }
        }
        Ok(SymMatrix { ring: ring.clone(), n, entries })
    }

    pub fn from_int(ring: &Arc<Ring>, m: &IntMatrix) -> SymMatrix {
        assert_eq!(m.rows(), m.cols());
        SymMatrix::from_fn(ring, m.rows(), |i, j| Poly::constant(ring, m.get(i, j).clone()))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.n + j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Substitutes values into every entry.
    pub fn evaluate(&self, assignment: &[(usize, Int)]) -> SymMatrix {
        SymMatrix {
            ring: self.ring.clone(),
            n: self.n,
            entries: self.entries.iter().map(|p| p.evaluate(assignment)).collect(),
        }
    }

    /// The integer matrix, if every entry is constant.
    pub fn to_int_matrix(&self) -> Option<IntMatrix> {
        let vals: Option<Vec<Int>> = self.entries.iter().map(Poly::constant_value).collect();
        let vals = vals?;
        Some(IntMatrix::from_fn(self.n, self.n, |i, j| vals[i * self.n + j].clone()))
    }

    /// Determinant of the submatrix on `rows` x `cols` (equal lengths).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Poly {
        assert_eq!(rows.len(), cols.len(), "minor needs as many rows as columns");
        let sub = SymMatrix::from_fn(&self.ring, rows.len(), |i, j| self.get(rows[i], cols[j]).clone());
        sub.determinant()
    }

    /// Determinant by memoized cofactor expansion over column subsets.
    pub fn determinant(&self) -> Poly {
        if self.n == 0 {
            return Poly::constant(&self.ring, 1);
        }
        let rows: Vec<usize> = (0..self.n).collect();
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        self.minors_on_rows(&rows).remove(&full).unwrap()
    }

    /// `level[S]` = det of rows `rows[..|S|]` on columns `S`, built row by row
    /// expanding along the last row.
    fn minors_on_rows(&self, rows: &[usize]) -> HashMap<u64, Poly> {
        let mut level: HashMap<u64, Poly> = HashMap::from([(0u64, Poly::constant(&self.ring, 1))]);
        for (depth, &r) in rows.iter().enumerate() {
            let mut next = HashMap::new();
            for cols in k_subsets(self.n, depth + 1) {
                let mut acc = Poly::zero(&self.ring);
                for (p, j) in bits(cols).enumerate() {
                    let entry = self.get(r, j);
                    let sub = &level[&(cols & !(1u64 << j))];
                    if entry.is_zero() || sub.is_zero() {
                        continue;
                    }
                    let term = entry * sub;
                    acc = if (depth + p) % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                next.insert(cols, acc);
            }
            level = next;
        }
        level
    }

    /// Determinant by plain recursive Laplace expansion along the first row.
    pub fn determinant_laplace(&self) -> Poly {
        fn rec(m: &SymMatrix, rows: &[usize], cols: &[usize]) -> Poly {
            if rows.is_empty() {
                return Poly::constant(&m.ring, 1);
            }
            let mut acc = Poly::zero(&m.ring);
            for (p, &c) in cols.iter().enumerate() {
                let e = m.get(rows[0], c);
                if e.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let t = e * &rec(m, &rows[1..], &rest);
                acc = if p % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
        let idx: Vec<usize> = (0..self.n).collect();
        rec(self, &idx, &idx)
    }

    /// Determinant by fraction-free (Bareiss) elimination with exact
    /// polynomial division.
    pub fn determinant_bareiss(&self) -> Result<Poly> {
        let n = self.n;
        if n == 0 {
            return Ok(Poly::constant(&self.ring, 1));
        }
        let mut a: Vec<Vec<Poly>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut prev = Poly::constant(&self.ring, 1);
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(s) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(Poly::zero(&self.ring));
                };
                a.swap(k, s);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -&d } else { d })
    }

    /// All `i x i` minors in lexicographic order of (row subset, column
    /// subset): `C(n, i)^2` polynomials, zeros included.
    pub fn minors(&self, i: usize) -> Result<Vec<Poly>> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, max: self.n });
        }
        let col_sets = lex_subsets(self.n, i);
        let mut out = Vec::with_capacity(col_sets.len() * col_sets.len());
        for rows in lex_subsets(self.n, i) {
            let table = self.minors_on_rows(&rows);
            for cols in &col_sets {
                let mask = cols.iter().fold(0u64, |m, &c| m | (1u64 << c));
                out.push(table[&mask].clone());
            }
        }
        Ok(out)
    }
}

impl std::fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect()).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// `D(G, X) = diag(x0, .., x{n-1}) + D(G)` over the ring `x0..x{n-1}`.
pub fn generalized_distance_matrix(g: &Graph) -> Result<SymMatrix> {
    let d = g.distances()?;
    let ring = Ring::diagonal(g.n())?;
    Ok(SymMatrix::from_fn(&ring, g.n(), |i, j| {
        if i == j {
            Poly::variable(&ring, i)
        } else {
            Poly::constant(&ring, d[i][j] as i64)
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_and_p3() {
        let k2 = generalized_distance_matrix(&Graph::complete(2)).unwrap();
        assert_eq!(k2.determinant().to_string(), "x0*x1 - 1");
        let p3 = generalized_distance_matrix(&Graph::path(3)).unwrap();
        let m1 = p3.minors(1).unwrap();
        assert_eq!(m1.len(), 9);
        assert_eq!(m1[1].to_string(), "1");
        assert_eq!(p3.minors(2).unwrap().len(), 9);
        assert!(p3.minors(4).is_err());
        let det = p3.determinant();
        assert_eq!(det, p3.determinant_bareiss().unwrap());
        assert_eq!(det, p3.determinant_laplace());
        // at X = 0 the determinant is det D(P3) = 4
        assert_eq!(det.evaluate_all(&[Int::ZERO, Int::ZERO, Int::ZERO]), Int::from(4));
    }

    #[test]
    fn minors_are_in_lex_order() {
        let ring = Ring::diagonal(5).unwrap();
        let m = SymMatrix::from_fn(&ring, 5, |i, j| if i == j { Poly::variable(&ring, i) } else { Poly::constant(&ring, (i * 5 + j) as i64) });
        let minors = m.minors(3).unwrap();
        let sets = lex_subsets(5, 3);
        let mut k = 0;
        for r in &sets {
            for c in &sets {
                assert_eq!(minors[k], m.minor(r, c));
                k += 1;
            }
        }
    }

    #[test]
    fn bareiss_pivots_past_zeros() {
        let ring = Ring::diagonal(2).unwrap();
        let t = "0 x0\nx1 0";
        let m = SymMatrix::parse(&ring, t).unwrap();
        assert_eq!(m.determinant_bareiss().unwrap().to_string(), "-x0*x1");
        assert_eq!(m.determinant().to_string(), "-x0*x1");
    }
}
