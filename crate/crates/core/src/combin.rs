//! Subset and permutation iterators.

/// All `k`-element subsets of `0..n` as bitmasks, in increasing numeric order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit: u128 = 1u128 << n;
    let mut cur: u128 = if k == 0 { 0 } else { (1u128 << k) - 1 };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur as u64;
        if cur == 0 {
            done = true;
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= limit {
                done = true;
            }
        }
        Some(out)
    })
}

/// All `k`-element subsets of `0..n` as sorted index lists, in
/// lexicographic order.
pub fn lex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Permutations of `0..k` (Heap's algorithm).
pub fn permutations(k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut p: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    let mut i = 0;
    let mut first = true;
    std::iter::from_fn(move || {
        if first {
            first = false;
            return Some(p.clone());
        }
        while i < k {
            if c[i] < i {
                if i % 2 == 0 {
                    p.swap(0, i);
                } else {
                    p.swap(c[i], i);
                }
                c[i] += 1;
                i = 0;
                return Some(p.clone());
            }
            c[i] = 0;
            i += 1;
        }
        None
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(k_subsets(7, 3).count(), 35);
        assert_eq!(k_subsets(5, 0).count(), 1);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(6, 6).count(), 1);
        assert_eq!(k_subsets(64, 1).count(), 64);
        assert_eq!(permutations(4).count(), 24);
        assert_eq!(permutations(0).count(), 1);
    }

    #[test]
    fn subsets_are_increasing_and_sized() {
        let v: Vec<u64> = k_subsets(5, 2).collect();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert!(v.iter().all(|m| m.count_ones() == 2));
    }
}
