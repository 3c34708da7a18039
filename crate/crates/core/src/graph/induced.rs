//! Induced-subgraph search and odd-hole detection.

use super::{bits, Graph};
use crate::combin::{k_subsets, permutations};

/// Searches `host` for an induced copy of `pattern` by backtracking.
///
/// Pattern vertices are placed in a connectivity-first order; a host vertex
/// is a candidate for the next pattern vertex only if its degree is large
/// enough and its adjacency to every already-placed host vertex matches the
/// pattern exactly. Returns the sorted host vertex set of the first embedding.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    let order = placement_order(pattern);
    // For position t: mask over positions < t that must be adjacent.
    let required: Vec<u64> = (0..k)
        .map(|t| {
            (0..t)
                .filter(|&s| pattern.has_edge(order[t], order[s]))
                .fold(0u64, |m, s| m | 1 << s)
        })
        .collect();
    let degrees: Vec<usize> = order.iter().map(|&p| pattern.degree(p)).collect();

    let mut image = vec![0usize; k];
    if extend(host, &required, &degrees, &mut image, 0, 0) {
        let mut w = image;
        w.sort_unstable();
        Some(w)
    } else {
        None
    }
}

fn placement_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.n();
    let mut order = Vec::with_capacity(k);
    let mut placed = 0u64;
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (pattern.neighbor_mask(v) & placed).count_ones(),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        order.push(next);
        placed |= 1 << next;
    }
    order
}

fn extend(
    host: &Graph,
    required: &[u64],
    degrees: &[usize],
    image: &mut [usize],
    t: usize,
    used: u64,
) -> bool {
    if t == image.len() {
        return true;
    }
    'candidates: for h in bits(host.all_vertices_mask() & !used) {
        if host.degree(h) < degrees[t] {
            continue;
        }
        let adj = host.neighbor_mask(h);
        for s in 0..t {
            let want = required[t] >> s & 1 == 1;
            if (adj >> image[s] & 1 == 1) != want {
                continue 'candidates;
            }
        }
        image[t] = h;
        if extend(host, required, degrees, image, t + 1, used | 1 << h) {
            return true;
        }
    }
    false
}

/// Isomorphism test for two small graphs.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<_> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<_> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db && contains_induced(a, b).is_some()
}

/// Exhaustive reference search: every `|pattern|`-subset of the host, each
/// compared to the pattern under every vertex permutation.
pub fn contains_induced_bruteforce(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    let target = pattern.edge_count();
    for mask in k_subsets(host.n(), k) {
        let sub = host.induced_by_mask(mask);
        if sub.edge_count() != target {
            continue;
        }
        if permutations(k).any(|p| sub.relabel(&p) == *pattern) {
            return Some(bits(mask).collect());
        }
    }
    None
}

/// Whether the subgraph induced by `mask` is a single cycle.
pub fn is_induced_cycle(g: &Graph, mask: u64) -> bool {
    mask.count_ones() >= 3
        && bits(mask).all(|v| (g.neighbor_mask(v) & mask).count_ones() == 2)
        && g.mask_connected(mask)
}

/// Finds an induced cycle of odd length at least 7 (an odd hole) by
/// enumerating vertex subsets of odd size `7, 9, ..`. Exponential in `n`;
/// intended for small graphs.
pub fn find_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    (7..=g.n()).step_by(2).find_map(|k| {
        k_subsets(g.n(), k)
            .find(|&m| is_induced_cycle(g, m))
            .map(|m| bits(m).collect())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::atlas;

    #[test]
    fn containment_examples() {
        let gem = atlas("gem").unwrap().graph;
        assert_eq!(contains_induced(&gem, &gem), Some(vec![0, 1, 2, 3, 4]));
        let paw = atlas("paw").unwrap().graph;
        assert_eq!(contains_induced(&Graph::complete(4), &paw), None);
        let p4 = atlas("P4").unwrap().graph;
        let w = contains_induced(&Graph::cycle(7), &p4).unwrap();
        assert!(isomorphic(&Graph::cycle(7).induced_subgraph(&w).unwrap(), &p4));
        assert_eq!(contains_induced_bruteforce(&Graph::cycle(7), &p4), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn odd_holes() {
        assert_eq!(find_odd_hole(&Graph::cycle(5)), None);
        assert_eq!(find_odd_hole(&Graph::cycle(7)), Some((0..7).collect()));
        assert_eq!(find_odd_hole(&Graph::cycle(8)), None);
        assert_eq!(find_odd_hole(&Graph::cycle(9)), Some((0..9).collect()));
        let c7_pendant = Graph::cycle(7).with_new_vertex(1).unwrap();
        assert_eq!(find_odd_hole(&c7_pendant), Some((0..7).collect()));
    }
}
