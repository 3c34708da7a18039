//! Canonical labelling of small graphs.
//!
//! The fast path is individualization-refinement: the vertex partition is
//! refined by neighbour counts until stable, a vertex of the first
//! non-singleton cell is individualized, and the search recurses. Every leaf
//! is a vertex ordering; the canonical form is the relabelling whose
//! adjacency code is largest among the leaves. The reference path takes the
//! largest code over all `n!` orderings.

use crate::combin::permutations;
use crate::graph::Graph;

/// Upper-triangle adjacency bits under `order` (position -> vertex), column
/// by column as in graph6, packed into words.
fn code(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut words = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                words[k / 64] |= 1u64 << (63 - k % 64);
            }
            k += 1;
        }
    }
    words
}

fn apply(g: &Graph, order: &[usize]) -> Graph {
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

/// Splits cells by the number of neighbours each vertex has in every cell,
/// until no cell splits. New cells are ordered by their signature, which
/// makes the result independent of vertex names.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (g.neighbor_mask(v) & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|(_, v)| *v).collect());
                    start = k;
                }
            }
        }
        let done = next.len() == cells.len();
        *cells = next;
        if done {
            return;
        }
    }
}

fn search(g: &Graph, mut cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    refine(g, &mut cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let c = code(g, &order);
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            *best = Some((c, order));
        }
        return;
    };
    for &v in &cells[target] {
        let mut branch = cells.clone();
        let rest: Vec<usize> = cells[target].iter().copied().filter(|&u| u != v).collect();
        branch.splice(target..=target, [vec![v], rest]);
        search(g, branch, best);
    }
}

/// A canonical relabelling: isomorphic graphs map to the same graph.
pub fn canonical_form(g: &Graph) -> Graph {
    if g.n() <= 1 {
        return g.clone();
    }
    let mut best = None;
    search(g, vec![(0..g.n()).collect()], &mut best);
    apply(g, &best.expect("search reaches a leaf").1)
}

/// Canonical relabelling by exhaustive search over all orderings; only for
/// small graphs.
pub fn canonical_form_bruteforce(g: &Graph) -> Graph {
    let best = permutations(g.n())
        .map(|order| (code(g, &order), order))
        .max()
        .expect("at least one ordering");
    apply(g, &best.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn relabellings_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let graphs = [Graph::cycle(8), Graph::path(6), Graph::complete_bipartite(3, 3), Graph::star(4)];
        for g in graphs {
            let c = canonical_form(&g);
            for _ in 0..10 {
                let mut p: Vec<usize> = (0..g.n()).collect();
                p.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.relabel(&p)), c);
            }
        }
    }

    #[test]
    fn brute_force_is_canonical() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let h = g.relabel(&[4, 2, 0, 1, 3]);
        assert_eq!(canonical_form_bruteforce(&g), canonical_form_bruteforce(&h));
        assert_ne!(canonical_form_bruteforce(&g), canonical_form_bruteforce(&Graph::path(5)));
    }
}
