//! Connected graphs up to isomorphism, by canonical-form deduplication.

use std::collections::BTreeSet;

use super::{Graph, VertexSet};

/// Upper-triangle adjacency bits of `g` under `perm` (old `v` sits at
/// position `perm[v - 1]`), pair `(i, j)` with `i < j` in row-major order.
fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut code = 0u64;
    for (u, v) in g.edges() {
        let (a, b) = (perm[u - 1].min(perm[v - 1]), perm[u - 1].max(perm[v - 1]));
        code |= 1u64 << pair_index(n, a, b);
    }
    code
}

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    // pairs (1,2),(1,3),..,(1,n),(2,3),.. numbered from the high end so that
    // a smaller code means earlier pairs are absent
    let before: usize = (1..a).map(|r| n - r).sum();
    let idx = before + (b - a - 1);
    n * (n - 1) / 2 - 1 - idx
}

/// Canonical code: the largest adjacency code over all relabelings that
/// place vertices in non-increasing degree order. Equal codes iff isomorphic.
/// Supports `n <= 11`.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical form supports at most 11 vertices");
    let mut by_degree: Vec<usize> = (1..=n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // vertex by_degree[i] may only take positions whose slot holds its degree
    let class: Vec<(usize, usize)> = (0..n)
        .map(|i| {
            let d = g.degree(by_degree[i]);
            let lo = (0..n).find(|&k| g.degree(by_degree[k]) == d).unwrap();
            let hi = (lo..n).take_while(|&k| g.degree(by_degree[k]) == d).last().unwrap() + 1;
            (lo, hi)
        })
        .collect();
    fn place(g: &Graph, by_degree: &[usize], class: &[(usize, usize)], i: usize, used: u64, perm: &mut [usize], best: &mut u64) {
        if i == by_degree.len() {
            *best = (*best).max(code_under(g, perm));
            return;
        }
        let (lo, hi) = class[i];
        for p in lo..hi {
            if used >> p & 1 == 0 {
                perm[by_degree[i] - 1] = p + 1;
                place(g, by_degree, class, i + 1, used | 1 << p, perm, best);
            }
        }
    }
    let mut perm = vec![0usize; n];
    let mut best = 0u64;
    place(g, &by_degree, &class, 0, 0, &mut perm, &mut best);
    best
}

/// Rebuilds the graph whose code under the identity labeling is `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n).expect("n within limits");
    for a in 1..=n {
        for b in a + 1..=n {
            if code >> pair_index(n, a, b) & 1 == 1 {
                g.link(a, b);
            }
        }
    }
    g
}

/// All connected graphs on exactly `n` vertices up to isomorphism, each in
/// its canonical labeling, ordered by canonical code.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    connected_codes(n).into_iter().map(|c| graph_from_code(n, c)).collect()
}

fn connected_codes(n: usize) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    if n == 0 {
        return out;
    }
    if n == 1 {
        out.insert(0);
        return out;
    }
    // every connected graph has a vertex whose removal keeps it connected
    for code in connected_codes(n - 1) {
        let base = graph_from_code(n - 1, code);
        for mask in 1u64..(1u64 << (n - 1)) {
            let mut g = Graph::empty(n).expect("n within limits");
            for (u, v) in base.edges() {
                g.link(u, v);
            }
            for u in VertexSet(mask).iter() {
                g.link(u, n);
            }
            out.insert(canonical_code(&g));
        }
    }
    out
}

/// Connected graphs on `1..=max_n` vertices, by size then canonical code.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    // OEIS A001349: connected graphs on n unlabeled nodes
    const COUNTS: [usize; 8] = [0, 1, 1, 2, 6, 21, 112, 853];

    #[test]
    fn counts_match_known_sequence() {
        for n in 1..=6 {
            assert_eq!(connected_graphs(n).len(), COUNTS[n], "n = {n}");
        }
    }

    #[test]
    #[ignore = "slow in debug builds"]
    fn counts_n7() {
        assert_eq!(connected_graphs(7).len(), COUNTS[7]);
    }

    #[test]
    fn canonical_code_is_relabeling_invariant() {
        let g = Graph::from_edges(6, &[(2, 3), (2, 4), (3, 4), (1, 2), (3, 6), (4, 5)]).unwrap();
        let c = canonical_code(&g);
        for perm in [[6, 5, 4, 3, 2, 1], [2, 1, 3, 5, 4, 6], [3, 6, 1, 2, 5, 4]] {
            assert_eq!(canonical_code(&g.relabel(&perm).unwrap()), c);
        }
        assert_ne!(canonical_code(&Graph::path(6)), c);
    }

    #[test]
    fn canonical_graph_round_trips() {
        for g in connected_graphs(5) {
            assert_eq!(canonical_code(&g), canonical_code(&graph_from_code(5, canonical_code(&g))));
            assert!(g.is_connected());
        }
    }
}
