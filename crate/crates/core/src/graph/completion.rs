use serde::Serialize;

use super::{Graph, VertexSet};

/// `G_V`: neighbor completion folded over `vs` in ascending label order.
pub fn closure(g: &Graph, vs: VertexSet) -> Graph {
    closure_in_order(g, vs.iter())
}

/// Neighbor completion folded over `order` exactly as given.
pub fn closure_in_order<I: IntoIterator<Item = usize>>(g: &Graph, order: I) -> Graph {
    order
        .into_iter()
        .fold(g.clone(), |h, v| h.neighbor_completion(v).expect("vertex in range"))
}

/// True if `G_W` is a disjoint union of complete graphs.
pub fn is_completion_set(g: &Graph, w: VertexSet) -> bool {
    closure(g, w).is_disjoint_union_of_cliques()
}

/// Extreme cardinalities over the minimal completion sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletionNumbers {
    pub min_comp: usize,
    pub max_comp: usize,
    /// All minimal completion sets, by size and then bit mask.
    pub minimal_sets: Vec<VertexSet>,
}

/// Enumerates subsets by ascending cardinality. Completing any vertex of a
/// disjoint union of cliques changes nothing, so supersets of completion sets
/// are completion sets and a set is minimal iff it contains none found earlier.
pub fn completion_numbers(g: &Graph) -> CompletionNumbers {
    let n = g.n();
    let mut masks: Vec<u64> = (0u64..(1u64 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let mut minimal: Vec<VertexSet> = Vec::new();
    for m in masks {
        let w = VertexSet(m);
        if minimal.iter().any(|s| s.is_subset(w)) {
            continue;
        }
        if is_completion_set(g, w) {
            minimal.push(w);
        }
    }
    let min_comp = minimal.iter().map(|s| s.len()).min().unwrap_or(0);
    let max_comp = minimal.iter().map(|s| s.len()).max().unwrap_or(0);
    CompletionNumbers { min_comp, max_comp, minimal_sets: minimal }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cube() -> Graph {
        Graph::from_edges(
            8,
            &[(1, 2), (1, 4), (1, 5), (2, 3), (2, 6), (3, 4), (3, 7), (4, 8), (5, 6), (5, 8), (6, 7), (7, 8)],
        )
        .unwrap()
    }

    #[test]
    fn empty_closure_is_identity() {
        let g = Graph::cycle(5);
        assert_eq!(closure(&g, VertexSet::EMPTY), g);
    }

    #[test]
    fn cube_closure_over_one_face_is_complete() {
        assert!(closure(&cube(), VertexSet::from_vertices([1, 2, 3, 4])).is_complete());
    }

    #[test]
    fn completions_commute_on_p4() {
        let g = Graph::path(4);
        for i in 1..=4 {
            for j in 1..=4 {
                let a = g.neighbor_completion(i).unwrap().neighbor_completion(j).unwrap();
                let b = g.neighbor_completion(j).unwrap().neighbor_completion(i).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn union_of_cliques_needs_nothing() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(2)).unwrap();
        let c = completion_numbers(&g);
        assert_eq!((c.min_comp, c.max_comp), (0, 0));
        assert_eq!(c.minimal_sets, vec![VertexSet::EMPTY]);
    }

    #[test]
    fn whisker_needs_the_base() {
        for base in [Graph::complete(2), Graph::path(3), Graph::complete(3)] {
            let n = base.n();
            let c = completion_numbers(&base.whisker().unwrap());
            assert_eq!((c.min_comp, c.max_comp), (n, n));
            assert_eq!(c.minimal_sets, vec![VertexSet::full(n)]);
        }
    }

    #[test]
    fn p4_minimal_sets() {
        // {2} alone leaves 3-4 hanging off the triangle {1,2,3}
        let c = completion_numbers(&Graph::path(4));
        assert!(!is_completion_set(&Graph::path(4), VertexSet::from_vertices([2])));
        assert_eq!(c.minimal_sets, vec![VertexSet::from_vertices([2, 3])]);
    }

    proptest! {
        #[test]
        fn closure_is_order_independent(
            edges in proptest::collection::vec((1usize..=7, 1usize..=7), 0..15),
            mask in 0u64..128,
            seed in any::<u64>(),
        ) {
            let mut g = Graph::empty(7).unwrap();
            for (u, v) in edges {
                if u != v { g.link(u, v); }
            }
            let w = VertexSet(mask);
            let mut order = w.to_vec();
            let reference = closure(&g, w);
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            for _ in 0..20 {
                order.shuffle(&mut rng);
                prop_assert_eq!(&closure_in_order(&g, order.iter().copied()), &reference);
            }
        }
    }
}
