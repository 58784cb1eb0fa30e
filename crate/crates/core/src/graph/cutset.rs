use serde::Serialize;

use super::{Graph, VertexSet};

/// A cutset `T` together with the connected components of `G \ T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cutset {
    pub set: VertexSet,
    pub components: Vec<VertexSet>,
}

impl Cutset {
    /// Number of components `c(T)`.
    pub fn component_count(&self) -> usize {
        self.components.len()
    }
}

/// True if every `t` in `t_set` is a cut vertex of `G \ (T \ {t})`.
pub fn is_cutset(g: &Graph, t_set: VertexSet) -> bool {
    let all = g.vertices();
    if !t_set.is_subset(all) {
        return false;
    }
    t_set.iter().all(|t| {
        let with_t = all.difference(t_set.without(t));
        let before = g.components_within(with_t).len();
        let after = g.components_within(with_t.without(t)).len();
        after > before
    })
}

/// All cutsets of `g` (the empty set included), ordered by size and then by
/// bit mask. Exhaustive over the `2^n` subsets.
pub fn cutsets(g: &Graph) -> Vec<Cutset> {
    let n = g.n();
    let all = g.vertices();
    let mut out: Vec<Cutset> = (0u64..(1u64 << n))
        .map(VertexSet)
        .filter(|&t| is_cutset(g, t))
        .map(|t| Cutset { set: t, components: g.components_within(all.difference(t)) })
        .collect();
    out.sort_by_key(|c| (c.set.len(), c.set.0));
    out
}
