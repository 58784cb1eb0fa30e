use serde::Serialize;

use super::{Graph, VertexSet};

/// Grows induced paths from every start vertex. `visit(path, edges)` sees
/// each induced path; the return value is true as soon as a chordless cycle
/// of length at least 4 closes.
fn induced_paths(g: &Graph, visit: &mut dyn FnMut(VertexSet, usize)) -> bool {
    fn grow(
        g: &Graph,
        first: usize,
        last: usize,
        path: VertexSet,
        edges: usize,
        visit: &mut dyn FnMut(VertexSet, usize),
    ) -> bool {
        visit(path, edges);
        let mut found = false;
        for u in g.neighbors(last).difference(path).iter() {
            let back = g.neighbors(u).intersection(path);
            if back == VertexSet::singleton(last) {
                found |= grow(g, first, u, path.with(u), edges + 1, visit);
            } else if edges >= 2 && back == VertexSet::from_vertices([first, last]) {
                found = true;
            }
        }
        found
    }
    let mut found = false;
    for v in 1..=g.n() {
        found |= grow(g, v, v, VertexSet::singleton(v), 0, visit);
    }
    found
}

/// No induced cycle of length 4 or more.
pub fn is_chordal(g: &Graph) -> bool {
    !induced_paths(g, &mut |_, _| {})
}

/// `ℓ(G)`: the number of edges of a longest induced path.
pub fn longest_induced_path(g: &Graph) -> usize {
    let mut best = 0;
    induced_paths(g, &mut |_, e| best = best.max(e));
    best
}

/// Vertices whose neighborhood is a clique, i.e. lying in a single maximal clique.
pub fn free_vertices(g: &Graph) -> Vec<usize> {
    (1..=g.n()).filter(|&v| g.is_clique(g.neighbors(v))).collect()
}

/// `γ(G)`: size of a smallest dominating set.
pub fn domination_number(g: &Graph) -> usize {
    let all = g.vertices();
    let mut masks: Vec<u64> = (0u64..(1u64 << g.n())).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks
        .into_iter()
        .map(VertexSet)
        .find(|d| d.iter().fold(*d, |acc, v| acc.union(g.neighbors(v))) == all)
        .map_or(0, |d| d.len())
}

/// A universal vertex and whether the rest of the graph is complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConeApex {
    pub apex: usize,
    pub rest_complete: bool,
}

/// The smallest `v` with `N[v] = V(G)`, if any. Every apex gives the same
/// `rest_complete` verdict since `G \ v` is complete iff `G` is.
pub fn cone_apex(g: &Graph) -> Option<ConeApex> {
    let all = g.vertices();
    (1..=g.n()).find(|&v| g.closed_neighbors(v) == all).map(|apex| ConeApex {
        apex,
        rest_complete: g.is_clique(all.without(apex)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub chordal: bool,
    pub longest_induced_path: usize,
    pub free_vertices: Vec<usize>,
    pub components: Vec<VertexSet>,
    pub domination_number: usize,
    pub cone: Option<ConeApex>,
}

pub fn structure_queries(g: &Graph) -> StructureReport {
    StructureReport {
        chordal: is_chordal(g),
        longest_induced_path: longest_induced_path(g),
        free_vertices: free_vertices(g),
        components: g.components(),
        domination_number: domination_number(g),
        cone: cone_apex(g),
    }
}
