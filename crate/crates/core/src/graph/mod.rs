//! Simple labeled graphs on the vertex set `1..=n` and the combinatorics
//! needed for binomial edge ideals: cutsets, neighbor completion, completion
//! sets, domination, chordality and induced paths.

mod completion;
mod cutset;
pub mod enumerate;
mod io;
mod structure;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use completion::{closure, closure_in_order, completion_numbers, is_completion_set, CompletionNumbers};
pub use cutset::{cutsets, is_cutset, Cutset};
pub use io::{decode_graph6, encode_graph6, parse_edge_list, parse_graph};
pub use structure::{
    cone_apex, domination_number, free_vertices, is_chordal, longest_induced_path,
    structure_queries, ConeApex, StructureReport,
};

/// Largest supported vertex count (adjacency rows are `u64` bit masks).
pub const MAX_VERTICES: usize = 64;

/// A set of vertices stored as a bit mask; bit `v - 1` stands for vertex `v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0u64, |m, v| m | (1u64 << (v - 1))))
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << (v - 1));
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << (v - 1))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Self) -> Self {
        VertexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        VertexSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        VertexSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    /// Smallest vertex in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&x| x == 0 || x > 64) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(VertexSet::from_vertices(v))
    }
}

/// A simple graph on the vertex set `1..=n`.
///
/// Immutable once built; every operation returns a new graph. Labels matter:
/// the lex order on `x_1 > ... > x_n > y_1 > ... > y_n` is tied to them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 1-based edges, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("n within limits");
        for u in 1..=n {
            for v in u + 1..=n {
                g.link(u, v);
            }
        }
        g
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("n within limits");
        for u in 1..n {
            g.link(u, u + 1);
        }
        g
    }

    /// Cycle `1 - 2 - ... - n - 1` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.link(1, n);
        }
        g
    }

    /// Star `K_{1,k}` with center 1 and leaves `2..=k+1`.
    pub fn star(k: usize) -> Self {
        let mut g = Graph::empty(k + 1).expect("n within limits");
        for v in 2..=k + 1 {
            g.link(1, v);
        }
        g
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.adj[u - 1] |= 1u64 << (v - 1);
        self.adj[v - 1] |= 1u64 << (u - 1);
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v - 1])
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v - 1]).with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// True if the vertices of `s` are pairwise adjacent.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// Connected components of the subgraph induced on `within`, ordered by
    /// their smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within.0;
        let mut comps = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[v] & within.0 & !comp;
                comp |= new;
                frontier |= new;
            }
            rest &= !comp;
            comps.push(VertexSet(comp));
        }
        comps
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// True if every connected component is a clique.
    pub fn is_disjoint_union_of_cliques(&self) -> bool {
        self.components().into_iter().all(|c| self.is_clique(c))
    }

    /// True if some path inside `within` connects `a` and `b`.
    pub fn connected_within(&self, within: VertexSet, a: usize, b: usize) -> bool {
        if !within.contains(a) || !within.contains(b) {
            return false;
        }
        self.components_within(within)
            .into_iter()
            .any(|c| c.contains(a) && c.contains(b))
    }

    /// The induced subgraph on `keep`, relabeled `1..=|keep|` in ascending
    /// order, together with the map from new labels to old ones.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut g = Graph::empty(old.len()).expect("subgraph is smaller");
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.link(i + 1, j + 1);
                }
            }
        }
        (g, old)
    }

    /// `G \ {v}` with the remaining vertices relabeled in ascending order.
    pub fn remove_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertices().without(v)))
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Invalid(format!(
                "relabeling has {} entries for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let seen = VertexSet::from_vertices(perm.iter().copied().filter(|&p| p >= 1 && p <= self.n));
        if seen.len() != self.n {
            return Err(Error::Invalid("relabeling is not a permutation".into()));
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.link(perm[u - 1], perm[v - 1]);
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Cone over `self`: a new apex `n + 1` adjacent to every vertex.
    pub fn cone(&self) -> Result<Graph> {
        let mut g = Graph::empty(self.n + 1)?;
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for u in 1..=self.n {
            g.link(u, self.n + 1);
        }
        Ok(g)
    }

    /// Whisker graph: vertex `n + i` is a pendant attached to base vertex `i`.
    pub fn whisker(&self) -> Result<Graph> {
        let mut g = Graph::empty(2 * self.n)?;
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for u in 1..=self.n {
            g.link(u, u + self.n);
        }
        Ok(g)
    }

    /// `G_v`: joins every pair of neighbors of `v`.
    pub fn neighbor_completion(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        let nb = self.neighbors(v);
        for u in nb.iter() {
            g.adj[u - 1] |= nb.without(u).0;
        }
        Ok(g)
    }

    /// Bit rows of the adjacency relation (row `v - 1` holds `N(v)`).
    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} ", self.n)?;
        for (k, (u, v)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::path(4).edges(), vec![(1, 2), (2, 3), (3, 4)]);
        assert_eq!(Graph::cycle(4).edge_count(), 4);
        assert_eq!(Graph::star(3).degree(1), 3);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(Error::LoopEdge(1))));
        assert!(matches!(
            Graph::from_edges(3, &[(1, 2), (2, 1)]),
            Err(Error::DuplicateEdge(1, 2))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(1, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        ));
    }

    #[test]
    fn star_center_completion_is_complete() {
        let g = Graph::star(3).neighbor_completion(1).unwrap();
        assert!(g.is_complete());
    }

    #[test]
    fn free_vertex_completion_is_identity() {
        let g = Graph::path(4);
        assert_eq!(g.neighbor_completion(1).unwrap(), g);
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::from_edges(5, &[(1, 2), (4, 5)]).unwrap();
        assert_eq!(g.components().len(), 3);
        let (h, map) = g.induced(VertexSet::from_vertices([2, 4, 5]));
        assert_eq!(map, vec![2, 4, 5]);
        assert_eq!(h.edges(), vec![(2, 3)]);
    }

    #[test]
    fn whisker_and_cone_labels() {
        let w = Graph::complete(2).whisker().unwrap();
        assert_eq!(w.edges(), vec![(1, 2), (1, 3), (2, 4)]);
        let c = Graph::path(3).cone().unwrap();
        assert_eq!(c.neighbors(4).len(), 3);
    }
}
