//! The labeling that turns a minimal completion set of a chordal graph into
//! an induced matching of the initial-ideal hypergraph.

use serde::Serialize;

use super::matching::Hypergraph;
use crate::binomial::initial_ideal;
use crate::error::{Error, Result};
use crate::graph::{is_chordal, is_completion_set, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingCertificate {
    /// `labeling[v - 1]` is the new label of vertex `v`.
    pub labeling: Vec<usize>,
    /// The completion set in the order the construction used.
    pub order: Vec<usize>,
    /// Label pairs `(t_i, t_i + 1)` standing for the edges `{x_{t_i}, y_{t_i+1}}`.
    pub matching: Vec<(usize, usize)>,
    pub k: usize,
    pub verified: bool,
}

fn union_neighbors(g: &Graph, vs: &[usize]) -> VertexSet {
    vs.iter().fold(VertexSet::EMPTY, |a, &v| a.union(g.neighbors(v)))
}

fn union_closed(g: &Graph, vs: impl Iterator<Item = usize>) -> VertexSet {
    vs.fold(VertexSet::EMPTY, |a, v| a.union(g.closed_neighbors(v)))
}

/// True if `v_i ∈ N(v_1) ∪ ... ∪ N(v_{i-1})` for every `i >= 2`.
pub fn has_neighbor_order(g: &Graph, order: &[usize]) -> bool {
    (1..order.len()).all(|i| union_neighbors(g, &order[..i]).contains(order[i]))
}

/// Orders `w` so that each vertex is adjacent to an earlier one, trying
/// start vertices in ascending order and then always taking the smallest
/// eligible vertex.
pub fn neighbor_order(g: &Graph, w: VertexSet) -> Option<Vec<usize>> {
    for s in w.iter() {
        let mut order = vec![s];
        let mut rest = w.without(s);
        while let Some(v) = rest.intersection(union_neighbors(g, &order)).first() {
            order.push(v);
            rest.remove(v);
        }
        if rest.is_empty() {
            return Some(order);
        }
    }
    None
}

/// True if `w` is a completion set and no `w \ {v}` is one.
pub fn is_minimal_completion_set(g: &Graph, w: VertexSet) -> bool {
    is_completion_set(g, w) && w.iter().all(|v| !is_completion_set(g, w.without(v)))
}

/// The smallest `u ∈ N(v_i)` outside `N(v_1) ∪ ... ∪ N(v_{i-1})` with no path
/// from `u` to `v_1` in `G[{v_1, ..., v_k} \ {v_i} ∪ {u}]`; `i` is 1-based
/// with `2 <= i <= k`.
pub fn lemnopath_witness(g: &Graph, order: &[usize], i: usize) -> Result<usize> {
    if i < 2 || i > order.len() {
        return Err(Error::Invalid(format!("step {i} outside 2..={}", order.len())));
    }
    let vi = order[i - 1];
    let earlier = union_neighbors(g, &order[..i - 1]);
    let others = VertexSet::from_vertices(order.iter().copied()).without(vi);
    g.neighbors(vi)
        .difference(earlier)
        .iter()
        .find(|&u| !g.connected_within(others.with(u), u, order[0]))
        .ok_or_else(|| Error::NotMinimalCompletionSet(order.to_vec()))
}

pub fn chordal_certificate(g: &Graph, w: VertexSet) -> Result<MatchingCertificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_chordal(g) {
        return Err(Error::NotChordal);
    }
    if w.is_empty() || !is_minimal_completion_set(g, w) {
        return Err(Error::NotMinimalCompletionSet(w.to_vec()));
    }
    let mut v = neighbor_order(g, w).ok_or_else(|| Error::Certificate("no neighbor order for the completion set".into()))?;
    let k = v.len();
    let n = g.n();
    let mut label = vec![0usize; n + 1];
    let mut matching = Vec::with_capacity(k);
    let mut u_prev: Option<usize> = None;
    let mut t_prev = 0usize;
    for i in 0..k {
        let vi = v[i];
        let others_closed = union_closed(g, v.iter().copied().filter(|&x| x != vi));
        let case_a = g.neighbors(vi).difference(others_closed).first();
        let t_i = if i == 0 {
            1
        } else if u_prev == Some(vi) {
            t_prev + 1
        } else {
            t_prev + 2
        };
        if label[vi] != 0 && label[vi] != t_i {
            return Err(Error::Certificate(format!("vertex {vi} already labeled {}", label[vi])));
        }
        label[vi] = t_i;
        let u_i = match case_a {
            Some(u) => u,
            None if i == 0 => {
                if k < 2 {
                    return Err(Error::Certificate("step 1 needs a second completion vertex".into()));
                }
                v[1]
            }
            None => {
                // u_i must be a later completion vertex with no path back to v_1
                let no_path_back = |u: usize| {
                    let earlier = union_neighbors(g, &v[..i]);
                    let rest = VertexSet::from_vertices(v.iter().copied()).without(vi);
                    g.neighbors(vi).contains(u) && !earlier.contains(u) && !g.connected_within(rest.with(u), u, v[0])
                };
                let j = (i + 1..k).find(|&j| no_path_back(v[j])).ok_or_else(|| {
                    Error::Certificate(format!("step {}: no later completion vertex avoids v_1", i + 1))
                })?;
                let moved = v.remove(j);
                v.insert(i + 1, moved);
                if !has_neighbor_order(g, &v) {
                    return Err(Error::Certificate(format!("step {}: rotation broke the neighbor order", i + 1)));
                }
                moved
            }
        };
        if label[u_i] != 0 {
            return Err(Error::Certificate(format!("vertex {u_i} already labeled {}", label[u_i])));
        }
        label[u_i] = t_i + 1;
        matching.push((t_i, t_i + 1));
        u_prev = Some(u_i);
        t_prev = t_i;
    }
    let mut next = matching.last().map_or(0, |m| m.1) + 1;
    for slot in label.iter_mut().skip(1).filter(|l| **l == 0) {
        *slot = next;
        next += 1;
    }
    let labeling: Vec<usize> = label[1..].to_vec();
    let verified = verify_certificate(g, &labeling, &matching)?;
    Ok(MatchingCertificate { labeling, order: v, matching, k, verified })
}

/// Relabels `g` and checks that `{x_{t_i}, y_{t_i+1}}` form an induced
/// matching of the hypergraph of the initial ideal.
pub fn verify_certificate(g: &Graph, labeling: &[usize], matching: &[(usize, usize)]) -> Result<bool> {
    let h = g.relabel(labeling)?;
    let n = g.n();
    let hyper = Hypergraph::from_ideal(&initial_ideal(&h)?);
    let edges: Vec<u64> = matching.iter().map(|&(a, b)| 1u64 << (a - 1) | 1u64 << (n + b - 1)).collect();
    Ok(hyper.is_induced_matching(&edges))
}
