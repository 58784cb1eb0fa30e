use serde::Serialize;

/// Edges are variable masks of a simple hypergraph (no edge contains another).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypergraph {
    pub edges: Vec<u64>,
}

impl Hypergraph {
    pub fn from_ideal(i: &crate::poly::SquarefreeIdeal) -> Self {
        Hypergraph { edges: i.generators().to_vec() }
    }

    /// Pairwise disjoint edges whose union contains no further edge.
    pub fn is_induced_matching(&self, m: &[u64]) -> bool {
        let mut union = 0u64;
        for (a, &e) in m.iter().enumerate() {
            if !self.edges.contains(&e) || m[..a].iter().any(|&f| f & e != 0) {
                return false;
            }
            union |= e;
        }
        self.edges.iter().all(|&e| m.contains(&e) || e & !union != 0)
    }
}

/// Largest `Σ (|e| - 1)` over induced matchings, with a maximizing matching.
pub fn induced_matching_bound(h: &Hypergraph) -> (u32, Vec<u64>) {
    fn dfs(h: &Hypergraph, start: usize, chosen: &mut Vec<u64>, union: u64, score: u32, best: &mut (u32, Vec<u64>)) {
        if score > best.0 {
            *best = (score, chosen.clone());
        }
        for k in start..h.edges.len() {
            let e = h.edges[k];
            if e & union != 0 {
                continue;
            }
            let u = union | e;
            // any other edge inside the union stays inside every larger union
            let blocked = h.edges.iter().any(|&f| f & !u == 0 && f != e && !chosen.contains(&f));
            if blocked {
                continue;
            }
            chosen.push(e);
            dfs(h, k + 1, chosen, u, score + e.count_ones() - 1, best);
            chosen.pop();
        }
    }
    let mut best = (0, Vec::new());
    dfs(h, 0, &mut Vec::new(), 0, 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let h = Hypergraph { edges: vec![0b11] };
        assert_eq!(induced_matching_bound(&h).0, 1);
    }

    #[test]
    fn path_of_three_edges() {
        // a-b, b-c, c-d: only one edge fits (a-b with c-d induces b-c)
        let h = Hypergraph { edges: vec![0b0011, 0b0110, 0b1100] };
        assert_eq!(induced_matching_bound(&h).0, 1);
        assert!(!h.is_induced_matching(&[0b0011, 0b1100]));
        // a 3-edge counts twice
        let h = Hypergraph { edges: vec![0b0111, 0b1000_0000 | 0b1000] };
        assert_eq!(induced_matching_bound(&h).0, 3);
    }
}
