//! Castelnuovo–Mumford regularity of `S/J_G` through the initial ideal, and
//! induced-matching lower bounds.

mod certificate;
mod hochster;
mod matching;

pub use certificate::{
    chordal_certificate, has_neighbor_order, is_minimal_completion_set, lemnopath_witness, neighbor_order,
    verify_certificate, MatchingCertificate,
};
pub use hochster::{hochster_regularity, HochsterOptions, RegResult};
pub use matching::{induced_matching_bound, Hypergraph};

use crate::binomial::initial_ideal;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_REG_CAP: usize = 7;

/// `reg(S/J_G)`, read off `in_<(J_G)` (its regularity agrees since the
/// initial ideal is square-free). `cap_n` bounds the vertex count.
pub fn reg_binomial_edge(g: &Graph, cap_n: usize, opts: &HochsterOptions) -> Result<RegResult> {
    if g.n() > cap_n {
        return Err(Error::CapExceeded { what: "vertices for regularity", got: g.n(), cap: cap_n });
    }
    hochster_regularity(&initial_ideal(g)?, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_and_complete_graphs() {
        let o = HochsterOptions::default();
        for n in 2..=6 {
            // reg of a path is its length, of a complete graph is 1
            assert_eq!(reg_binomial_edge(&Graph::path(n), 7, &o).unwrap().reg, n as u32 - 1);
            assert_eq!(reg_binomial_edge(&Graph::complete(n), 7, &o).unwrap().reg, 1);
        }
        assert!(reg_binomial_edge(&Graph::path(9), 7, &o).is_err());
    }
}
