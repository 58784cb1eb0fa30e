use std::collections::BTreeMap;

use itertools::Itertools;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;

use crate::binomial::initial_ideal;
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, Graph};
use crate::poly::Rationals;
use crate::vnumber::{v_monomial, v_of};

/// Largest `n` swept over every permutation.
pub const EXHAUSTIVE_CAP: usize = 7;

#[derive(Clone, Debug)]
pub struct LabelingOptions {
    /// Random labelings to try instead of all of them. Required above
    /// [`EXHAUSTIVE_CAP`].
    pub sample: Option<usize>,
    pub seed: u64,
    /// How many labelings get `v(J_G)` recomputed (spread evenly, plus the
    /// extreme ones).
    pub v_checks: usize,
}

impl Default for LabelingOptions {
    fn default() -> Self {
        LabelingOptions { sample: None, seed: 0, v_checks: 12 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelingTable {
    pub graph: String,
    pub n: usize,
    pub labelings: usize,
    pub exhaustive: bool,
    pub v: u32,
    pub v_in_min: u32,
    pub v_in_max: u32,
    pub histogram: BTreeMap<u32, usize>,
    /// `labeling[u - 1]` is the new label of `u`.
    pub argmin: Vec<usize>,
    pub argmax: Vec<usize>,
    pub v_checked: usize,
    pub v_constant: bool,
}

/// `v(in_<(J_G))` over relabelings of `g`.
pub fn labeling_sweep(g: &Graph, opts: &LabelingOptions) -> Result<LabelingTable> {
    let n = g.n();
    let perms: Vec<Vec<usize>> = match opts.sample {
        None if n > EXHAUSTIVE_CAP => {
            return Err(Error::CapExceeded { what: "vertices for an exhaustive labeling sweep", got: n, cap: EXHAUSTIVE_CAP })
        }
        None => (1..=n).permutations(n).collect(),
        Some(k) => {
            let mut rng = StdRng::seed_from_u64(opts.seed);
            let mut p: Vec<usize> = (1..=n).collect();
            std::iter::once(p.clone())
                .chain((1..k).map(|_| {
                    p.shuffle(&mut rng);
                    p.clone()
                }))
                .collect()
        }
    };
    let v = v_of(g, Rationals)?;
    let mut histogram = BTreeMap::new();
    let mut vin = Vec::with_capacity(perms.len());
    for p in &perms {
        let d = v_monomial(&initial_ideal(&g.relabel(p)?)?)?.v;
        *histogram.entry(d).or_insert(0) += 1;
        vin.push(d);
    }
    let (imin, imax) = (position_of(&vin, |a, b| a < b), position_of(&vin, |a, b| a > b));
    let step = (perms.len() / opts.v_checks.max(1)).max(1);
    let mut checked: Vec<usize> = (0..perms.len()).step_by(step).take(opts.v_checks).collect();
    checked.extend([imin, imax]);
    checked.sort_unstable();
    checked.dedup();
    let mut v_constant = true;
    for &k in &checked {
        v_constant &= v_of(&g.relabel(&perms[k])?, Rationals)? == v;
    }
    Ok(LabelingTable {
        graph: encode_graph6(g),
        n,
        labelings: perms.len(),
        exhaustive: opts.sample.is_none(),
        v,
        v_in_min: vin[imin],
        v_in_max: vin[imax],
        histogram,
        argmin: perms[imin].clone(),
        argmax: perms[imax].clone(),
        v_checked: checked.len(),
        v_constant,
    })
}

/// First index whose value beats every other under `better`.
fn position_of(xs: &[u32], better: impl Fn(u32, u32) -> bool) -> usize {
    (1..xs.len()).fold(0, |best, k| if better(xs[k], xs[best]) { k } else { best })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_constant() {
        let t = labeling_sweep(&Graph::complete(3), &LabelingOptions::default()).unwrap();
        assert_eq!(t.labelings, 6);
        assert_eq!(t.v, 0);
        assert!(t.v_constant);
        assert_eq!(t.v_in_min, t.v_in_max);
    }

    #[test]
    fn sampling_is_seeded() {
        let o = LabelingOptions { sample: Some(20), seed: 7, v_checks: 2 };
        let a = labeling_sweep(&Graph::path(5), &o).unwrap();
        let b = labeling_sweep(&Graph::path(5), &o).unwrap();
        assert_eq!(a.histogram, b.histogram);
        assert_eq!(a.argmax, b.argmax);
        assert!(labeling_sweep(&Graph::path(8), &LabelingOptions::default()).is_err());
    }
}
