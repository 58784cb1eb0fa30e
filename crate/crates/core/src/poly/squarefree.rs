use serde::Serialize;

use super::field::Field;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::{Poly, Ring};
use super::ideal::Ideal;
use crate::error::{Error, Result};

/// A square-free monomial ideal; each generator is the bit mask of its
/// variables. Generators are kept minimal and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SquarefreeIdeal {
    nvars: usize,
    gens: Vec<u64>,
}

/// Drops masks that contain another mask, sorts and dedups.
pub fn minimalize(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut out: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !out.iter().any(|&g| g & !m == 0) {
            out.push(m);
        }
    }
    out.sort_unstable();
    out
}

impl SquarefreeIdeal {
    pub fn new(nvars: usize, gens: Vec<u64>) -> Self {
        assert!(nvars <= 64);
        SquarefreeIdeal { nvars, gens: minimalize(gens) }
    }

    /// From monomials, failing on a non-square-free one.
    pub fn from_monomials(nvars: usize, ms: &[Monomial]) -> Result<Self> {
        if ms.iter().any(|m| !m.is_squarefree()) {
            return Err(Error::NotSquarefree);
        }
        Ok(SquarefreeIdeal::new(nvars, ms.iter().map(|m| m.support()).collect()))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.contains(&0)
    }

    /// Generated by variables only.
    pub fn is_prime(&self) -> bool {
        !self.is_unit() && self.gens.iter().all(|g| g.count_ones() == 1)
    }

    /// Union of the generator supports.
    pub fn support(&self) -> u64 {
        self.gens.iter().fold(0, |a, g| a | g)
    }

    pub fn contains_monomial(&self, mask: u64) -> bool {
        self.gens.iter().any(|&g| g & !mask == 0)
    }

    /// `(I : m)` for the square-free monomial with support `mask`.
    pub fn colon(&self, mask: u64) -> SquarefreeIdeal {
        SquarefreeIdeal::new(self.nvars, self.gens.iter().map(|&g| g & !mask).collect())
    }

    pub fn intersect(&self, other: &SquarefreeIdeal) -> SquarefreeIdeal {
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &a in &self.gens {
            for &b in &other.gens {
                out.push(a | b);
            }
        }
        SquarefreeIdeal::new(self.nvars.max(other.nvars), out)
    }

    /// Minimal primes as variable masks: the minimal transversals of the
    /// generator supports, built one generator at a time.
    pub fn minimal_primes(&self) -> Vec<u64> {
        let mut covers: Vec<u64> = vec![0];
        for &g in &self.gens {
            let mut next = Vec::new();
            for &c in &covers {
                if c & g != 0 {
                    next.push(c);
                } else {
                    let mut bits = g;
                    while bits != 0 {
                        let b = bits & bits.wrapping_neg();
                        next.push(c | b);
                        bits &= bits - 1;
                    }
                }
            }
            covers = minimalize(next);
        }
        covers
    }

    pub fn display(&self, ring: &Ring) -> Vec<String> {
        self.gens.iter().map(|&g| ring.fmt_monomial(&Monomial::from_mask(g))).collect()
    }

    pub fn to_ideal<F: Field>(&self, field: F, ring: Ring, order: MonomialOrder) -> Ideal<F> {
        let gens = self.gens.iter().map(|&g| Poly::monomial(&field, Monomial::from_mask(g))).collect();
        Ideal::new(field, ring, order, gens)
    }
}
