use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::SquarefreeIdeal;

/// `v(I)` of a square-free monomial ideal with a witness monomial `m` and
/// the associated prime `(I : m)`, both as variable masks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialV {
    pub v: u32,
    pub witness: u64,
    pub prime: u64,
}

/// Searches square-free `m` over the generator support by degree, then mask.
/// For square-free `I`, `(I : m)` only depends on `supp(m)`, a prime colon
/// is automatically associated, and variables outside every generator never
/// change the colon, so this search is exhaustive.
pub fn v_monomial(i: &SquarefreeIdeal) -> Result<MonomialV> {
    if i.is_zero() || i.is_unit() {
        return Err(Error::NotSquarefree);
    }
    let support: Vec<u32> = (0..64).filter(|k| i.support() >> k & 1 == 1).collect();
    let s = support.len();
    for d in 0..=s {
        // Gosper's hack over index subsets of size d
        let mut idx: u64 = if d == 0 { 0 } else { (1u64 << d) - 1 };
        loop {
            let m = (0..s).filter(|k| idx >> k & 1 == 1).fold(0u64, |acc, k| acc | 1u64 << support[k]);
            if !i.contains_monomial(m) {
                let c = i.colon(m);
                if c.is_prime() {
                    let prime = c.generators().iter().fold(0, |a, g| a | g);
                    return Ok(MonomialV { v: d as u32, witness: m, prime });
                }
            }
            if d == 0 {
                break;
            }
            let low = idx & idx.wrapping_neg();
            let ripple = idx + low;
            idx = (((ripple ^ idx) >> 2) / low) | ripple;
            if idx >> s != 0 {
                break;
            }
        }
    }
    Err(Error::Invalid("no monomial witness found".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        // <x1*y2> on x1, x2, y1, y2
        let i = SquarefreeIdeal::new(4, vec![0b1001]);
        let r = v_monomial(&i).unwrap();
        assert_eq!(r.v, 1);
        assert_eq!(r.witness, 0b0001);
        assert_eq!(r.prime, 0b1000);
    }

    #[test]
    fn prime_ideal_has_v_zero() {
        assert_eq!(v_monomial(&SquarefreeIdeal::new(3, vec![0b001, 0b100])).unwrap().v, 0);
        assert!(v_monomial(&SquarefreeIdeal::new(3, vec![])).is_err());
    }

    #[test]
    fn matches_brute_force_over_all_masks() {
        // oracle: scan every subset of all variables, prime check by hand
        let cases = [vec![0b0011, 0b0110, 0b1100], vec![0b111, 0b1000], vec![0b0101, 0b1010, 0b0011]];
        for gens in cases {
            let i = SquarefreeIdeal::new(4, gens.clone());
            let mut best = u32::MAX;
            for m in 0u64..16 {
                if gens.iter().any(|g| g & !m == 0) {
                    continue;
                }
                let colon: Vec<u64> = gens.iter().map(|g| g & !m).collect();
                let minimal: Vec<u64> = colon
                    .iter()
                    .copied()
                    .filter(|&c| !colon.iter().any(|&o| o != c && o & !c == 0))
                    .collect();
                if minimal.iter().all(|c| c.count_ones() == 1) {
                    best = best.min(m.count_ones());
                }
            }
            assert_eq!(v_monomial(&i).unwrap().v, best, "{gens:?}");
        }
    }
}
