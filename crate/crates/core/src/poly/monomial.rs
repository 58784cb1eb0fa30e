use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

/// Largest number of ring variables.
pub const MAX_VARS: usize = 32;

/// An exponent vector; variable `k` has exponent `exps[k]`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    deg: u16,
}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.exps.hash(h);
    }
}

impl Default for Monomial {
    fn default() -> Self {
        Monomial::one()
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], deg: 0 }
    }

    pub fn var(k: usize) -> Self {
        let mut m = Monomial::one();
        m.exps[k] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(e: &[u8]) -> Self {
        assert!(e.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::one();
        m.exps[..e.len()].copy_from_slice(e);
        m.deg = e.iter().map(|&x| x as u16).sum();
        m
    }

    /// Square-free monomial with the variables of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        let mut m = Monomial::one();
        for k in 0..MAX_VARS {
            if mask >> k & 1 == 1 {
                m.exps[k] = 1;
                m.deg += 1;
            }
        }
        m
    }

    pub fn exp(&self, k: usize) -> u8 {
        self.exps[k]
    }

    pub fn exponents(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Bit `k` set iff variable `k` occurs.
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .fold(0u64, |m, (k, &e)| if e > 0 { m | 1 << k } else { m })
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = *self;
        for k in 0..MAX_VARS {
            m.exps[k] = m.exps[k].checked_add(o.exps[k]).expect("exponent overflow");
        }
        m.deg += o.deg;
        m
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.deg <= o.deg && self.exps.iter().zip(o.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self | o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        let mut m = *o;
        for k in 0..MAX_VARS {
            m.exps[k] -= self.exps[k];
        }
        m.deg -= self.deg;
        m
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for k in 0..MAX_VARS {
            m.exps[k] = self.exps[k].max(o.exps[k]);
        }
        m.deg = m.exps.iter().map(|&x| x as u16).sum();
        m
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for k in 0..MAX_VARS {
            m.exps[k] = self.exps[k].min(o.exps[k]);
        }
        m.deg = m.exps.iter().map(|&x| x as u16).sum();
        m
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.support() & o.support() == 0
    }

    /// Pure lex with variable 0 largest.
    pub fn cmp_lex(&self, o: &Monomial) -> Ordering {
        self.exps.cmp(&o.exps)
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |k| k + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial::from_exponents(&[1, 2, 0]);
        let b = Monomial::from_exponents(&[0, 1, 1]);
        assert_eq!(a.mul(&b), Monomial::from_exponents(&[1, 3, 1]));
        assert_eq!(a.lcm(&b), Monomial::from_exponents(&[1, 2, 1]));
        assert_eq!(a.gcd(&b), Monomial::from_exponents(&[0, 1, 0]));
        assert!(b.gcd(&a).divides(&a));
        assert_eq!(b.quotient_of(&a.mul(&b)), a);
        assert!(!a.coprime(&b));
        assert_eq!(a.support(), 0b011);
        assert_eq!(Monomial::from_mask(0b101), Monomial::from_exponents(&[1, 0, 1]));
    }
}
