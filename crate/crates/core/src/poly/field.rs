use std::fmt::{self, Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// A coefficient field. Elements are plain values; the field value carries
/// any context they need (the characteristic).
pub trait Field: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    /// Sign and absolute value for printing: `(negative, |a|)`.
    fn fmt_parts(&self, a: &Self::Elem) -> (bool, String);
    /// Parses a decimal integer or `p/q` fraction.
    fn parse(&self, s: &str) -> Option<Self::Elem>;
    fn tag(&self) -> FieldTag;
}

/// Serializable name of a coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    Rationals,
    Prime(u32),
}

impl Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rationals => write!(f, "Q"),
            FieldTag::Prime(p) => write!(f, "GF:{p}"),
        }
    }
}

impl std::str::FromStr for FieldTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldTag::Rationals);
        }
        let p = s
            .strip_prefix("GF:")
            .or_else(|| s.strip_prefix("gf:"))
            .ok_or_else(|| format!("unknown field {s:?}; expected Q or GF:p"))?;
        let p: u32 = p.parse().map_err(|_| format!("bad characteristic {p:?}"))?;
        if !(2..1 << 31).contains(&p) || !(2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d)) {
            return Err(format!("{p} is not a prime below 2^31"));
        }
        Ok(FieldTag::Prime(p))
    }
}

/// The rationals with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn fmt_parts(&self, a: &BigRational) -> (bool, String) {
        (a.is_negative(), a.abs().to_string())
    }
    fn parse(&self, s: &str) -> Option<BigRational> {
        match s.split_once('/') {
            Some((n, d)) => {
                let d: BigInt = d.trim().parse().ok()?;
                let n: BigInt = n.trim().parse().ok()?;
                (!d.is_zero()).then(|| BigRational::new(n, d))
            }
            None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
        }
    }
    fn tag(&self) -> FieldTag {
        FieldTag::Rationals
    }
}

/// `GF(p)` for a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Self {
        assert!((2..1 << 31).contains(&p), "characteristic out of range");
        PrimeField { p }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, v: i64) -> u32 {
        self.reduce(v)
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + (self.p - *b) as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero");
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (*a as u64, self.p as u64 - 2, 1u64);
        let p = self.p as u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn fmt_parts(&self, a: &u32) -> (bool, String) {
        // symmetric representative reads better for small negatives
        if *a > self.p / 2 {
            (true, (self.p - a).to_string())
        } else {
            (false, a.to_string())
        }
    }
    fn parse(&self, s: &str) -> Option<u32> {
        match s.split_once('/') {
            Some((n, d)) => {
                let d = self.reduce(d.trim().parse().ok()?);
                let n = self.reduce(n.trim().parse::<i64>().ok()?);
                (d != 0).then(|| self.mul(&n, &self.inv(&d)))
            }
            None => Some(self.reduce(s.trim().parse().ok()?)),
        }
    }
    fn tag(&self) -> FieldTag {
        FieldTag::Prime(self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(32003);
        for a in [1u32, 2, 17, 32002] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_i64(-1), 32002);
        assert_eq!(f.fmt_parts(&32002), (true, "1".into()));
    }

    #[test]
    fn rational_parse() {
        let q = Rationals;
        assert_eq!(q.parse("-3/6").unwrap(), q.mul(&q.from_i64(-1), &q.inv(&q.from_i64(2))));
        assert!(q.parse("1/0").is_none());
    }

    #[test]
    fn field_tags() {
        assert_eq!("Q".parse::<FieldTag>().unwrap(), FieldTag::Rationals);
        assert_eq!("GF:32003".parse::<FieldTag>().unwrap(), FieldTag::Prime(32003));
        assert!("GF:32004".parse::<FieldTag>().is_err());
        assert_eq!(FieldTag::Prime(7).to_string(), "GF:7");
    }
}
