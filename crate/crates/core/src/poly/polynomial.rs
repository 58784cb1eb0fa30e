use std::cmp::Ordering;

use super::field::Field;
use super::monomial::{Monomial, MAX_VARS};
use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// Variable naming for rings `K[x_1..x_n, y_1..y_n, t]`: index `i - 1` is
/// `x_i`, index `n + i - 1` is `y_i` and index `2n` is the eliminator `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    pub n: usize,
}

impl Ring {
    pub fn new(n: usize) -> Result<Ring> {
        if 2 * n + 1 > MAX_VARS {
            return Err(Error::CapExceeded { what: "polynomial ring variables", got: 2 * n + 1, cap: MAX_VARS });
        }
        Ok(Ring { n })
    }

    pub fn nvars(&self) -> usize {
        2 * self.n + 1
    }

    pub fn x(&self, i: usize) -> usize {
        i - 1
    }

    pub fn y(&self, i: usize) -> usize {
        self.n + i - 1
    }

    pub fn t(&self) -> usize {
        2 * self.n
    }

    pub fn name(&self, k: usize) -> String {
        if k < self.n {
            format!("x{}", k + 1)
        } else if k < 2 * self.n {
            format!("y{}", k - self.n + 1)
        } else {
            "t".into()
        }
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        if name == "t" {
            return Some(self.t());
        }
        let (head, num) = name.split_at(1.min(name.len()));
        let i: usize = num.parse().ok()?;
        if i == 0 || i > self.n {
            return None;
        }
        match head {
            "x" => Some(self.x(i)),
            "y" => Some(self.y(i)),
            _ => None,
        }
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let mut parts = vec![];
        for k in 0..self.nvars() {
            match m.exp(k) {
                0 => {}
                1 => parts.push(self.name(k)),
                e => parts.push(format!("{}^{e}", self.name(k))),
            }
        }
        parts.join("*")
    }
}

/// A polynomial: nonzero terms in strictly decreasing order under the order
/// it was built with.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E: Clone + PartialEq> Poly<E> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    /// Combines like terms, drops zeros and sorts under `o`.
    pub fn from_terms<F: Field<Elem = E>>(f: &F, o: &MonomialOrder, mut terms: Vec<(Monomial, E)>) -> Self {
        terms.sort_by(|a, b| o.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, E)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = f.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !f.is_zero(c));
        Poly { terms: out }
    }

    /// Trusts the caller that `terms` is already strictly decreasing with no zeros.
    pub(crate) fn from_sorted(terms: Vec<(Monomial, E)>) -> Self {
        Poly { terms }
    }

    pub fn term<F: Field<Elem = E>>(f: &F, m: Monomial, c: E) -> Self {
        if f.is_zero(&c) {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial<F: Field<Elem = E>>(f: &F, m: Monomial) -> Self {
        Poly { terms: vec![(m, f.one())] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lc(&self) -> Option<&E> {
        self.terms.first().map(|t| &t.1)
    }

    /// Largest total degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn support(&self) -> u64 {
        self.terms.iter().fold(0, |m, t| m | t.0.support())
    }

    pub fn resort<F: Field<Elem = E>>(&self, f: &F, o: &MonomialOrder) -> Self {
        Poly::from_terms(f, o, self.terms.clone())
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect() }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        if f.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, d)| (*m, f.mul(c, d))).collect() }
    }

    /// `c * m * self`; monomial multiplication preserves the term order.
    pub fn mul_term<F: Field<Elem = E>>(&self, f: &F, m: &Monomial, c: &E) -> Self {
        if f.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(n, d)| (n.mul(m), f.mul(c, d))).collect() }
    }

    pub fn monic<F: Field<Elem = E>>(&self, f: &F) -> Self {
        match self.lc() {
            None => Poly::zero(),
            Some(c) if f.is_one(c) => self.clone(),
            Some(c) => self.scale(f, &f.inv(c)),
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, o: &MonomialOrder, other: &Self) -> Self {
        self.axpy(f, o, &f.one(), &Monomial::one(), other)
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, o: &MonomialOrder, other: &Self) -> Self {
        self.axpy(f, o, &f.neg(&f.one()), &Monomial::one(), other)
    }

    /// `self + c * m * other` by a single merge.
    pub fn axpy<F: Field<Elem = E>>(&self, f: &F, o: &MonomialOrder, c: &E, m: &Monomial, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => o.cmp(&x.0, &y.0.mul(m)),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.mul(m), f.mul(c, &b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(&a[i].1, &f.mul(c, &b[j].1));
                    if !f.is_zero(&s) {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, o: &MonomialOrder, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                terms.push((m.mul(n), f.mul(c, d)));
            }
        }
        Poly::from_terms(f, o, terms)
    }

    /// Exact quotient `self / d`; fails if the division leaves a remainder.
    pub fn div_exact<F: Field<Elem = E>>(&self, f: &F, o: &MonomialOrder, d: &Self) -> Result<Self> {
        let (dm, dc) = match d.terms.first() {
            Some(t) => t,
            None => return Err(Error::InexactDivision),
        };
        let dinv = f.inv(dc);
        let mut rem = self.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !dm.divides(&m) {
                return Err(Error::InexactDivision);
            }
            let qm = dm.quotient_of(&m);
            let qc = f.mul(&c, &dinv);
            rem = rem.axpy(f, o, &f.neg(&qc), &qm, d);
            q.push((qm, qc));
        }
        Ok(Poly { terms: q })
    }

    pub fn display<F: Field<Elem = E>>(&self, f: &F, ring: &Ring) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = f.fmt_parts(c);
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = ring.fmt_monomial(m);
            match (abs == "1", m.is_one()) {
                (true, _) => s.push_str(&mono),
                (false, true) => s.push_str(&abs),
                (false, false) => {
                    s.push_str(&abs);
                    s.push('*');
                    s.push_str(&mono);
                }
            }
        }
        s
    }

    /// Parses `±c*x1^a*y2^b ± ...`; `·` is accepted in place of `*`.
    pub fn parse<F: Field<Elem = E>>(f: &F, o: &MonomialOrder, ring: &Ring, text: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse { line: 1, msg };
        let cleaned: String = text.replace('·', "*").chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(bad("empty polynomial".into()));
        }
        // split into signed terms
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (k, ch) in cleaned.chars().enumerate() {
            if (ch == '+' || ch == '-') && !(k > 0 && cur.ends_with('^')) {
                if k > 0 {
                    pieces.push((neg, std::mem::take(&mut cur)));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        pieces.push((neg, cur));
        let mut terms = Vec::new();
        for (neg, piece) in pieces {
            if piece.is_empty() {
                return Err(bad(format!("missing term in {text:?}")));
            }
            let mut coeff = f.one();
            let mut exps = [0u8; MAX_VARS];
            for factor in piece.split('*') {
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    let c = f.parse(factor).ok_or_else(|| bad(format!("bad coefficient {factor:?}")))?;
                    coeff = f.mul(&coeff, &c);
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((v, e)) => (v, e.parse::<u8>().map_err(|_| bad(format!("bad exponent in {factor:?}")))?),
                    None => (factor, 1),
                };
                let k = ring.index(name).ok_or_else(|| bad(format!("unknown variable {name:?}")))?;
                exps[k] = exps[k].checked_add(e).ok_or_else(|| bad("exponent overflow".into()))?;
            }
            if neg {
                coeff = f.neg(&coeff);
            }
            terms.push((Monomial::from_exponents(&exps), coeff));
        }
        Ok(Poly::from_terms(f, o, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::{PrimeField, Rationals};

    fn lex() -> MonomialOrder {
        MonomialOrder::lex()
    }

    #[test]
    fn parse_display_round_trip() {
        let r = Ring::new(3).unwrap();
        let q = Rationals;
        let p = Poly::parse(&q, &lex(), &r, "x1·y2 - x2*y1 + 3/2*x3^2*t").unwrap();
        assert_eq!(p.display(&q, &r), "x1*y2 - x2*y1 + 3/2*x3^2*t");
        assert_eq!(Poly::parse(&q, &lex(), &r, &p.display(&q, &r)).unwrap(), p);
        assert!(Poly::parse(&q, &lex(), &r, "x4").is_err());
        assert!(Poly::parse(&q, &lex(), &r, "x1 +").is_err());
    }

    #[test]
    fn arithmetic_and_exact_division() {
        let r = Ring::new(2).unwrap();
        let q = Rationals;
        let o = lex();
        let a = Poly::parse(&q, &o, &r, "x1 - y1").unwrap();
        let b = Poly::parse(&q, &o, &r, "x1 + 2*y2").unwrap();
        let prod = a.mul(&q, &o, &b);
        assert_eq!(prod.div_exact(&q, &o, &a).unwrap(), b);
        assert!(prod.add(&q, &o, &Poly::monomial(&q, Monomial::var(3))).div_exact(&q, &o, &a).is_err());
        assert!(a.sub(&q, &o, &a).is_zero());
        assert!(prod.is_homogeneous());
    }

    #[test]
    fn prime_field_display() {
        let r = Ring::new(2).unwrap();
        let f = PrimeField::new(7);
        let p = Poly::parse(&f, &lex(), &r, "x1*y2 - x2*y1").unwrap();
        assert_eq!(p.display(&f, &r), "x1*y2 - x2*y1");
    }
}
