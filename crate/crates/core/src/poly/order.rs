use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, MAX_VARS};

/// Base comparison rule of a monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    /// Compares the total degree in the `block` variables first, then breaks
    /// ties with `tie`. With `block = {t}` this eliminates `t`.
    Elimination { block: u64, tie: Box<OrderKind> },
}

/// A monomial order. `priority`, when present, lists variable indices from
/// most to least significant; otherwise variable 0 is the largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Option<Vec<u8>>,
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority: None }
    }

    pub fn degrevlex() -> Self {
        MonomialOrder { kind: OrderKind::DegRevLex, priority: None }
    }

    /// Eliminates the variables of `block`, breaking ties with `base`.
    pub fn elimination(block: u64, base: &MonomialOrder) -> Self {
        MonomialOrder {
            kind: OrderKind::Elimination { block, tie: Box::new(base.kind.clone()) },
            priority: base.priority.clone(),
        }
    }

    pub fn with_priority(mut self, priority: Vec<u8>) -> Self {
        assert!(priority.len() <= MAX_VARS);
        self.priority = Some(priority);
        self
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        cmp_kind(&self.kind, self.priority.as_deref(), a, b)
    }

    /// Degree ignoring eliminated variables; used to pick S-pairs.
    pub fn sugar(&self, m: &Monomial) -> u32 {
        match &self.kind {
            OrderKind::Elimination { block, .. } => {
                (0..MAX_VARS).filter(|k| block >> k & 1 == 0).map(|k| m.exp(k) as u32).sum()
            }
            _ => m.degree(),
        }
    }

    pub fn name(&self) -> String {
        fn kind_name(k: &OrderKind) -> String {
            match k {
                OrderKind::Lex => "lex".into(),
                OrderKind::DegRevLex => "degrevlex".into(),
                OrderKind::Elimination { block, tie } => format!("elim({block:#x},{})", kind_name(tie)),
            }
        }
        kind_name(&self.kind)
    }
}

fn exps_in_priority<'a>(priority: Option<&'a [u8]>, m: &'a Monomial) -> impl DoubleEndedIterator<Item = u8> + 'a {
    let n = priority.map_or(MAX_VARS, |p| p.len());
    (0..n).map(move |r| m.exp(priority.map_or(r, |p| p[r] as usize)))
}

fn cmp_kind(kind: &OrderKind, priority: Option<&[u8]>, a: &Monomial, b: &Monomial) -> Ordering {
    match kind {
        OrderKind::Lex => match priority {
            None => a.cmp_lex(b),
            Some(_) => exps_in_priority(priority, a).cmp(exps_in_priority(priority, b)),
        },
        OrderKind::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
            // the last differing variable decides, smaller exponent wins
            for (ea, eb) in exps_in_priority(priority, a).rev().zip(exps_in_priority(priority, b).rev()) {
                if ea != eb {
                    return eb.cmp(&ea);
                }
            }
            Ordering::Equal
        }),
        OrderKind::Elimination { block, tie } => {
            let bd = |m: &Monomial| (0..MAX_VARS).filter(|k| block >> k & 1 == 1).map(|k| m.exp(k) as u32).sum::<u32>();
            bd(a).cmp(&bd(b)).then_with(|| cmp_kind(tie, priority, a, b))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u8]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn lex_and_degrevlex() {
        let lex = MonomialOrder::lex();
        assert_eq!(lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        let drl = MonomialOrder::degrevlex();
        assert_eq!(drl.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 1])), Ordering::Less);
        // x1*x3 < x2^2 in degrevlex
        assert_eq!(drl.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn elimination_puts_block_first() {
        let e = MonomialOrder::elimination(0b100, &MonomialOrder::lex());
        assert_eq!(e.cmp(&m(&[0, 0, 1]), &m(&[5, 0, 0])), Ordering::Greater);
        assert_eq!(e.sugar(&m(&[1, 1, 3])), 2);
    }

    #[test]
    fn priority_permutation() {
        let o = MonomialOrder::lex().with_priority(vec![1, 0]);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Less);
    }
}
