use std::collections::HashMap;
use std::sync::OnceLock;

use serde::Serialize;

use super::field::Field;
use super::groebner::{groebner, normal_form};
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::{Poly, Ring};
use crate::error::Result;

/// An ideal given by generators, with its reduced Gröbner basis under
/// `order` computed on first use.
#[derive(Debug)]
pub struct Ideal<F: Field> {
    field: F,
    ring: Ring,
    order: MonomialOrder,
    gens: Vec<Poly<F::Elem>>,
    gb: OnceLock<Vec<Poly<F::Elem>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            field: self.field.clone(),
            ring: self.ring,
            order: self.order.clone(),
            gens: self.gens.clone(),
            gb: self.gb.clone(),
        }
    }
}

/// JSON form: the order tag and generators as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealText {
    pub order: String,
    pub generators: Vec<String>,
}

impl<F: Field> Ideal<F> {
    pub fn new(field: F, ring: Ring, order: MonomialOrder, gens: Vec<Poly<F::Elem>>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).map(|g| g.resort(&field, &order)).collect();
        Ideal { field, ring, order, gens, gb: OnceLock::new() }
    }

    /// An ideal whose generators are already its reduced Gröbner basis.
    fn from_reduced_basis(field: F, ring: Ring, order: MonomialOrder, gb: Vec<Poly<F::Elem>>) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(gb.clone());
        Ideal { field, ring, order, gens: gb, gb: cell }
    }

    pub fn unit(field: F, ring: Ring, order: MonomialOrder) -> Self {
        let one = Poly::monomial(&field, Monomial::one());
        Ideal::from_reduced_basis(field, ring, order, vec![one])
    }

    /// Ideal generated by variables with the given indices.
    pub fn variables(field: F, ring: Ring, order: MonomialOrder, vars: impl IntoIterator<Item = usize>) -> Self {
        let gens = vars.into_iter().map(|k| Poly::monomial(&field, Monomial::var(k))).collect();
        Ideal::new(field, ring, order, gens)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Poly<F::Elem>] {
        &self.gens
    }

    pub fn groebner(&self) -> &[Poly<F::Elem>] {
        self.gb.get_or_init(|| groebner(&self.field, &self.order, &self.gens))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().first().is_some_and(|g| g.lm().unwrap().is_one())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.groebner().iter().map(|g| *g.lm().unwrap()).collect()
    }

    pub fn normal_form(&self, p: &Poly<F::Elem>) -> Poly<F::Elem> {
        normal_form(&self.field, &self.order, &p.resort(&self.field, &self.order), self.groebner())
    }

    pub fn contains(&self, p: &Poly<F::Elem>) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality of reduced Gröbner bases; `other` is recomputed under this
    /// ideal's order when the orders differ.
    pub fn equals(&self, other: &Ideal<F>) -> bool {
        if self.order == other.order {
            self.groebner() == other.groebner()
        } else {
            self.groebner() == groebner(&self.field, &self.order, &other.gens).as_slice()
        }
    }

    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().map(|g| g.resort(&self.field, &self.order)));
        Ideal::new(self.field.clone(), self.ring, self.order.clone(), gens)
    }

    /// `I ∩ J` as the `t`-free part of the Gröbner basis of
    /// `t·I + (1 - t)·J` under an order eliminating `t`.
    pub fn intersect(&self, other: &Ideal<F>) -> Ideal<F> {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ideal::new(f.clone(), self.ring, self.order.clone(), vec![]);
        }
        let t = self.ring.t();
        let tmask = 1u64 << t;
        assert!(
            self.gens.iter().chain(other.gens.iter()).all(|g| g.support() & tmask == 0),
            "the eliminator t must not occur in the inputs"
        );
        let elim = MonomialOrder::elimination(tmask, &self.order);
        let tvar = Monomial::var(t);
        let one = f.one();
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for g in &self.gens {
            gens.push(g.mul_term(f, &tvar, &one).resort(f, &elim));
        }
        let one_minus_t = Poly::from_terms(f, &elim, vec![(Monomial::one(), f.one()), (tvar, f.neg(&one))]);
        for h in &other.gens {
            gens.push(h.resort(f, &elim).mul(f, &elim, &one_minus_t));
        }
        let gb = groebner(f, &elim, &gens);
        let mut kept: Vec<Poly<F::Elem>> = gb
            .into_iter()
            .filter(|g| g.support() & tmask == 0)
            .map(|g| g.resort(f, &self.order))
            .collect();
        kept.sort_by(|a, b| self.order.cmp(b.lm().unwrap(), a.lm().unwrap()));
        Ideal::from_reduced_basis(f.clone(), self.ring, self.order.clone(), kept)
    }

    /// `(I : p)` from `(I ∩ ⟨p⟩) / p`.
    pub fn colon_poly(&self, p: &Poly<F::Elem>) -> Result<Ideal<F>> {
        let f = &self.field;
        let p = p.resort(f, &self.order);
        let pi = Ideal::new(f.clone(), self.ring, self.order.clone(), vec![p.clone()]);
        let meet = self.intersect(&pi);
        let quotients = meet
            .gens
            .iter()
            .map(|g| g.div_exact(f, &self.order, &p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(f.clone(), self.ring, self.order.clone(), quotients))
    }

    /// `(I : J)` as the intersection of `(I : g)` over generators `g` of `J`.
    pub fn colon_ideal(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut acc: Option<Ideal<F>> = None;
        for g in &other.gens {
            let c = self.colon_poly(g)?;
            if c.is_unit() {
                continue;
            }
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c),
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(self.field.clone(), self.ring, self.order.clone())))
    }

    /// Product of two ideals (pairwise products of generators).
    pub fn product(&self, other: &Ideal<F>) -> Ideal<F> {
        let f = &self.field;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(f, &self.order, &b.resort(f, &self.order)));
            }
        }
        Ideal::new(f.clone(), self.ring, self.order.clone(), gens)
    }

    pub fn to_text(&self) -> IdealText {
        IdealText {
            order: self.order.name(),
            generators: self.gens.iter().map(|g| g.display(&self.field, &self.ring)).collect(),
        }
    }
}

/// A minimal homogeneous generating set of `C / I` for homogeneous `I ⊆ C`,
/// chosen from the reduced Gröbner basis of `C` by graded Nakayama: degree
/// by degree, an element is kept iff its class modulo
/// `I + ⟨kept elements of lower degree⟩` is independent of the classes of
/// the elements already kept in that degree.
pub fn minimal_quotient_generators<F: Field>(i: &Ideal<F>, c: &Ideal<F>) -> Vec<Poly<F::Elem>> {
    let f = i.field();
    let o = i.order();
    let mut cands: Vec<Poly<F::Elem>> = c.groebner().iter().map(|g| g.resort(f, o)).collect();
    cands.sort_by_key(|g| g.degree().unwrap_or(0));
    let mut kept: Vec<Poly<F::Elem>> = Vec::new();
    let mut k = 0;
    while k < cands.len() {
        let d = cands[k].degree().unwrap_or(0);
        let end = (k..cands.len()).find(|&e| cands[e].degree().unwrap_or(0) != d).unwrap_or(cands.len());
        let mut base_gens = i.generators().to_vec();
        base_gens.extend(kept.iter().cloned());
        let base = groebner(f, o, &base_gens);
        // echelon form of the normal forms, keyed by pivot monomial
        let mut rows: HashMap<Monomial, Poly<F::Elem>> = HashMap::new();
        for g in &cands[k..end] {
            let mut v = normal_form(f, o, g, &base);
            while let Some((m, c)) = v.terms().iter().find(|(m, _)| rows.contains_key(m)).cloned() {
                v = v.axpy(f, o, &f.neg(&c), &Monomial::one(), &rows[&m]);
            }
            if !v.is_zero() {
                let v = v.monic(f);
                rows.insert(*v.lm().unwrap(), v);
                kept.push(g.clone());
            }
        }
        k = end;
    }
    kept
}
