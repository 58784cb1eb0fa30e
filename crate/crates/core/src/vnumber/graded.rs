//! Local v-numbers by exact linear algebra in each multidegree.
//!
//! `J_G` is radical with minimal primes `P_T`, so `(J_G : f) = P_T` iff `f`
//! lies in every `P_{T'}` with `T' ≠ T` but not in `P_T`. All of these ideals
//! are graded by vertex multidegree `a ∈ N^n` (with `deg x_v = deg y_v = e_v`)
//! and by the number of `x` factors, so it suffices to look for homogeneous
//! `f` in one such degree at a time. Modulo `P_{T'}`, a monomial vanishes
//! if it touches `T'`; otherwise its class is fixed by the number of `x`
//! factors it takes from each component of `G \ T'`, and `f ∈ P_{T'}` iff the
//! coefficients sum to zero on every class.

use std::collections::BTreeMap;

use crate::graph::{cutsets, Cutset, Graph, VertexSet};
use crate::poly::linalg::{dot, nullspace};
use crate::poly::{Field, Monomial, MonomialOrder, Poly, Ring};

pub struct GradedSearch<F: Field> {
    graph: Graph,
    field: F,
    ring: Ring,
    cutsets: Vec<Cutset>,
}

/// A degree-`degree` polynomial `f` with `(J_G : f) = P_T`.
#[derive(Clone, Debug)]
pub struct LocalWitness<E> {
    pub cutset: VertexSet,
    pub degree: u32,
    pub poly: Poly<E>,
}

impl<F: Field> GradedSearch<F> {
    pub fn new(g: &Graph, field: F) -> crate::Result<Self> {
        Ok(GradedSearch { graph: g.clone(), field, ring: Ring::new(g.n())?, cutsets: cutsets(g) })
    }

    pub fn cutsets(&self) -> &[Cutset] {
        &self.cutsets
    }

    /// `v_T` for the cutset at `idx`, searching degrees up to `max_degree`.
    pub fn local(&self, idx: usize, max_degree: u32) -> Option<LocalWitness<F::Elem>> {
        (0..=max_degree).find_map(|d| self.witnesses_in_degree(d, &[idx]).into_iter().next())
    }

    /// `v(J_G) = min_T v_T`: the first degree with a witness for any cutset,
    /// together with all cutsets that have one in that degree.
    pub fn global(&self, max_degree: u32) -> Option<Vec<LocalWitness<F::Elem>>> {
        let all: Vec<usize> = (0..self.cutsets.len()).collect();
        (0..=max_degree).map(|d| self.witnesses_in_degree(d, &all)).find(|w| !w.is_empty())
    }

    /// Upper bound on every `v_T`: a product of one element of `P_{T'} \ P_T`
    /// (a variable or a 2-minor) for each other cutset.
    pub fn degree_bound(&self) -> u32 {
        2 * (self.cutsets.len() as u32).saturating_sub(1)
    }

    pub fn witnesses_in_degree(&self, d: u32, targets: &[usize]) -> Vec<LocalWitness<F::Elem>> {
        let n = self.graph.n();
        let mut found: BTreeMap<usize, LocalWitness<F::Elem>> = BTreeMap::new();
        // every target needs supp(a) disjoint from its cutset
        let avoid = targets.iter().fold(self.graph.vertices(), |acc, &t| acc.intersection(self.cutsets[t].set));
        let verts: Vec<usize> = self.graph.vertices().difference(avoid).to_vec();
        let mut a = vec![0u8; n + 1];
        self.for_each_multidegree(&verts, 0, d, &mut a, &mut |a| {
            let supp = VertexSet::from_vertices((1..=n).filter(|&v| a[v] > 0));
            let open: Vec<usize> = (0..self.cutsets.len())
                .filter(|&t| self.cutsets[t].set.intersection(supp).is_empty())
                .collect();
            let pending: Vec<usize> =
                targets.iter().copied().filter(|t| open.contains(t) && !found.contains_key(t)).collect();
            if pending.is_empty() {
                return;
            }
            for k in 0..=d {
                let monos = x_splits(a, supp, k);
                if monos.is_empty() {
                    continue;
                }
                let rows: Vec<(usize, Vec<Vec<F::Elem>>)> =
                    open.iter().map(|&t| (t, self.class_rows(&self.cutsets[t], &monos))).collect();
                for &target in &pending {
                    if found.contains_key(&target) {
                        continue;
                    }
                    let a_rows: Vec<Vec<F::Elem>> =
                        rows.iter().filter(|(t, _)| *t != target).flat_map(|(_, r)| r.iter().cloned()).collect();
                    let b_rows = &rows.iter().find(|(t, _)| *t == target).unwrap().1;
                    let kernel = nullspace(&self.field, &a_rows, monos.len());
                    let hit = kernel
                        .iter()
                        .find(|v| b_rows.iter().any(|b| !self.field.is_zero(&dot(&self.field, b, v))));
                    if let Some(v) = hit {
                        let poly = self.to_poly(a, &monos, v);
                        found.insert(target, LocalWitness { cutset: self.cutsets[target].set, degree: d, poly });
                    }
                }
            }
        });
        found.into_values().collect()
    }

    fn for_each_multidegree(&self, verts: &[usize], pos: usize, left: u32, a: &mut Vec<u8>, visit: &mut dyn FnMut(&[u8])) {
        if pos == verts.len() {
            if left == 0 {
                visit(a);
            }
            return;
        }
        let v = verts[pos];
        for e in 0..=left {
            a[v] = e as u8;
            self.for_each_multidegree(verts, pos + 1, left - e, a, visit);
        }
        a[v] = 0;
    }

    /// One 0/1 row per class of monomials modulo `P_T`.
    fn class_rows(&self, c: &Cutset, monos: &[Vec<u8>]) -> Vec<Vec<F::Elem>> {
        let mut classes: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
        for (m, alpha) in monos.iter().enumerate() {
            let key: Vec<u8> = c.components.iter().map(|comp| comp.iter().map(|v| alpha[v]).sum()).collect();
            classes.entry(key).or_default().push(m);
        }
        classes
            .into_values()
            .map(|members| {
                let mut row = vec![self.field.zero(); monos.len()];
                for m in members {
                    row[m] = self.field.one();
                }
                row
            })
            .collect()
    }

    fn to_poly(&self, a: &[u8], monos: &[Vec<u8>], coeffs: &[F::Elem]) -> Poly<F::Elem> {
        let n = self.graph.n();
        let mut terms = Vec::new();
        for (alpha, c) in monos.iter().zip(coeffs) {
            if self.field.is_zero(c) {
                continue;
            }
            let mut e = vec![0u8; 2 * n];
            for v in 1..=n {
                e[self.ring.x(v)] = alpha[v];
                e[self.ring.y(v)] = a[v] - alpha[v];
            }
            terms.push((Monomial::from_exponents(&e), c.clone()));
        }
        // clear the content so the witness prints with small coefficients
        let p = Poly::from_terms(&self.field, &MonomialOrder::lex(), terms);
        p.monic(&self.field)
    }
}

/// All `α ≤ a` (indexed by vertex) with `|α| = k`; `α_v` counts `x_v`.
fn x_splits(a: &[u8], supp: VertexSet, k: u32) -> Vec<Vec<u8>> {
    let verts = supp.to_vec();
    let mut out = Vec::new();
    let mut alpha = vec![0u8; a.len()];
    fn rec(a: &[u8], verts: &[usize], pos: usize, left: u32, alpha: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if pos == verts.len() {
            if left == 0 {
                out.push(alpha.clone());
            }
            return;
        }
        let v = verts[pos];
        for e in 0..=(a[v] as u32).min(left) {
            alpha[v] = e as u8;
            rec(a, verts, pos + 1, left - e, alpha, out);
        }
        alpha[v] = 0;
    }
    rec(a, &verts, 0, k, &mut alpha, &mut out);
    out
}
