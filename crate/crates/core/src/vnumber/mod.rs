//! v-numbers of binomial edge ideals and of square-free monomial ideals.

mod graded;
mod local;
mod monomial;

use serde::Serialize;

pub use graded::{GradedSearch, LocalWitness};
pub use local::{check_cap, v_local, verify_witness, verify_witness_by_membership, DEFAULT_GROEBNER_CAP};
pub use monomial::{v_monomial, MonomialV};

use crate::binomial::{binomial_edge_ideal, initial_ideal, prime_component_unchecked};
use crate::error::{Error, Result};
use crate::graph::{cone_apex, completion_numbers, cutsets, Graph, VertexSet};
use crate::poly::{Field, FieldTag, Ideal, Monomial, Poly, PrimeField, Rationals, Ring};

/// `v_∅(J_G) = min-comp(G)` with the witness `x_{v_1} ... x_{v_k}` for the
/// first minimum-size minimal completion set.
pub fn v_empty(g: &Graph) -> Result<(u32, VertexSet)> {
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let c = completion_numbers(g);
    let w = *c.minimal_sets.iter().find(|s| s.len() == c.min_comp).expect("some completion set exists");
    Ok((c.min_comp as u32, w))
}

/// The monomial `Π_{v ∈ w} x_v` as a polynomial.
pub fn x_product<F: Field>(field: &F, ring: &Ring, w: VertexSet) -> Poly<F::Elem> {
    let m = w.iter().fold(Monomial::one(), |m, v| m.mul(&Monomial::var(ring.x(v))));
    Poly::monomial(field, m)
}

/// Verdict of the cone classification `v(J_G) = 1 ⇔ G = cone(v, H)` with
/// `H` not complete.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct V1Classification {
    pub is_v1: bool,
    pub apex: Option<usize>,
    pub reason: String,
}

pub fn classify_v1(g: &Graph) -> Result<V1Classification> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(match cone_apex(g) {
        Some(c) if !c.rest_complete => V1Classification {
            is_v1: true,
            apex: Some(c.apex),
            reason: format!("cone over a non-complete graph with apex {}", c.apex),
        },
        Some(c) => V1Classification {
            is_v1: false,
            apex: Some(c.apex),
            reason: "graph is complete".into(),
        },
        None => V1Classification { is_v1: false, apex: None, reason: "no universal vertex".into() },
    })
}

/// Whether `in_<(∩_{T ≠ T'} P_T(G))` is square-free (hence radical).
/// The empty intersection is the unit ideal, for which this holds.
pub fn check_vin_hypothesis<F: Field>(g: &Graph, t_prime: VertexSet, field: F, cap_n: usize) -> Result<bool> {
    check_cap(g, cap_n)?;
    let cs = cutsets(g);
    if !cs.iter().any(|c| c.set == t_prime) {
        return Err(Error::NotACutset(t_prime.to_vec()));
    }
    let mut acc: Option<Ideal<F>> = None;
    for c in cs.iter().filter(|c| c.set != t_prime) {
        let p = prime_component_unchecked(g, c.set, field.clone()).ideal;
        acc = Some(match acc {
            None => p,
            Some(a) => a.intersect(&p),
        });
    }
    Ok(acc.is_none_or(|i| i.leading_monomials().iter().all(|m| m.is_squarefree())))
}

/// Options for [`v_number`].
#[derive(Clone, Debug)]
pub struct VOptions {
    pub field: FieldTag,
    /// Largest `n` for Gröbner computations.
    pub cap_n: usize,
    /// Also run the colon-ideal route and cross-check it.
    pub groebner: bool,
    /// Compute `v_T` for every cutset, not only the minimum.
    pub per_cutset: bool,
    /// Largest `n` for the multidegree search.
    pub graded_cap_n: usize,
}

impl Default for VOptions {
    fn default() -> Self {
        VOptions { field: FieldTag::Rationals, cap_n: DEFAULT_GROEBNER_CAP, groebner: true, per_cutset: true, graded_cap_n: 8 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalV {
    pub cutset: VertexSet,
    pub v: Option<u32>,
    pub witness: Option<String>,
}

/// Per-graph record of the invariants. `None` fields were skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VReport {
    pub graph: String,
    pub n: usize,
    pub edges: usize,
    pub v: Option<u32>,
    pub v_by_cutset: Vec<LocalV>,
    pub v_empty: Option<u32>,
    pub v_empty_witness: Option<String>,
    pub min_comp: usize,
    pub max_comp: usize,
    pub v_initial: Option<u32>,
    pub v_initial_witness: Option<String>,
    pub reg: Option<u32>,
    pub reg_confirmed: bool,
    pub longest_induced_path: usize,
    pub notes: Vec<String>,
}

pub fn v_number(g: &Graph, opts: &VOptions) -> Result<VReport> {
    match opts.field {
        FieldTag::Rationals => v_number_in(g, opts, Rationals),
        FieldTag::Prime(p) => v_number_in(g, opts, PrimeField::new(p)),
    }
}

fn v_number_in<F: Field>(g: &Graph, opts: &VOptions, field: F) -> Result<VReport> {
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let ring = Ring::new(g.n())?;
    let comp = completion_numbers(g);
    let (ve, w) = v_empty(g)?;
    let mut notes = Vec::new();
    let mut report = VReport {
        graph: crate::graph::encode_graph6(g),
        n: g.n(),
        edges: g.edge_count(),
        v: None,
        v_by_cutset: Vec::new(),
        v_empty: Some(ve),
        v_empty_witness: Some(x_product(&field, &ring, w).display(&field, &ring)),
        min_comp: comp.min_comp,
        max_comp: comp.max_comp,
        v_initial: None,
        v_initial_witness: None,
        reg: None,
        reg_confirmed: false,
        longest_induced_path: crate::graph::longest_induced_path(g),
        notes: Vec::new(),
    };
    if let Ok(init) = initial_ideal(g) {
        if let Ok(mv) = v_monomial(&init) {
            report.v_initial = Some(mv.v);
            report.v_initial_witness = Some(ring.fmt_monomial(&Monomial::from_mask(mv.witness)));
        }
    }

    let graded = if g.n() <= opts.graded_cap_n { Some(GradedSearch::new(g, field.clone())?) } else { None };
    let groebner_ok = opts.groebner && g.n() <= opts.cap_n;
    match &graded {
        Some(s) => {
            let bound = s.degree_bound().min(ve);
            let found = s.global(bound).expect("v <= v_empty");
            report.v = Some(found[0].degree);
            if opts.per_cutset {
                for (idx, c) in s.cutsets().iter().enumerate() {
                    let hit = if c.set.is_empty() {
                        s.local(idx, ve)
                    } else {
                        s.local(idx, s.degree_bound())
                    };
                    report.v_by_cutset.push(LocalV {
                        cutset: c.set,
                        v: hit.as_ref().map(|h| h.degree),
                        witness: hit.map(|h| h.poly.display(&field, &ring)),
                    });
                }
            }
        }
        None => notes.push(format!("v skipped: n = {} exceeds the multidegree search cap {}", g.n(), opts.graded_cap_n)),
    }

    if groebner_ok {
        let mut best: Option<u32> = None;
        for (k, c) in cutsets(g).iter().enumerate() {
            let (d, h) = v_local(g, c.set, field.clone(), opts.cap_n)?;
            best = Some(best.map_or(d, |b| b.min(d)));
            match report.v_by_cutset.get_mut(k) {
                Some(lv) if lv.cutset == c.set => {
                    if lv.v != Some(d) {
                        notes.push(format!("v_T mismatch at T={}: graded {:?}, colon {}", c.set, lv.v, d));
                    }
                }
                _ => report.v_by_cutset.push(LocalV {
                    cutset: c.set,
                    v: Some(d),
                    witness: Some(h.display(&field, &ring)),
                }),
            }
        }
        match report.v {
            Some(v) if Some(v) != best => notes.push(format!("v mismatch: graded {v}, colon {best:?}")),
            None => report.v = best,
            _ => {}
        }
    } else if opts.groebner {
        notes.push(format!("colon-ideal route skipped: n = {} exceeds cap {}", g.n(), opts.cap_n));
    }
    if let Some(v) = report.v {
        if v > ve {
            notes.push(format!("v = {v} exceeds v_empty = {ve}"));
        }
    }
    report.notes = notes;
    Ok(report)
}

/// `v(J_G)` alone via the multidegree search.
pub fn v_of<F: Field>(g: &Graph, field: F) -> Result<u32> {
    let (ve, _) = v_empty(g)?;
    let s = GradedSearch::new(g, field)?;
    Ok(s.global(ve).expect("v <= v_empty")[0].degree)
}

/// Checks `(J_G : x_{v_1} ... x_{v_k}) = P_∅(G)` for the completion set `w`.
pub fn verify_completion_witness<F: Field>(g: &Graph, w: VertexSet, field: F) -> Result<bool> {
    let j = binomial_edge_ideal(g, field.clone())?;
    let p = prime_component_unchecked(g, VertexSet::EMPTY, field.clone()).ideal;
    let f = x_product(&field, j.ring(), w);
    Ok(j.colon_poly(&f)?.equals(&p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pendant_triangle() -> Graph {
        Graph::from_edges(6, &[(2, 3), (2, 4), (3, 4), (1, 2), (3, 6), (4, 5)]).unwrap()
    }

    #[test]
    fn small_graphs_graded() {
        assert_eq!(v_of(&Graph::complete(3), Rationals).unwrap(), 0);
        assert_eq!(v_of(&Graph::path(3), Rationals).unwrap(), 1);
        assert_eq!(v_of(&Graph::path(4), Rationals).unwrap(), 2);
        assert!(matches!(v_of(&Graph::empty(2).unwrap(), Rationals), Err(Error::EdgelessGraph)));
    }

    #[test]
    fn pendant_triangle_graded() {
        assert_eq!(v_of(&pendant_triangle(), Rationals).unwrap(), 3);
    }

    #[test]
    fn colon_route_on_path() {
        let g = Graph::path(3);
        let (d, h) = v_local(&g, VertexSet::EMPTY, Rationals, 6).unwrap();
        assert_eq!(d, 1);
        assert!(verify_witness(&g, VertexSet::EMPTY, &h, Rationals).unwrap());
        let (d2, _) = v_local(&g, VertexSet::from_vertices([2]), Rationals, 6).unwrap();
        assert_eq!(d2, 2);
        assert!(matches!(v_local(&Graph::path(7), VertexSet::EMPTY, Rationals, 6), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn classification() {
        assert!(classify_v1(&Graph::star(3)).unwrap().is_v1);
        assert!(!classify_v1(&Graph::path(4)).unwrap().is_v1);
        assert!(!classify_v1(&Graph::complete(4)).unwrap().is_v1);
        assert!(classify_v1(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn vin_hypothesis_edge_cases() {
        assert!(check_vin_hypothesis(&Graph::path(3), VertexSet::from_vertices([2]), Rationals, 6).unwrap());
        assert!(check_vin_hypothesis(&Graph::complete(3), VertexSet::EMPTY, Rationals, 6).unwrap());
    }
}
