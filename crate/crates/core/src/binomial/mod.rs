//! Binomial edge ideals: generators, the prime components `P_T(G)`,
//! admissible paths and the lex initial ideal with its primes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{cutsets, is_cutset, Graph, VertexSet};
use crate::poly::{Field, Ideal, Monomial, MonomialOrder, Poly, Ring, SquarefreeIdeal};

/// `f_ij = x_i y_j - x_j y_i`.
pub fn f_ij<F: Field>(field: &F, ring: &Ring, order: &MonomialOrder, i: usize, j: usize) -> Poly<F::Elem> {
    let a = Monomial::var(ring.x(i)).mul(&Monomial::var(ring.y(j)));
    let b = Monomial::var(ring.x(j)).mul(&Monomial::var(ring.y(i)));
    Poly::from_terms(field, order, vec![(a, field.one()), (b, field.neg(&field.one()))])
}

/// `J_G` under lex `x_1 > ... > x_n > y_1 > ... > y_n`, one generator per edge.
pub fn binomial_edge_ideal<F: Field>(g: &Graph, field: F) -> Result<Ideal<F>> {
    let ring = Ring::new(g.n())?;
    let order = MonomialOrder::lex();
    let gens = g.edges().into_iter().map(|(i, j)| f_ij(&field, &ring, &order, i, j)).collect();
    Ok(Ideal::new(field, ring, order, gens))
}

/// `J` of the complete graph on `vs` (all 2-minors among those columns).
fn clique_minors<F: Field>(field: &F, ring: &Ring, order: &MonomialOrder, vs: VertexSet) -> Vec<Poly<F::Elem>> {
    let v = vs.to_vec();
    let mut out = vec![];
    for (a, &i) in v.iter().enumerate() {
        for &j in &v[a + 1..] {
            out.push(f_ij(field, ring, order, i, j));
        }
    }
    out
}

/// The prime `P_T(G)` for a cutset `T`.
#[derive(Clone, Debug)]
pub struct PrimeComponent<F: Field> {
    pub cutset: VertexSet,
    pub components: Vec<VertexSet>,
    pub ideal: Ideal<F>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionEntry {
    pub cutset: VertexSet,
    pub components: Vec<VertexSet>,
    pub generators: Vec<String>,
}

impl<F: Field> PrimeComponent<F> {
    pub fn to_entry(&self) -> DecompositionEntry {
        DecompositionEntry {
            cutset: self.cutset,
            components: self.components.clone(),
            generators: self.ideal.to_text().generators,
        }
    }
}

pub fn prime_component<F: Field>(g: &Graph, t: VertexSet, field: F) -> Result<PrimeComponent<F>> {
    if !is_cutset(g, t) {
        return Err(Error::NotACutset(t.to_vec()));
    }
    Ok(prime_component_unchecked(g, t, field))
}

pub(crate) fn prime_component_unchecked<F: Field>(g: &Graph, t: VertexSet, field: F) -> PrimeComponent<F> {
    let ring = Ring::new(g.n()).expect("ring size checked by caller");
    let order = MonomialOrder::lex();
    let components = g.components_within(g.vertices().difference(t));
    let mut gens: Vec<Poly<F::Elem>> = Vec::new();
    for v in t.iter() {
        gens.push(Poly::monomial(&field, Monomial::var(ring.x(v))));
        gens.push(Poly::monomial(&field, Monomial::var(ring.y(v))));
    }
    for &c in &components {
        gens.extend(clique_minors(&field, &ring, &order, c));
    }
    PrimeComponent { cutset: t, components, ideal: Ideal::new(field, ring, order, gens) }
}

/// All `P_T(G)`, one per cutset, in cutset order.
pub fn primary_decomposition<F: Field>(g: &Graph, field: F) -> Result<Vec<PrimeComponent<F>>> {
    Ring::new(g.n())?;
    Ok(cutsets(g).into_iter().map(|c| prime_component_unchecked(g, c.set, field.clone())).collect())
}

/// A path `i = i_0, ..., i_r = j` with `i < j`, distinct vertices, every
/// interior vertex below `i` or above `j`, and no chords.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissiblePath {
    pub i: usize,
    pub j: usize,
    pub interior: Vec<usize>,
}

impl AdmissiblePath {
    /// Support of `u_π x_i y_j` over `2n` variables (`x_v` is bit `v - 1`,
    /// `y_v` is bit `n + v - 1`).
    pub fn generator_mask(&self, n: usize) -> u64 {
        let mut m = 1u64 << (self.i - 1) | 1u64 << (n + self.j - 1);
        for &w in &self.interior {
            if w > self.j {
                m |= 1 << (w - 1);
            } else {
                m |= 1 << (n + w - 1);
            }
        }
        m
    }
}

pub fn admissible_paths(g: &Graph) -> Vec<AdmissiblePath> {
    fn extend(g: &Graph, i: usize, j: usize, allowed: VertexSet, path: &mut Vec<usize>, on: VertexSet, out: &mut Vec<AdmissiblePath>) {
        let last = *path.last().unwrap();
        // chordless: the next vertex may only touch `last` among the path
        for w in g.neighbors(last).iter() {
            if on.contains(w) || g.neighbors(w).intersection(on) != VertexSet::singleton(last) {
                continue;
            }
            if w == j {
                out.push(AdmissiblePath { i, j, interior: path[1..].to_vec() });
            } else if allowed.contains(w) {
                path.push(w);
                extend(g, i, j, allowed, path, on.with(w), out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for i in 1..=g.n() {
        for j in i + 1..=g.n() {
            let allowed = VertexSet::from_vertices((1..=g.n()).filter(|&w| w < i || w > j));
            extend(g, i, j, allowed, &mut vec![i], VertexSet::singleton(i), &mut out);
        }
    }
    out
}

/// `in_<(J_G)` over `2n` variables, minimalized.
pub fn initial_ideal(g: &Graph) -> Result<SquarefreeIdeal> {
    let n = g.n();
    if 2 * n > 64 {
        return Err(Error::CapExceeded { what: "initial ideal variables", got: 2 * n, cap: 64 });
    }
    Ok(SquarefreeIdeal::new(2 * n, admissible_paths(g).iter().map(|p| p.generator_mask(n)).collect()))
}

/// `P_T(v)` for a cutset `T` and one representative per component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InitialPrime {
    pub cutset: VertexSet,
    pub representatives: Vec<usize>,
    /// Variable mask over `2n` variables.
    pub vars: u64,
}

pub fn initial_primes(g: &Graph) -> Vec<InitialPrime> {
    let n = g.n();
    let mut out = Vec::new();
    for c in cutsets(g) {
        let base = c.set.iter().fold(0u64, |m, v| m | 1 << (v - 1) | 1 << (n + v - 1));
        let mut choice: Vec<usize> = Vec::with_capacity(c.components.len());
        fn rec(n: usize, comps: &[VertexSet], k: usize, mask: u64, choice: &mut Vec<usize>, t: VertexSet, out: &mut Vec<InitialPrime>) {
            if k == comps.len() {
                out.push(InitialPrime { cutset: t, representatives: choice.clone(), vars: mask });
                return;
            }
            for v in comps[k].iter() {
                let mut m = mask;
                for w in comps[k].iter() {
                    if w < v {
                        m |= 1 << (w - 1);
                    } else if w > v {
                        m |= 1 << (n + w - 1);
                    }
                }
                choice.push(v);
                rec(n, comps, k + 1, m, choice, t, out);
                choice.pop();
            }
        }
        rec(n, &c.components, 0, base, &mut choice, c.set, &mut out);
    }
    out
}

/// Intersection of the distinct primes `P_T(v)`.
pub fn intersect_initial_primes(n: usize, primes: &[InitialPrime]) -> SquarefreeIdeal {
    let mut masks: Vec<u64> = primes.iter().map(|p| p.vars).collect();
    masks.sort_unstable();
    masks.dedup();
    masks
        .into_iter()
        .map(|p| SquarefreeIdeal::new(2 * n, (0..2 * n).filter(|k| p >> k & 1 == 1).map(|k| 1u64 << k).collect()))
        .reduce(|a, b| a.intersect(&b))
        .unwrap_or_else(|| SquarefreeIdeal::new(2 * n, vec![0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Rationals;

    fn pendant_triangle() -> Graph {
        Graph::from_edges(6, &[(2, 3), (2, 4), (3, 4), (1, 2), (3, 6), (4, 5)]).unwrap()
    }

    fn names(g: &Graph, i: &SquarefreeIdeal) -> Vec<String> {
        let mut v = i.display(&Ring::new(g.n()).unwrap());
        v.sort();
        v
    }

    #[test]
    fn generators_per_edge() {
        assert_eq!(binomial_edge_ideal(&pendant_triangle(), Rationals).unwrap().generators().len(), 6);
        let k2 = binomial_edge_ideal(&Graph::complete(2), Rationals).unwrap();
        assert_eq!(k2.to_text().generators, vec!["x1*y2 - x2*y1"]);
        assert!(binomial_edge_ideal(&Graph::empty(3).unwrap(), Rationals).unwrap().is_zero());
    }

    #[test]
    fn path_cutset_prime() {
        let p = prime_component(&Graph::path(3), VertexSet::from_vertices([2]), Rationals).unwrap();
        assert_eq!(p.ideal.to_text().generators, vec!["x2", "y2"]);
        assert!(prime_component(&Graph::path(3), VertexSet::from_vertices([1]), Rationals).is_err());
        let k = prime_component(&Graph::complete(3), VertexSet::EMPTY, Rationals).unwrap();
        assert!(k.ideal.equals(&binomial_edge_ideal(&Graph::complete(3), Rationals).unwrap()));
    }

    #[test]
    fn complete_graph_has_only_edges() {
        let paths = admissible_paths(&Graph::complete(4));
        assert_eq!(paths.len(), 6);
        assert!(paths.iter().all(|p| p.interior.is_empty()));
    }

    #[test]
    fn initial_ideals() {
        let p3 = Graph::path(3);
        assert_eq!(names(&p3, &initial_ideal(&p3).unwrap()), vec!["x1*y2", "x2*y3"]);
        let g = pendant_triangle();
        let mut expected = vec!["x4*y5", "x3*y6", "x3*y4", "x2*y4", "x2*y3", "x1*y2", "x4*y3*y6", "x5*y3*y4*y6"];
        expected.sort();
        assert_eq!(names(&g, &initial_ideal(&g).unwrap()), expected);
    }

    #[test]
    fn initial_primes_intersect_to_initial_ideal() {
        let k2 = Graph::complete(2);
        let pr = initial_primes(&k2);
        assert_eq!(pr.iter().map(|p| p.vars).collect::<Vec<_>>(), vec![0b1000, 0b0001]);
        for g in [Graph::path(3), pendant_triangle(), Graph::cycle(5)] {
            let pr = initial_primes(&g);
            assert_eq!(intersect_initial_primes(g.n(), &pr), initial_ideal(&g).unwrap());
        }
        assert_eq!(initial_primes(&Graph::path(3)).len(), 4);
    }
}
