//! Local v-numbers through colon ideals and minimal generators of
//! `(J_G : P_T) / J_G`.

use crate::binomial::{binomial_edge_ideal, prime_component};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::{minimal_quotient_generators, Field, Poly};

/// Default bound on `n` for Gröbner computations: `2n + 1 <= 13` variables.
pub const DEFAULT_GROEBNER_CAP: usize = 6;

pub fn check_cap(g: &Graph, cap_n: usize) -> Result<()> {
    if g.n() > cap_n {
        return Err(Error::CapExceeded { what: "Groebner computation (vertices)", got: g.n(), cap: cap_n });
    }
    Ok(())
}

/// `v_T(J_G)` with a witness `f` of that degree satisfying `(J_G : f) = P_T`.
///
/// A minimal generator `g` of `(J_G : P_T) / J_G` qualifies iff `g ∉ P_T`
/// (for radical `J_G` this is the same as `g ∉ J_G`); the first qualifying
/// one in degree order is confirmed by recomputing `(J_G : g)`.
pub fn v_local<F: Field>(g: &Graph, t: VertexSet, field: F, cap_n: usize) -> Result<(u32, Poly<F::Elem>)> {
    check_cap(g, cap_n)?;
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let j = binomial_edge_ideal(g, field.clone())?;
    let p = prime_component(g, t, field)?.ideal;
    let c = j.colon_ideal(&p)?;
    let gens = minimal_quotient_generators(&j, &c);
    for h in gens {
        if p.contains(&h) {
            continue;
        }
        if !j.colon_poly(&h)?.equals(&p) {
            return Err(Error::Invalid(format!(
                "generator {} of (J:P_T)/J is not a witness",
                h.display(j.field(), j.ring())
            )));
        }
        return Ok((h.degree().unwrap_or(0), h));
    }
    Err(Error::Invalid("no minimal generator of (J:P_T)/J lies outside P_T".into()))
}

/// Independent witness check: `(J_G : f) = P_T(G)` by colon computation.
pub fn verify_witness<F: Field>(g: &Graph, t: VertexSet, f: &Poly<F::Elem>, field: F) -> Result<bool> {
    let j = binomial_edge_ideal(g, field.clone())?;
    let p = prime_component(g, t, field)?.ideal;
    Ok(j.colon_poly(f)?.equals(&p))
}

/// Cheaper witness check valid for any `n`: `f` lies in every other prime
/// component and not in `P_T`, tested by normal forms.
pub fn verify_witness_by_membership<F: Field>(g: &Graph, t: VertexSet, f: &Poly<F::Elem>, field: F) -> Result<bool> {
    let comps = crate::binomial::primary_decomposition(g, field)?;
    let mut seen_t = false;
    for c in comps {
        let inside = c.ideal.contains(f);
        if c.cutset == t {
            seen_t = true;
            if inside {
                return Ok(false);
            }
        } else if !inside {
            return Ok(false);
        }
    }
    if !seen_t {
        return Err(Error::NotACutset(t.to_vec()));
    }
    Ok(true)
}
