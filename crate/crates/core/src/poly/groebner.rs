//! Buchberger's algorithm with the Gebauer–Möller criteria and the normal
//! selection strategy.

use super::field::Field;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Poly;

struct Basis<E> {
    polys: Vec<Poly<E>>,
    lms: Vec<Monomial>,
    masks: Vec<u64>,
    active: Vec<bool>,
}

impl<E: Clone + PartialEq> Basis<E> {
    fn divisor_of(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let ms = m.support();
        (0..self.polys.len()).find(|&k| {
            self.active[k] && Some(k) != skip && self.masks[k] & !ms == 0 && self.lms[k].divides(m)
        })
    }
}

/// Full reduction of `p` against the active, monic elements of `b`.
fn reduce<F: Field>(f: &F, o: &MonomialOrder, p: Poly<F::Elem>, b: &Basis<F::Elem>, skip: Option<usize>) -> Poly<F::Elem> {
    let mut out: Vec<(Monomial, F::Elem)> = Vec::new();
    let mut rem = p;
    loop {
        let Some((m, c)) = rem.terms().first().cloned() else { break };
        match b.divisor_of(&m, skip) {
            Some(k) => {
                let q = b.lms[k].quotient_of(&m);
                rem = rem.axpy(f, o, &f.neg(&c), &q, &b.polys[k]);
            }
            None => {
                // move the irreducible head into the output
                let rest: Vec<_> = rem.terms()[1..].to_vec();
                out.push((m, c));
                rem = Poly::from_sorted(rest);
            }
        }
    }
    Poly::from_sorted(out)
}

/// Normal form of `p` modulo a Gröbner basis `gb` (all sorted under `o`).
pub fn normal_form<F: Field>(f: &F, o: &MonomialOrder, p: &Poly<F::Elem>, gb: &[Poly<F::Elem>]) -> Poly<F::Elem> {
    let b = Basis {
        polys: gb.iter().map(|g| g.monic(f)).collect(),
        lms: gb.iter().map(|g| *g.lm().expect("nonzero basis element")).collect(),
        masks: gb.iter().map(|g| g.lm().unwrap().support()).collect(),
        active: vec![true; gb.len()],
    };
    reduce(f, o, p.clone(), &b, None)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn update<E: Clone + PartialEq>(o: &MonomialOrder, b: &mut Basis<E>, pairs: &mut Vec<Pair>, h: usize) {
    let hm = b.lms[h];
    let cands: Vec<(usize, Monomial)> = (0..h).filter(|&g| b.active[g]).map(|g| (g, hm.lcm(&b.lms[g]))).collect();
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    for (k, &(g, l)) in cands.iter().enumerate() {
        let coprime = hm.coprime(&b.lms[g]);
        let later = cands[k + 1..].iter().any(|(_, l2)| l2.divides(&l));
        let earlier = kept.iter().any(|(_, l2)| l2.divides(&l));
        if coprime || (!later && !earlier) {
            kept.push((g, l));
        }
    }
    pairs.retain(|p| {
        !(hm.divides(&p.lcm) && b.lms[p.i].lcm(&hm) != p.lcm && b.lms[p.j].lcm(&hm) != p.lcm)
    });
    for (g, l) in kept {
        if !hm.coprime(&b.lms[g]) {
            pairs.push(Pair { i: g, j: h, lcm: l, sugar: o.sugar(&l) });
        }
    }
    for g in 0..h {
        if b.active[g] && hm.divides(&b.lms[g]) {
            b.active[g] = false;
        }
    }
}

fn spoly<F: Field>(f: &F, o: &MonomialOrder, b: &Basis<F::Elem>, p: &Pair) -> Poly<F::Elem> {
    let (gi, gj) = (&b.polys[p.i], &b.polys[p.j]);
    let qi = b.lms[p.i].quotient_of(&p.lcm);
    let qj = b.lms[p.j].quotient_of(&p.lcm);
    gi.mul_term(f, &qi, &f.one()).axpy(f, o, &f.neg(&f.one()), &qj, gj)
}

/// The reduced Gröbner basis of `⟨gens⟩` under `o`: monic, sorted by
/// decreasing leading monomial. The zero ideal gives the empty basis.
pub fn groebner<F: Field>(f: &F, o: &MonomialOrder, gens: &[Poly<F::Elem>]) -> Vec<Poly<F::Elem>> {
    let mut b = Basis { polys: Vec::new(), lms: Vec::new(), masks: Vec::new(), active: Vec::new() };
    let mut pairs: Vec<Pair> = Vec::new();
    let add = |p: Poly<F::Elem>, b: &mut Basis<F::Elem>, pairs: &mut Vec<Pair>| {
        let h = reduce(f, o, p, b, None);
        if h.is_zero() {
            return;
        }
        let h = h.monic(f);
        let lm = *h.lm().unwrap();
        b.polys.push(h);
        b.lms.push(lm);
        b.masks.push(lm.support());
        b.active.push(true);
        update(o, b, pairs, b.polys.len() - 1);
    };
    let mut inputs: Vec<Poly<F::Elem>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.resort(f, o)).collect();
    inputs.sort_by(|a, c| o.sugar(a.lm().unwrap()).cmp(&o.sugar(c.lm().unwrap())).then_with(|| o.cmp(a.lm().unwrap(), c.lm().unwrap())));
    for g in inputs {
        add(g, &mut b, &mut pairs);
    }
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&x, &y| {
                pairs[x].sugar.cmp(&pairs[y].sugar).then_with(|| o.cmp(&pairs[x].lcm, &pairs[y].lcm))
            })
            .unwrap();
        let p = pairs.swap_remove(best);
        let s = spoly(f, o, &b, &p);
        add(s, &mut b, &mut pairs);
    }
    // interreduce the active (already minimal) elements
    let active: Vec<usize> = (0..b.polys.len()).filter(|&k| b.active[k]).collect();
    let mut out: Vec<Poly<F::Elem>> = Vec::with_capacity(active.len());
    for &k in &active {
        let g = &b.polys[k];
        let head = Poly::from_sorted(vec![g.terms()[0].clone()]);
        let tail = Poly::from_sorted(g.terms()[1..].to_vec());
        let tail = reduce(f, o, tail, &b, Some(k));
        out.push(head.add(f, o, &tail));
    }
    out.sort_by(|a, c| o.cmp(c.lm().unwrap(), a.lm().unwrap()));
    out
}

/// Checks Buchberger's criterion directly: every S-polynomial of `gb`
/// reduces to zero.
pub fn is_groebner<F: Field>(f: &F, o: &MonomialOrder, gb: &[Poly<F::Elem>]) -> bool {
    let b = Basis {
        polys: gb.iter().map(|g| g.monic(f)).collect(),
        lms: gb.iter().map(|g| *g.lm().unwrap()).collect(),
        masks: gb.iter().map(|g| g.lm().unwrap().support()).collect(),
        active: vec![true; gb.len()],
    };
    for i in 0..gb.len() {
        for j in i + 1..gb.len() {
            let lcm = b.lms[i].lcm(&b.lms[j]);
            let s = spoly(f, o, &b, &Pair { i, j, lcm, sugar: 0 });
            if !reduce(f, o, s, &b, None).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::{PrimeField, Rationals};
    use crate::poly::polynomial::Ring;
    use proptest::prelude::*;

    fn parse_all(r: &Ring, o: &MonomialOrder, s: &[&str]) -> Vec<Poly<num_rational::BigRational>> {
        s.iter().map(|t| Poly::parse(&Rationals, o, r, t).unwrap()).collect()
    }

    #[test]
    fn single_binomial_is_reduced() {
        let r = Ring::new(2).unwrap();
        let o = MonomialOrder::lex();
        let g = parse_all(&r, &o, &["x1*y2 - x2*y1"]);
        assert_eq!(groebner(&Rationals, &o, &g), g);
    }

    #[test]
    fn star_center_one_basis() {
        // edges 1-2 and 1-3: the path 2,1,3 has interior 1 < 2 and adds y1*f_23
        let r = Ring::new(3).unwrap();
        let o = MonomialOrder::lex();
        let g = parse_all(&r, &o, &["x1*y2 - x2*y1", "x1*y3 - x3*y1"]);
        let gb = groebner(&Rationals, &o, &g);
        let expected = parse_all(&r, &o, &["x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y1*y3 - x3*y1*y2"]);
        let mut e = expected;
        e.sort_by(|a, c| o.cmp(c.lm().unwrap(), a.lm().unwrap()));
        assert_eq!(gb, e);
        assert!(is_groebner(&Rationals, &o, &gb));
    }

    #[test]
    fn textbook_example() {
        // x^2 - y, x^3 - x under lex x > y gives {x^2 - y, x*y - x, y^2 - y}
        let r = Ring::new(1).unwrap();
        let o = MonomialOrder::lex();
        let g = parse_all(&r, &o, &["x1^2 - y1", "x1^3 - x1"]);
        let gb = groebner(&Rationals, &o, &g);
        let e = parse_all(&r, &o, &["x1^2 - y1", "x1*y1 - x1", "y1^2 - y1"]);
        assert_eq!(gb, e);
    }

    #[test]
    fn unit_and_zero() {
        let r = Ring::new(1).unwrap();
        let o = MonomialOrder::degrevlex();
        let g = parse_all(&r, &o, &["x1 + 1", "x1"]);
        assert_eq!(groebner(&Rationals, &o, &g), parse_all(&r, &o, &["1"]));
        assert!(groebner::<Rationals>(&Rationals, &o, &[]).is_empty());
    }

    fn random_gens(seed: &[(u8, u8, u8, i8)], nvars: usize) -> Vec<Vec<(Monomial, i64)>> {
        seed.chunks(3)
            .map(|ch| {
                ch.iter()
                    .map(|&(a, b, e, c)| {
                        let mut ex = vec![0u8; nvars];
                        ex[a as usize % nvars] += e % 3;
                        ex[b as usize % nvars] += 1;
                        (Monomial::from_exponents(&ex), c as i64)
                    })
                    .collect()
            })
            .collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn reduced_basis_is_unique_and_contains_inputs(
            seed in proptest::collection::vec((0u8..5, 0u8..5, 0u8..3, -3i8..4), 3..9),
            rot in 0usize..5,
        ) {
            let f = PrimeField::new(32003);
            let o = MonomialOrder::degrevlex();
            let gens: Vec<Poly<u32>> = random_gens(&seed, 5)
                .into_iter()
                .map(|t| Poly::from_terms(&f, &o, t.into_iter().map(|(m, c)| (m, f.from_i64(c))).collect()))
                .collect();
            let gb = groebner(&f, &o, &gens);
            prop_assert!(is_groebner(&f, &o, &gb));
            for g in &gens {
                prop_assert!(normal_form(&f, &o, g, &gb).is_zero());
            }
            let mut shuffled = gens.clone();
            shuffled.reverse();
            let k = shuffled.len();
            shuffled.rotate_left(rot % k.max(1));
            // add a redundant combination as well
            if gens.len() >= 2 {
                shuffled.push(gens[0].add(&f, &o, &gens[1]));
            }
            prop_assert_eq!(groebner(&f, &o, &shuffled), gb);
        }
    }
}
