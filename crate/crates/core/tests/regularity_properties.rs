use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use vnum::binomial::initial_ideal;
use vnum::graph::enumerate::connected_graphs_up_to;
use vnum::graph::{longest_induced_path, Graph};
use vnum::poly::{FieldTag, SquarefreeIdeal};
use vnum::regularity::{hochster_regularity, induced_matching_bound, reg_binomial_edge, HochsterOptions, Hypergraph};

fn corpus(max_n: usize) -> Vec<Graph> {
    connected_graphs_up_to(max_n).into_iter().filter(|g| g.n() >= 2).collect()
}

fn reg(g: &Graph) -> u32 {
    reg_binomial_edge(g, 7, &HochsterOptions::default()).unwrap().reg
}

#[test]
fn hochster_dominates_matching_bound() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..200 {
        let nv = rng.gen_range(3..9);
        let gens: Vec<u64> = (0..rng.gen_range(1..6))
            .map(|_| {
                let mut m = 0u64;
                while m.count_ones() < 2 {
                    m |= 1 << rng.gen_range(0..nv);
                }
                m
            })
            .collect();
        let i = SquarefreeIdeal::new(nv, gens);
        let r = hochster_regularity(&i, &HochsterOptions::default()).unwrap();
        let (b, _) = induced_matching_bound(&Hypergraph::from_ideal(&i));
        assert!(r.reg >= b, "{:?}", i.generators());
    }
}

#[test]
fn regularity_at_least_longest_induced_path() {
    for g in corpus(6) {
        assert!(reg(&g) >= longest_induced_path(&g) as u32, "{g}");
    }
}

#[test]
fn regularity_ignores_labels() {
    let mut rng = StdRng::seed_from_u64(13);
    for g in corpus(5) {
        let r = reg(&g);
        for _ in 0..10 {
            let mut perm: Vec<usize> = (1..=g.n()).collect();
            perm.shuffle(&mut rng);
            assert_eq!(reg(&g.relabel(&perm).unwrap()), r, "{g} under {perm:?}");
        }
    }
}

/// GF(2) against rational homology; any divergence is printed.
#[test]
fn homology_field_comparison() {
    let mut differ = Vec::new();
    for g in corpus(5) {
        let init = initial_ideal(&g).unwrap();
        let a = hochster_regularity(&init, &HochsterOptions::default()).unwrap().reg;
        let q = HochsterOptions { field: FieldTag::Rationals, ..HochsterOptions::default() };
        let b = hochster_regularity(&init, &q).unwrap().reg;
        if a != b {
            differ.push(format!("{g}: GF(2) {a}, Q {b}"));
        }
    }
    println!("homology field divergences: {differ:?}");
}
