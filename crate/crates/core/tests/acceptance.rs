//! Acceptance run: one PASS/FAIL line per criterion with its timing budget.
//! Exits 2 when the conjecture sweep finds a counterexample, 1 on any other
//! failure.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use vnum::binomial::{binomial_edge_ideal, initial_ideal, primary_decomposition};
use vnum::graph::enumerate::{canonical_code, connected_graphs_up_to};
use vnum::graph::{
    closure, closure_in_order, completion_numbers, cutsets, domination_number, free_vertices, is_chordal,
    is_completion_set, longest_induced_path, Graph, VertexSet,
};
use vnum::harness::{sweep, Check, SweepOptions};
use vnum::poly::{groebner, Rationals};
use vnum::regularity::{chordal_certificate, reg_binomial_edge, HochsterOptions};
use vnum::vnumber::{classify_v1, v_empty, v_local, v_monomial, v_of, GradedSearch, DEFAULT_GROEBNER_CAP};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn pendant_triangle() -> Graph {
    Graph::from_edges(6, &[(2, 3), (2, 4), (3, 4), (1, 2), (3, 6), (4, 5)]).unwrap()
}

fn pendant_triangle_relabeled() -> Graph {
    Graph::from_edges(6, &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
}

fn whiskered_k5_minus_edge() -> Graph {
    let e = [
        (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 5),
        (2, 7), (3, 4), (3, 5), (3, 8), (4, 5), (4, 9), (5, 10),
    ];
    Graph::from_edges(10, &e).unwrap()
}

fn cube() -> Graph {
    let e = [(1, 2), (1, 4), (1, 5), (2, 3), (2, 6), (3, 4), (3, 7), (4, 8), (5, 6), (5, 8), (6, 7), (7, 8)];
    Graph::from_edges(8, &e).unwrap()
}

/// Connected graphs with at least one edge, `2 <= n <= max_n`.
fn corpus(max_n: usize) -> Vec<Graph> {
    connected_graphs_up_to(max_n).into_iter().filter(|g| g.n() >= 2).collect()
}

/// Mask of `x_{xs} y_{ys}` in the `2n` variables of the initial ideal.
fn xy(n: usize, xs: &[usize], ys: &[usize]) -> u64 {
    xs.iter().map(|&i| 1u64 << (i - 1)).chain(ys.iter().map(|&j| 1u64 << (n + j - 1))).fold(0, |a, b| a | b)
}

fn reg(g: &Graph) -> u32 {
    let r = reg_binomial_edge(g, g.n(), &HochsterOptions::default()).unwrap();
    assert!(r.confirmed);
    r.reg
}

fn criterion_1() -> Outcome {
    let g = pendant_triangle();
    let listed: BTreeSet<u64> = [
        xy(6, &[4], &[5]),
        xy(6, &[3], &[6]),
        xy(6, &[3], &[4]),
        xy(6, &[2], &[4]),
        xy(6, &[2], &[3]),
        xy(6, &[1], &[2]),
        xy(6, &[4], &[3, 6]),
        xy(6, &[5], &[3, 4, 6]),
    ]
    .into();
    let init = initial_ideal(&g).unwrap();
    let got: BTreeSet<u64> = init.generators().iter().copied().collect();
    let v = v_of(&g, Rationals).unwrap();
    let vin_a = v_monomial(&init).unwrap().v;
    let vin_b = v_monomial(&initial_ideal(&pendant_triangle_relabeled()).unwrap()).unwrap().v;
    let same_graph = canonical_code(&g) == canonical_code(&pendant_triangle_relabeled());
    outcome(
        got == listed && v == 3 && vin_a == 4 && vin_b == 3 && same_graph,
        format!("in(J) has {} generators (listed match: {}), v = {v}, v(in) = {vin_a}, second labeling v(in) = {vin_b}", got.len(), got == listed),
    )
}

fn criterion_2() -> Outcome {
    let g = whiskered_k5_minus_edge();
    let ell = longest_induced_path(&g) as u32;
    let (ve, _) = v_empty(&g).unwrap();
    let mc = completion_numbers(&g).min_comp as u32;
    let opts = HochsterOptions { budget: Some(Duration::from_secs(600)), ..HochsterOptions::default() };
    let r = reg_binomial_edge(&g, 10, &opts).unwrap();
    if r.confirmed {
        outcome(
            ell == 4 && ve == 5 && mc == 5 && r.reg == 6 && ell < ve && ve < r.reg,
            format!("ell = {ell}, v_empty = {ve}, min-comp = {mc}, reg = {} ({} subsets)", r.reg, r.subsets_examined),
        )
    } else {
        outcome(
            ell == 4 && ve == 5 && mc == 5 && r.matching_bound >= 5,
            format!("ell = {ell}, v_empty = {ve}, reg not confirmed, lower bound {}", r.reg),
        )
    }
}

fn criterion_3() -> Outcome {
    let g = cube();
    let v = v_of(&g, Rationals).unwrap();
    let (ve, _) = v_empty(&g).unwrap();
    let r = reg(&g);
    let w = is_completion_set(&g, VertexSet::from_vertices([1, 2, 3, 4]));
    outcome(v == 4 && ve == 4 && r == 4 && w, format!("v = {v}, v_empty = {ve}, reg = {r}, {{1,2,3,4}} completes: {w}"))
}

fn criterion_4() -> Outcome {
    let graphs = corpus(5);
    let mut bad = Vec::new();
    for g in &graphs {
        let v = v_of(g, Rationals).unwrap();
        if (v == 1) != classify_v1(g).unwrap().is_v1 {
            bad.push(g.to_string());
        }
    }
    outcome(bad.is_empty(), format!("{} graphs, {} mismatches {:?}", graphs.len(), bad.len(), bad))
}

fn criterion_5() -> Outcome {
    let graphs = corpus(4);
    let mut bad = Vec::new();
    for g in &graphs {
        let (d, _) = v_local(g, VertexSet::EMPTY, Rationals, DEFAULT_GROEBNER_CAP).unwrap();
        if d as usize != completion_numbers(g).min_comp {
            bad.push(g.to_string());
        }
    }
    outcome(bad.is_empty(), format!("{} graphs, {} mismatches {:?}", graphs.len(), bad.len(), bad))
}

/// The union's v comes from the colon-ideal route, the parts from the
/// multidegree search.
fn criterion_6() -> Outcome {
    let small = corpus(3);
    let mut pairs = 0;
    let mut bad = Vec::new();
    for a in &small {
        for b in &small {
            let u = a.disjoint_union(b).unwrap();
            let vu = cutsets(&u)
                .iter()
                .map(|c| v_local(&u, c.set, Rationals, DEFAULT_GROEBNER_CAP).unwrap().0)
                .min()
                .unwrap();
            let sum = v_of(a, Rationals).unwrap() + v_of(b, Rationals).unwrap();
            pairs += 1;
            if vu != sum {
                bad.push(format!("{a} + {b}: {vu} vs {sum}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{pairs} ordered pairs, {} mismatches {:?}", bad.len(), bad))
}

/// Bases with at least one edge; `W_{K_1} = K_2` is complete and has
/// `v_∅ = 0`, which is printed alongside.
fn criterion_7() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for g in corpus(3) {
        let w = g.whisker().unwrap();
        let (ve, _) = v_empty(&w).unwrap();
        let s = GradedSearch::new(&w, Rationals).unwrap();
        let idx = s.cutsets().iter().position(|c| c.set.is_empty()).unwrap();
        let algebraic = s.local(idx, g.n() as u32).map(|h| h.degree);
        let r = reg(&w);
        count += 1;
        if ve != g.n() as u32 || algebraic != Some(ve) || r < ve {
            bad.push(format!("{g}: {ve} / {algebraic:?} / reg {r}"));
        }
    }
    let (k1, _) = v_empty(&Graph::complete(1).whisker().unwrap()).unwrap();
    outcome(
        bad.is_empty(),
        format!("{count} base graphs, {} mismatches {:?}; base K1 gives v_empty = {k1}", bad.len(), bad),
    )
}

fn criterion_8() -> Outcome {
    let mut rows = Vec::new();
    let mut ok = true;
    for n in 1..=3u32 {
        let g = Graph::path(n as usize + 2).cone().unwrap();
        let v = v_of(&g, Rationals).unwrap();
        let r = reg(&g);
        ok &= v == 1 && r == n + 1;
        rows.push(format!("n={n}: v={v} reg={r}"));
    }
    outcome(ok, rows.join(", "))
}

fn criterion_9() -> Outcome {
    let mut graphs = 0;
    let mut certs = 0;
    let mut bad = Vec::new();
    for g in corpus(6).into_iter().filter(is_chordal) {
        graphs += 1;
        let c = completion_numbers(&g);
        let (ve, _) = v_empty(&g).unwrap();
        let r = reg(&g);
        for &w in c.minimal_sets.iter().filter(|w| !w.is_empty()) {
            certs += 1;
            match chordal_certificate(&g, w) {
                Ok(cert) if cert.verified && cert.k == w.len() && cert.k as u32 <= r => {}
                other => bad.push(format!("{g} W={w}: {other:?}")),
            }
        }
        if !(ve <= c.max_comp as u32 && c.max_comp as u32 <= r) {
            bad.push(format!("{g}: v_empty {ve}, max-comp {}, reg {r}", c.max_comp));
        }
    }
    outcome(bad.is_empty(), format!("{graphs} chordal graphs, {certs} certificates, {} violations {:?}", bad.len(), bad))
}

fn criterion_10() -> (Outcome, bool) {
    let graphs = corpus(6);
    let opts = SweepOptions { checks: vec![Check::Conjecture], ..SweepOptions::default() };
    let res = sweep("connected graphs, 2 <= n <= 6", &graphs, &opts).unwrap();
    let t = &res.checks[0].1;
    let found = !res.counterexamples.is_empty();
    for c in &res.counterexamples {
        println!("  counterexample {} {}", c.graph, c.detail);
    }
    let o = outcome(
        !found && res.errors == 0 && t.holds == graphs.len(),
        format!("{} graphs: holds {}, fails {}, skipped {}", graphs.len(), t.holds, t.fails, t.skipped),
    );
    (o, found)
}

fn criterion_11() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = StdRng::seed_from_u64(11);

    // J_G equals the intersection of its minimal primes
    for g in corpus(5) {
        let j = binomial_edge_ideal(&g, Rationals).unwrap();
        let primes = primary_decomposition(&g, Rationals).unwrap();
        let meet = primes.iter().skip(1).fold(primes[0].ideal.clone(), |acc, p| acc.intersect(&p.ideal));
        if !meet.equals(&j) {
            failures.push(format!("decomposition {g}"));
        }
    }
    // admissible paths give the leading terms of the reduced basis
    for g in corpus(6) {
        let j = binomial_edge_ideal(&g, Rationals).unwrap();
        let lt: BTreeSet<u64> = j.leading_monomials().iter().map(|m| m.support()).collect();
        let paths: BTreeSet<u64> = initial_ideal(&g).unwrap().generators().iter().copied().collect();
        if lt != paths {
            failures.push(format!("initial ideal {g}"));
        }
    }
    // closure does not depend on the completion order
    for g in corpus(6) {
        for mask in 0..(1u64 << g.n()) {
            let w = VertexSet(mask);
            let mut order = w.to_vec();
            order.shuffle(&mut rng);
            if closure_in_order(&g, order) != closure(&g, w) {
                failures.push(format!("closure order {g} {w}"));
            }
        }
    }
    for g in corpus(6) {
        // domination number below v_empty
        let (ve, _) = v_empty(&g).unwrap();
        if ve > 0 && domination_number(&g) as u32 > ve {
            failures.push(format!("domination {g}"));
        }
        // free vertices are exactly those outside every cutset
        let in_cutset = cutsets(&g).iter().fold(VertexSet::EMPTY, |a, c| a.union(c.set));
        let free = VertexSet::from_vertices(free_vertices(&g));
        if free != g.vertices().difference(in_cutset) {
            failures.push(format!("free vertices {g}"));
        }
    }
    // the reduced basis ignores generator order
    for g in corpus(5) {
        let j = binomial_edge_ideal(&g, Rationals).unwrap();
        let mut gens = j.generators().to_vec();
        for _ in 0..3 {
            gens.shuffle(&mut rng);
            if groebner(&Rationals, j.order(), &gens) != j.groebner() {
                failures.push(format!("basis uniqueness {g}"));
            }
        }
    }
    outcome(failures.is_empty(), format!("{} failures {:?}", failures.len(), failures))
}

fn main() {
    let budgets: [(u64, &str); 11] = [
        (60, "pendant triangle: initial ideal, v = 3, v(in) = 4 and 3"),
        (600, "whiskered K5 minus an edge: ell < v_empty < reg"),
        (300, "cube: v = v_empty = reg = 4"),
        (1800, "v = 1 iff cone over a non-complete graph, n <= 5"),
        (600, "colon-ideal v_empty = min-comp, n <= 4"),
        (300, "additivity over disjoint unions, parts <= 3 vertices"),
        (120, "whiskers have v_empty = |V| <= reg, 2 <= n <= 3"),
        (600, "cone over P_{n+2}: v = 1, reg = n + 1"),
        (3600, "chordal certificates and v_empty <= max-comp <= reg, n <= 6"),
        (14400, "v_empty <= reg for connected graphs, n <= 6"),
        (1800, "property suites"),
    ];
    let mut all = true;
    let mut counterexample = false;
    for (k, &(budget, name)) in budgets.iter().enumerate() {
        let start = Instant::now();
        let o = match k + 1 {
            1 => criterion_1(),
            2 => criterion_2(),
            3 => criterion_3(),
            4 => criterion_4(),
            5 => criterion_5(),
            6 => criterion_6(),
            7 => criterion_7(),
            8 => criterion_8(),
            9 => criterion_9(),
            10 => {
                let (o, found) = criterion_10();
                counterexample = found;
                o
            }
            _ => criterion_11(),
        };
        let secs = start.elapsed().as_secs_f64();
        let pass = o.pass && secs <= budget as f64;
        all &= pass;
        println!(
            "{} criterion {:>2}: {name} | {} | {secs:.2}s of {budget}s",
            if pass { "PASS" } else { "FAIL" },
            k + 1,
            o.detail
        );
    }
    if counterexample {
        std::process::exit(2);
    }
    if !all {
        std::process::exit(1);
    }
}
