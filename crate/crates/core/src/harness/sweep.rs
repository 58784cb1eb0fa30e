use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::analyze::AnalyzeOptions;
use crate::error::{Error, Result};
use crate::graph::{completion_numbers, decode_graph6, domination_number, encode_graph6, is_chordal, Graph, VertexSet};
use crate::poly::{FieldTag, Rationals};
use crate::regularity::{chordal_certificate, reg_binomial_edge, HochsterOptions};
use crate::vnumber::{classify_v1, v_number, v_of, GradedSearch, VReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// `v_∅(J_G) <= reg(S/J_G)`.
    Conjecture,
    /// `v(J_G) = 1` iff `G` is a cone over a non-complete graph.
    V1Classification,
    /// `v` adds over disjoint unions.
    Additivity,
    /// `γ(G) <= v_∅(J_G)`.
    Domination,
    /// `v(J_G) <= v(in_<(J_G))`, recorded only.
    VinInequality,
    /// Certificates and `v_∅ <= max-comp <= reg` for chordal graphs.
    ChordalChain,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Conjecture,
        Check::V1Classification,
        Check::Additivity,
        Check::Domination,
        Check::VinInequality,
        Check::ChordalChain,
    ];

    fn needs_v(self) -> bool {
        matches!(self, Check::V1Classification | Check::Additivity | Check::VinInequality)
    }

    fn needs_reg(self) -> bool {
        matches!(self, Check::Conjecture | Check::ChordalChain)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Conjecture => "conjecture",
            Check::V1Classification => "v1-classification",
            Check::Additivity => "additivity",
            Check::Domination => "domination",
            Check::VinInequality => "vin-inequality",
            Check::ChordalChain => "chordal-chain",
        })
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    Skipped,
    Recorded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: Check,
    pub status: Status,
    pub detail: String,
}

impl Verdict {
    fn new(check: Check, status: Status, detail: impl Into<String>) -> Self {
        Verdict { check, status, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub index: usize,
    pub graph: String,
    pub n: usize,
    pub edges: usize,
    pub report: Option<VReport>,
    pub error: Option<String>,
    pub verdicts: Vec<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub index: usize,
    pub graph: String,
    pub check: Check,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub holds: usize,
    pub fails: usize,
    pub skipped: usize,
    pub recorded: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepResult {
    pub corpus: String,
    pub checks: Vec<(Check, Tally)>,
    pub rows: Vec<SweepRow>,
    pub counterexamples: Vec<Counterexample>,
    pub errors: usize,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub checks: Vec<Check>,
    pub analyze: AnalyzeOptions,
    /// Worker threads; `None` runs on the calling thread.
    pub threads: Option<usize>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        let mut analyze = AnalyzeOptions::default();
        analyze.v.groebner = false;
        SweepOptions { checks: Check::ALL.to_vec(), analyze, threads: None }
    }
}

/// Reads `VNUM_THREADS`; unset or unparsable means serial.
pub fn threads_from_env() -> Option<usize> {
    std::env::var("VNUM_THREADS").ok()?.trim().parse().ok().filter(|&t| t > 0)
}

/// One graph6 string per line; blank lines and `#` comments are skipped.
pub fn read_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(k, l)| decode_graph6(l).map_err(|e| Error::Parse { line: k + 1, msg: e.to_string() }))
        .collect()
}

pub fn sweep(corpus: &str, graphs: &[Graph], opts: &SweepOptions) -> Result<SweepResult> {
    let start = Instant::now();
    let run = |(index, g): (usize, &Graph)| -> SweepRow {
        catch_unwind(AssertUnwindSafe(|| sweep_one(index, g, opts))).unwrap_or_else(|_| SweepRow {
            index,
            graph: encode_graph6(g),
            n: g.n(),
            edges: g.edge_count(),
            report: None,
            error: Some("panicked".into()),
            verdicts: Vec::new(),
        })
    };
    let rows: Vec<SweepRow> = match opts.threads {
        None | Some(1) => graphs.iter().enumerate().map(run).collect(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Invalid(e.to_string()))?
            .install(|| graphs.par_iter().enumerate().map(run).collect()),
    };
    let mut checks: Vec<(Check, Tally)> = opts.checks.iter().map(|&c| (c, Tally::default())).collect();
    let mut counterexamples = Vec::new();
    for row in &rows {
        for v in &row.verdicts {
            let t = &mut checks.iter_mut().find(|(c, _)| *c == v.check).expect("check was requested").1;
            match v.status {
                Status::Holds => t.holds += 1,
                Status::Fails => t.fails += 1,
                Status::Skipped => t.skipped += 1,
                Status::Recorded => t.recorded += 1,
            }
            if v.status == Status::Fails {
                counterexamples.push(Counterexample {
                    index: row.index,
                    graph: row.graph.clone(),
                    check: v.check,
                    detail: v.detail.clone(),
                });
            }
        }
    }
    Ok(SweepResult {
        corpus: corpus.to_string(),
        checks,
        errors: rows.iter().filter(|r| r.error.is_some()).count(),
        rows,
        counterexamples,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn sweep_one(index: usize, g: &Graph, opts: &SweepOptions) -> SweepRow {
    let mut row = SweepRow {
        index,
        graph: encode_graph6(g),
        n: g.n(),
        edges: g.edge_count(),
        report: None,
        error: None,
        verdicts: Vec::new(),
    };
    let mut v_opts = opts.analyze.v.clone();
    if !opts.checks.iter().any(|c| c.needs_v()) {
        v_opts.graded_cap_n = 0;
        v_opts.groebner = false;
    }
    let mut report = match v_number(g, &v_opts) {
        Ok(r) => r,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    if opts.checks.iter().any(|c| c.needs_reg()) {
        match reg_binomial_edge(g, opts.analyze.reg_cap, &opts.analyze.hochster) {
            Ok(r) => {
                report.reg = Some(r.reg);
                report.reg_confirmed = r.confirmed;
            }
            Err(e) => report.notes.push(format!("reg skipped: {e}")),
        }
    }
    for &c in &opts.checks {
        let v = match c {
            Check::Conjecture => conjecture(g, &report, opts),
            Check::V1Classification => v1(g, &report),
            Check::Additivity => additivity(g, &report, opts),
            Check::Domination => domination(g, &report),
            Check::VinInequality => vin(&report),
            Check::ChordalChain => chordal_chain(g, &report),
        };
        row.verdicts.push(v.unwrap_or_else(|e| Verdict::new(c, Status::Skipped, e.to_string())));
    }
    row.report = Some(report);
    row
}

fn conjecture(g: &Graph, r: &VReport, opts: &SweepOptions) -> Result<Verdict> {
    let c = Check::Conjecture;
    let (Some(ve), Some(reg)) = (r.v_empty, r.reg) else {
        return Ok(Verdict::new(c, Status::Skipped, "reg or v_empty unavailable"));
    };
    if !r.reg_confirmed {
        return Ok(Verdict::new(c, Status::Skipped, format!("reg only bounded below by {reg}")));
    }
    if ve <= reg {
        return Ok(Verdict::new(c, Status::Holds, format!("{ve} <= {reg}")));
    }
    // second pass: v_∅ through the multidegree search, reg in both fields
    let s = GradedSearch::new(g, Rationals)?;
    let idx = s.cutsets().iter().position(|t| t.set.is_empty()).expect("the empty set is a cutset");
    let ve2 = s.local(idx, ve).map(|w| w.degree);
    let mut regs = Vec::new();
    for field in [FieldTag::Prime(2), FieldTag::Rationals] {
        let h = HochsterOptions { field, ..opts.analyze.hochster.clone() };
        regs.push(reg_binomial_edge(g, opts.analyze.reg_cap, &h)?.reg);
    }
    let detail = format!(
        "v_empty = {ve} (witness {}, recomputed {ve2:?}) > reg = {reg} (GF:2 {}, Q {})",
        r.v_empty_witness.as_deref().unwrap_or("?"),
        regs[0],
        regs[1]
    );
    if ve2 == Some(ve) && regs.iter().all(|&x| x < ve) {
        Ok(Verdict::new(c, Status::Fails, detail))
    } else {
        Ok(Verdict::new(c, Status::Skipped, format!("re-verification disagreed: {detail}")))
    }
}

fn v1(g: &Graph, r: &VReport) -> Result<Verdict> {
    let c = Check::V1Classification;
    let Some(v) = r.v else {
        return Ok(Verdict::new(c, Status::Skipped, "v unavailable"));
    };
    let cls = classify_v1(g)?;
    let status = if (v == 1) == cls.is_v1 { Status::Holds } else { Status::Fails };
    Ok(Verdict::new(c, status, format!("v = {v}; {}", cls.reason)))
}

/// Disconnected inputs are compared with their components; connected ones
/// are paired with `P_3` (`v = 1`).
fn additivity(g: &Graph, r: &VReport, opts: &SweepOptions) -> Result<Verdict> {
    let c = Check::Additivity;
    let cap = opts.analyze.v.graded_cap_n;
    let Some(v) = r.v else {
        return Ok(Verdict::new(c, Status::Skipped, "v unavailable"));
    };
    if g.is_connected() {
        if g.n() + 3 > cap {
            return Ok(Verdict::new(c, Status::Skipped, format!("G + P3 exceeds the search cap {cap}")));
        }
        let u = v_of(&g.disjoint_union(&Graph::path(3))?, Rationals)?;
        let status = if u == v + 1 { Status::Holds } else { Status::Fails };
        return Ok(Verdict::new(c, status, format!("v(G + P3) = {u}, v(G) + v(P3) = {}", v + 1)));
    }
    let mut sum = 0;
    for comp in g.components().into_iter().filter(|s| s.len() > 1) {
        sum += v_of(&g.induced(comp).0, Rationals)?;
    }
    let status = if sum == v { Status::Holds } else { Status::Fails };
    Ok(Verdict::new(c, status, format!("v = {v}, sum over components = {sum}")))
}

fn domination(g: &Graph, r: &VReport) -> Result<Verdict> {
    let c = Check::Domination;
    let Some(ve) = r.v_empty else {
        return Ok(Verdict::new(c, Status::Skipped, "v_empty unavailable"));
    };
    if !g.is_connected() || ve == 0 {
        return Ok(Verdict::new(c, Status::Skipped, "needs a connected non-complete graph"));
    }
    let gamma = domination_number(g) as u32;
    let status = if gamma <= ve { Status::Holds } else { Status::Fails };
    Ok(Verdict::new(c, status, format!("gamma = {gamma}, v_empty = {ve}")))
}

fn vin(r: &VReport) -> Result<Verdict> {
    let c = Check::VinInequality;
    Ok(match (r.v, r.v_initial) {
        (Some(v), Some(vi)) => Verdict::new(
            c,
            Status::Recorded,
            format!("v = {v}, v(in) = {vi}, {}", if v <= vi { "holds" } else { "reversed" }),
        ),
        _ => Verdict::new(c, Status::Skipped, "v or v(in) unavailable"),
    })
}

fn chordal_chain(g: &Graph, r: &VReport) -> Result<Verdict> {
    let c = Check::ChordalChain;
    if !g.is_connected() || !is_chordal(g) {
        return Ok(Verdict::new(c, Status::Skipped, "not connected and chordal"));
    }
    let (Some(ve), Some(reg)) = (r.v_empty, r.reg) else {
        return Ok(Verdict::new(c, Status::Skipped, "reg or v_empty unavailable"));
    };
    let sets: Vec<VertexSet> = completion_numbers(g).minimal_sets.into_iter().filter(|w| !w.is_empty()).collect();
    for &w in &sets {
        match chordal_certificate(g, w) {
            Ok(cert) if cert.verified => {}
            Ok(_) => return Ok(Verdict::new(c, Status::Fails, format!("certificate for {w} does not verify"))),
            Err(e) => return Ok(Verdict::new(c, Status::Fails, format!("certificate for {w}: {e}"))),
        }
    }
    let mc = r.max_comp as u32;
    let ok = ve <= mc && (mc <= reg || !r.reg_confirmed);
    let detail = format!("v_empty = {ve} <= max-comp = {mc} <= reg = {reg}; {} certificates", sets.len());
    Ok(Verdict::new(c, if ok { Status::Holds } else { Status::Fails }, detail))
}

pub const CSV_HEADER: &str = "graph,n,edges,v,v_empty,min_comp,max_comp,v_in,reg";

/// One line per row after a timestamp comment and the header.
pub fn to_csv(rows: &[SweepRow]) -> String {
    let stamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    let mut out = format!("# generated unix={stamp}\n{CSV_HEADER}\n");
    for r in rows {
        out.push_str(&csv_line(&r.graph, r.n, r.edges, r.report.as_ref()));
        out.push('\n');
    }
    out
}

pub fn csv_line(graph: &str, n: usize, edges: usize, r: Option<&VReport>) -> String {
    let opt = |x: Option<u32>| x.map_or_else(|| "skipped".to_string(), |v| v.to_string());
    let reg = |r: &VReport| match r.reg {
        Some(x) if !r.reg_confirmed => format!(">={x}"),
        x => opt(x),
    };
    match r {
        Some(r) => format!(
            "{graph},{n},{edges},{},{},{},{},{},{}",
            opt(r.v),
            opt(r.v_empty),
            r.min_comp,
            r.max_comp,
            opt(r.v_initial),
            reg(r)
        ),
        None => format!("{graph},{n},{edges},skipped,skipped,skipped,skipped,skipped,skipped"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate::connected_graphs_up_to;

    #[test]
    fn small_sweep_is_clean_and_order_stable() {
        let graphs = connected_graphs_up_to(4);
        let opts = SweepOptions::default();
        let a = sweep("n<=4", &graphs, &opts).unwrap();
        assert!(a.counterexamples.is_empty(), "{:?}", a.counterexamples);
        assert_eq!(a.errors, 1); // K1 has no edges
        let par = SweepOptions { threads: Some(2), ..opts };
        let b = sweep("n<=4", &graphs, &par).unwrap();
        assert_eq!(a.rows, b.rows);
        let strip = |s: String| s.lines().skip(1).map(str::to_string).collect::<Vec<_>>();
        assert_eq!(strip(to_csv(&a.rows)), strip(to_csv(&b.rows)));
    }

    #[test]
    fn corpus_parsing() {
        let gs = read_graph6_corpus("# two graphs\nBw\n\nCF\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert!(matches!(read_graph6_corpus("Bw\n!!\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!("chordal-chain".parse::<Check>().unwrap(), Check::ChordalChain);
    }
}
