use serde::Serialize;

use crate::binomial::{initial_ideal, primary_decomposition, DecompositionEntry};
use crate::error::Result;
use crate::graph::{completion_numbers, is_chordal, structure_queries, Graph, StructureReport};
use crate::poly::{FieldTag, IdealText, PrimeField, Rationals, Ring};
use crate::regularity::{chordal_certificate, reg_binomial_edge, HochsterOptions, MatchingCertificate, DEFAULT_REG_CAP};
use crate::vnumber::{v_number, VOptions, VReport};

/// Largest `n` for which the decomposition is written out.
const DECOMPOSITION_CAP: usize = 10;

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub v: VOptions,
    pub reg_cap: usize,
    pub hochster: HochsterOptions,
    pub certificates: bool,
    pub decomposition: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            v: VOptions::default(),
            reg_cap: DEFAULT_REG_CAP,
            hochster: HochsterOptions::default(),
            certificates: true,
            decomposition: true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub report: VReport,
    pub structure: StructureReport,
    pub matching_bound: Option<u32>,
    pub initial_ideal: Option<IdealText>,
    pub decomposition: Option<Vec<DecompositionEntry>>,
    pub certificates: Vec<MatchingCertificate>,
}

/// The full pipeline on one graph. Anything over a cap is left `None` and
/// explained in `report.notes`.
pub fn analyze(g: &Graph, opts: &AnalyzeOptions) -> Result<Analysis> {
    let mut report = v_number(g, &opts.v)?;
    let ring = Ring::new(g.n())?;
    let init = initial_ideal(g)?;
    let mut matching_bound = None;
    match reg_binomial_edge(g, opts.reg_cap, &opts.hochster) {
        Ok(r) => {
            report.reg = Some(r.reg);
            report.reg_confirmed = r.confirmed;
            matching_bound = Some(r.matching_bound);
            if !r.confirmed {
                report.notes.push(format!("reg not confirmed: {} is a lower bound", r.reg));
            }
        }
        Err(e) => report.notes.push(format!("reg skipped: {e}")),
    }
    let decomposition = if opts.decomposition && g.n() <= DECOMPOSITION_CAP {
        Some(match opts.v.field {
            FieldTag::Rationals => primary_decomposition(g, Rationals)?.iter().map(|p| p.to_entry()).collect(),
            FieldTag::Prime(p) => primary_decomposition(g, PrimeField::new(p))?.iter().map(|p| p.to_entry()).collect(),
        })
    } else {
        None
    };
    let mut certificates = Vec::new();
    if opts.certificates && g.is_connected() && is_chordal(g) {
        for w in completion_numbers(g).minimal_sets.into_iter().filter(|w| !w.is_empty()) {
            match chordal_certificate(g, w) {
                Ok(c) => certificates.push(c),
                Err(e) => report.notes.push(format!("certificate for {w} failed: {e}")),
            }
        }
    }
    Ok(Analysis {
        report,
        structure: structure_queries(g),
        matching_bound,
        initial_ideal: Some(IdealText { order: "lex".into(), generators: init.display(&ring) }),
        decomposition,
        certificates,
    })
}
