use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::analyze::Analysis;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// `cone(v, P_{n+2})`.
    ConePath,
    /// `W_{K_n}`.
    WhiskerComplete,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Path, Family::Cycle, Family::Complete, Family::ConePath, Family::WhiskerComplete];

    pub fn graph(self, n: usize) -> Result<Graph> {
        let min = match self {
            Family::Path | Family::Complete => 2,
            Family::Cycle => 3,
            Family::ConePath | Family::WhiskerComplete => 1,
        };
        if n < min {
            return Err(Error::Invalid(format!("{self} needs n >= {min}")));
        }
        match self {
            Family::Path => Ok(Graph::path(n)),
            Family::Cycle => Ok(Graph::cycle(n)),
            Family::Complete => Ok(Graph::complete(n)),
            Family::ConePath => Graph::path(n + 2).cone(),
            Family::WhiskerComplete => Graph::complete(n).whisker(),
        }
    }

    /// The family's known invariants, compared against an analysis.
    /// Returns one line per expectation with a pass flag.
    pub fn check(self, n: usize, a: &Analysis) -> Vec<(String, bool)> {
        let r = &a.report;
        let n32 = n as u32;
        let mut out = Vec::new();
        let mut expect = |what: &str, got: Option<u32>, want: u32| {
            out.push((format!("{what}: expected {want}, got {}", show(got)), got == Some(want)));
        };
        match self {
            Family::Path => expect("reg", r.reg, n32 - 1),
            Family::Cycle => {}
            Family::Complete => {
                expect("v", r.v, 0);
                expect("reg", r.reg, 1);
            }
            Family::ConePath => {
                expect("v", r.v, 1);
                expect("reg", r.reg, n32 + 1);
                expect("reg - v", r.reg.zip(r.v).map(|(a, b)| a - b), n32);
            }
            Family::WhiskerComplete => expect("v_empty", r.v_empty, n32),
        }
        out
    }
}

fn show(x: Option<u32>) -> String {
    x.map_or_else(|| "skipped".into(), |v| v.to_string())
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::ConePath => "cone-path",
            Family::WhiskerComplete => "whisker-complete",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown family `{s}`")))
    }
}
