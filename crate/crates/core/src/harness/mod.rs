//! Batch drivers behind the command line: single-graph analysis, labeling
//! sweeps, named families and corpus sweeps.

mod analyze;
mod family;
mod labelings;
mod sweep;

pub use analyze::{analyze, Analysis, AnalyzeOptions};
pub use family::Family;
pub use labelings::{labeling_sweep, LabelingOptions, LabelingTable, EXHAUSTIVE_CAP};
pub use sweep::{
    csv_line, read_graph6_corpus, sweep, threads_from_env, to_csv, Check, Counterexample, Status, SweepOptions,
    SweepResult, SweepRow, Tally, Verdict, CSV_HEADER,
};
