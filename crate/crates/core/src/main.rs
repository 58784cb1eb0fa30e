use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vnum::graph::enumerate::connected_graphs_up_to;
use vnum::graph::parse_graph;
use vnum::harness::{
    analyze, csv_line, labeling_sweep, read_graph6_corpus, sweep, threads_from_env, to_csv, Analysis, AnalyzeOptions,
    Check, Family, LabelingOptions, SweepOptions, CSV_HEADER,
};
use vnum::poly::FieldTag;
use vnum::regularity::HochsterOptions;
use vnum::vnumber::VOptions;
use vnum::{Error, Graph, Result};

#[derive(Parser)]
#[command(name = "vnum", version, about = "v-numbers and regularity of binomial edge ideals")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full report for one graph (graph6 string, edge list, or a file holding either).
    Analyze {
        input: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// v of the initial ideal over relabelings.
    Labelings {
        input: String,
        /// Try this many random labelings instead of all of them.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Emit a member of a named family and optionally check its known invariants.
    Family {
        /// path, cycle, complete, cone-path or whisker-complete
        name: String,
        n: usize,
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run checks over a corpus: all connected graphs up to `--max-n`, or a graph6 file.
    Sweep {
        #[arg(long, conflicts_with = "corpus")]
        max_n: Option<usize>,
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Comma-separated; defaults to all checks.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Coefficient field: Q or GF:p.
    #[arg(long, default_value = "Q")]
    field: FieldTag,
    /// Largest n for Gröbner computations.
    #[arg(long, default_value_t = vnum::vnumber::DEFAULT_GROEBNER_CAP)]
    cap_n: usize,
    /// Skip the colon-ideal cross-check.
    #[arg(long)]
    no_groebner: bool,
    /// Largest n for the regularity computation.
    #[arg(long, default_value_t = vnum::regularity::DEFAULT_REG_CAP)]
    reg_cap: usize,
    /// Homology coefficients for the regularity.
    #[arg(long, default_value = "GF:2")]
    homology_field: FieldTag,
    /// Seconds before the regularity search settles for a lower bound.
    #[arg(long)]
    budget: Option<u64>,
}

impl Common {
    fn options(&self) -> AnalyzeOptions {
        AnalyzeOptions {
            v: VOptions { field: self.field, cap_n: self.cap_n, groebner: !self.no_groebner, ..VOptions::default() },
            reg_cap: self.reg_cap,
            hochster: HochsterOptions {
                field: self.homology_field,
                budget: self.budget.map(Duration::from_secs),
                ..HochsterOptions::default()
            },
            ..AnalyzeOptions::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

fn read_input(input: &str) -> Result<Graph> {
    let p = Path::new(input);
    if p.is_file() {
        parse_graph(&std::fs::read_to_string(p)?)
    } else {
        parse_graph(input)
    }
}

fn print_analysis(g: &Graph, a: &Analysis, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(a)?),
        Format::Csv => println!("{CSV_HEADER}\n{}", csv_line(&a.report.graph, a.report.n, a.report.edges, Some(&a.report))),
        Format::Plain => {
            let r = &a.report;
            let opt = |x: Option<u32>| x.map_or_else(|| "skipped".to_string(), |v| v.to_string());
            println!("graph      {} ({g})", r.graph);
            println!("v          {}", opt(r.v));
            for lv in &r.v_by_cutset {
                println!("  v_T{:<8} {}  {}", lv.cutset.to_string(), opt(lv.v), lv.witness.as_deref().unwrap_or(""));
            }
            println!("v_empty    {}  {}", opt(r.v_empty), r.v_empty_witness.as_deref().unwrap_or(""));
            println!("min-comp   {}", r.min_comp);
            println!("max-comp   {}", r.max_comp);
            println!("v(in)      {}  {}", opt(r.v_initial), r.v_initial_witness.as_deref().unwrap_or(""));
            let reg = opt(r.reg);
            println!("reg        {}{}", reg, if r.reg.is_some() && !r.reg_confirmed { " (lower bound)" } else { "" });
            println!("ell        {}", r.longest_induced_path);
            println!("gamma      {}", a.structure.domination_number);
            println!("chordal    {}", a.structure.chordal);
            for c in &a.certificates {
                println!("certificate k={} verified={} labeling={:?} matching={:?}", c.k, c.verified, c.labeling, c.matching);
            }
            for n in &r.notes {
                println!("note: {n}");
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Analyze { input, common, format } => {
            let g = read_input(&input)?;
            let a = analyze(&g, &common.options())?;
            print_analysis(&g, &a, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Labelings { input, sample, seed, format } => {
            let g = read_input(&input)?;
            let t = labeling_sweep(&g, &LabelingOptions { sample, seed, ..LabelingOptions::default() })?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&t)?),
                Format::Csv => {
                    println!("v_in,labelings");
                    for (d, c) in &t.histogram {
                        println!("{d},{c}");
                    }
                }
                Format::Plain => {
                    println!("labelings  {} ({})", t.labelings, if t.exhaustive { "all" } else { "sampled" });
                    println!("v          {} (rechecked on {}, constant: {})", t.v, t.v_checked, t.v_constant);
                    println!("v(in) min  {} at {:?}", t.v_in_min, t.argmin);
                    println!("v(in) max  {} at {:?}", t.v_in_max, t.argmax);
                    for (d, c) in &t.histogram {
                        println!("  v(in)={d}: {c}");
                    }
                }
            }
            Ok(if t.v_constant { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Cmd::Family { name, n, check, common, format } => {
            let fam: Family = name.parse()?;
            let g = fam.graph(n)?;
            if !check {
                println!("{}", vnum::graph::encode_graph6(&g));
                return Ok(ExitCode::SUCCESS);
            }
            let a = analyze(&g, &common.options())?;
            print_analysis(&g, &a, format)?;
            let mut clean = true;
            for (line, ok) in fam.check(n, &a) {
                eprintln!("{} {line}", if ok { "ok  " } else { "FAIL" });
                clean &= ok;
            }
            Ok(if clean { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Cmd::Sweep { max_n, corpus, checks, csv, json, common } => {
            let (label, graphs) = match (corpus, max_n) {
                (Some(p), _) => (p.display().to_string(), read_graph6_corpus(&std::fs::read_to_string(&p)?)?),
                (None, Some(n)) => (format!("connected graphs, 2 <= n <= {n}"), connected_up_to(n)),
                (None, None) => return Err(Error::Invalid("sweep needs --max-n or --corpus".into())),
            };
            let checks = if checks.is_empty() {
                Check::ALL.to_vec()
            } else {
                checks.iter().map(|c| c.parse()).collect::<Result<_>>()?
            };
            let mut analyze = common.options();
            analyze.certificates = false;
            analyze.decomposition = false;
            let res = sweep(&label, &graphs, &SweepOptions { checks, analyze, threads: threads_from_env() })?;
            if let Some(p) = csv {
                std::fs::write(p, to_csv(&res.rows))?;
            }
            if let Some(p) = json {
                std::fs::write(p, serde_json::to_string_pretty(&res)?)?;
            }
            println!("corpus {} ({} graphs, {} errors, {} ms)", res.corpus, res.rows.len(), res.errors, res.elapsed_ms);
            for (c, t) in &res.checks {
                println!(
                    "{c:<18} holds {:>5}  fails {:>3}  skipped {:>5}  recorded {:>5}",
                    t.holds, t.fails, t.skipped, t.recorded
                );
            }
            for ce in &res.counterexamples {
                println!("COUNTEREXAMPLE #{} {} [{}] {}", ce.index, ce.graph, ce.check, ce.detail);
            }
            Ok(if res.counterexamples.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
    }
}

/// The built-in corpus skips `K_1`, whose ideal is zero.
fn connected_up_to(n: usize) -> Vec<Graph> {
    connected_graphs_up_to(n).into_iter().filter(|g| g.n() >= 2).collect()
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
