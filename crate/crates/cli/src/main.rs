use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use total_forcing::construct::{
    packing_tf, tf_doubling, tf_from_dominating, tf_from_power_dominating,
    tf_from_total_dominating, ConstructionCertificate, PackingTfOptions,
};
use total_forcing::families::{all_connected_graphs, generate};
use total_forcing::gadget::build_gadget;
use total_forcing::graph6::write_graph6;
use total_forcing::solve::{min_domination, min_forcing, PackingTiebreak};
use total_forcing::{DominationVariant, ForcingVariant, Graph, SolverLimits};

use total_forcing_cli::census::{compute_invariants, run_census, CensusReport, CHECKS};
use total_forcing_cli::corpus::load_graph6_file;
use total_forcing_cli::parse_family;
use total_forcing_cli::report::{render_csv, render_jsonl, render_table};

#[derive(Parser)]
#[command(name = "total-forcing", about = "Total forcing sets: solvers, constructions, census checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tiebreak {
    /// Maximize undominated vertices, then degree sum.
    Paper,
    /// Minimize undominated vertices, then maximize degree sum.
    Min,
    /// First maximum packing in enumeration order.
    None,
}

impl From<Tiebreak> for PackingTiebreak {
    fn from(t: Tiebreak) -> Self {
        match t {
            Tiebreak::Paper => PackingTiebreak::PaperMaxUndominated,
            Tiebreak::Min => PackingTiebreak::MinUndominated,
            Tiebreak::None => PackingTiebreak::NoTiebreak,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Switch {
    On,
    Off,
}

/// Where the graphs come from: a corpus file, a named family, or the
/// exhaustive connected-graph generator.
#[derive(Args)]
struct Source {
    /// File with one graph6 line per graph.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Family name: path, cycle, complete, star, spider, fig1b, fig1b_chain.
    #[arg(long)]
    family: Option<String>,
    /// Numeric family parameters.
    #[arg(long, num_args = 0..)]
    params: Vec<usize>,
    /// Generate every labeled connected graph of order 1..=N (N <= 7).
    #[arg(long)]
    gen_max: Option<usize>,
}

#[derive(Args)]
struct Guard {
    /// Subset-search guard on the graph order.
    #[arg(long, default_value_t = 30)]
    max_n: usize,
    /// Raise the guard to the hard ceiling of 63.
    #[arg(long)]
    override_guard: bool,
}

impl Guard {
    fn limits(&self) -> SolverLimits {
        SolverLimits::new(if self.override_guard { 63 } else { self.max_n })
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Run theorem checks over a corpus or the small-graph generator.
    Census {
        #[command(flatten)]
        source: Source,
        /// Comma-separated check ids (default: all).
        #[arg(long)]
        checks: Option<String>,
        /// Worker count.
        #[arg(long, default_value_t = 8)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[command(flatten)]
        guard: Guard,
    },
    /// Print the invariant row for each input graph.
    Invariants {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[command(flatten)]
        guard: Guard,
    },
    /// Run one constructive builder and print its certificate.
    Construct {
        #[command(flatten)]
        source: Source,
        /// One of: doubling, dominating, total-dominating, power, packing.
        #[arg(long)]
        op: String,
        #[arg(long, value_enum, default_value_t = Tiebreak::Paper)]
        tiebreak: Tiebreak,
        #[arg(long, value_enum, default_value_t = Switch::On)]
        repair: Switch,
        #[command(flatten)]
        guard: Guard,
    },
    /// Emit the TF reduction gadget in graph6 plus its vertex mapping.
    Gadget {
        #[command(flatten)]
        source: Source,
    },
    /// Solve one invariant exactly and print the witness.
    Solve {
        #[command(flatten)]
        source: Source,
        /// One of: f, ft, fc, gamma, gamma-t, gamma-c, gamma-2, gamma-p.
        #[arg(long, default_value = "ft")]
        variant: String,
        #[command(flatten)]
        guard: Guard,
    },
}

fn gather(source: &Source) -> Result<(String, Vec<(usize, String, Graph)>, Vec<(usize, String)>), String> {
    let mut picked = 0;
    picked += source.corpus.is_some() as usize;
    picked += source.family.is_some() as usize;
    picked += source.gen_max.is_some() as usize;
    if picked != 1 {
        return Err(String::from(
            "pick exactly one source: --corpus, --family or --gen-max",
        ));
    }
    if let Some(path) = &source.corpus {
        let c = load_graph6_file(path).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok((path.display().to_string(), c.graphs, c.errors));
    }
    if let Some(name) = &source.family {
        let fam = parse_family(name, &source.params)?;
        let g = generate(&fam).map_err(|e| e.to_string())?;
        let g6 = write_graph6(&g);
        return Ok((format!("{fam:?}"), vec![(1, g6, g)], Vec::new()));
    }
    let max = source.gen_max.expect("one source picked");
    let mut graphs = Vec::new();
    for n in 1..=max {
        for g in all_connected_graphs(n).map_err(|e| e.to_string())? {
            graphs.push((graphs.len() + 1, write_graph6(&g), g));
        }
    }
    Ok((format!("connected graphs up to order {max}"), graphs, Vec::new()))
}

fn print_certificate(c: &ConstructionCertificate) {
    println!("tf_set: {:?}", c.tf_set.to_vec());
    println!("size: {}", c.tf_set.len());
    println!("claimed_bound: {}", c.claimed_bound);
    for line in &c.case_log {
        println!("case: {line}");
    }
    print!("{}", c.chronology.render());
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Census {
            source,
            checks,
            jobs,
            format,
            guard,
        } => {
            let (name, graphs, errors) = gather(&source)?;
            let check_list: Vec<String> = match checks {
                None => CHECKS.iter().map(|s| s.to_string()).collect(),
                Some(list) => {
                    let ids: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
                    for id in &ids {
                        if !CHECKS.contains(&id.as_str()) {
                            return Err(format!("unknown check id: {id}"));
                        }
                    }
                    ids
                }
            };
            let started = Instant::now();
            let mut report: CensusReport =
                run_census(&name, &graphs, &check_list, jobs.max(1), &guard.limits());
            for (line, msg) in errors {
                report.errors.push((line, msg));
            }
            report.errors.sort();
            eprintln!("census wall time: {:.2?}", started.elapsed());
            match format {
                Format::Table => print!("{}", render_table(&report)),
                Format::Csv => print!("{}", render_csv(&report)),
                Format::Jsonl => print!("{}", render_jsonl(&report)),
            }
            Ok(report.all_passed())
        }
        Cmd::Invariants { source, format, guard } => {
            let (name, graphs, errors) = gather(&source)?;
            let limits = guard.limits();
            let mut report = CensusReport {
                source: name,
                graphs: graphs.len(),
                errors,
                rows: Vec::new(),
                checks: Vec::new(),
                discrepancies: Vec::new(),
            };
            for (line, g6, g) in &graphs {
                match compute_invariants(g, &limits) {
                    Ok(row) => report.rows.push(row),
                    Err(e) => report.errors.push((*line, format!("{g6}: {e}"))),
                }
            }
            match format {
                Format::Table | Format::Csv => print!("{}", render_csv(&report)),
                Format::Jsonl => print!("{}", render_jsonl(&report)),
            }
            Ok(report.errors.is_empty())
        }
        Cmd::Construct {
            source,
            op,
            tiebreak,
            repair,
            guard,
        } => {
            let (_, graphs, _) = gather(&source)?;
            let limits = guard.limits();
            let mut ok = true;
            for (_, g6, g) in &graphs {
                println!("graph: {g6}");
                let built = match op.as_str() {
                    "doubling" => min_forcing(g, ForcingVariant::Plain, &limits)
                        .map_err(|e| e.to_string())
                        .and_then(|r| tf_doubling(g, &r.witness).map_err(|e| e.to_string())),
                    "dominating" => min_domination(g, DominationVariant::Plain, &limits)
                        .map_err(|e| e.to_string())
                        .and_then(|r| tf_from_dominating(g, &r.witness).map_err(|e| e.to_string())),
                    "total-dominating" => min_domination(g, DominationVariant::Total, &limits)
                        .map_err(|e| e.to_string())
                        .and_then(|r| {
                            tf_from_total_dominating(g, &r.witness).map_err(|e| e.to_string())
                        }),
                    "power" => min_domination(g, DominationVariant::Power, &limits)
                        .map_err(|e| e.to_string())
                        .and_then(|r| {
                            tf_from_power_dominating(g, &r.witness).map_err(|e| e.to_string())
                        }),
                    "packing" => {
                        let opts = PackingTfOptions {
                            tiebreak: tiebreak.into(),
                            repair: matches!(repair, Switch::On),
                            exact_dominators: false,
                            limits,
                        };
                        packing_tf(g, &opts).map_err(|e| e.to_string())
                    }
                    other => return Err(format!("unknown construction op: {other}")),
                };
                match built {
                    Ok(c) => print_certificate(&c),
                    Err(e) => {
                        ok = false;
                        println!("failed: {e}");
                    }
                }
            }
            Ok(ok)
        }
        Cmd::Gadget { source } => {
            let (_, graphs, _) = gather(&source)?;
            for (_, _, g) in &graphs {
                let m = build_gadget(g);
                println!("{}", write_graph6(&m.gadget));
                for (i, (center, l1, l2)) in m.triples.iter().enumerate() {
                    println!("{i} {center} {l1} {l2}");
                }
            }
            Ok(true)
        }
        Cmd::Solve { source, variant, guard } => {
            let (_, graphs, _) = gather(&source)?;
            let limits = guard.limits();
            let mut ok = true;
            for (_, g6, g) in &graphs {
                let result = match variant.as_str() {
                    "f" => min_forcing(g, ForcingVariant::Plain, &limits),
                    "ft" => min_forcing(g, ForcingVariant::Total, &limits),
                    "fc" => min_forcing(g, ForcingVariant::Connected, &limits),
                    "gamma" => min_domination(g, DominationVariant::Plain, &limits),
                    "gamma-t" => min_domination(g, DominationVariant::Total, &limits),
                    "gamma-c" => min_domination(g, DominationVariant::Connected, &limits),
                    "gamma-2" => min_domination(g, DominationVariant::TwoStep, &limits),
                    "gamma-p" => min_domination(g, DominationVariant::Power, &limits),
                    other => return Err(format!("unknown variant: {other}")),
                };
                match result {
                    Ok(r) => println!("{g6} {} {:?}", r.value, r.witness.to_vec()),
                    Err(e) => {
                        ok = false;
                        println!("{g6} failed: {e}");
                    }
                }
            }
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
