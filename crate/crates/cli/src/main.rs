//! `domord` — dominance-order computations on integer partitions from the
//! command line.
//!
//! Exit codes follow a scripting contract: 0 for success or a `true`
//! verdict, 1 for a `false` verdict, 2 for any error. All results go to
//! standard output, diagnostics to standard error.

use std::num::NonZeroUsize;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use domord::cover::{cover_chain, find_cover_move, hasse_edges_with, CoverMove, HasseEdge};
use domord::enumerate::{partitions_of_with, EnumerationOptions, DEFAULT_WEIGHT_BOUND};
use domord::error::Error;
use domord::partition::Partition;
use domord::theorem::{sweep_with, SweepOptions, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Dot,
}

#[derive(Parser)]
#[command(
    name = "domord",
    version,
    about = "Dominance order on integer partitions: transforms, covers, chains, Hasse diagrams, and exhaustive verification",
    after_help = "Partitions are written as comma- or whitespace-separated parts, e.g. '4,2,1,0'. \
                  The zero partition is written '0'."
)]
struct Cli {
    /// Output format (dot is valid only for `hasse`)
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Pad parsed partitions to exactly this stored length
    #[arg(long, global = true, value_name = "N")]
    len: Option<usize>,

    /// Accept parts in any order and sort them, instead of rejecting
    #[arg(long, global = true)]
    unsorted: bool,

    /// Worker threads for `verify`; the report is identical for any count
    #[arg(long, global = true, value_name = "N", default_value = "1")]
    threads: NonZeroUsize,

    /// Raise the enumeration safety bound (default 40)
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the values |part - k|, sorted non-increasingly, keeping length
    Transform {
        /// Partition text, e.g. 4,2,1,0
        partition: String,
        /// Offset to transform against; any integer
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Does the first partition dominate the second? (exit 0 yes, 1 no)
    Dominates {
        /// Candidate dominating partition
        a: String,
        /// Candidate dominated partition
        b: String,
    },
    /// Does the first partition cover the second? (exit 0 yes, 1 no)
    Covers {
        /// Candidate upper partition
        a: String,
        /// Candidate lower partition
        b: String,
    },
    /// Print a saturated chain of covering steps from a down to b
    Chain {
        /// Top of the chain; must dominate b at equal weight
        a: String,
        /// Bottom of the chain
        b: String,
    },
    /// Check transform dominance over every pair of partitions of weight n
    Verify {
        /// Weight class to sweep exhaustively
        n: u64,
        /// Upper end of the k range (default n + 1)
        #[arg(long, value_name = "K")]
        k_max: Option<u64>,
        /// Shorthand for --format json
        #[arg(long)]
        json: bool,
    },
    /// Print the Hasse diagram of the dominance order on weight n
    Hasse {
        /// Weight class to diagram
        n: u64,
    },
}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Restore default SIGPIPE handling so that piping into e.g. `head` ends
/// the process quietly instead of panicking on a closed stdout.
fn reset_sigpipe() {
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Transform { partition, k } => cmd_transform(cli, partition, *k),
        Command::Dominates { a, b } => cmd_dominates(cli, a, b),
        Command::Covers { a, b } => cmd_covers(cli, a, b),
        Command::Chain { a, b } => cmd_chain(cli, a, b),
        Command::Verify { n, k_max, json } => cmd_verify(cli, *n, *k_max, *json),
        Command::Hasse { n } => cmd_hasse(cli, *n),
    }
}

fn describe(err: &Error) -> String {
    let hint = match err {
        Error::Unsorted { .. } => "; pass --unsorted to sort the input",
        Error::WeightBoundExceeded { .. } => "; pass --max-n to raise the bound",
        _ => "",
    };
    format!("{err}{hint}")
}

fn parse_partition(cli: &Cli, text: &str) -> Result<Partition, String> {
    let parsed = if cli.unsorted {
        Partition::parse_unsorted(text)
    } else {
        text.parse::<Partition>()
    };
    let partition = parsed.map_err(|e| describe(&e))?;
    match cli.len {
        Some(len) => partition.pad(len).map_err(|e| describe(&e)),
        None => Ok(partition),
    }
}

fn enumeration_options(cli: &Cli) -> EnumerationOptions {
    EnumerationOptions::with_bound(cli.max_n.unwrap_or(DEFAULT_WEIGHT_BOUND))
}

/// Formats that only ever carry a text payload reject --format dot.
fn text_format(cli: &Cli) -> Result<Format, String> {
    match cli.format {
        Format::Dot => Err("dot output is only available for the hasse subcommand".into()),
        other => Ok(other),
    }
}

fn emit_json<T: Serialize>(doc: &T) {
    println!(
        "{}",
        serde_json::to_string(doc).expect("report serialization cannot fail")
    );
}

#[derive(Serialize)]
struct MoveDoc {
    i: usize,
    j: usize,
    adjacent: bool,
    equal_parts: bool,
}

impl MoveDoc {
    fn from_move(mv: &CoverMove) -> Self {
        Self {
            i: mv.i,
            j: mv.j,
            adjacent: mv.flavor.is_adjacent(),
            equal_parts: mv.flavor.is_equal_parts(),
        }
    }
}

fn cmd_transform(cli: &Cli, text: &str, k: i64) -> Result<ExitCode, String> {
    let format = text_format(cli)?;
    let sequence = parse_partition(cli, text)?.k_transform(k);
    match format {
        Format::Plain => println!("{sequence}"),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                sequence: &'a [u64],
            }
            emit_json(&Doc {
                sequence: sequence.values(),
            });
        }
        Format::Dot => unreachable!(),
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict_exit(value: bool) -> ExitCode {
    if value {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_dominates(cli: &Cli, a: &str, b: &str) -> Result<ExitCode, String> {
    let format = text_format(cli)?;
    let a = parse_partition(cli, a)?;
    let b = parse_partition(cli, b)?;
    let holds = a.dominates(&b);
    match format {
        Format::Plain => println!("{holds}"),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                dominates: bool,
            }
            emit_json(&Doc { dominates: holds });
        }
        Format::Dot => unreachable!(),
    }
    Ok(verdict_exit(holds))
}

fn cmd_covers(cli: &Cli, a: &str, b: &str) -> Result<ExitCode, String> {
    let format = text_format(cli)?;
    let a = parse_partition(cli, a)?;
    let b = parse_partition(cli, b)?;
    let mv = find_cover_move(&a, &b);
    match format {
        Format::Plain => println!("{}", mv.is_some()),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                covers: bool,
                #[serde(rename = "move")]
                mv: Option<MoveDoc>,
            }
            emit_json(&Doc {
                covers: mv.is_some(),
                mv: mv.as_ref().map(MoveDoc::from_move),
            });
        }
        Format::Dot => unreachable!(),
    }
    Ok(verdict_exit(mv.is_some()))
}

fn cmd_chain(cli: &Cli, a: &str, b: &str) -> Result<ExitCode, String> {
    let format = text_format(cli)?;
    let a = parse_partition(cli, a)?;
    let b = parse_partition(cli, b)?;
    let chain = cover_chain(&a, &b).map_err(|e| describe(&e))?;
    match format {
        Format::Plain => {
            for step in &chain {
                println!("{step}");
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                chain: Vec<String>,
            }
            emit_json(&Doc {
                chain: chain.iter().map(|p| p.to_string()).collect(),
            });
        }
        Format::Dot => unreachable!(),
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct HistogramDoc {
    k_below: u64,
    k_equals_lower_only: u64,
    k_equals_both: u64,
    k_between: u64,
    k_above: u64,
}

#[derive(Serialize)]
struct CounterexampleDoc {
    lambda: String,
    mu: String,
    k: u64,
    first_violated_prefix: usize,
}

#[derive(Serialize)]
struct ReportDoc {
    n: u64,
    k_max: u64,
    pairs_checked: u64,
    covers_checked: u64,
    case_histogram: HistogramDoc,
    counterexamples: Vec<CounterexampleDoc>,
    /// Always 0 in structured output so that reports are byte-identical
    /// across runs and worker counts; wall-clock timing goes to stderr.
    elapsed_ms: u64,
}

impl ReportDoc {
    fn from_report(report: &VerificationReport) -> Self {
        Self {
            n: report.n,
            k_max: report.k_max,
            pairs_checked: report.pairs_checked,
            covers_checked: report.covers_checked,
            case_histogram: HistogramDoc {
                k_below: report.case_histogram.k_below,
                k_equals_lower_only: report.case_histogram.k_equals_lower_only,
                k_equals_both: report.case_histogram.k_equals_both,
                k_between: report.case_histogram.k_between,
                k_above: report.case_histogram.k_above,
            },
            counterexamples: report
                .counterexamples
                .iter()
                .map(|cex| CounterexampleDoc {
                    lambda: cex.lambda.to_string(),
                    mu: cex.mu.to_string(),
                    k: cex.k,
                    first_violated_prefix: cex.first_violated_prefix,
                })
                .collect(),
            elapsed_ms: 0,
        }
    }
}

fn print_plain_report(report: &VerificationReport) {
    println!("n: {}", report.n);
    println!("k_max: {}", report.k_max);
    println!("pairs_checked: {}", report.pairs_checked);
    println!("covers_checked: {}", report.covers_checked);
    println!("case_histogram:");
    println!("  k_below: {}", report.case_histogram.k_below);
    println!(
        "  k_equals_lower_only: {}",
        report.case_histogram.k_equals_lower_only
    );
    println!("  k_equals_both: {}", report.case_histogram.k_equals_both);
    println!("  k_between: {}", report.case_histogram.k_between);
    println!("  k_above: {}", report.case_histogram.k_above);
    println!("counterexamples: {}", report.counterexamples.len());
    for cex in &report.counterexamples {
        println!(
            "  lambda={} mu={} k={} lambda_k={} mu_k={} first_violated_prefix={}",
            cex.lambda, cex.mu, cex.k, cex.lambda_k, cex.mu_k, cex.first_violated_prefix
        );
    }
    println!(
        "replacement_mismatches: {}",
        report.replacement_mismatches.len()
    );
    for bad in &report.replacement_mismatches {
        println!(
            "  mu={} move=({},{}) k={} constructed={} direct={}",
            bad.mu, bad.mv.i, bad.mv.j, bad.k, bad.constructed, bad.direct
        );
    }
    println!(
        "positional_violations: {}",
        report.positional_violations.len()
    );
    for bad in &report.positional_violations {
        println!(
            "  mu={} move=({},{}) k={} case={} in_place={:?}",
            bad.mu, bad.mv.i, bad.mv.j, bad.k, bad.label, bad.in_place
        );
    }
    println!("elapsed_ms: {}", report.elapsed.as_millis());
    println!(
        "result: {}",
        if report.is_clean() { "ok" } else { "FAILED" }
    );
}

fn cmd_verify(cli: &Cli, n: u64, k_max: Option<u64>, json: bool) -> Result<ExitCode, String> {
    let format = match (json, text_format(cli)?) {
        (true, _) => Format::Json,
        (false, other) => other,
    };
    let options = SweepOptions {
        k_max,
        threads: cli.threads.get(),
        enumeration: enumeration_options(cli),
    };
    let report = sweep_with(n, &options).map_err(|e| describe(&e))?;
    match format {
        Format::Plain => print_plain_report(&report),
        Format::Json => {
            emit_json(&ReportDoc::from_report(&report));
            eprintln!("verify {n}: finished in {} ms", report.elapsed.as_millis());
        }
        Format::Dot => unreachable!(),
    }
    Ok(if report.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_hasse(cli: &Cli, n: u64) -> Result<ExitCode, String> {
    let options = enumeration_options(cli);
    let nodes: Vec<Partition> = partitions_of_with(n, &options)
        .map_err(|e| describe(&e))?
        .collect();
    let edges: Vec<HasseEdge> = hasse_edges_with(n, &options).map_err(|e| describe(&e))?;
    match cli.format {
        Format::Plain => {
            for edge in &edges {
                println!("{} -> {}", edge.upper, edge.lower);
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct EdgeDoc {
                upper: String,
                lower: String,
                #[serde(flatten)]
                mv: MoveDoc,
            }
            #[derive(Serialize)]
            struct Doc {
                n: u64,
                nodes: Vec<String>,
                edges: Vec<EdgeDoc>,
            }
            emit_json(&Doc {
                n,
                nodes: nodes.iter().map(|p| p.to_string()).collect(),
                edges: edges
                    .iter()
                    .map(|edge| EdgeDoc {
                        upper: edge.upper.to_string(),
                        lower: edge.lower.to_string(),
                        mv: MoveDoc::from_move(&edge.mv),
                    })
                    .collect(),
            });
        }
        Format::Dot => {
            println!("digraph hasse_{n} {{");
            println!("  rankdir=TB;");
            for node in &nodes {
                println!("  \"{node}\";");
            }
            for edge in &edges {
                println!("  \"{}\" -> \"{}\";", edge.upper, edge.lower);
            }
            println!("}}");
        }
    }
    Ok(ExitCode::SUCCESS)
}
