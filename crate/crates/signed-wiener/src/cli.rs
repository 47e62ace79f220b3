//! Command-line front end: `wiener`, `verify`, `search` and `asymptotics`
//! subcommands over the library, with deterministic, seed-reproducible
//! output.
//!
//! Exit codes: 0 success / all comparisons pass, 1 verification failure,
//! 2 usage or input error, 3 enumeration cap exceeded.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::Error;
use crate::families::{
    alternating_path, balanced_signing, build_star_tree, random_balanced_signing, StarSpec,
};
use crate::formulas::{growth_ratio_table, min_wiener_asymptotic_floor};
use crate::graph::SignedTree;
use crate::search::{
    family_vs_path, global_minimum_capped, minimal_signed_wiener_capped, Verdict,
    DEFAULT_SIGNING_CAP, DEFAULT_TREE_ORDER_CAP,
};

#[derive(Parser)]
#[command(
    name = "signed-wiener",
    version,
    about = "Exact Wiener index computations and exhaustive searches on signed trees"
)]
struct Cli {
    /// Output format (default depends on the subcommand)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Size of the worker thread pool (default: all cores; results are
    /// identical either way)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write primary output to this file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Seed for randomized signings
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SigningChoice {
    /// Balanced root edges, each leaf edge opposite to its branch
    Nice,
    /// A random balanced signing (controlled by --seed)
    NiceRandom,
    /// Signs alternate along the path
    Alternating,
    /// Every edge positive
    Positive,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the signed and classic Wiener index of one tree
    Wiener {
        #[command(subcommand)]
        source: WienerSource,
    },
    /// Compare balanced family trees against alternating paths over a range
    /// of orders; exits 0 only if every comparison is a strict win
    Verify {
        /// First order to check
        #[arg(long)]
        from: u64,
        /// Last order to check
        #[arg(long)]
        to: u64,
    },
    /// Exhaustive brute-force searches
    Search {
        #[command(subcommand)]
        mode: SearchMode,
    },
    /// Growth of the family Wiener values against n^(3/2)
    Asymptotics {
        /// Largest family parameter k to tabulate
        #[arg(long)]
        kmax: u64,
        /// Extra orders to include, comma separated
        #[arg(long, value_delimiter = ',')]
        extra: Vec<u64>,
        /// Shorthand: write CSV output to this path
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
}

#[derive(Args)]
struct WienerOpts {
    /// Also print the histogram of signed distances over all pairs
    #[arg(long)]
    histogram: bool,
    /// Write the computed signed tree as an edge list to this path
    #[arg(long, value_name = "PATH")]
    dump_edges: Option<PathBuf>,
}

#[derive(Subcommand)]
enum WienerSource {
    /// A two-level star tree given by its leaf counts
    Family {
        /// Leaf counts, e.g. `3,4,4,4,4,4`
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value_t = SigningChoice::Nice)]
        signing: SigningChoice,
        #[command(flatten)]
        opts: WienerOpts,
    },
    /// A path on n vertices
    Path {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SigningChoice::Alternating)]
        signing: SigningChoice,
        #[command(flatten)]
        opts: WienerOpts,
    },
    /// A tree read from an edge-list file (`u v s` per line)
    File {
        path: PathBuf,
        #[command(flatten)]
        opts: WienerOpts,
    },
}

#[derive(Subcommand)]
enum SearchMode {
    /// Minimum signed Wiener index over every tree and signing of order n
    Global {
        #[arg(long)]
        n: usize,
        /// Cap on the tree order for free-tree enumeration
        #[arg(long, default_value_t = DEFAULT_TREE_ORDER_CAP)]
        tree_cap: usize,
        /// Cap on the edge count for signing enumeration
        #[arg(long, default_value_t = DEFAULT_SIGNING_CAP)]
        signing_cap: usize,
    },
    /// Minimum signed Wiener index over all signings of a fixed host tree
    Wstar {
        /// Host tree from an edge-list file
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        /// Host tree is the path on n vertices
        #[arg(long, value_name = "N")]
        path: Option<usize>,
        /// Host tree from leaf counts, e.g. `3,4,4,4,4,4`
        #[arg(long, value_name = "SPEC")]
        spec: Option<String>,
        /// Cap on the edge count for signing enumeration
        #[arg(long, default_value_t = DEFAULT_SIGNING_CAP)]
        signing_cap: usize,
    },
}

struct Failure {
    code: i32,
    message: String,
}

type CmdResult = std::result::Result<i32, Failure>;

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn lib_fail(e: Error) -> Failure {
    let code = match e {
        Error::InstanceTooLarge { .. } => 3,
        Error::SelfCheck(_) => 1,
        _ => 2,
    };
    fail(code, e.to_string())
}

/// Parses arguments from the process environment and runs the command.
/// Returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let threads = cli.threads;
    let result = match threads {
        None => execute(cli),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build();
            match pool {
                Ok(pool) => pool.install(|| execute(cli)),
                Err(e) => Err(fail(2, format!("cannot build thread pool: {e}"))),
            }
        }
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: Cli) -> CmdResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    match cli.command {
        Command::Wiener { ref source } => {
            let format = cli.format.unwrap_or(Format::Text);
            let (tree, opts) = build_wiener_tree(source, &mut rng)?;
            if let Some(path) = &opts.dump_edges {
                fs::write(path, tree.to_edge_list())
                    .map_err(|e| fail(2, format!("cannot write {}: {e}", path.display())))?;
            }
            let output = render_wiener(&tree, opts.histogram, format);
            emit(&cli.out, &output)?;
            Ok(0)
        }
        Command::Verify { from, to } => {
            if from < 1 || from > to {
                return Err(fail(2, "--from must satisfy 1 <= from <= to"));
            }
            let format = cli.format.unwrap_or(Format::Text);
            let rows = family_vs_path(from, to).map_err(lib_fail)?;
            let output = render_verify(&rows, format);
            emit(&cli.out, &output)?;
            let all_pass = rows.iter().all(|r| r.verdict == Verdict::Pass);
            Ok(if all_pass { 0 } else { 1 })
        }
        Command::Search { ref mode } => {
            let format = cli.format.unwrap_or(Format::Json);
            let output = run_search(mode, format)?;
            emit(&cli.out, &output)?;
            Ok(0)
        }
        Command::Asymptotics {
            kmax,
            ref extra,
            ref csv,
        } => {
            if kmax < 1 {
                return Err(fail(2, "--kmax must be at least 1"));
            }
            let format = cli.format.unwrap_or(Format::Csv);
            let rows = growth_ratio_table(kmax, extra);
            if let Some(path) = csv {
                fs::write(path, render_asymptotics(&rows, Format::Csv))
                    .map_err(|e| fail(2, format!("cannot write {}: {e}", path.display())))?;
                if cli.out.is_none() {
                    return Ok(0);
                }
            }
            emit(&cli.out, &render_asymptotics(&rows, format))?;
            Ok(0)
        }
    }
}

fn build_wiener_tree(
    source: &WienerSource,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<(SignedTree, WienerOpts), Failure> {
    match source {
        WienerSource::Family {
            spec,
            signing,
            opts,
        } => {
            let spec: StarSpec = spec.parse().map_err(lib_fail)?;
            let star = build_star_tree(&spec);
            let tree = match signing {
                SigningChoice::Nice => star
                    .with_signing(&balanced_signing(&star).map_err(lib_fail)?)
                    .map_err(lib_fail)?,
                SigningChoice::NiceRandom => star
                    .with_signing(&random_balanced_signing(&star, rng).map_err(lib_fail)?)
                    .map_err(lib_fail)?,
                SigningChoice::Positive => star,
                SigningChoice::Alternating => {
                    return Err(fail(2, "--signing alternating only applies to paths"));
                }
            };
            Ok((
                tree,
                WienerOpts {
                    histogram: opts.histogram,
                    dump_edges: opts.dump_edges.clone(),
                },
            ))
        }
        WienerSource::Path { n, signing, opts } => {
            if *n < 1 {
                return Err(fail(2, "--n must be at least 1"));
            }
            let tree = match signing {
                SigningChoice::Alternating => alternating_path(*n),
                SigningChoice::Positive => {
                    let alt = alternating_path(*n);
                    let signs = vec![crate::graph::Sign::Plus; alt.edge_count()];
                    alt.with_signing(&crate::graph::Signing::new(signs))
                        .map_err(lib_fail)?
                }
                SigningChoice::Nice | SigningChoice::NiceRandom => {
                    return Err(fail(
                        2,
                        "--signing nice / nice-random only applies to family trees",
                    ));
                }
            };
            Ok((
                tree,
                WienerOpts {
                    histogram: opts.histogram,
                    dump_edges: opts.dump_edges.clone(),
                },
            ))
        }
        WienerSource::File { path, opts } => {
            let text = fs::read_to_string(path)
                .map_err(|e| fail(2, format!("cannot read {}: {e}", path.display())))?;
            let tree = SignedTree::from_edge_list(&text).map_err(lib_fail)?;
            Ok((
                tree,
                WienerOpts {
                    histogram: opts.histogram,
                    dump_edges: opts.dump_edges.clone(),
                },
            ))
        }
    }
}

fn render_wiener(tree: &SignedTree, histogram: bool, format: Format) -> String {
    let n = tree.vertex_count();
    let w_signed = tree.signed_wiener();
    let w_classic = tree.classic_wiener();
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "n = {n}").unwrap();
            writeln!(out, "W_sigma = {w_signed}").unwrap();
            writeln!(out, "W_classic = {w_classic}").unwrap();
            if histogram {
                writeln!(out, "histogram:").unwrap();
                for (d, count) in tree.distance_histogram().iter().enumerate() {
                    writeln!(out, "  {d}: {count}").unwrap();
                }
            }
            out
        }
        Format::Json => {
            let mut value = json!({
                "n": n,
                "W_sigma": w_signed,
                "W_classic": w_classic,
            });
            if histogram {
                value["histogram"] = json!(tree.distance_histogram());
            }
            let mut s = serde_json::to_string_pretty(&value).unwrap();
            s.push('\n');
            s
        }
        Format::Csv => {
            format!("n,W_sigma,W_classic\n{n},{w_signed},{w_classic}\n")
        }
    }
}

fn render_verify(rows: &[crate::search::WienerReport], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "{:>6} {:>12} {:>12} {:>8}  verdict",
                "n", "W_family", "W_path", "margin"
            )
            .unwrap();
            for r in rows {
                writeln!(
                    out,
                    "{:>6} {:>12} {:>12} {:>8}  {}",
                    r.n, r.family_wiener, r.path_wiener, r.margin, r.verdict
                )
                .unwrap();
            }
            let pass = rows.iter().filter(|r| r.verdict == Verdict::Pass).count();
            let tie = rows.iter().filter(|r| r.verdict == Verdict::Tie).count();
            let fail_count = rows.len() - pass - tie;
            writeln!(
                out,
                "{} rows: {pass} PASS, {tie} TIE, {fail_count} FAIL",
                rows.len()
            )
            .unwrap();
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).unwrap();
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("n,W_family,W_path,margin,verdict\n");
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.n, r.family_wiener, r.path_wiener, r.margin, r.verdict
                )
                .unwrap();
            }
            out
        }
    }
}

fn run_search(mode: &SearchMode, format: Format) -> std::result::Result<String, Failure> {
    match mode {
        SearchMode::Global {
            n,
            tree_cap,
            signing_cap,
        } => {
            let result = global_minimum_capped(*n, *tree_cap, *signing_cap).map_err(lib_fail)?;
            Ok(match format {
                Format::Json | Format::Csv => {
                    let mut s = serde_json::to_string_pretty(&result).unwrap();
                    s.push('\n');
                    s
                }
                Format::Text => {
                    let mut out = String::new();
                    writeln!(out, "n = {}", result.n).unwrap();
                    writeln!(out, "min_W = {}", result.min_wiener).unwrap();
                    writeln!(out, "baseline_W_alpha = {}", result.baseline_alternating).unwrap();
                    writeln!(out, "conjecture_status = {}", result.conjecture_status).unwrap();
                    writeln!(out, "witnesses = {}", result.witnesses.len()).unwrap();
                    out
                }
            })
        }
        SearchMode::Wstar {
            file,
            path,
            spec,
            signing_cap,
        } => {
            let sources = [file.is_some(), path.is_some(), spec.is_some()]
                .iter()
                .filter(|b| **b)
                .count();
            if sources != 1 {
                return Err(fail(2, "give exactly one of --file, --path, --spec"));
            }
            let host = if let Some(p) = file {
                let text = fs::read_to_string(p)
                    .map_err(|e| fail(2, format!("cannot read {}: {e}", p.display())))?;
                SignedTree::from_edge_list(&text).map_err(lib_fail)?
            } else if let Some(n) = path {
                if *n < 1 {
                    return Err(fail(2, "--path must be at least 1"));
                }
                alternating_path(*n)
            } else {
                let spec: StarSpec = spec.as_ref().unwrap().parse().map_err(lib_fail)?;
                build_star_tree(&spec)
            };
            let result = minimal_signed_wiener_capped(&host, *signing_cap).map_err(lib_fail)?;
            Ok(match format {
                Format::Json | Format::Csv => {
                    let mut s = serde_json::to_string_pretty(&result).unwrap();
                    s.push('\n');
                    s
                }
                Format::Text => {
                    let mut out = String::new();
                    writeln!(out, "n = {}", result.host.vertex_count()).unwrap();
                    writeln!(out, "min_W = {}", result.min_wiener).unwrap();
                    writeln!(out, "witness = {}", result.witness).unwrap();
                    writeln!(out, "optimal_count = {}", result.optimal_count).unwrap();
                    out
                }
            })
        }
    }
}

fn render_asymptotics(rows: &[crate::formulas::RatioRow], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("n,W,ratio,lower_bound\n");
            for r in rows {
                writeln!(
                    out,
                    "{},{},{:.6},{:.6}",
                    r.n,
                    r.w,
                    r.ratio,
                    min_wiener_asymptotic_floor(r.n)
                )
                .unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "{:>10} {:>14} {:>10} {:>14}",
                "n", "W", "ratio", "lower_bound"
            )
            .unwrap();
            for r in rows {
                writeln!(
                    out,
                    "{:>10} {:>14} {:>10.6} {:>14.6}",
                    r.n,
                    r.w,
                    r.ratio,
                    min_wiener_asymptotic_floor(r.n)
                )
                .unwrap();
            }
            out
        }
        Format::Json => {
            let values: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "W": r.w,
                        "ratio": r.ratio,
                        "lower_bound": min_wiener_asymptotic_floor(r.n),
                    })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&values).unwrap();
            s.push('\n');
            s
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> std::result::Result<(), Failure> {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => fs::write(path, content)
            .map_err(|e| fail(2, format!("cannot write {}: {e}", path.display()))),
    }
}
