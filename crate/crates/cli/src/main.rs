//! `markov-cluster`: exact computations in the Markov cluster algebra.
//!
//! Exit codes: 0 on success, 1 when a verification or oracle check fails,
//! 2 on usage or parse errors.

mod output;
mod plot;

use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use markov_cluster::{
    enumerate, g_from_c, matrix_by_path, run_verification, FareyTriple, MutationWord,
    VerifyOptions, MAX_ENUMERATION_DEPTH,
};

use output::{render_matrix, MatrixFormat, OutputRecord};

/// The plot walks the whole tree, and past this depth the point cloud stops
/// being readable anyway.
const MAX_PLOT_DEPTH: usize = 14;

/// Symbolic verification cost is exponential in depth; refuse runs that
/// could not finish interactively.
const MAX_VERIFY_SYMBOLIC_DEPTH: usize = 10;

#[derive(Parser)]
#[command(
    name = "markov-cluster",
    version,
    about = "Farey triples, mutation trees, and exact c-/g-matrices of the Markov cluster algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the extended exchange matrix and g-matrix of a triple
    Matrix(MatrixArgs),
    /// Print only the g-matrix (same as `matrix --g-only`)
    Gmatrix(MatrixArgs),
    /// Apply a mutation word to a triple and print the result
    Mutate {
        /// The starting triple, e.g. "0/1,-1/1,inf"
        #[arg(allow_hyphen_values = true)]
        triple: String,
        /// Comma-separated letters over {0, -1, inf}, applied left to right
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Print the descent word from a triple to the initial triple
    Path {
        /// The triple to descend from
        #[arg(allow_hyphen_values = true)]
        triple: String,
    },
    /// Walk the mutation tree breadth-first and emit one JSON record per triple
    Enumerate {
        /// How many mutation steps away from the initial triple to include
        #[arg(long)]
        depth: usize,
        /// Print only the number of triples
        #[arg(long)]
        count_only: bool,
    },
    /// Run the self-verification suite and exit nonzero if any check fails
    Verify(VerifyArgs),
    /// Collect the distinct g-vectors up to a depth and plot them
    PlotGvectors(PlotArgs),
}

#[derive(Args)]
struct MatrixArgs {
    /// The triple, e.g. "0/1,-1/1,inf"
    #[arg(
        required_unless_present = "word",
        conflicts_with = "word",
        allow_hyphen_values = true
    )]
    triple: Option<String>,

    /// A mutation word applied to the initial triple, instead of a triple
    #[arg(long, allow_hyphen_values = true)]
    word: Option<String>,

    /// Recompute both matrices by replaying the mutation word and fail on
    /// any mismatch
    #[arg(long)]
    oracle: bool,

    /// Print only the g-matrix
    #[arg(long)]
    g_only: bool,

    #[arg(long, value_enum, default_value_t = MatrixFormat::Pretty)]
    format: MatrixFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Tree depth for the exhaustive matrix checks
    #[arg(long, default_value_t = 12)]
    depth: usize,

    /// Tree depth for the symbolic seed checks
    #[arg(long, default_value_t = 5)]
    symbolic_depth: usize,

    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,

    /// Corrupt one closed-form constant to exercise the failure path
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
struct PlotArgs {
    /// How deep into the tree to collect g-vectors (at most 14)
    #[arg(long)]
    depth: usize,

    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = PlotFormat::Svg)]
    format: PlotFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlotFormat {
    Svg,
    Csv,
}

/// A command that ran but must not exit 0.
enum Failure {
    /// Exit 2: the input never made sense.
    Usage(String),
    /// Exit 1: the input was fine, a check failed.
    Check(String),
}

fn usage(error: impl ToString) -> Failure {
    Failure::Usage(error.to_string())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(message)) => {
            eprintln!("{message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("{message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Matrix(args) => cmd_matrix(args, false),
        Command::Gmatrix(args) => cmd_matrix(args, true),
        Command::Mutate { triple, word } => cmd_mutate(&triple, &word),
        Command::Path { triple } => cmd_path(&triple),
        Command::Enumerate { depth, count_only } => cmd_enumerate(depth, count_only),
        Command::Verify(args) => cmd_verify(args),
        Command::PlotGvectors(args) => cmd_plot(args),
    }
}

/// The triple named by either a literal or a `--word` walk from the root,
/// with its canonical word.
fn resolve_triple(args: &MatrixArgs) -> Result<(FareyTriple, MutationWord), Failure> {
    let triple = match (&args.triple, &args.word) {
        (Some(text), None) => text.parse::<FareyTriple>().map_err(usage)?,
        (None, Some(text)) => {
            let word: MutationWord = text.parse().map_err(usage)?;
            FareyTriple::initial().apply_word(&word)
        }
        _ => unreachable!("clap enforces exactly one of triple and --word"),
    };
    let word = triple.path_to_initial().map_err(usage)?.reversed();
    Ok((triple, word))
}

fn cmd_matrix(args: MatrixArgs, force_g_only: bool) -> Result<(), Failure> {
    let g_only = force_g_only || args.g_only;
    let (triple, word) = resolve_triple(&args)?;
    let record = OutputRecord::build(&triple, &word).map_err(Failure::Usage)?;

    if args.oracle {
        let replayed = matrix_by_path(&triple).map_err(usage)?;
        let replayed_g = g_from_c(&replayed.complementary_mat3()).map_err(usage)?;
        let expected = OutputRecord {
            principal: output::mat3_rows(&replayed.principal_mat3()),
            complementary: output::mat3_rows(&replayed.complementary_mat3()),
            g: output::mat3_rows(&replayed_g.0),
            ..record.clone()
        };
        if expected != record {
            return Err(Failure::Check(format!(
                "oracle mismatch at {triple}: closed form disagrees with mutation replay"
            )));
        }
    }

    print!("{}", render_matrix(&record, g_only, args.format));
    Ok(())
}

fn cmd_mutate(triple: &str, word: &str) -> Result<(), Failure> {
    let triple: FareyTriple = triple.parse().map_err(usage)?;
    let word: MutationWord = word.parse().map_err(usage)?;
    println!("{}", triple.apply_word(&word));
    Ok(())
}

fn cmd_path(triple: &str) -> Result<(), Failure> {
    let triple: FareyTriple = triple.parse().map_err(usage)?;
    println!("{}", triple.path_to_initial().map_err(usage)?);
    Ok(())
}

fn cmd_enumerate(depth: usize, count_only: bool) -> Result<(), Failure> {
    let tree = enumerate(depth).map_err(usage)?;
    if count_only {
        println!("{}", tree.len());
        return Ok(());
    }
    let stdout = std::io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    for (triple, word) in &tree {
        let record = OutputRecord::build(triple, word).map_err(Failure::Usage)?;
        let line = serde_json::to_string(&record).expect("string-only record serializes");
        writeln!(out, "{line}").map_err(usage)?;
    }
    out.flush().map_err(usage)?;
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    if args.symbolic_depth > MAX_VERIFY_SYMBOLIC_DEPTH {
        return Err(Failure::Usage(format!(
            "--symbolic-depth {} exceeds the cap of {MAX_VERIFY_SYMBOLIC_DEPTH}",
            args.symbolic_depth
        )));
    }
    let options = VerifyOptions {
        depth: args.depth,
        symbolic_depth: args.symbolic_depth,
        corrupt_closed_form: args.inject_fault,
    };
    let report = run_verification(&options).map_err(usage)?;
    match args.format {
        ReportFormat::Text => println!("{report}"),
        ReportFormat::Json => {
            println!("{}", serde_json::to_string(&report).expect("report serializes"))
        }
    }
    if report.passed() {
        Ok(())
    } else {
        let first = report
            .checks
            .iter()
            .find(|c| !c.passed)
            .expect("a failing report has a failing check");
        Err(Failure::Check(format!("verification failed: {} — {}", first.name, first.detail)))
    }
}

fn cmd_plot(args: PlotArgs) -> Result<(), Failure> {
    if args.depth > MAX_PLOT_DEPTH {
        return Err(Failure::Usage(format!(
            "--depth {} exceeds the plot cap of {MAX_PLOT_DEPTH} (enumeration cap is {MAX_ENUMERATION_DEPTH})",
            args.depth
        )));
    }
    let points = plot::gvector_points(args.depth).map_err(usage)?;
    let rendered = match args.format {
        PlotFormat::Svg => plot::render_svg(&points),
        PlotFormat::Csv => plot::render_csv(&points),
    };
    match &args.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(())
}
