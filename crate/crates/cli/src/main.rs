use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gbei_cli::report::DEFAULT_MAX_VARS;
use gbei_cli::text::{render_corpus, render_report};
use gbei_cli::{build_report, exit, read_graph, run_corpus, CliError, Filter, Options};

#[derive(Parser)]
#[command(name = "gbei", version, about = "Invariants of generalized binomial edge ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArgs {
    /// Graph file: vertex count on the first line, then one edge per line.
    #[arg(long)]
    graph: String,
    /// Emit the structured JSON report.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct InvariantArgs {
    #[command(flatten)]
    input: GraphArgs,
    /// Number of rows m of the variable matrix.
    #[arg(long)]
    rows: usize,
    /// Exit with code 3 when a formula stage is skipped.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    invariants: InvariantArgs,
    /// Accepted for symmetry with `invariants --verify`.
    #[arg(long)]
    verify: bool,
    /// Largest variable count for the homological oracle.
    #[arg(long, default_value_t = DEFAULT_MAX_VARS)]
    max_vars: usize,
    /// Check the prime decomposition even above 8 variables.
    #[arg(long)]
    with_primes: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classification and cut set census.
    Classify(GraphArgs),
    /// Depth, regularity, dimension and unmixedness.
    Invariants {
        #[command(flatten)]
        args: InvariantArgs,
        /// Also run the oracle cross-checks.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_VARS)]
        max_vars: usize,
        #[arg(long)]
        with_primes: bool,
    },
    /// Invariants together with every oracle cross-check.
    Verify(VerifyArgs),
    /// Runs every connected graph on N vertices.
    Corpus {
        #[arg(long)]
        enumerate: usize,
        #[arg(long)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = Filter::Gblock)]
        filter: Filter,
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_VARS)]
        max_vars: usize,
        #[arg(long)]
        json: bool,
    },
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
}

fn check_rows(rows: usize) -> Result<(), CliError> {
    if rows < 2 {
        return Err(CliError::Rows(rows));
    }
    Ok(())
}

fn single(
    name: &str,
    input: &GraphArgs,
    opts: Options,
    strict: bool,
) -> Result<u8, CliError> {
    if let Some(m) = opts.rows {
        check_rows(m)?;
    }
    let graph = read_graph(&input.graph)?;
    let report = build_report(&graph, name, &opts);
    if input.json {
        emit(&report.to_json());
    } else {
        emit(&render_report(&report));
    }
    Ok(if report.has_failure() {
        exit::VERIFICATION_FAILURE
    } else if strict && report.has_formula_skip() {
        exit::STRICT_SKIP
    } else {
        exit::SUCCESS
    })
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Classify(args) => {
            let opts = Options {
                rows: None,
                verify: false,
                max_vars: DEFAULT_MAX_VARS,
                with_primes: false,
            };
            single("classify", &args, opts, false)
        }
        Command::Invariants {
            args,
            verify,
            max_vars,
            with_primes,
        } => {
            let opts = Options {
                rows: Some(args.rows),
                verify,
                max_vars,
                with_primes,
            };
            single("invariants", &args.input, opts, args.strict)
        }
        Command::Verify(v) => {
            let opts = Options {
                rows: Some(v.invariants.rows),
                verify: true,
                max_vars: v.max_vars,
                with_primes: v.with_primes,
            };
            single("verify", &v.invariants.input, opts, v.invariants.strict)
        }
        Command::Corpus {
            enumerate,
            rows,
            filter,
            verify,
            max_vars,
            json,
        } => {
            check_rows(rows)?;
            let report = run_corpus(enumerate, rows, filter, verify, max_vars)?;
            if json {
                emit(&report.to_json());
            } else {
                emit(&render_corpus(&report));
            }
            Ok(if report.has_failure() {
                exit::VERIFICATION_FAILURE
            } else {
                exit::SUCCESS
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::INPUT_ERROR)
        }
    }
}
