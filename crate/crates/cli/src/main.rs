//! `aalkit`: command-line front end for the workbench.
//!
//! Exit status: 0 when the queried property holds, 1 when it is refuted, 2 on
//! usage or parse errors. Diagnostics go to stderr.

mod commands;
mod oracle;
mod output;
mod resolve;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;
use resolve::{CliError, Workspace};

#[derive(Parser)]
#[command(name = "aalkit", version, about = "Finite-structure workbench for abstract algebraic logic")]
struct Cli {
    /// Workspace file to load; its names become addressable. Repeatable.
    #[arg(long = "input", global = true, value_name = "FILE")]
    inputs: Vec<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for the parallel kernels.
    #[arg(long, global = true, env = "AALKIT_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

/// A matrix: a matrix reference, or an algebra reference with `--designated`.
#[derive(Args)]
struct MatrixArg {
    /// `casebook:NAME`, `FILE#NAME` or a name from an --input file.
    matrix: String,
    /// Comma-separated elements (labels or indices) replacing the designated set.
    #[arg(long)]
    designated: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Generators,
    Equivalential,
}

#[derive(Args)]
struct InterpArgs {
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    /// Defaults to `equivalential` when congruence formulas for the target are known.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Congruence formulas of the target, e.g. `imp0(x1, x2), imp1(x1, x2)`.
    #[arg(long)]
    delta: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse workspace files and list what they declare.
    Parse { files: Vec<PathBuf> },
    /// Leibniz congruence of a matrix.
    Leibniz(MatrixArg),
    /// Suszko congruence of a matrix relative to a logic.
    Suszko {
        logic: String,
        #[command(flatten)]
        m: MatrixArg,
    },
    /// The reduction of a matrix, printed as a workspace file.
    Reduce(MatrixArg),
    /// All deductive filters of a logic on an algebra.
    Filters { logic: String, algebra: String },
    /// The filter generated by a set of elements.
    Fg {
        logic: String,
        algebra: String,
        #[arg(long, default_value = "")]
        generators: String,
    },
    /// Whether the designated set is a filter of the logic.
    CheckFilter {
        logic: String,
        #[command(flatten)]
        m: MatrixArg,
    },
    /// Whether the premises entail the conclusion in a matrix-presented logic.
    Consequence {
        logic: String,
        #[arg(long = "premise")]
        premises: Vec<String>,
        #[arg(long)]
        conclusion: String,
    },
    /// Non-indexed product of matrices over the default snapshot.
    Product {
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Whether the product of flats maps isomorphically onto the product.
    Flat {
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Fusion of two matrices, optionally tested against two logics.
    Fuse {
        left: String,
        right: String,
        #[arg(long, num_args = 2, value_names = ["LEFT", "RIGHT"])]
        logics: Option<Vec<String>>,
    },
    /// Diagonal power matrix of an algebra, optionally compared with a matrix.
    MatrixPower {
        algebra: String,
        #[arg(long)]
        compare: Option<String>,
    },
    /// Whether the formulas witness that a logic is equivalential.
    CheckEquivalential {
        logic: String,
        #[arg(long)]
        delta: Option<String>,
    },
    /// Certify a translation as an interpretation.
    CheckInterpretation {
        #[command(flatten)]
        args: InterpArgs,
        /// A translation name, or `by-name`.
        #[arg(long, default_value = "by-name")]
        translation: String,
    },
    /// Search translations of bounded depth for an interpretation.
    SearchInterpretation {
        #[command(flatten)]
        args: InterpArgs,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Built-in worked examples.
    Casebook {
        #[command(subcommand)]
        action: CasebookAction,
    },
    /// Compare the Leibniz kernel against brute force on random matrices.
    OracleCheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum CasebookAction {
    List,
    Verify {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }
    match run(&cli) {
        Ok(outcome) => {
            // A closed pipe (e.g. `| head`) is not an error worth a panic.
            let _ = writeln!(std::io::stdout().lock(), "{}", outcome.render(cli.format));
            ExitCode::from(outcome.exit_code())
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<output::Outcome, CliError> {
    use commands as c;
    if let Command::Parse { files } = &cli.command {
        return c::parse(files.iter().chain(&cli.inputs));
    }
    let ws = Workspace::load(&cli.inputs)?;
    let mode = |m: Option<ModeArg>| {
        m.map(|m| match m {
            ModeArg::Generators => aalkit_core::interp::InterpretationMode::Generators,
            ModeArg::Equivalential => aalkit_core::interp::InterpretationMode::Equivalential,
        })
    };
    match &cli.command {
        Command::Parse { .. } => unreachable!("handled above"),
        Command::Leibniz(m) => c::leibniz(&ws, &m.matrix, m.designated.as_deref()),
        Command::Suszko { logic, m } => c::suszko(&ws, logic, &m.matrix, m.designated.as_deref()),
        Command::Reduce(m) => c::reduce(&ws, &m.matrix, m.designated.as_deref()),
        Command::Filters { logic, algebra } => c::filters(&ws, logic, algebra),
        Command::Fg { logic, algebra, generators } => c::fg(&ws, logic, algebra, generators),
        Command::CheckFilter { logic, m } => c::check_filter(&ws, logic, &m.matrix, m.designated.as_deref()),
        Command::Consequence { logic, premises, conclusion } => c::consequence(&ws, logic, premises, conclusion),
        Command::Product { factors } => c::product(&ws, factors),
        Command::Flat { factors } => c::flat(&ws, factors),
        Command::Fuse { left, right, logics } => c::fuse(&ws, left, right, logics.as_deref()),
        Command::MatrixPower { algebra, compare } => c::matrix_power(&ws, algebra, compare.as_deref()),
        Command::CheckEquivalential { logic, delta } => c::check_equivalential(&ws, logic, delta.as_deref()),
        Command::CheckInterpretation { args, translation } => c::check_interpretation(
            &ws,
            &args.from,
            &args.to,
            translation,
            mode(args.mode),
            args.delta.as_deref(),
        ),
        Command::SearchInterpretation { args, depth } => c::search_interpretation(
            &ws,
            &args.from,
            &args.to,
            *depth,
            mode(args.mode),
            args.delta.as_deref(),
        ),
        Command::Casebook { action } => match action {
            CasebookAction::List => Ok(c::casebook_list()),
            CasebookAction::Verify { id, .. } => c::casebook_verify(id.as_deref()),
        },
        Command::OracleCheck { seed, count } => Ok(oracle::oracle_check(*seed, *count)),
    }
}
