use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use outcast_cli::commands;

/// Outcast (Aizerman) choice functions and their hyper-order representations.
///
/// Exit codes: 0 pass, 1 semantic failure, 2 input error, 3 internal
/// verification failure.
#[derive(Parser)]
#[command(name = "outcast", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the Outcast condition for a choice function file
    Check {
        /// Choice function file (JSON)
        file: PathBuf,
    },
    /// Construct a hyper-order inducing the given choice function
    Synthesize {
        /// Choice function file (JSON)
        file: PathBuf,
        /// Output path for the order file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the choice function induced by a hyper-order
    Induce {
        /// Order file (JSON)
        file: PathBuf,
        /// Output path for the choice function file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that an order induces exactly the given choice function
    Verify {
        /// Choice function file (JSON)
        function: PathBuf,
        /// Order file (JSON)
        order: PathBuf,
    },
    /// Exhaustively compare Outcast functions against order-induced ones
    Census {
        /// Universe size (at most 3)
        #[arg(long)]
        n: usize,
    },
    /// Generate a seeded uniformly random hyper-order
    RandomOrder {
        /// Universe size (at most 16)
        #[arg(long)]
        n: usize,
        /// Seed for the deterministic generator
        #[arg(long)]
        seed: u64,
        /// Output path for the order file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check { file } => commands::check(&file),
        Command::Synthesize { file, out } => commands::synthesize(&file, out.as_deref()),
        Command::Induce { file, out } => commands::induce(&file, out.as_deref()),
        Command::Verify { function, order } => commands::verify(&function, &order),
        Command::Census { n } => commands::census(n),
        Command::RandomOrder { n, seed, out } => commands::random_order(n, seed, out.as_deref()),
    };
    ExitCode::from(code as u8)
}
