use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lpa::{parse_field, parse_graph, report, Report};
use lpa_core::{Field, Graph};

/// Centers of Leavitt path algebras of finite graphs.
#[derive(Parser)]
#[command(name = "lpa", version)]
struct Cli {
    /// Ground field: `rat` or `fp:<prime>`.
    #[arg(long, global = true, default_value = "rat", value_parser = parse_field)]
    field: Field,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal sets, classes, supports and the shape of the center.
    Analyze { file: PathBuf },
    /// A basis of one graded component of the center.
    Center {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
    },
    /// Cross-check the basis against the brute-force oracle.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        /// Oracle length bound; defaults to N* per degree.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Every finitary annihilator hereditary set with its idempotent.
    Idempotents { file: PathBuf },
}

fn load(path: &PathBuf) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: &Cli) -> Result<Report, String> {
    let outcome = match &cli.command {
        Command::Analyze { file } => report::analyze(&load(file)?),
        Command::Center { file, degree } => report::center(&load(file)?, cli.field, *degree),
        Command::Verify { file, max_degree, max_len } => report::verify(&load(file)?, cli.field, *max_degree, *max_len),
        Command::Idempotents { file } => report::idempotents(&load(file)?, cli.field),
    };
    outcome.map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let out = if cli.json { report.to_json() } else { report.to_text() };
            print!("{out}");
            if report.is_ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
