use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use duval_planes::cli;

/// Exact divisor-class arithmetic on blown-up rational surfaces and the
/// classification of Du Val double planes.
#[derive(Parser)]
#[command(name = "duval-planes", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the surface report of a configuration file as JSON.
    Report { config: PathBuf },
    /// Enumerate configurations with the given invariants.
    Classify {
        #[arg(long)]
        pg: i64,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        ksq: Option<i64>,
    },
    /// Print the canonical-resolution ledger of a configuration or of a raw
    /// branch file.
    Resolve { file: PathBuf },
    /// Run the verification catalog; nonzero exit if any check fails.
    VerifyPaper,
}

/// Print to stdout, treating a closed pipe (`... | head`) as a normal end.
fn print_stdout(text: &str) {
    use std::io::Write;
    if writeln!(std::io::stdout().lock(), "{text}").is_err() {
        std::process::exit(0);
    }
}

fn emit(result: Result<serde_json::Value, cli::CmdError>) -> ExitCode {
    match result {
        Ok(value) => {
            print_stdout(&serde_json::to_string_pretty(&value).expect("serializable"));
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!(
                "{}",
                serde_json::to_string(&err.payload).expect("serializable")
            );
            ExitCode::from(err.exit_code as u8)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match args.command {
        Command::Report { config } => emit(cli::cmd_report(&config)),
        Command::Classify { pg, q, ksq } => emit(cli::cmd_classify(pg, q, ksq)),
        Command::Resolve { file } => emit(cli::cmd_resolve(&file)),
        Command::VerifyPaper => {
            let (records, all_green, summary) = cli::cmd_verify_paper();
            print_stdout(&serde_json::to_string_pretty(&records).expect("serializable"));
            eprintln!("{summary}");
            if all_green {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
