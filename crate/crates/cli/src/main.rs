use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use monogenic_cli::{cmd_hc, cmd_hh, cmd_verify, example, load, Flags, ResultReport};

#[derive(Parser)]
#[command(name = "monogenic", version, about = "Hochschild and cyclic homology of monogenic extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Algebra spec file (JSON)
    #[arg(long)]
    spec: String,
    /// Degrees 0 .. max-degree - 1 are reported
    #[arg(long, default_value_t = 6)]
    max_degree: usize,
    /// Emit the report as one JSON object
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct HomologyArgs {
    #[command(flatten)]
    common: Common,
    /// Per-eigenvalue breakdown
    #[arg(long)]
    decompose: bool,
    /// Compare with the displayed closed formula
    #[arg(long)]
    closed_form: bool,
    /// Compare with the bar complex
    #[arg(long)]
    oracle: bool,
    /// Print class representatives
    #[arg(long)]
    basis: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Hochschild homology
    Hh(HomologyArgs),
    /// Cyclic homology
    Hc(HomologyArgs),
    /// Run every identity suite
    Verify(Common),
    /// Print a shipped example spec
    Example {
        /// trunc:n, sweedler, taft:n, rank1:c4, rank1nc:c2xc4, dihedral:u
        name: String,
        /// Write to a file instead of stdout
        #[arg(long, short)]
        output: Option<String>,
    },
}

fn emit(report: &ResultReport, json: bool) -> ExitCode {
    let text = if json { report.to_json() + "\n" } else { report.render() };
    // a closed pipe downstream is not an error of ours
    let _ = std::io::stdout().write_all(text.as_bytes());
    if report.passes() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn flags(h: &HomologyArgs) -> Flags {
    Flags {
        decompose: h.decompose,
        closed_form: h.closed_form,
        oracle: h.oracle,
        basis: h.basis,
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    Ok(match cli.command {
        Command::Hh(h) => {
            let spec = load(&h.common.spec)?;
            emit(&cmd_hh(&spec, h.common.max_degree, flags(&h))?, h.common.json)
        }
        Command::Hc(h) => {
            let spec = load(&h.common.spec)?;
            emit(&cmd_hc(&spec, h.common.max_degree, flags(&h))?, h.common.json)
        }
        Command::Verify(c) => {
            let spec = load(&c.spec)?;
            emit(&cmd_verify(&spec, c.max_degree)?, c.json)
        }
        Command::Example { name, output } => {
            let doc = example(&name)?;
            let text = serde_json::to_string_pretty(&doc)? + "\n";
            match output {
                Some(path) => std::fs::write(&path, text)?,
                None => {
                    let _ = std::io::stdout().write_all(text.as_bytes());
                }
            }
            ExitCode::SUCCESS
        }
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(1)
        }
    }
}
