mod builtins;
mod run;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "hopf2",
    version,
    about = "Exact verification of Hopf algebras, Hopf algebroids and Hopf 2-algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Hopf,
    Bialgebroid,
    HopfAlgebroid,
    FullHopfAlgebroid,
    Hopf2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuildKind {
    Mirror,
    Bicrossproduct,
    TwoGroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableMap {
    Antipode,
    FullAntipode,
    Coproduct,
    AlgebroidCoproduct,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the axioms of a structure up to a level.
    Check {
        /// JSON file or `builtin:<name>`.
        input: String,
        #[arg(long, value_enum, default_value = "hopf")]
        level: Level,
        /// Include counterexample coordinates.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_name = "PATH")]
        json_report: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Construct a new structure and write its structure constants.
    Build {
        #[arg(value_enum)]
        what: BuildKind,
        input: String,
        #[arg(long, value_name = "PATH")]
        out: Option<String>,
        #[arg(long, value_name = "PATH")]
        json_report: Option<String>,
        #[arg(long)]
        witness: bool,
    },
    /// Print images of elements under a structure map.
    Table {
        input: String,
        #[arg(value_enum)]
        map: TableMap,
        /// Elements such as `x⊗g` or `2·(1⊗gx) − x⊗g`; all basis elements if omitted.
        elements: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write the structure constants of an input as a structure file.
    Export {
        input: String,
        #[arg(long, value_name = "PATH")]
        out: Option<String>,
    },
    /// List the builtin fixtures.
    Builtins,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = std::panic::catch_unwind(|| match cli.command {
        Command::Check {
            input,
            level,
            witness,
            json_report,
            format,
        } => run::check(&input, level, witness, json_report.as_deref(), format),
        Command::Build {
            what,
            input,
            out,
            json_report,
            witness,
        } => run::build(what, &input, out.as_deref(), json_report.as_deref(), witness),
        Command::Table {
            input,
            map,
            elements,
            format,
        } => run::table(&input, map, &elements, format),
        Command::Export { input, out } => run::export(&input, out.as_deref()),
        Command::Builtins => {
            for n in builtins::NAMES {
                println!("builtin:{n}");
            }
            Ok(run::Outcome::Pass)
        }
    });
    match outcome {
        Ok(Ok(run::Outcome::Pass)) => ExitCode::from(0),
        Ok(Ok(run::Outcome::Fail)) => ExitCode::from(1),
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(_) => {
            eprintln!("error: internal failure while processing the input");
            ExitCode::from(2)
        }
    }
}
