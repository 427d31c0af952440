//! Thin command-line front end; all logic lives in [`zigzag::cli`].

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zigzag::cli::{self, CliCommand, OutputFormat};

#[derive(Parser)]
#[command(
    name = "zigzag",
    version,
    about = "Workbench for finite inverse semigroups, their path categories, \
             and the zigzag maps between them"
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
    /// Report format for summary output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Commands {
    /// Generate the closure of a `.pbij` file and summarize it.
    Gen { file: PathBuf },
    /// Draw the eggbox diagram of every nonzero D-class.
    Eggbox {
        file: PathBuf,
        /// Render DOT instead of text grids.
        #[arg(long)]
        dot: bool,
    },
    /// Check axioms and structural properties of the closure.
    Check {
        file: PathBuf,
        /// Comma-separated subset of z1,z2,z3,p1,p2,p3,p4,proper,combinatorial,0eu.
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
    },
    /// Build the path category of the closure.
    Pathcat {
        file: PathBuf,
        /// Emit an artifact instead of a summary: `cat` or `dot`.
        #[arg(long)]
        emit: Option<String>,
    },
    /// Build the zigzag-map semigroup of a `.cat` file.
    Zm { file: PathBuf },
    /// Verify the canonical isomorphism onto the zigzag maps.
    Theta { file: PathBuf },
    /// Build the triple enlargement of the closure.
    Morita {
        file: PathBuf,
        /// Emit an artifact instead of a summary: `pbij`.
        #[arg(long)]
        emit: Option<String>,
    },
    /// Build the inverse semigroup of a `.graph` file.
    Graphis {
        file: PathBuf,
        /// Emit an artifact instead of a summary: `dot`.
        #[arg(long)]
        emit: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    let command = match cli.command {
        Commands::Gen { file } => CliCommand::Gen { file },
        Commands::Eggbox { file, dot } => CliCommand::Eggbox { file, dot },
        Commands::Check { file, props } => CliCommand::Check { file, props },
        Commands::Pathcat { file, emit } => CliCommand::Pathcat { file, emit },
        Commands::Zm { file } => CliCommand::Zm { file },
        Commands::Theta { file } => CliCommand::Theta { file },
        Commands::Morita { file, emit } => CliCommand::Morita { file, emit },
        Commands::Graphis { file, emit } => CliCommand::Graphis { file, emit },
    };
    match cli::run(&command, format) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
