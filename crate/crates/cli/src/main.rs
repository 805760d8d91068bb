//! Batch frontend: one job per invocation, report on standard output.

mod error;
mod jobs;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    #[value(name = "statespace")]
    Statespace,
    #[value(name = "boolean-statespace")]
    BooleanStatespace,
    #[value(name = "automaton-minimize")]
    AutomatonMinimize,
    #[value(name = "pseudochar-degree")]
    PseudocharDegree,
    #[value(name = "pseudochar-charpoly")]
    PseudocharCharpoly,
    #[value(name = "pseudochar-lift")]
    PseudocharLift,
    #[value(name = "holonomy")]
    Holonomy,
    #[value(name = "frobenius-validate")]
    FrobeniusValidate,
    #[value(name = "genfun")]
    Genfun,
    #[value(name = "classify")]
    Classify,
    #[value(name = "witness")]
    Witness,
    #[value(name = "pih-solve")]
    PihSolve,
    #[value(name = "pih-check")]
    PihCheck,
    #[value(name = "cob2-dim")]
    Cob2Dim,
    #[value(name = "cob2-pseudo")]
    Cob2Pseudo,
}

impl Command {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub struct Caps {
    pub cap_words: usize,
    pub cap_genus: usize,
    pub max_degree: usize,
}

#[derive(Parser)]
#[command(name = "pseudotqft", version, about = "Exact state spaces, pseudocharacters and 2D TQFT generating functions")]
struct Args {
    command: Command,
    /// JSON input file
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Word-length cap for spanning sets and closed walks
    #[arg(long, default_value_t = 4)]
    cap_words: usize,
    /// Genus cap for Cob2 spanning sets; dot cap for cob2-pseudo
    #[arg(long, default_value_t = 4)]
    cap_genus: usize,
    #[arg(long, default_value_t = 6)]
    max_degree: usize,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let caps = Caps { cap_words: args.cap_words, cap_genus: args.cap_genus, max_degree: args.max_degree };
    let result = std::fs::read_to_string(&args.input)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.input.display())))
        .and_then(|text| jobs::run(args.command, &text, &caps));
    match result {
        Ok(report) => {
            print!("{}", report::emit(&report, args.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::Rejected { report, .. } = &e {
                print!("{}", report::emit(report, args.format));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
