//! `quatimm`: row and column immanants of quaternion matrices from the
//! command line.
//!
//! Exit status: 0 on success, 1 when a verification suite reports failures,
//! 2 on usage, parse or precondition errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quatimm::verify::SuiteName;
use quatimm::{CharacterSpec, Rational};

#[derive(Parser)]
#[command(
    name = "quatimm",
    version,
    about = "Exact row and column immanants over H(a, b)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Rimm,
    Cimm,
    Rdet,
    Cdet,
    Rper,
    Cper,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Compute row or column immanants of a matrix document.
    Compute {
        /// Matrix document, or `-` for stdin.
        #[arg(long)]
        input: PathBuf,
        /// `constant`, `sign`, a partition such as `2,1`, or the JSON form.
        #[arg(long = "char", value_parser = parse_char)]
        character: Option<CharacterSpec>,
        #[arg(long, value_enum)]
        op: Op,
        /// 1-based row or column index; required unless `--op all`.
        #[arg(long)]
        anchor: Option<usize>,
        /// Split the permutation sum across threads.
        #[arg(long)]
        parallel: bool,
    },
    /// Run a seeded property suite and print its report.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: SuiteName,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Algebra parameters `a,b`.
        #[arg(long, default_value = "-1,1", allow_hyphen_values = true)]
        algebra: String,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Weights to check; defaults to constant, sign and every partition of n.
        #[arg(long, num_args = 1.., value_parser = parse_char)]
        chars: Vec<CharacterSpec>,
    },
    /// Print the split-case 2×2 block representation of a matrix.
    Repr {
        #[arg(long)]
        input: PathBuf,
        /// A square root of b in ℚ.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        c: Rational,
    },
}

fn parse_char(s: &str) -> Result<CharacterSpec, String> {
    s.parse().map_err(|e: quatimm::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<SuiteName, String> {
    s.parse().map_err(|e: quatimm::Error| {
        let known: Vec<&str> = SuiteName::ALL.iter().map(|n| n.as_str()).collect();
        format!("{e}; expected one of {}", known.join(", "))
    })
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse()
        .map_err(|e: quatimm::rational::ParseRationalError| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute {
            input,
            character,
            op,
            anchor,
            parallel,
        } => commands::compute(&input, character, op, anchor, parallel),
        Command::Verify {
            suite,
            n,
            algebra,
            trials,
            seed,
            chars,
        } => commands::verify(suite, n, &algebra, trials, seed, chars),
        Command::Repr { input, c } => commands::repr(&input, &c),
    };
    match outcome {
        Ok((doc, ok)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("json output")
            );
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
