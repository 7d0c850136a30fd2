//! `rif-forge`: validate granular spaces, classify inclusion functions and
//! check the operator algebra from the command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails (an axiom, a
//! law, a classification), 2 on malformed input.

mod commands;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use output::{Format, Status};

#[derive(Debug, Parser)]
#[command(
    name = "rif-forge",
    version,
    about = "Granular spaces and rough inclusion functions"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Trial budget for searches and randomized suites.
    #[arg(long, global = true, default_value_t = 200)]
    budget: usize,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    Parthood,
    Order,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the space axioms, granulation admissibility and flavor.
    Validate {
        space: PathBuf,
        /// Nesting depth of granule terms for the representation check.
        #[arg(long, default_value_t = 1)]
        term_depth: usize,
    },
    /// Print `x`, `x^l`, `x^u` for every element.
    Approximate {
        space: PathBuf,
        /// Also list the bottom element.
        #[arg(long)]
        include_bottom: bool,
    },
    /// Classify a function given as a term (built-ins k0, k1, k2).
    Classify {
        space: PathBuf,
        term: String,
        /// JSON file binding further names.
        #[arg(long)]
        env: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = BasisArg::Parthood)]
        basis: BasisArg,
        /// Fail unless the class is at least this one (RIF, qRIF, wqRIF).
        #[arg(long)]
        expect: Option<String>,
    },
    /// Check the hemiring and order laws on the given terms, or on
    /// seeded random wqRIF terms when none are given.
    CheckLaws {
        space: PathBuf,
        terms: Vec<String>,
        #[arg(long)]
        env: Option<PathBuf>,
        /// Weights for the α-sums; repeatable.
        #[arg(long = "alpha")]
        alphas: Vec<String>,
        /// Number of random terms when none are given.
        #[arg(long, default_value_t = 3)]
        random: usize,
    },
    /// Check the implications between inclusion axioms on one function, or
    /// on `--budget` seeded random tables when no term is given.
    PrifVerify {
        space: PathBuf,
        term: Option<String>,
        #[arg(long)]
        env: Option<PathBuf>,
    },
    /// Search for operations that take RIFs outside the RIF class.
    RifFailureSearch {
        space: PathBuf,
        /// Directory to write each stored witness to, as JSON.
        #[arg(long)]
        store: Option<PathBuf>,
    },
    /// Variable precision approximations and rough regions of one element.
    Vprs {
        space: PathBuf,
        term: String,
        element: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        env: Option<PathBuf>,
    },
    /// Least-squares weight for `alpha f + (1 - alpha) h` against samples.
    FitAlpha {
        space: PathBuf,
        f: String,
        h: String,
        /// JSON array of `{"a": .., "b": .., "target": "p/q"}`.
        samples: PathBuf,
        #[arg(long)]
        env: Option<PathBuf>,
    },
    /// Build a set HGOS space file from a CSV information table.
    Derive {
        csv: PathBuf,
        /// Comma-separated attribute names; all attributes when omitted.
        #[arg(long, value_delimiter = ',')]
        attrs: Vec<String>,
        /// Separator between values inside a multi-valued cell.
        #[arg(long, default_value_t = ';')]
        delimiter: char,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = commands::Context {
        seed: cli.seed,
        budget: cli.budget,
    };
    let result = match cli.command {
        Command::Validate { space, term_depth } => commands::validate(&ctx, &space, term_depth),
        Command::Approximate {
            space,
            include_bottom,
        } => commands::approximate(&ctx, &space, include_bottom),
        Command::Classify {
            space,
            term,
            env,
            basis,
            expect,
        } => commands::classify(
            &ctx,
            &space,
            &term,
            env.as_deref(),
            basis == BasisArg::Order,
            expect.as_deref(),
        ),
        Command::CheckLaws {
            space,
            terms,
            env,
            alphas,
            random,
        } => commands::check_laws(&ctx, &space, &terms, env.as_deref(), &alphas, random),
        Command::PrifVerify { space, term, env } => {
            commands::prif_verify(&ctx, &space, term.as_deref(), env.as_deref())
        }
        Command::RifFailureSearch { space, store } => {
            commands::rif_failure_search(&ctx, &space, store.as_deref())
        }
        Command::Vprs {
            space,
            term,
            element,
            alpha,
            beta,
            env,
        } => commands::vprs(&ctx, &space, &term, &element, &alpha, &beta, env.as_deref()),
        Command::FitAlpha {
            space,
            f,
            h,
            samples,
            env,
        } => commands::fit_alpha(&ctx, &space, &f, &h, &samples, env.as_deref()),
        Command::Derive {
            csv,
            attrs,
            delimiter,
        } => commands::derive(&csv, &attrs, delimiter),
    };
    match result {
        Ok(outcome) => match outcome.emit(cli.format, cli.out.as_deref()) {
            Ok(()) => outcome.status.exit_code(),
            Err(e) => {
                eprintln!("error: {e:#}");
                Status::Input.exit_code()
            }
        },
        Err(e) => {
            eprintln!("error: {e:#}");
            output::status_of(&e).exit_code()
        }
    }
}
