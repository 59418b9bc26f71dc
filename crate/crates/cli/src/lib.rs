//! Command-line front end for lamweb.

mod cache;
mod commands;
mod websrc;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use websrc::{parse_env, parse_web_spec, WebSpec};

/// Exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const REFUTED: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const INCONCLUSIVE: i32 = 4;
}

#[derive(Parser, Debug)]
#[command(name = "lamweb", version, about = "Graph models of the untyped lambda calculus built from partial pairs")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Largest rank any computation may reach
    #[arg(long, global = true, default_value_t = 4)]
    pub max_rank: usize,
    /// β-reduction steps allowed when normalizing
    #[arg(long, global = true, default_value_t = 500)]
    pub fuel: usize,
    /// Largest stratum materialized, in elements
    #[arg(long, global = true, default_value_t = 200_000)]
    pub max_elements: usize,
    /// Directory for cached slices; caching is off without it
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Ignore the cache directory
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[arg(long, global = true, value_enum, default_value_t = Output::Pretty)]
    pub output: Output,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Pretty,
    Tsv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a term and print it canonically
    Parse {
        #[arg(long)]
        term: String,
    },
    /// β-normalize a term
    Normalize {
        #[arg(long)]
        term: String,
    },
    /// Print the Böhm tree approximant of a term
    Bt {
        #[arg(long)]
        term: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Interpretation of a term under a rank budget
    Interp {
        #[arg(long)]
        web: String,
        #[arg(long)]
        term: String,
        #[arg(long, default_value_t = 2)]
        rank: usize,
        /// Atom scope for rule webs
        #[arg(long)]
        atoms: Option<usize>,
        /// Free variable values, e.g. `x={a,({a},a)};y={b}`
        #[arg(long, default_value = "")]
        env: String,
        /// Interpret in the finite pair itself instead of its completion
        #[arg(long)]
        exact: bool,
    },
    /// Membership of one element in the interpretation of a term
    Member {
        #[arg(long)]
        web: String,
        #[arg(long)]
        term: String,
        #[arg(long)]
        element: String,
        #[arg(long)]
        atoms: Option<usize>,
        #[arg(long, default_value = "")]
        env: String,
        /// Decide exactly (normal term, effective web) instead of searching
        #[arg(long)]
        decide: bool,
    },
    /// Compare two closed terms in the model of a web
    Check {
        #[arg(long)]
        web: String,
        /// `M <= N`
        #[arg(long, conflicts_with = "eq", required_unless_present = "eq")]
        le: Option<String>,
        /// `M = N`
        #[arg(long)]
        eq: Option<String>,
        /// Largest rank of left-hand slices
        #[arg(long, default_value_t = 3)]
        rank: usize,
        #[arg(long)]
        atoms: Option<usize>,
    },
    /// Automorphism orbits of a finite web
    Orbits {
        #[arg(long)]
        web: String,
    },
    /// Disjoint union of finite webs
    Glue {
        /// Comma-separated web specifications
        #[arg(long)]
        webs: String,
    },
    /// Prefixes of the minimum model
    Minmodel {
        #[arg(long)]
        prefix: usize,
        /// `M = N` or `M <= N` checked over the prefix
        #[arg(long)]
        check: Option<String>,
        /// Term whose slice is printed
        #[arg(long)]
        term: Option<String>,
        #[arg(long, default_value_t = 1)]
        rank: usize,
    },
    /// Verdicts of several webs on a corpus of inequations
    Fingerprint {
        /// Comma-separated web specifications
        #[arg(long)]
        webs: String,
        /// `default` or a file with one `name = term` per line
        #[arg(long, default_value = "default")]
        corpus: String,
        #[arg(long, default_value_t = 2)]
        rank: usize,
    },
    /// Gödel codes
    Encode {
        #[command(subcommand)]
        what: EncodeCmd,
    },
}

#[derive(Subcommand, Debug)]
pub enum EncodeCmd {
    /// Code of a term, or the term of a code with --decode
    Term {
        value: String,
        #[arg(long)]
        decode: bool,
    },
    /// θ code of a completion element of a finite web, or its inverse
    Element {
        #[arg(long)]
        web: String,
        value: String,
        #[arg(long)]
        decode: bool,
    },
    /// Cantor pairing of two numbers, or its inverse
    Pair {
        values: Vec<String>,
        #[arg(long)]
        decode: bool,
    },
    /// Code of a finite set `0,2,5`, or its inverse
    Set {
        value: String,
        #[arg(long)]
        decode: bool,
    },
    /// `≪a, n≫` for a set `a` and a number `n`
    Mix { set: String, n: String },
    /// The k-th prime
    Prime { k: usize },
    /// Relabel a numeric finite web by `x ↦ p_k^(x+1)`
    Relabel {
        #[arg(long)]
        web: String,
        #[arg(long)]
        k: usize,
    },
}

/// Result of one invocation.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::OK };
            let text = e.render().to_string();
            return if code == exit::OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match commands::dispatch(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: commands::error_code(&e), stdout: String::new(), stderr: format!("error: {e:#}\n") },
    }
}
