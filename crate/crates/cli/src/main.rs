use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::Parser;
use fermat_tower_cli::{run, ActionChoice, CliError, Command, Format, RunConfig};

/// A comma-separated list of non-negative integers.
#[derive(Clone, Debug)]
struct List(Vec<u64>);

impl FromStr for List {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| format!("'{t}' is not a non-negative integer")))
            .collect::<Result<_, _>>()
            .map(List)
    }
}

/// `LEVEL=DEGREE`, an explicit `[F_LEVEL : Q]`.
#[derive(Clone, Debug)]
struct DegreeOverride(u32, u64);

impl FromStr for DegreeOverride {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (i, d) = s.split_once('=').ok_or("expected LEVEL=DEGREE")?;
        let i = i.trim().parse().map_err(|_| format!("bad level '{i}'"))?;
        let d = d.trim().parse().map_err(|_| format!("bad degree '{d}'"))?;
        Ok(DegreeOverride(i, d))
    }
}

/// Exact rank-bound bookkeeping for pro-p towers of Fermat curves.
#[derive(Debug, Parser)]
#[command(name = "fermat-tower", version)]
struct Cli {
    /// What to compute.
    #[arg(value_enum)]
    command: Option<Command>,

    /// Odd prime p.
    #[arg(long)]
    p: Option<u64>,
    /// Level n (degree p^n curve).
    #[arg(long)]
    n: Option<u32>,
    /// Highest level for `table`.
    #[arg(long = "n-max")]
    n_max: Option<u32>,
    /// [K : Q] (default 1).
    #[arg(long = "K-degree")]
    k_degree: Option<u64>,
    /// The Iwasawa constant C as an exact rational such as 4 or 7/2 (default 0, illustrative).
    #[arg(long = "C")]
    c: Option<String>,
    /// dim H^1(G_T(F), F_p) (default 1, illustrative).
    #[arg(long = "h1-base")]
    h1_base: Option<u64>,
    /// Assert that the mu-invariant vanishes.
    #[arg(long = "mu-zero")]
    mu_zero: bool,
    /// Assert that Galois acts trivially on H_1(X, F_p).
    #[arg(long = "h1-triviality")]
    h1_triviality: bool,
    /// Group acting on the characters.
    #[arg(long, value_enum)]
    action: Option<ActionChoice>,
    /// Generators: comma-separated units for `scalar`; one row-major `a,b,c,d` matrix per occurrence for `matrix`.
    #[arg(long)]
    generators: Vec<List>,
    /// Largest enumeration allowed (default 1000000).
    #[arg(long)]
    limit: Option<u64>,
    /// Explicit field degree `LEVEL=DEGREE` for [F_LEVEL : Q]; repeatable.
    #[arg(long = "degree")]
    degrees: Vec<DegreeOverride>,
    /// K meets Q(mu_{p^infinity}) nontrivially; every level then needs --degree.
    #[arg(long = "not-linearly-disjoint")]
    not_linearly_disjoint: bool,
    /// Successive quotient ranks for `filtration-bound`, comma-separated.
    #[arg(long)]
    ranks: Option<List>,
    /// dim H^1 for `filtration-bound`.
    #[arg(long)]
    h1: Option<u64>,
    /// Filtration step to start from.
    #[arg(long = "start-index")]
    start_index: Option<usize>,
    /// Output format (default json).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Read the whole configuration from a JSON file (a bare config or a previous report).
    #[arg(long)]
    config: Option<PathBuf>,
}

impl Cli {
    fn has_run_options(&self) -> bool {
        self.p.is_some()
            || self.n.is_some()
            || self.n_max.is_some()
            || self.k_degree.is_some()
            || self.c.is_some()
            || self.h1_base.is_some()
            || self.mu_zero
            || self.h1_triviality
            || self.action.is_some()
            || !self.generators.is_empty()
            || self.limit.is_some()
            || !self.degrees.is_empty()
            || self.not_linearly_disjoint
            || self.ranks.is_some()
            || self.h1.is_some()
            || self.start_index.is_some()
    }

    fn into_config(self) -> Result<RunConfig, CliError> {
        if let Some(path) = &self.config {
            if self.has_run_options() {
                return Err(CliError::Validation(
                    "--config can only be combined with --format and --output".into(),
                ));
            }
            let mut config = RunConfig::from_json(&std::fs::read_to_string(path)?)?;
            if let Some(command) = self.command {
                if command != config.command {
                    return Err(CliError::Validation(format!(
                        "command '{}' disagrees with '{}' in the config file",
                        command.name(),
                        config.command.name()
                    )));
                }
            }
            if let Some(format) = self.format {
                config.format = format;
            }
            if self.output.is_some() {
                config.output = self.output;
            }
            return Ok(config);
        }

        let command = self
            .command
            .ok_or_else(|| CliError::Validation("a command is required (or --config)".into()))?;
        let mut config = RunConfig::new(command);
        config.p = self.p;
        config.n = self.n;
        config.n_max = self.n_max;
        config.k_degree = self.k_degree.unwrap_or(1);
        config.c = self.c;
        config.h1_base = self.h1_base;
        config.mu_zero = self.mu_zero;
        config.h1_triviality = self.h1_triviality;
        config.action = self.action.unwrap_or_default();
        config.generators = self.generators.into_iter().map(|l| l.0).collect();
        config.enumeration_limit = self.limit;
        config.degree_overrides = self.degrees.into_iter().map(|d| (d.0, d.1)).collect();
        config.linearly_disjoint = !self.not_linearly_disjoint;
        config.ranks = self.ranks.map(|l| l.0).unwrap_or_default();
        config.h1 = self.h1;
        config.start_index = self.start_index.unwrap_or(0);
        config.format = self.format.unwrap_or_default();
        config.output = self.output;
        Ok(config)
    }
}

fn main_inner() -> Result<(), CliError> {
    let config = Cli::parse().into_config()?;
    let rendered = run(&config)?;
    if config.format != Format::Json {
        for w in &rendered.warnings {
            eprintln!("warning: {w}");
        }
    }
    match &config.output {
        Some(path) => std::fs::write(path, rendered.text)?,
        None => print!("{}", rendered.text),
    }
    Ok(())
}

fn main() -> ExitCode {
    match main_inner() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
