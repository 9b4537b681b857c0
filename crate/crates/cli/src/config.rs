//! The run configuration, shared by the flag parser, `--config` files and the JSON echo.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Orbits,
    Irreps,
    Tower,
    Bound,
    FiltrationBound,
    Table,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Orbits => "orbits",
            Command::Irreps => "irreps",
            Command::Tower => "tower",
            Command::Bound => "bound",
            Command::FiltrationBound => "filtration-bound",
            Command::Table => "table",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ActionChoice {
    /// All of `(Z/p^n)^*` acting by scalars.
    #[default]
    FullUnits,
    Trivial,
    /// The scalar subgroup generated by `--generators`.
    Scalar,
    /// The matrix group generated by `--generators`, one row-major matrix per occurrence.
    Matrix,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Plain,
}

fn is_true(b: &bool) -> bool {
    *b
}

fn default_true() -> bool {
    true
}

fn default_k_degree() -> u64 {
    1
}

/// Everything a run needs. Unset optional fields fall back to documented defaults.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u32>,
    #[serde(rename = "K_degree", default = "default_k_degree")]
    pub k_degree: u64,
    /// The Iwasawa constant as an exact rational, e.g. `"4"` or `"7/2"`. Defaults to 0.
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    /// `dim H^1(G_T(F), F_p)`. Defaults to 1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h1_base: Option<u64>,
    #[serde(default)]
    pub mu_zero: bool,
    #[serde(default)]
    pub h1_triviality: bool,
    #[serde(default)]
    pub action: ActionChoice,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enumeration_limit: Option<u64>,
    /// Explicit `[F_i : Q]` by level.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub degree_overrides: BTreeMap<u32, u64>,
    #[serde(default = "default_true", skip_serializing_if = "is_true")]
    pub linearly_disjoint: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ranks: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h1: Option<u64>,
    #[serde(default)]
    pub start_index: usize,
    #[serde(default)]
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            p: None,
            n: None,
            n_max: None,
            k_degree: 1,
            c: None,
            h1_base: None,
            mu_zero: false,
            h1_triviality: false,
            action: ActionChoice::default(),
            generators: Vec::new(),
            enumeration_limit: None,
            degree_overrides: BTreeMap::new(),
            linearly_disjoint: true,
            ranks: Vec::new(),
            h1: None,
            start_index: 0,
            format: Format::default(),
            output: None,
        }
    }

    /// Reads a config file holding either a bare config object or a full JSON report.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| CliError::Validation(format!("config is not valid JSON: {e}")))?;
        let inner = match value.get("config") {
            Some(c) if value.get("results").is_some() => c.clone(),
            _ => value,
        };
        serde_json::from_value(inner).map_err(|e| CliError::Validation(format!("invalid config: {e}")))
    }

    pub(crate) fn require_p(&self) -> Result<u64, CliError> {
        self.p
            .ok_or_else(|| CliError::Validation(format!("{} requires --p", self.command.name())))
    }

    pub(crate) fn require_n(&self) -> Result<u32, CliError> {
        self.n
            .ok_or_else(|| CliError::Validation(format!("{} requires --n", self.command.name())))
    }

    /// The parsed `C`, or 0 when unset.
    pub(crate) fn constant(&self) -> Result<BigRational, CliError> {
        match &self.c {
            None => Ok(BigRational::zero()),
            Some(text) => {
                let c = parse_rational(text)?;
                if c.is_negative() {
                    return Err(CliError::Validation(format!("--C must be non-negative, got {text}")));
                }
                Ok(c)
            }
        }
    }
}

/// Parses `"a"` or `"a/b"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Validation(format!("cannot parse '{text}' as a rational number"));
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(CliError::Validation(format!("zero denominator in '{text}'")));
    }
    Ok(BigRational::new(num, den))
}
