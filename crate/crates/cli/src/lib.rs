//! Command-line front end for `fermat-tower`: run configuration, command
//! dispatch and deterministic report rendering.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;

pub use config::{parse_rational, ActionChoice, Command, Format, RunConfig};
pub use error::CliError;
pub use report::{Cell, Report, Table};

/// A finished run: the rendered output and any warnings.
#[derive(Clone, Debug, PartialEq)]
pub struct Rendered {
    pub text: String,
    pub warnings: Vec<String>,
}

/// Runs `config` and renders the report in the configured format.
///
/// Warnings are embedded in JSON output and returned separately for the other
/// formats so the caller can print them on stderr.
pub fn run(config: &RunConfig) -> Result<Rendered, CliError> {
    let report = commands::execute(config)?;
    let text = match config.format {
        Format::Json => report.to_json(config)?,
        Format::Csv => report.to_csv()?,
        Format::Plain => report.to_plain(),
    };
    Ok(Rendered {
        text,
        warnings: report.warnings,
    })
}
