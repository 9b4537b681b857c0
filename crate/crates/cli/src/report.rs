//! Command output and its JSON, CSV and plain-text renderings.
//!
//! Exact values are always rendered as strings (`"325"`, `"43/2"`); JSON adds a
//! sibling `<key>_approx` float for every rational.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{Map, Value};

use crate::config::RunConfig;
use crate::error::CliError;

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Count(u64),
    Int(BigUint),
    Rational(BigRational),
    Bool(bool),
    Text(String),
}

impl Cell {
    pub fn text(&self) -> String {
        match self {
            Cell::Count(x) => x.to_string(),
            Cell::Int(x) => x.to_string(),
            Cell::Rational(x) => x.to_string(),
            Cell::Bool(x) => x.to_string(),
            Cell::Text(x) => x.clone(),
        }
    }

    fn insert_into(&self, key: &str, map: &mut Map<String, Value>) {
        let value = match self {
            Cell::Count(x) => Value::from(*x),
            Cell::Bool(x) => Value::from(*x),
            Cell::Int(_) | Cell::Text(_) => Value::from(self.text()),
            Cell::Rational(x) => {
                let approx = x.to_f64().map(Value::from).unwrap_or(Value::Null);
                map.insert(format!("{key}_approx"), approx);
                Value::from(self.text())
            }
        };
        map.insert(key.to_string(), value);
    }
}

impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        Cell::Count(x)
    }
}

impl From<u32> for Cell {
    fn from(x: u32) -> Self {
        Cell::Count(u64::from(x))
    }
}

impl From<BigUint> for Cell {
    fn from(x: BigUint) -> Self {
        Cell::Int(x)
    }
}

impl From<&BigUint> for Cell {
    fn from(x: &BigUint) -> Self {
        Cell::Int(x.clone())
    }
}

impl From<BigRational> for Cell {
    fn from(x: BigRational) -> Self {
        Cell::Rational(x)
    }
}

impl From<&BigRational> for Cell {
    fn from(x: &BigRational) -> Self {
        Cell::Rational(x.clone())
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Bool(x)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_string())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    /// Key under which the rows appear in JSON.
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &'static str, columns: &[&'static str]) -> Self {
        Table {
            name,
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// What a command produced: scalar results, an optional table, and warnings.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub summary: Vec<(&'static str, Cell)>,
    pub table: Option<Table>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn set(&mut self, key: &'static str, value: impl Into<Cell>) {
        self.summary.push((key, value.into()));
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn results_json(&self) -> Value {
        let mut results = Map::new();
        for (key, cell) in &self.summary {
            cell.insert_into(key, &mut results);
        }
        if let Some(table) = &self.table {
            let rows = table
                .rows
                .iter()
                .map(|row| {
                    let mut obj = Map::new();
                    for (key, cell) in table.columns.iter().zip(row) {
                        cell.insert_into(key, &mut obj);
                    }
                    Value::Object(obj)
                })
                .collect();
            results.insert(table.name.to_string(), Value::Array(rows));
        }
        Value::Object(results)
    }

    pub fn to_json(&self, config: &RunConfig) -> Result<String, CliError> {
        let config = serde_json::to_value(config).map_err(|e| CliError::Validation(e.to_string()))?;
        let mut top = Map::new();
        top.insert("config".into(), config);
        top.insert("results".into(), self.results_json());
        top.insert("warnings".into(), Value::from(self.warnings.clone()));
        let mut text = serde_json::to_string_pretty(&Value::Object(top)).map_err(|e| CliError::Validation(e.to_string()))?;
        text.push('\n');
        Ok(text)
    }

    /// The table, or the summary as a single row when there is no table.
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        match &self.table {
            Some(table) => {
                writer.write_record(&table.columns)?;
                for row in &table.rows {
                    writer.write_record(row.iter().map(Cell::text))?;
                }
            }
            None => {
                writer.write_record(self.summary.iter().map(|(k, _)| *k))?;
                writer.write_record(self.summary.iter().map(|(_, v)| v.text()))?;
            }
        }
        let bytes = writer.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    /// `key: value` lines, then the table with space-aligned columns.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for (key, cell) in &self.summary {
            out.push_str(&format!("{key}: {}\n", cell.text()));
        }
        if let Some(table) = &self.table {
            if !self.summary.is_empty() {
                out.push('\n');
            }
            let mut lines: Vec<Vec<String>> = vec![table.columns.iter().map(|c| c.to_string()).collect()];
            lines.extend(table.rows.iter().map(|r| r.iter().map(Cell::text).collect()));
            let widths: Vec<usize> = (0..table.columns.len())
                .map(|j| lines.iter().map(|l| l[j].chars().count()).max().unwrap_or(0))
                .collect();
            for line in lines {
                let padded: Vec<String> = line.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
                out.push_str(padded.join("  ").trim_end());
                out.push('\n');
            }
        }
        out
    }
}
