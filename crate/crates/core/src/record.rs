//! Machine-readable command output: one record, rendered as JSON, CSV, TSV or plain text.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Tsv,
    #[default]
    Plain,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "tsv" => Ok(Format::Tsv),
            "plain" => Ok(Format::Plain),
            _ => Err(Error::Parse(format!(
                "unknown format {s:?} (expected json, csv, tsv or plain)"
            ))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Tsv => "tsv",
            Format::Plain => "plain",
        })
    }
}

pub type Row = IndexMap<String, String>;

/// The command that ran, its parameters, and one or more result rows. All values are
/// strings: integers and rationals exactly (`num/den`), elements of `Q(√2)` as
/// `a+b*sqrt2`, decimals fixed-point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: IndexMap<String, String>,
    pub results: Vec<Row>,
}

impl OutputRecord {
    pub fn new(command: impl Into<String>) -> Self {
        OutputRecord {
            command: command.into(),
            ..Default::default()
        }
    }

    pub fn param(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.parameters.insert(key.into(), value.to_string());
        self
    }

    pub fn push_row(&mut self, row: Row) {
        self.results.push(row);
    }

    /// Column names in first-seen order across all rows.
    pub fn columns(&self) -> Vec<&str> {
        let mut cols: IndexMap<&str, ()> = IndexMap::new();
        for row in &self.results {
            for k in row.keys() {
                cols.insert(k, ());
            }
        }
        cols.into_keys().collect()
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_delimited(b','),
            Format::Tsv => self.to_delimited(b'\t'),
            Format::Plain => Ok(self.to_plain()),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Parse(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Results only; parameters are left to the invocation.
    fn to_delimited(&self, delimiter: u8) -> Result<String> {
        let cols = self.columns();
        let mut w = csv::WriterBuilder::new()
            .delimiter(delimiter)
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let io = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(&cols).map_err(io)?;
        for row in &self.results {
            w.write_record(cols.iter().map(|c| row.get(*c).map_or("", String::as_str)))
                .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }

    fn to_plain(&self) -> String {
        let mut out = String::new();
        if let [row] = self.results.as_slice() {
            let width = row.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (k, v) in row {
                out += &format!("{k:<width$}  {v}\n");
            }
            return out;
        }
        let cols = self.columns();
        let widths: Vec<usize> = cols
            .iter()
            .map(|c| {
                self.results
                    .iter()
                    .filter_map(|r| r.get(*c))
                    .map(|v| v.chars().count())
                    .chain([c.chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        out += &line(cols.clone());
        for row in &self.results {
            out += &line(cols.iter().map(|c| row.get(*c).map_or("", String::as_str)).collect());
        }
        out
    }
}

/// Builds a [`Row`] from `key => value` pairs.
#[macro_export]
macro_rules! row {
    ($($k:expr => $v:expr),* $(,)?) => {{
        let mut r = $crate::record::Row::new();
        $( r.insert($k.to_string(), $v.to_string()); )*
        r
    }};
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> OutputRecord {
        let mut r = OutputRecord::new("bound").param("p", 2).param("q", 2);
        r.push_row(row! { "theorem_bound" => "8", "note" => "a, \"quoted\" value" });
        r
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let s = r.to_json().unwrap();
        let back = OutputRecord::from_json(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json().unwrap(), s);
    }

    #[test]
    fn csv_quotes_per_rfc4180() {
        let s = sample().render(Format::Csv).unwrap();
        assert_eq!(s, "theorem_bound,note\n8,\"a, \"\"quoted\"\" value\"\n");
    }

    #[test]
    fn tsv_and_plain() {
        let mut r = OutputRecord::new("table");
        r.push_row(row! { "p" => "p=3", "k=0" => "0.678530" });
        r.push_row(row! { "p" => "p=12", "k=0" => "0.737444" });
        assert_eq!(r.render(Format::Tsv).unwrap(), "p\tk=0\np=3\t0.678530\np=12\t0.737444\n");
        assert_eq!(
            r.render(Format::Plain).unwrap(),
            "p     k=0\np=3   0.678530\np=12  0.737444\n"
        );
        assert_eq!(sample().render(Format::Plain).unwrap().lines().count(), 2);
    }

    #[test]
    fn format_parsing() {
        assert_eq!("tsv".parse::<Format>().unwrap(), Format::Tsv);
        assert!("xml".parse::<Format>().is_err());
    }
}
