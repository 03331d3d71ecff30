use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::Value;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// What a subcommand produced: a table for text/csv and a JSON value.
pub struct Output {
    pub header: Vec<String>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub footer: Vec<String>,
    pub json: Value,
    pub passed: bool,
}

impl Output {
    pub fn new(columns: Vec<&'static str>, json: Value) -> Self {
        Output { header: Vec::new(), columns, rows: Vec::new(), footer: Vec::new(), json, passed: true }
    }

    pub fn emit(&self, format: Format) -> io::Result<()> {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, &self.json)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns).map_err(csv_io)?;
                for r in &self.rows {
                    w.write_record(r).map_err(csv_io)?;
                }
                w.flush()
            }
            Format::Text => {
                for line in &self.header {
                    writeln!(out, "{line}")?;
                }
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|c| {
                        let cells = self.rows.iter().map(|r| r[c].len());
                        cells.chain([self.columns[c].len()]).max().unwrap_or(0)
                    })
                    .collect();
                if !self.rows.is_empty() {
                    let head: Vec<String> = self.columns.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                    writeln!(out, "{}", head.join("  ").trim_end())?;
                    for r in &self.rows {
                        // the last column is free-form, so it is never padded
                        let last = r.len() - 1;
                        let cells: Vec<String> = r
                            .iter()
                            .zip(&widths)
                            .enumerate()
                            .map(|(k, (c, w))| if k == last { c.clone() } else { format!("{c:<w$}") })
                            .collect();
                        writeln!(out, "{}", cells.join("  "))?;
                    }
                }
                for line in &self.footer {
                    writeln!(out, "{line}")?;
                }
                Ok(())
            }
        }
    }
}

/// Keeps the kind of an underlying io error, so a closed pipe stays recognizable.
fn csv_io(e: csv::Error) -> io::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => e,
        kind => io::Error::other(format!("{kind:?}")),
    }
}
