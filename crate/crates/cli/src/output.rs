use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// A check ran and failed.
    Semantic,
    Input,
}

impl Status {
    pub fn exit_code(self) -> ExitCode {
        ExitCode::from(match self {
            Status::Pass => 0,
            Status::Semantic => 1,
            Status::Input => 2,
        })
    }

    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Semantic
        }
    }
}

/// A finished report in both renderings.
pub struct Outcome {
    pub status: Status,
    pub json: Value,
    pub table: String,
}

impl Outcome {
    pub fn new(pass: bool, json: Value, table: String) -> Self {
        Outcome {
            status: Status::from_pass(pass),
            json,
            table,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Table => self.table.clone(),
        }
    }

    pub fn emit(&self, format: Format, out: Option<&Path>) -> anyhow::Result<()> {
        let text = self.render(format);
        match out {
            Some(path) => fs::write(path, text)?,
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

/// Semantic core errors map to 1, everything else (parse, IO, structure) to 2.
pub fn status_of(e: &anyhow::Error) -> Status {
    match e.downcast_ref::<rif_forge::Error>() {
        Some(err) if err.is_semantic() => Status::Semantic,
        _ => Status::Input,
    }
}

/// Left-aligned columns separated by two spaces. A row's last cell is
/// never padded and does not widen its column.
pub fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|c| {
            rows.iter()
                .filter(|r| c + 1 < r.len())
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| {
                if c + 1 == row.len() {
                    cell.clone()
                } else {
                    format!("{cell:<w$}", w = widths[c])
                }
            })
            .collect();
        out.push_str(&line.join("  "));
        out.push('\n');
    }
    out
}

pub fn witness_text(w: &[String]) -> String {
    format!("({})", w.join(", "))
}
