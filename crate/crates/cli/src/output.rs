use std::fmt::Write as _;
use std::io::Write as _;

use serde::Serialize;
use sitepc::json::{format_sig17, BigNum, Sig17};
use sitepc::series::Rational;
use sitepc::Estimate;

use crate::args::{Format, OutputArgs};
use crate::error::CliError;

/// A rendered result in both formats, plus any finite-size warning.
#[derive(Debug)]
pub struct Output {
    pub json: String,
    pub csv: String,
    pub warning: Option<String>,
}

impl Output {
    pub fn new(payload: &impl Serialize, csv: String, warning: Option<String>) -> Self {
        let mut json = serde_json::to_string_pretty(payload).expect("payload serialises");
        json.push('\n');
        Output { json, csv, warning }
    }

    pub fn emit(&self, args: &OutputArgs) -> Result<(), CliError> {
        let text = match args.format {
            Format::Json => &self.json,
            Format::Csv => &self.csv,
        };
        match &args.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?,
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(text.as_bytes())
                    .and_then(|_| stdout.flush())
                    .map_err(|e| CliError::Usage(format!("cannot write to stdout: {e}")))?;
            }
        }
        if let Some(w) = &self.warning {
            eprintln!("warning: {w}");
        }
        Ok(())
    }
}

pub fn pair(r: &Rational) -> [BigNum; 2] {
    [BigNum(r.numer().clone()), BigNum(r.denom().clone())]
}

pub fn pairs(rs: &[Rational]) -> Vec<[BigNum; 2]> {
    rs.iter().map(pair).collect()
}

#[derive(Debug, Serialize)]
pub struct EstimateJson {
    pub mean: Sig17,
    pub stderr: Sig17,
    pub samples: u64,
}

impl From<Estimate> for EstimateJson {
    fn from(e: Estimate) -> Self {
        EstimateJson { mean: Sig17(e.mean), stderr: Sig17(e.stderr), samples: e.n }
    }
}

/// CSV text from a header and rows of already formatted cells.
pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

/// Float cell with 17 significant digits; empty when not finite.
pub fn f(x: f64) -> String {
    if x.is_finite() {
        format_sig17(x)
    } else {
        String::new()
    }
}

/// Point as a CSV cell, quoted because it contains commas.
pub fn point_cell(p: &sitepc::Point) -> String {
    format!("\"{p}\"")
}
