use std::fs::File;
use std::io::{BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::Path;

use serde::Serialize;

use pretzel_invariants::alexander::{alexander_polynomial, PretzelSpec};
use pretzel_invariants::ideals::in_subfamily;
use pretzel_invariants::jones_closed::pretzel_jones;
use pretzel_invariants::EvalPoint;

use crate::error::CliError;
use crate::TableFormat;

const HEADER: [&str; 9] =
    ["spec", "s", "i", "alexander", "jones", "jones_min_exponent", "jones_max_exponent", "determinant", "subfamily"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub spec: String,
    pub s: i64,
    pub i: i64,
    pub alexander: String,
    pub jones: String,
    pub jones_min_exponent: i64,
    pub jones_max_exponent: i64,
    pub determinant: i64,
    pub subfamily: bool,
}

pub fn row(s: i64, i: i64) -> Result<TableRow, CliError> {
    let spec = PretzelSpec::family(s, i).map_err(CliError::usage)?;
    let delta = alexander_polynomial(&spec);
    let jones = pretzel_jones(s, i).map_err(CliError::usage)?.polynomial;
    let exponent = |e: Option<pretzel_invariants::Exponent>| {
        e.and_then(|e| e.as_integer())
            .ok_or_else(|| CliError::Failed(format!("{spec}: Jones exponents are not integral")))
    };
    let determinant = delta.evaluate(&EvalPoint::MinusOne).map_err(|e| CliError::Failed(e.to_string()))?;
    Ok(TableRow {
        spec: spec.to_string(),
        s,
        i,
        alexander: delta.to_string(),
        jones_min_exponent: exponent(jones.min_exponent())?,
        jones_max_exponent: exponent(jones.max_exponent())?,
        jones: jones.to_string(),
        determinant: i64::try_from(determinant.magnitude()).map_err(|e| CliError::Failed(e.to_string()))?,
        subfamily: in_subfamily(s, i),
    })
}

fn write_table(rows: &[TableRow], format: TableFormat, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        TableFormat::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            w.write_record(HEADER)?;
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn run(
    s: i64,
    indices: RangeInclusive<i64>,
    format: TableFormat,
    path: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let rows = indices.map(|i| row(s, i)).collect::<Result<Vec<_>, _>>()?;
    match path {
        Some(path) => {
            let file = File::create(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            write_table(&rows, format, &mut w)?;
            w.flush()?;
            Ok(())
        }
        None => write_table(&rows, format, stdout),
    }
}
