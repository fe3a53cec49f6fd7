use std::io::Read;
use std::str::FromStr;

use super::MeasurementRecord;
use crate::error::{Error, Result};
use crate::geometry::derive_d3d;

/// Whether a distance column holds horizontal or 3D separations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DistanceKind {
    TwoD,
    #[default]
    ThreeD,
}

impl FromStr for DistanceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "2d" => Ok(DistanceKind::TwoD),
            "3d" => Ok(DistanceKind::ThreeD),
            other => Err(format!("unknown distance kind '{other}', expected 2d or 3d")),
        }
    }
}

fn parse_err(line: u64, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn number(field: &str, name: &str, line: u64) -> Result<f64> {
    field
        .trim()
        .parse::<f64>()
        .map_err(|_| parse_err(line, format!("{name}: '{field}' is not a number")))
}

fn to_3d(d: f64, kind: DistanceKind, heights: Option<(f64, f64)>, line: u64) -> Result<f64> {
    match kind {
        DistanceKind::ThreeD => Ok(d),
        DistanceKind::TwoD => {
            let (hbs, hue) = heights.ok_or_else(|| {
                parse_err(line, "2D distance given but no antenna heights to convert it")
            })?;
            derive_d3d(d, hbs, hue).map_err(|e| parse_err(line, e.to_string()))
        }
    }
}

fn reader<R: Read>(r: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(r)
}

fn records<R: Read>(r: R) -> impl Iterator<Item = Result<(u64, csv::StringRecord)>> {
    reader(r).into_records().map(|rec| {
        let rec = rec.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_err(line, e.to_string())
        })?;
        let line = rec.position().map_or(0, |p| p.line());
        Ok((line, rec))
    })
}

/// Reads `fc_ghz,d_m,pl_db[,d_kind]`. The header is required; `d_kind` is
/// `2d` or `3d` per row (3d when the column is absent). 2D rows need
/// `heights = (hBS, hUE)`.
pub fn read_measurements<R: Read>(input: R, heights: Option<(f64, f64)>) -> Result<Vec<MeasurementRecord>> {
    let mut rows = records(input);
    let (_, header) = rows.next().ok_or_else(|| parse_err(1, "empty input, expected a header"))??;
    let header: Vec<&str> = header.iter().map(str::trim).collect();
    let with_kind = match header.as_slice() {
        ["fc_ghz", "d_m", "pl_db"] => false,
        ["fc_ghz", "d_m", "pl_db", "d_kind"] => true,
        _ => {
            return Err(parse_err(
                1,
                format!("expected header fc_ghz,d_m,pl_db[,d_kind], got '{}'", header.join(",")),
            ))
        }
    };
    let width = if with_kind { 4 } else { 3 };

    let mut out = Vec::new();
    for row in rows {
        let (line, rec) = row?;
        if rec.len() != width {
            return Err(parse_err(line, format!("expected {width} fields, got {}", rec.len())));
        }
        let fc = number(&rec[0], "fc_ghz", line)?;
        let d = number(&rec[1], "d_m", line)?;
        let pl = number(&rec[2], "pl_db", line)?;
        let kind = if with_kind {
            rec[3].parse::<DistanceKind>().map_err(|m| parse_err(line, m))?
        } else {
            DistanceKind::ThreeD
        };
        let d = to_3d(d, kind, heights, line)?;
        out.push(MeasurementRecord::new(fc, d, pl).map_err(|e| parse_err(line, e.to_string()))?);
    }
    if out.is_empty() {
        return Err(parse_err(1, "no data rows"));
    }
    Ok(out)
}

/// Reads one model column of a sweep CSV (`d_m,<model>...`) as measurements
/// at carrier `fc`.
pub fn read_sweep_column<R: Read>(
    input: R,
    column: &str,
    fc: f64,
    kind: DistanceKind,
    heights: Option<(f64, f64)>,
) -> Result<Vec<MeasurementRecord>> {
    let mut rows = records(input);
    let (_, header) = rows.next().ok_or_else(|| parse_err(1, "empty input, expected a header"))??;
    if header.get(0).map(str::trim) != Some("d_m") {
        return Err(parse_err(1, "sweep header must start with d_m"));
    }
    let col = header
        .iter()
        .position(|h| h.trim() == column)
        .ok_or_else(|| parse_err(1, format!("no column '{column}' in sweep header")))?;
    let width = header.len();

    let mut out = Vec::new();
    for row in rows {
        let (line, rec) = row?;
        if rec.len() != width {
            return Err(parse_err(line, format!("expected {width} fields, got {}", rec.len())));
        }
        let d = to_3d(number(&rec[0], "d_m", line)?, kind, heights, line)?;
        let pl = number(&rec[col], column, line)?;
        out.push(MeasurementRecord::new(fc, d, pl).map_err(|e| parse_err(line, e.to_string()))?);
    }
    if out.is_empty() {
        return Err(parse_err(1, "no data rows"));
    }
    Ok(out)
}
