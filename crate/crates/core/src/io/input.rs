//! CSV input: planar point clouds and distance matrices.

use std::io::Read;

use crate::error::{Error, Result};
use crate::measure::DiscreteMeasure;
use crate::metric::{validate_metric, FiniteMetricSpace};

/// A parsed finite metric-measure space.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub space: FiniteMetricSpace,
    pub measure: DiscreteMeasure,
}

fn csv_reader<R: Read>(input: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).comment(Some(b'#')).from_reader(input)
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line() as usize);
    Error::Parse { line, message: e.to_string() }
}

fn number(field: &str, line: usize, column: &str) -> Result<f64> {
    field.parse::<f64>().map_err(|_| Error::Parse { line, message: format!("column {column}: not a number: {field:?}") })
}

fn weight_column(headers: &csv::StringRecord, weights: Option<&str>, default: Option<&str>) -> Result<Option<usize>> {
    match weights {
        Some(name) => headers
            .iter()
            .position(|h| h == name)
            .map(Some)
            .ok_or_else(|| Error::Parse { line: 1, message: format!("weight column {name:?} not found in header") }),
        None => Ok(default.and_then(|d| headers.iter().position(|h| h == d))),
    }
}

/// Parses a point cloud with header `x[,y][,w]`. A missing `y` column puts
/// the points on a line. Weights come from the column named `weights`, or
/// from a column `w` if present, and default to 1.
pub fn parse_points_csv<R: Read>(input: R, weights: Option<&str>) -> Result<Dataset> {
    let mut rdr = csv_reader(input);
    let headers = rdr.headers().map_err(csv_error)?.clone();
    let xcol = headers
        .iter()
        .position(|h| h == "x")
        .ok_or_else(|| Error::Parse { line: 1, message: "point input needs an x column".into() })?;
    let ycol = headers.iter().position(|h| h == "y");
    let wcol = weight_column(&headers, weights, Some("w"))?;
    let mut pts = Vec::new();
    let mut w = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_error)?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        let get = |c: usize| rec.get(c).ok_or_else(|| Error::Parse { line, message: format!("missing field {}", c + 1) });
        let x = number(get(xcol)?, line, "x")?;
        let y = match ycol {
            Some(c) => number(get(c)?, line, "y")?,
            None => 0.0,
        };
        pts.push([x, y]);
        w.push(match wcol {
            Some(c) => number(get(c)?, line, &headers[c])?,
            None => 1.0,
        });
    }
    let space = FiniteMetricSpace::from_points(pts)?;
    let measure = DiscreteMeasure::new(w)?;
    Ok(Dataset { space, measure })
}

/// Parses an `n x n` distance matrix. The header names the columns; a
/// leading column headed `label` holds point labels, and the column named
/// `weights` (if given) holds point weights, which otherwise default to 1.
pub fn parse_matrix_csv<R: Read>(input: R, weights: Option<&str>) -> Result<Dataset> {
    let mut rdr = csv_reader(input);
    let headers = rdr.headers().map_err(csv_error)?.clone();
    let label_col = headers.iter().position(|h| h == "label");
    let wcol = weight_column(&headers, weights, None)?;
    let dist_cols: Vec<usize> = (0..headers.len()).filter(|&c| Some(c) != label_col && Some(c) != wcol).collect();
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    let mut w = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_error)?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        if rec.len() != headers.len() {
            return Err(Error::Parse { line, message: format!("expected {} fields, found {}", headers.len(), rec.len()) });
        }
        rows.push(dist_cols.iter().map(|&c| number(&rec[c], line, &headers[c])).collect::<Result<Vec<f64>>>()?);
        if let Some(c) = label_col {
            labels.push(rec[c].to_string());
        }
        w.push(match wcol {
            Some(c) => number(&rec[c], line, &headers[c])?,
            None => 1.0,
        });
    }
    let mut space = validate_metric(rows, None)?;
    if label_col.is_some() {
        space = space.with_labels(labels)?;
    }
    let measure = DiscreteMeasure::new(w)?;
    Ok(Dataset { space, measure })
}
