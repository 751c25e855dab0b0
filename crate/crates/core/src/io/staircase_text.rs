//! Plain-text staircase tables.
//!
//! ```text
//! # dualcech staircases v1
//! universe 0 1 2
//! dim_cap 3
//! 0 : 0 1 ; 2 3
//! 0,1 : 1 2 ; 2 3
//! ```
//!
//! One line per simplex that is ever present: comma-separated vertices, then
//! the staircase steps as `r m` pairs separated by ` ; `. Numbers use the
//! shortest representation that parses back to the same value; `inf` is
//! infinity. Lines starting with `#` are comments.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::simplex::Simplex;
use crate::staircase::{BifilteredComplex, Staircase};

pub const HEADER: &str = "# dualcech staircases v1";

pub fn write_staircases(k: &BifilteredComplex) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    out.push_str("universe");
    for v in k.universe() {
        write!(out, " {v}").unwrap();
    }
    writeln!(out, "\ndim_cap {}", k.dim_cap()).unwrap();
    for (s, st) in k.entries() {
        let verts: Vec<String> = s.vertices().iter().map(usize::to_string).collect();
        let steps: Vec<String> = st.steps().iter().map(|(r, m)| format!("{r} {m}")).collect();
        writeln!(out, "{} : {}", verts.join(","), steps.join(" ; ")).unwrap();
    }
    out
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_usize(s: &str, line: usize) -> Result<usize> {
    s.trim().parse().map_err(|_| err(line, format!("not an index: {s:?}")))
}

fn parse_f64(s: &str, line: usize) -> Result<f64> {
    s.trim().parse().map_err(|_| err(line, format!("not a number: {s:?}")))
}

/// Parses and validates a staircase table.
pub fn parse_staircases(text: &str) -> Result<BifilteredComplex> {
    let mut universe = None;
    let mut dim_cap = None;
    let mut entries = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        if let Some(rest) = l.strip_prefix("universe") {
            universe = Some(rest.split_whitespace().map(|v| parse_usize(v, line)).collect::<Result<Vec<_>>>()?);
        } else if let Some(rest) = l.strip_prefix("dim_cap") {
            dim_cap = Some(parse_usize(rest, line)?);
        } else {
            let (verts, steps) = l.split_once(':').ok_or_else(|| err(line, "expected `vertices : steps`"))?;
            let verts = verts.split(',').map(|v| parse_usize(v, line)).collect::<Result<Vec<_>>>()?;
            let simplex = Simplex::new(verts).map_err(|e| err(line, e.to_string()))?;
            let steps = steps
                .split(';')
                .map(|p| {
                    let mut it = p.split_whitespace();
                    match (it.next(), it.next(), it.next()) {
                        (Some(r), Some(m), None) => Ok((parse_f64(r, line)?, parse_f64(m, line)?)),
                        _ => Err(err(line, format!("expected `r m`, found {p:?}"))),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let st = Staircase::new(steps).map_err(|e| err(line, e.to_string()))?;
            if entries.insert(simplex, st).is_some() {
                return Err(err(line, "duplicate simplex"));
            }
        }
    }
    let universe = universe.ok_or_else(|| err(0, "missing universe line"))?;
    let dim_cap = dim_cap.ok_or_else(|| err(0, "missing dim_cap line"))?;
    BifilteredComplex::new(universe, entries, dim_cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut e = BTreeMap::new();
        e.insert(Simplex::vertex(0), Staircase::new(vec![(0.0, 1.0), (0.1 + 0.2, 2.5)]).unwrap());
        e.insert(Simplex::vertex(1), Staircase::new(vec![(f64::INFINITY, 1.0)]).unwrap());
        let k = BifilteredComplex::new(vec![0, 1, 2], e, 2).unwrap();
        let text = write_staircases(&k);
        assert!(text.contains("0 : 0 1 ; 0.30000000000000004 2.5"));
        assert!(text.contains("1 : inf 1"));
        assert_eq!(parse_staircases(&text).unwrap(), k);
    }

    #[test]
    fn rejects_corrupted_tables() {
        let bad = format!("{HEADER}\nuniverse 0 1\ndim_cap 1\n0 : 0 1\n1 : 0 1\n0,1 : 0 2\n");
        assert!(parse_staircases(&bad).is_err());
        let e = parse_staircases("universe 0\ndim_cap 1\n0 : x 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
    }
}
