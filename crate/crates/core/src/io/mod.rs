//! Input parsing, artifact formats and atomic file output.

pub mod firep;
pub mod input;
pub mod staircase_text;
pub mod svg;

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::homology::BettiTable;

pub use firep::export_firep;
pub use input::{parse_matrix_csv, parse_points_csv, Dataset};
pub use staircase_text::{parse_staircases, write_staircases};
pub use svg::svg_heatmap;

/// Writes `contents` to a temporary sibling file and renames it over `path`.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().ok_or_else(|| Error::Io(format!("not a file path: {}", path.display())))?;
    let tmp = dir.join(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })?;
    Ok(())
}

/// Betti table as CSV with columns `m,r,b0,b1,...`, one row per grid cell
/// (m-major). Zero rows are written explicitly.
pub fn hilbert_csv(table: &BettiTable) -> Result<String> {
    let degrees = table.values.first().and_then(|row| row.first()).map_or(0, Vec::len);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["m".to_string(), "r".to_string()];
    header.extend((0..degrees).map(|d| format!("b{d}")));
    w.write_record(&header).map_err(|e| Error::Io(e.to_string()))?;
    for (i, m) in table.ms.iter().enumerate() {
        for (j, r) in table.rs.iter().enumerate() {
            let mut rec = vec![m.to_string(), r.to_string()];
            rec.extend(table.values[i][j].iter().map(usize::to_string));
            w.write_record(&rec).map_err(|e| Error::Io(e.to_string()))?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
