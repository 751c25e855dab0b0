//! Static SVG heatmaps of one column of a Betti table.
//!
//! Cells are laid out with radius increasing to the right and mass
//! threshold increasing downward. Colour interpolates linearly from white
//! (Betti number 0) to dark blue (the largest value in the table), and a
//! legend lists the colour of every value that occurs.

use std::fmt::Write;

use crate::homology::BettiTable;

const CELL: usize = 24;
const MARGIN: usize = 60;

/// Colour of `value` on a scale whose top is `max`.
pub fn colour(value: usize, max: usize) -> String {
    let t = if max == 0 { 0.0 } else { value as f64 / max as f64 };
    let lerp = |a: f64, b: f64| (a + (b - a) * t).round() as u8;
    format!("#{:02x}{:02x}{:02x}", lerp(255.0, 8.0), lerp(255.0, 48.0), lerp(255.0, 107.0))
}

pub fn svg_heatmap(table: &BettiTable, degree: usize) -> String {
    let value = |i: usize, j: usize| table.values[i][j].get(degree).copied().unwrap_or(0);
    let (nm, nr) = (table.ms.len(), table.rs.len());
    let max = (0..nm).flat_map(|i| (0..nr).map(move |j| (i, j))).map(|(i, j)| value(i, j)).max().unwrap_or(0);
    let width = 2 * MARGIN + nr * CELL + 120;
    let height = 2 * MARGIN + nm * CELL;
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" font-family="monospace" font-size="10">"#).unwrap();
    writeln!(s, r#"<text x="{MARGIN}" y="20">betti {degree}</text>"#).unwrap();
    for i in 0..nm {
        for j in 0..nr {
            let v = value(i, j);
            let (x, y) = (MARGIN + j * CELL, MARGIN + i * CELL);
            writeln!(
                s,
                r##"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="{}" stroke="#999"><title>m={} r={} b={v}</title></rect>"##,
                colour(v, max),
                table.ms[i],
                table.rs[j]
            )
            .unwrap();
        }
        writeln!(s, r#"<text x="4" y="{}">{}</text>"#, MARGIN + i * CELL + 16, table.ms[i]).unwrap();
    }
    for (j, r) in table.rs.iter().enumerate() {
        let x = MARGIN + j * CELL + 4;
        let y = MARGIN + nm * CELL + 12;
        writeln!(s, r#"<text x="{x}" y="{y}" transform="rotate(60 {x} {y})">{r}</text>"#).unwrap();
    }
    let lx = MARGIN + nr * CELL + 30;
    writeln!(s, r#"<text x="{lx}" y="{}">legend</text>"#, MARGIN - 8).unwrap();
    for v in 0..=max {
        let y = MARGIN + v * 16;
        writeln!(s, r##"<rect x="{lx}" y="{y}" width="12" height="12" fill="{}" stroke="#999"/>"##, colour(v, max)).unwrap();
        writeln!(s, r#"<text x="{}" y="{}">{v}</text>"#, lx + 18, y + 10).unwrap();
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colour_scale_is_monotone() {
        assert_eq!(colour(0, 3), "#ffffff");
        assert_eq!(colour(3, 3), "#08306b");
        assert_eq!(colour(0, 0), "#ffffff");
    }

    #[test]
    fn one_rect_per_cell() {
        let t = BettiTable { ms: vec![1.0, 2.0], rs: vec![0.0], values: vec![vec![vec![1]], vec![vec![0]]] };
        let svg = svg_heatmap(&t, 0);
        assert_eq!(svg.matches("<title>").count(), 2);
        assert!(svg.contains("m=1 r=0 b=1"));
    }
}
