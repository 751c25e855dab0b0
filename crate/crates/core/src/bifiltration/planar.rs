//! Ambient DC for measures on finite subsets of the Euclidean plane, where
//! witnesses range over the whole plane.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::measure::DiscreteMeasure;
use crate::metric::{euclidean, sort_dedup, FiniteMetricSpace, TOLERANCE};
use crate::simplex::{subsets_up_to, Simplex};
use crate::staircase::{BifilteredComplex, Staircase};

type Point = [f64; 2];

/// Supports above this size do not fit the coverage bitmasks.
pub const PLANAR_SUPPORT_CAP: usize = 64;

fn midpoint(a: Point, b: Point) -> Point {
    [0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])]
}

/// Centre and radius of the smallest enclosing disk of at most three points.
pub fn small_meb(pts: &[Point]) -> (Point, f64) {
    match pts {
        [] => ([0.0, 0.0], 0.0),
        [a] => (*a, 0.0),
        [a, b] => (midpoint(*a, *b), 0.5 * euclidean(*a, *b)),
        [a, b, c] => {
            // an obtuse, right or degenerate triangle is spanned by its longest side
            let sides = [(euclidean(*b, *c), *b, *c), (euclidean(*a, *c), *a, *c), (euclidean(*a, *b), *a, *b)];
            let (long, p, q) = sides.iter().copied().fold(sides[0], |acc, s| if s.0 > acc.0 { s } else { acc });
            let centre = midpoint(p, q);
            let far = [*a, *b, *c].into_iter().map(|x| euclidean(centre, x)).fold(0.0, f64::max);
            if far <= 0.5 * long + TOLERANCE {
                return (centre, 0.5 * long);
            }
            let d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]));
            let na = a[0] * a[0] + a[1] * a[1];
            let nb = b[0] * b[0] + b[1] * b[1];
            let nc = c[0] * c[0] + c[1] * c[1];
            let ux = (na * (b[1] - c[1]) + nb * (c[1] - a[1]) + nc * (a[1] - b[1])) / d;
            let uy = (na * (c[0] - b[0]) + nb * (a[0] - c[0]) + nc * (b[0] - a[0])) / d;
            let centre = [ux, uy];
            let radius = [*a, *b, *c].into_iter().map(|x| euclidean(centre, x)).fold(0.0, f64::max);
            (centre, radius)
        }
        _ => panic!("small_meb takes at most three points"),
    }
}

/// Both intersection points of the radius-`r` circles around `a` and `b`,
/// if the centres are distinct and at most `2r` apart.
fn circle_intersections(a: Point, b: Point, r: f64) -> Option<[Point; 2]> {
    let d = euclidean(a, b);
    if d == 0.0 || d > 2.0 * r {
        return None;
    }
    let h = (r * r - 0.25 * d * d).max(0.0).sqrt();
    let m = midpoint(a, b);
    let (ux, uy) = ((b[0] - a[0]) / d, (b[1] - a[1]) / d);
    Some([[m[0] - h * uy, m[1] + h * ux], [m[0] + h * uy, m[1] - h * ux]])
}

/// Radii where the planar DC of the given points can change: 0, half of
/// every pairwise distance, every pairwise distance and the enclosing
/// radius of every triple.
pub fn canonical_radii(pts: &[Point]) -> Vec<f64> {
    let n = pts.len();
    let mut out = vec![0.0];
    for i in 0..n {
        for j in i + 1..n {
            let d = euclidean(pts[i], pts[j]);
            out.push(0.5 * d);
            out.push(d);
            for k in j + 1..n {
                out.push(small_meb(&[pts[i], pts[j], pts[k]]).1);
            }
        }
    }
    sort_dedup(&mut out);
    out
}

/// Coverage masks and masses of the inclusion-maximal sets `S cap B(x, r)`
/// over all witnesses `x` in the plane.
fn maximal_coverages(pts: &[Point], weights: &[f64], r: f64) -> Vec<(u64, f64)> {
    let n = pts.len();
    let mut centres: Vec<Point> = pts.to_vec();
    for i in 0..n {
        for j in i + 1..n {
            centres.push(small_meb(&[pts[i], pts[j]]).0);
            if let Some(two) = circle_intersections(pts[i], pts[j], r) {
                centres.extend(two);
            }
            for k in j + 1..n {
                centres.push(small_meb(&[pts[i], pts[j], pts[k]]).0);
            }
        }
    }
    let mut masks: Vec<u64> = centres
        .iter()
        .map(|&c| (0..n).filter(|&i| euclidean(c, pts[i]) <= r + TOLERANCE).fold(0u64, |m, i| m | (1 << i)))
        .filter(|&m| m != 0)
        .collect();
    masks.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    masks.dedup();
    let mut maximal: Vec<u64> = Vec::new();
    for m in masks {
        if !maximal.iter().any(|&big| big & m == m) {
            maximal.push(m);
        }
    }
    maximal
        .into_iter()
        .map(|m| {
            let mass = (0..n).filter(|&i| m >> i & 1 == 1).map(|i| weights[i]).sum();
            (m, mass)
        })
        .collect()
}

/// Ambient DC of `mu` with witnesses anywhere in the plane. `tau` is present
/// at `(m, r)` iff some closed disk of radius `r` contains `tau` and has mass
/// at least `m`. Zero-weight points are ignored. Staircases are sampled at
/// `r_grid` if given and at the canonical radii otherwise, which is exact.
pub fn ambient_dc_planar(
    space: &FiniteMetricSpace,
    mu: &DiscreteMeasure,
    dim_cap: usize,
    r_grid: Option<&[f64]>,
) -> Result<BifilteredComplex> {
    mu.check_len(space.len(), "measure")?;
    let coords = space.coords().ok_or(Error::MissingCoordinates)?;
    let support = mu.support();
    if support.len() > PLANAR_SUPPORT_CAP {
        return Err(Error::SupportTooLarge { size: support.len(), cap: PLANAR_SUPPORT_CAP });
    }
    for (a, &i) in support.iter().enumerate() {
        for &j in &support[a + 1..] {
            let d = space.d(i, j);
            if d > 0.0 && d <= TOLERANCE {
                return Err(Error::DegenerateConfiguration { i, j, distance: d });
            }
        }
    }
    let pts: Vec<Point> = support.iter().map(|&i| coords[i]).collect();
    let weights: Vec<f64> = support.iter().map(|&i| mu.weight(i)).collect();
    let radii = match r_grid {
        Some(g) => {
            let mut g: Vec<f64> = g.iter().copied().filter(|r| *r >= 0.0).collect();
            sort_dedup(&mut g);
            g
        }
        None => canonical_radii(&pts),
    };
    let coverages: Vec<Vec<(u64, f64)>> = radii.par_iter().map(|&r| maximal_coverages(&pts, &weights, r)).collect();
    let positions: Vec<usize> = (0..pts.len()).collect();
    let entries: BTreeMap<Simplex, Staircase> = subsets_up_to(&positions, dim_cap + 1)
        .into_par_iter()
        .filter_map(|tau| {
            let bits = tau.vertices().iter().fold(0u64, |m, &i| m | (1 << i));
            let samples = radii.iter().zip(&coverages).map(|(&r, cov)| {
                let best = cov
                    .iter()
                    .filter(|(m, _)| m & bits == bits)
                    .map(|&(_, w)| w)
                    .fold(None, |acc: Option<f64>, w| Some(acc.map_or(w, |a| a.max(w))));
                (r, best)
            });
            let st = Staircase::from_samples(samples)?;
            Some((tau.image(|i| support[i]), st))
        })
        .collect();
    Ok(BifilteredComplex::new_unchecked(support, entries, dim_cap))
}
