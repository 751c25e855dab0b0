//! Finite metric spaces and closed-ball queries.

use crate::error::{Error, Result};
use crate::simplex::Simplex;

/// Tolerance for metric axioms and planar geometry. Never used by
/// combinatorial set operations, which compare radii exactly.
pub const TOLERANCE: f64 = 1e-9;

/// A finite metric space with a dense distance matrix.
///
/// Distances may be `f64::INFINITY` to represent points in different
/// components. Radius `f64::INFINITY` therefore covers the whole space.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMetricSpace {
    dist: Vec<Vec<f64>>,
    coords: Option<Vec<[f64; 2]>>,
    labels: Option<Vec<String>>,
}

pub fn euclidean(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

/// Validate a distance matrix (and optional planar coordinates) into a metric space.
pub fn validate_metric(
    matrix: Vec<Vec<f64>>,
    coords: Option<Vec<[f64; 2]>>,
) -> Result<FiniteMetricSpace> {
    let n = matrix.len();
    for (row, entries) in matrix.iter().enumerate() {
        if entries.len() != n {
            return Err(Error::NotSquare { row, len: entries.len(), expected: n });
        }
    }
    for i in 0..n {
        if matrix[i][i] != 0.0 {
            return Err(Error::NonzeroDiagonal(i, matrix[i][i]));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let v = matrix[i][j];
            if v.is_nan() || v < 0.0 {
                return Err(Error::NegativeDistance { i, j, value: v });
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if matrix[i][j] != matrix[j][i] {
                return Err(Error::Asymmetry { i, j, dij: matrix[i][j], dji: matrix[j][i] });
            }
        }
    }
    // inf + x = inf, so infinite legs never produce a violation
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if matrix[i][k] > matrix[i][j] + matrix[j][k] + TOLERANCE {
                    return Err(Error::TriangleViolation { i, j, k });
                }
            }
        }
    }
    if let Some(points) = &coords {
        if points.len() != n {
            return Err(Error::CoordCount { got: points.len(), expected: n });
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let e = euclidean(points[i], points[j]);
                if (e - matrix[i][j]).abs() > TOLERANCE {
                    return Err(Error::CoordMismatch { i, j, matrix: matrix[i][j], euclidean: e });
                }
            }
        }
    }
    Ok(FiniteMetricSpace { dist: matrix, coords, labels: None })
}

impl FiniteMetricSpace {
    /// Euclidean metric space on planar points.
    pub fn from_points(points: Vec<[f64; 2]>) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            if !p[0].is_finite() || !p[1].is_finite() {
                return Err(Error::Parse { line: i, message: format!("non-finite coordinate {p:?}") });
            }
        }
        let dist = points
            .iter()
            .map(|&p| points.iter().map(|&q| euclidean(p, q)).collect())
            .collect();
        Ok(FiniteMetricSpace { dist, coords: Some(points), labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::DimensionMismatch { what: "labels", got: labels.len(), expected: self.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    #[inline]
    pub fn d(&self, i: usize, j: usize) -> f64 {
        self.dist[i][j]
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.dist
    }

    pub fn coords(&self) -> Option<&[[f64; 2]]> {
        self.coords.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    fn check(&self, x: usize) -> Result<()> {
        if x >= self.len() {
            Err(Error::IndexOutOfRange { index: x, size: self.len() })
        } else {
            Ok(())
        }
    }

    /// Closed ball `{y : d(x, y) <= r}`, sorted.
    pub fn ball(&self, x: usize, r: f64) -> Result<Vec<usize>> {
        self.check(x)?;
        Ok((0..self.len()).filter(|&y| self.dist[x][y] <= r).collect())
    }

    /// Intersection of the closed balls centred at the vertices of `sigma`.
    pub fn common_ball(&self, sigma: &Simplex, r: f64) -> Result<Vec<usize>> {
        for &x in sigma.vertices() {
            self.check(x)?;
        }
        Ok((0..self.len())
            .filter(|&y| sigma.vertices().iter().all(|&x| self.dist[x][y] <= r))
            .collect())
    }

    /// The r-offset of `set`: union of closed r-balls centred in `set`.
    pub fn offset(&self, set: &[usize], r: f64) -> Result<Vec<usize>> {
        for &x in set {
            self.check(x)?;
        }
        Ok((0..self.len())
            .filter(|&y| set.iter().any(|&x| self.dist[x][y] <= r))
            .collect())
    }

    /// Restriction of the metric to `subset` (in the given order).
    pub fn restrict(&self, subset: &[usize]) -> Result<FiniteMetricSpace> {
        for &x in subset {
            self.check(x)?;
        }
        let dist = subset
            .iter()
            .map(|&i| subset.iter().map(|&j| self.dist[i][j]).collect())
            .collect();
        let coords = self.coords.as_ref().map(|c| subset.iter().map(|&i| c[i]).collect());
        let labels = self.labels.as_ref().map(|l| subset.iter().map(|&i| l[i].clone()).collect());
        Ok(FiniteMetricSpace { dist, coords, labels })
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> f64 {
        self.dist
            .iter()
            .flatten()
            .copied()
            .filter(|d| d.is_finite())
            .fold(0.0, f64::max)
    }

    /// Sorted distinct finite pairwise distances, including 0.
    pub fn distance_values(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.dist.iter().flatten().copied().filter(|d| d.is_finite()).collect();
        v.push(0.0);
        sort_dedup(&mut v);
        v
    }
}

pub(crate) fn sort_dedup(v: &mut Vec<f64>) {
    v.sort_by(|a, b| a.partial_cmp(b).expect("NaN in grid"));
    v.dedup();
}
