//! Common distance preserving embeddings, pushforwards and nearest neighbor projections.

use crate::error::{Error, Result};
use crate::interleaving::prohorov::prohorov_distance;
use crate::measure::DiscreteMeasure;
use crate::metric::{FiniteMetricSpace, TOLERANCE};

/// Two finite spaces placed in a common ambient space by index maps.
#[derive(Debug, Clone, PartialEq)]
pub struct CommonEmbedding {
    pub ambient: FiniteMetricSpace,
    pub iota0: Vec<usize>,
    pub iota1: Vec<usize>,
}

impl CommonEmbedding {
    /// Validates that `iota_k` preserves the distances of `x_k` within 1e-9.
    pub fn new(
        ambient: FiniteMetricSpace,
        x0: &FiniteMetricSpace,
        iota0: Vec<usize>,
        x1: &FiniteMetricSpace,
        iota1: Vec<usize>,
    ) -> Result<Self> {
        for (space, (x, iota)) in [(x0, &iota0), (x1, &iota1)].into_iter().enumerate() {
            if iota.len() != x.len() {
                return Err(Error::DimensionMismatch { what: "embedding", got: iota.len(), expected: x.len() });
            }
            if let Some(&bad) = iota.iter().find(|&&i| i >= ambient.len()) {
                return Err(Error::IndexOutOfRange { index: bad, size: ambient.len() });
            }
            for a in 0..x.len() {
                for b in a + 1..x.len() {
                    let (dx, dm) = (x.d(a, b), ambient.d(iota[a], iota[b]));
                    if !(dx == dm || (dx - dm).abs() <= TOLERANCE) {
                        return Err(Error::NotDistancePreserving { space, a, b });
                    }
                }
            }
        }
        Ok(CommonEmbedding { ambient, iota0, iota1 })
    }

    /// The subspace `X_k` with the metric induced from the ambient space.
    pub fn side(&self, k: usize) -> FiniteMetricSpace {
        let iota = if k == 0 { &self.iota0 } else { &self.iota1 };
        self.ambient.restrict(iota).expect("embedding indices are validated")
    }

    /// `pi_0 = p_0 . iota_1 : X_1 -> X_0` as X-indices.
    pub fn pi0(&self) -> Result<Vec<usize>> {
        compose_projection(&self.ambient, &self.iota0, &self.iota1)
    }

    /// `pi_1 = p_1 . iota_0 : X_0 -> X_1` as X-indices.
    pub fn pi1(&self) -> Result<Vec<usize>> {
        compose_projection(&self.ambient, &self.iota1, &self.iota0)
    }
}

/// `p . iota_src` where `p` projects onto `iota_dst(X_dst)`; ambient points
/// are converted back to the lowest X_dst index mapping onto them.
fn compose_projection(ambient: &FiniteMetricSpace, iota_dst: &[usize], iota_src: &[usize]) -> Result<Vec<usize>> {
    let p = nearest_neighbor_projection(ambient, iota_dst)?;
    Ok(iota_src
        .iter()
        .map(|&x| {
            let target = p[x];
            iota_dst.iter().position(|&z| z == target).expect("projection lands in the image")
        })
        .collect())
}

/// Pushforward of `mu` along `iota` into a space with `ambient_len` points.
pub fn pushforward(mu: &DiscreteMeasure, iota: &[usize], ambient_len: usize) -> Result<DiscreteMeasure> {
    mu.check_len(iota.len(), "embedding")?;
    let mut w = vec![0.0; ambient_len];
    for (x, &y) in iota.iter().enumerate() {
        if y >= ambient_len {
            return Err(Error::IndexOutOfRange { index: y, size: ambient_len });
        }
        w[y] += mu.weight(x);
    }
    DiscreteMeasure::new(w)
}

/// Maps every point to a closest member of `target`, the lowest index on ties.
pub fn nearest_neighbor_projection(space: &FiniteMetricSpace, target: &[usize]) -> Result<Vec<usize>> {
    let mut sorted = target.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() {
        return Err(Error::EmptyTarget);
    }
    if let Some(&bad) = sorted.iter().find(|&&t| t >= space.len()) {
        return Err(Error::IndexOutOfRange { index: bad, size: space.len() });
    }
    Ok((0..space.len())
        .map(|x| {
            let mut best = sorted[0];
            for &t in &sorted[1..] {
                if space.d(x, t) < space.d(x, best) {
                    best = t;
                }
            }
            best
        })
        .collect())
}

/// Result of the exhaustive check of
/// `d(iota_0 p_0 iota_1 x, iota_0 y) <= 2 d(iota_1 x, iota_0 y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionReport {
    pub checked: usize,
    pub violations: Vec<(usize, usize)>,
    /// Largest `d(iota_0 p_0 iota_1 x, iota_0 y) / d(iota_1 x, iota_0 y)`; at most 2 when the inequality holds.
    pub worst_ratio: f64,
}

/// Checks the projection inequality for every `x` in `X_1`, `y` in `X_0`,
/// with `p0` a projection of the ambient space onto `iota_0(X_0)`.
pub fn check_projection_inequality(embedding: &CommonEmbedding, p0: &[usize]) -> ProjectionReport {
    let d = |a: usize, b: usize| embedding.ambient.d(a, b);
    let mut report = ProjectionReport { checked: 0, violations: Vec::new(), worst_ratio: 0.0 };
    for (x, &ix) in embedding.iota1.iter().enumerate() {
        let proj = p0[ix];
        for (y, &iy) in embedding.iota0.iter().enumerate() {
            let (lhs, rhs) = (d(proj, iy), 2.0 * d(ix, iy));
            report.checked += 1;
            if lhs > rhs + TOLERANCE {
                report.violations.push((x, y));
            }
            if rhs > 0.0 {
                report.worst_ratio = report.worst_ratio.max(2.0 * lhs / rhs);
            }
        }
    }
    report
}

/// Prohorov distance of the two pushforwards, an upper bound for the
/// Gromov-Prohorov distance.
pub fn gp_upper_bound(mu0: &DiscreteMeasure, mu1: &DiscreteMeasure, embedding: &CommonEmbedding) -> Result<f64> {
    let n = embedding.ambient.len();
    let p0 = pushforward(mu0, &embedding.iota0, n)?;
    let p1 = pushforward(mu1, &embedding.iota1, n)?;
    prohorov_distance(&embedding.ambient, &p0, &p1)
}
