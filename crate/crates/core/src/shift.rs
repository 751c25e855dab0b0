//! Forward shift maps of the parameter poset and monotone paths through it.
//!
//! The parameter poset is `R^op x [0, inf]`: `(m, r) <= (m', r')` iff
//! `m >= m'` and `r <= r'`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::staircase::BifilteredComplex;

type ShiftFn = Arc<dyn Fn(f64, f64) -> (f64, f64) + Send + Sync>;

/// An order preserving self-map `alpha` of the parameter poset with
/// `alpha(m, r) >= (m, r)`.
#[derive(Clone)]
pub enum ForwardShift {
    /// `(m, r) -> (m - eps, r + eps)`
    Additive(f64),
    /// `(m, r) -> (m - eps, 2 (r + eps))`
    Doubling(f64),
    /// A user-supplied map; see [`ForwardShift::check_on`].
    Custom(ShiftFn),
}

impl fmt::Debug for ForwardShift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForwardShift::Additive(e) => write!(f, "Additive({e})"),
            ForwardShift::Doubling(e) => write!(f, "Doubling({e})"),
            ForwardShift::Custom(_) => write!(f, "Custom(..)"),
        }
    }
}

impl ForwardShift {
    pub fn additive(eps: f64) -> Result<Self> {
        check_eps(eps)?;
        Ok(ForwardShift::Additive(eps))
    }

    pub fn doubling(eps: f64) -> Result<Self> {
        check_eps(eps)?;
        Ok(ForwardShift::Doubling(eps))
    }

    pub fn custom(f: impl Fn(f64, f64) -> (f64, f64) + Send + Sync + 'static) -> Self {
        ForwardShift::Custom(Arc::new(f))
    }

    pub fn apply(&self, m: f64, r: f64) -> (f64, f64) {
        match self {
            ForwardShift::Additive(e) => (m - e, r + e),
            ForwardShift::Doubling(e) => (m - e, 2.0 * (r + e)),
            ForwardShift::Custom(f) => f(m, r),
        }
    }

    /// Checks the forward and order-preserving conditions on a finite grid.
    pub fn check_on(&self, ms: &[f64], rs: &[f64]) -> Result<()> {
        let mut pts = Vec::new();
        for &m in ms {
            for &r in rs {
                let (a0, a1) = self.apply(m, r);
                if !(a0 <= m && a1 >= r) {
                    return Err(Error::InvalidShift(format!("moves ({m}, {r}) backward to ({a0}, {a1})")));
                }
                pts.push((m, r, a0, a1));
            }
        }
        for &(m, r, a0, a1) in &pts {
            for &(m2, r2, b0, b1) in &pts {
                if m >= m2 && r <= r2 && !(a0 >= b0 && a1 <= b1) {
                    return Err(Error::InvalidShift(format!("not order preserving between ({m}, {r}) and ({m2}, {r2})")));
                }
            }
        }
        Ok(())
    }
}

fn check_eps(eps: f64) -> Result<()> {
    if eps.is_nan() || eps < 0.0 {
        Err(Error::InvalidShift(format!("needs a nonnegative epsilon, got {eps}")))
    } else {
        Ok(())
    }
}

/// A point on a path: slice parameter `t` and bifiltration parameter `(m, r)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathPoint {
    pub t: f64,
    pub m: f64,
    pub r: f64,
}

/// A finite path with `t` increasing, `m` nonincreasing and `r` nondecreasing.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotonePath {
    points: Vec<PathPoint>,
}

impl MonotonePath {
    pub fn new(points: Vec<PathPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::NonMonotonePath(0));
        }
        for (i, w) in points.windows(2).enumerate() {
            let (a, b) = (w[0], w[1]);
            if !(a.t < b.t && b.m <= a.m && b.r >= a.r) {
                return Err(Error::NonMonotonePath(i + 1));
            }
        }
        if points.iter().any(|p| p.t.is_nan() || p.m.is_nan() || p.r.is_nan() || p.r < 0.0) {
            return Err(Error::NonMonotonePath(0));
        }
        Ok(MonotonePath { points })
    }

    pub fn points(&self) -> &[PathPoint] {
        &self.points
    }

    /// Fixed `m`, radius as slice parameter, sampled at `radii`.
    pub fn horizontal(m: f64, radii: &[f64]) -> Result<Self> {
        Self::new(radii.iter().map(|&r| PathPoint { t: r, m, r }).collect())
    }

    /// Fixed `m`, sampled at 0 and every critical radius of the given complexes,
    /// so the induced filtration is exact.
    pub fn horizontal_exact(m: f64, complexes: &[&BifilteredComplex]) -> Result<Self> {
        let mut radii = vec![0.0];
        for k in complexes {
            radii.extend(k.critical_grid().0);
        }
        crate::metric::sort_dedup(&mut radii);
        Self::horizontal(m, &radii)
    }

    /// The diagonal `t -> (m0 - t, r0 + t)` sampled at the given `t >= 0`.
    pub fn diagonal(m0: f64, r0: f64, ts: &[f64]) -> Result<Self> {
        Self::new(ts.iter().map(|&t| PathPoint { t, m: m0 - t, r: r0 + t }).collect())
    }

    /// Diagonal through `(m0, r0)` sampled at `t = 0` and every `t` where some
    /// staircase corner of the given complexes is crossed.
    pub fn diagonal_exact(m0: f64, r0: f64, complexes: &[&BifilteredComplex]) -> Result<Self> {
        let mut ts = vec![0.0];
        for k in complexes {
            for st in k.entries().values() {
                for &(r, m) in st.steps() {
                    let mut t = (r - r0).max(m0 - m).max(0.0);
                    if t.is_finite() {
                        // r0 + t may round below the corner
                        while r0 + t < r || m0 - t > m {
                            t = t.next_up();
                        }
                        ts.push(t);
                    }
                }
            }
        }
        crate::metric::sort_dedup(&mut ts);
        Self::diagonal(m0, r0, &ts)
    }
}
