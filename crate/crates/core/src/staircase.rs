//! Staircase encoding of bifiltered simplicial complexes.
//!
//! A simplex of a bifiltration indexed by `(m, r)` (mass threshold `m`,
//! radius `r`) is present at `(m, r)` iff its staircase value at `r` is at
//! least `m`. The value is a nondecreasing right-continuous step function of
//! `r`; before its first step the simplex is absent at every `m`, which is
//! different from being present only for `m <= 0`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::metric::sort_dedup;
use crate::simplex::{Simplex, SimplicialComplex};

/// Simplices of dimension above this are dropped unless a builder is told otherwise.
pub const DEFAULT_DIM_CAP: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct Staircase {
    steps: Vec<(f64, f64)>,
}

impl Staircase {
    /// Steps `(r_k, m_k)` with both coordinates strictly increasing.
    pub fn new(steps: Vec<(f64, f64)>) -> Result<Self> {
        if steps.is_empty() || steps.iter().any(|&(r, m)| r.is_nan() || m.is_nan() || r < 0.0) {
            return Err(Error::InvalidStaircase);
        }
        if steps.windows(2).any(|w| !(w[0].0 < w[1].0 && w[0].1 < w[1].1)) {
            return Err(Error::InvalidStaircase);
        }
        Ok(Staircase { steps })
    }

    /// Present for every `r >= 0` with constant value `m`.
    pub fn constant(m: f64) -> Self {
        Staircase { steps: vec![(0.0, m)] }
    }

    /// Compresses samples `(r, value)` taken at increasing radii. Values must
    /// be nondecreasing once present. Returns `None` if never present.
    pub fn from_samples(samples: impl IntoIterator<Item = (f64, Option<f64>)>) -> Option<Self> {
        let mut steps: Vec<(f64, f64)> = Vec::new();
        for (r, v) in samples {
            match (v, steps.last()) {
                (Some(m), None) => steps.push((r, m)),
                (Some(m), Some(&(lr, lm))) => {
                    debug_assert!(r > lr, "samples must be taken at increasing radii");
                    debug_assert!(m >= lm, "staircase samples must be nondecreasing");
                    if m > lm {
                        steps.push((r, m));
                    }
                }
                (None, last) => debug_assert!(last.is_none(), "simplex disappeared as r grew"),
            }
        }
        if steps.is_empty() {
            None
        } else {
            Some(Staircase { steps })
        }
    }

    pub fn steps(&self) -> &[(f64, f64)] {
        &self.steps
    }

    /// First radius at which the simplex exists.
    pub fn start_r(&self) -> f64 {
        self.steps[0].0
    }

    /// Largest mass threshold at which the simplex is ever present.
    pub fn max_value(&self) -> f64 {
        self.steps[self.steps.len() - 1].1
    }

    /// Value at `r`, or `None` when absent.
    pub fn value(&self, r: f64) -> Option<f64> {
        let idx = self.steps.partition_point(|&(rk, _)| rk <= r);
        if idx == 0 {
            None
        } else {
            Some(self.steps[idx - 1].1)
        }
    }

    pub fn present(&self, m: f64, r: f64) -> bool {
        self.value(r).is_some_and(|v| v >= m)
    }

    /// Smallest radius at which the simplex is present at threshold `m`.
    pub fn birth_radius(&self, m: f64) -> Option<f64> {
        self.steps.iter().find(|&&(_, mk)| mk >= m).map(|&(r, _)| r)
    }

    fn combine(a: &Staircase, b: &Staircase, f: impl Fn(Option<f64>, Option<f64>) -> Option<f64>) -> Option<Staircase> {
        let mut radii: Vec<f64> = a.steps.iter().chain(&b.steps).map(|s| s.0).collect();
        sort_dedup(&mut radii);
        Staircase::from_samples(radii.into_iter().map(|r| (r, f(a.value(r), b.value(r)))))
    }

    /// Pointwise maximum; absent only where both are absent.
    pub fn max(&self, other: &Staircase) -> Staircase {
        Self::combine(self, other, |x, y| match (x, y) {
            (Some(p), Some(q)) => Some(p.max(q)),
            (p, q) => p.or(q),
        })
        .expect("max of present staircases is present")
    }

    /// Pointwise minimum; absent wherever either is absent.
    pub fn min(&self, other: &Staircase) -> Option<Staircase> {
        Self::combine(self, other, |x, y| Some(x?.min(y?)))
    }

    /// Staircase of `r -> self.value(factor * r)`.
    pub fn rescale_radius(&self, factor: f64) -> Staircase {
        Staircase { steps: self.steps.iter().map(|&(r, m)| (r / factor, m)).collect() }
    }

    /// True if `self.value(r) >= other.value(r)` for every `r`, with absence as minus infinity.
    pub fn dominates(&self, other: &Staircase) -> bool {
        other.steps.iter().all(|&(r, m)| self.value(r).is_some_and(|v| v >= m))
    }
}

/// A bifiltered simplicial complex on a vertex universe, stored as one
/// staircase per simplex that is ever present.
#[derive(Debug, Clone, PartialEq)]
pub struct BifilteredComplex {
    universe: Vec<usize>,
    entries: BTreeMap<Simplex, Staircase>,
    dim_cap: usize,
}

impl BifilteredComplex {
    /// Builds and validates: vertices in the universe, dimension within the
    /// cap, and each face dominating its cofaces pointwise.
    pub fn new(universe: Vec<usize>, entries: BTreeMap<Simplex, Staircase>, dim_cap: usize) -> Result<Self> {
        let k = Self::new_unchecked(universe, entries, dim_cap);
        k.validate()?;
        Ok(k)
    }

    pub(crate) fn new_unchecked(mut universe: Vec<usize>, entries: BTreeMap<Simplex, Staircase>, dim_cap: usize) -> Self {
        universe.sort_unstable();
        universe.dedup();
        BifilteredComplex { universe, entries, dim_cap }
    }

    pub fn empty(universe: Vec<usize>, dim_cap: usize) -> Self {
        Self::new_unchecked(universe, BTreeMap::new(), dim_cap)
    }

    pub fn validate(&self) -> Result<()> {
        for (s, st) in &self.entries {
            if s.dim() > self.dim_cap {
                return Err(Error::UnsupportedDimension { degree: s.dim(), dim_cap: self.dim_cap });
            }
            for &v in s.vertices() {
                if self.universe.binary_search(&v).is_err() {
                    return Err(Error::IndexOutOfRange { index: v, size: self.universe.len() });
                }
            }
            for f in s.facets() {
                match self.entries.get(&f) {
                    Some(fs) if fs.dominates(st) => {}
                    _ => {
                        return Err(Error::NotOrderPreserving { simplex: s.vertices().to_vec(), r: st.start_r() })
                    }
                }
            }
        }
        Ok(())
    }

    pub fn universe(&self) -> &[usize] {
        &self.universe
    }

    pub fn dim_cap(&self) -> usize {
        self.dim_cap
    }

    pub fn entries(&self) -> &BTreeMap<Simplex, Staircase> {
        &self.entries
    }

    pub fn staircase(&self, s: &Simplex) -> Option<&Staircase> {
        self.entries.get(s)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn present(&self, s: &Simplex, m: f64, r: f64) -> bool {
        self.entries.get(s).is_some_and(|st| st.present(m, r))
    }

    /// The complex `K_{m,r}`.
    pub fn complex_at(&self, m: f64, r: f64) -> SimplicialComplex {
        SimplicialComplex::new_unchecked(
            self.universe.clone(),
            self.entries.iter().filter(|(_, st)| st.present(m, r)).map(|(s, _)| s.clone()),
        )
    }

    /// Sorted distinct step radii and sorted distinct step masses. The
    /// complex is constant on every cell between consecutive values.
    pub fn critical_grid(&self) -> (Vec<f64>, Vec<f64>) {
        let mut rs = Vec::new();
        let mut ms = Vec::new();
        for st in self.entries.values() {
            for &(r, m) in st.steps() {
                rs.push(r);
                ms.push(m);
            }
        }
        sort_dedup(&mut rs);
        sort_dedup(&mut ms);
        (rs, ms)
    }

    /// Critical grid plus midpoints of consecutive finite values.
    pub fn default_grid(&self) -> (Vec<f64>, Vec<f64>) {
        let (r, m) = self.critical_grid();
        (with_midpoints(&r), with_midpoints(&m))
    }

    /// Same entries with the radius axis rescaled: `K'_{m,r} = K_{m, factor r}`.
    pub fn rescale_radius(&self, factor: f64) -> BifilteredComplex {
        let entries = self.entries.iter().map(|(s, st)| (s.clone(), st.rescale_radius(factor))).collect();
        Self::new_unchecked(self.universe.clone(), entries, self.dim_cap)
    }
}

/// Sorted values together with the midpoints of consecutive finite pairs.
pub fn with_midpoints(values: &[f64]) -> Vec<f64> {
    let mut out = values.to_vec();
    for w in values.windows(2) {
        if w[0].is_finite() && w[1].is_finite() {
            out.push(0.5 * (w[0] + w[1]));
        }
    }
    sort_dedup(&mut out);
    out
}
