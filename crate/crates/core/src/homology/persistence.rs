//! Betti numbers, Betti tables, barcodes of one-parameter slices.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homology::reduction::reduce;
use crate::shift::MonotonePath;
use crate::simplex::{Simplex, SimplicialComplex};
use crate::staircase::BifilteredComplex;

/// Betti numbers in degrees `0..=max_dim`.
pub type BettiVector = Vec<usize>;

/// A bar `[birth, death)` in homological degree `dim`; `death` is infinite
/// for essential classes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub dim: usize,
    pub birth: f64,
    pub death: f64,
}

impl Interval {
    pub fn is_essential(&self) -> bool {
        self.death == f64::INFINITY
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Barcode {
    pub intervals: Vec<Interval>,
}

impl Barcode {
    /// Bars of one degree as `(birth, death)`.
    pub fn in_dim(&self, dim: usize) -> Vec<(f64, f64)> {
        self.intervals.iter().filter(|i| i.dim == dim).map(|i| (i.birth, i.death)).collect()
    }

    /// Number of bars of degree `dim` alive at `t`.
    pub fn rank_at(&self, dim: usize, t: f64) -> usize {
        self.intervals.iter().filter(|i| i.dim == dim && i.birth <= t && t < i.death).count()
    }
}

/// Barcode of a filtration given as `(simplex, entry value)`. Every face
/// must be listed with a value no larger than its cofaces. Bars of length 0
/// are dropped. Degrees above `max_dim` are ignored.
pub fn filtration_barcode(mut entries: Vec<(Simplex, f64)>, max_dim: usize) -> Barcode {
    entries.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.dim().cmp(&b.0.dim())).then(a.0.cmp(&b.0)));
    let order: Vec<Simplex> = entries.iter().map(|e| e.0.clone()).collect();
    let red = reduce(&order);
    let mut intervals = Vec::new();
    for (b, d) in red.pairs {
        let dim = order[b].dim();
        if dim <= max_dim && entries[b].1 < entries[d].1 {
            intervals.push(Interval { dim, birth: entries[b].1, death: entries[d].1 });
        }
    }
    for e in red.essential {
        let dim = order[e].dim();
        if dim <= max_dim {
            intervals.push(Interval { dim, birth: entries[e].1, death: f64::INFINITY });
        }
    }
    intervals.sort_by(|a, b| a.dim.cmp(&b.dim).then(a.birth.total_cmp(&b.birth)).then(a.death.total_cmp(&b.death)));
    Barcode { intervals }
}

/// Betti numbers of a complex in degrees `0..=max_dim`. Exact when the
/// complex contains all its simplices up to dimension `max_dim + 1`.
pub fn betti(k: &SimplicialComplex, max_dim: usize) -> BettiVector {
    let bars = filtration_barcode(k.simplices().iter().map(|s| (s.clone(), 0.0)).collect(), max_dim);
    let mut out = vec![0; max_dim + 1];
    for i in bars.intervals {
        out[i.dim] += 1;
    }
    out
}

/// Betti numbers of `K_{m,r}` on a grid; `values[i][j]` is at `(ms[i], rs[j])`.
#[derive(Debug, Clone, PartialEq)]
pub struct BettiTable {
    pub ms: Vec<f64>,
    pub rs: Vec<f64>,
    pub values: Vec<Vec<BettiVector>>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> &BettiVector {
        &self.values[i][j]
    }
}

/// Betti table on the grid `ms x rs` (`rs` increasing), computed by one
/// persistence computation along `r` per row.
pub fn betti_table(k: &BifilteredComplex, ms: &[f64], rs: &[f64], max_dim: usize) -> Result<BettiTable> {
    if rs.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::NonMonotonePath(0));
    }
    let values = ms
        .par_iter()
        .map(|&m| {
            let entries: Vec<(Simplex, f64)> = k
                .entries()
                .iter()
                .filter_map(|(s, st)| {
                    let birth = st.birth_radius(m)?;
                    let step = rs.partition_point(|&r| r < birth);
                    (step < rs.len()).then(|| (s.clone(), step as f64))
                })
                .collect();
            let bars = filtration_barcode(entries, max_dim);
            (0..rs.len())
                .map(|j| (0..=max_dim).map(|d| bars.rank_at(d, j as f64)).collect())
                .collect()
        })
        .collect();
    Ok(BettiTable { ms: ms.to_vec(), rs: rs.to_vec(), values })
}

/// Barcode of `t -> K_{m(t), r(t)}` along a monotone path; a simplex enters
/// at the first path point where it is present. Exact when the path visits
/// every parameter where the restricted filtration changes.
pub fn slice_persistence(k: &BifilteredComplex, path: &MonotonePath, max_dim: usize) -> Barcode {
    let pts = path.points();
    let entries = k
        .entries()
        .iter()
        .filter_map(|(s, st)| {
            let idx = pts.partition_point(|p| !st.present(p.m, p.r));
            (idx < pts.len()).then(|| (s.clone(), pts[idx].t))
        })
        .collect();
    filtration_barcode(entries, max_dim)
}

/// Whether `small ⊆ big` induces isomorphisms on homology in degrees
/// `0..=max_dim`.
pub fn inclusion_induces_iso(small: &SimplicialComplex, big: &SimplicialComplex, max_dim: usize) -> Result<bool> {
    if let Some(s) = small.first_missing_in(big) {
        return Err(Error::NotAnInclusion(s.vertices().to_vec()));
    }
    let entries = big
        .simplices()
        .iter()
        .map(|s| (s.clone(), if small.contains(s) { 0.0 } else { 1.0 }))
        .collect();
    let bars = filtration_barcode(entries, max_dim);
    Ok(bars.intervals.iter().all(|i| i.birth == 0.0 && i.is_essential()))
}
