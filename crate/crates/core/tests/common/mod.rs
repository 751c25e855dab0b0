//! Independent oracles: brute-force constructions that share no code with the
//! library beyond its data types.
#![allow(dead_code)]

use std::collections::BTreeSet;

use dualcech::{DiscreteMeasure, FiniteMetricSpace, Simplex, SimplicialComplex};

pub const GEOM_TOL: f64 = 1e-9;

pub fn sx(v: &[usize]) -> Simplex {
    Simplex::new(v.to_vec()).unwrap()
}

/// All nonempty subsets of `universe` with at most `max_size` elements, sorted.
pub fn subsets(universe: &[usize], max_size: usize) -> Vec<Vec<usize>> {
    let n = universe.len();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        if mask.count_ones() as usize <= max_size {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).map(|i| universe[i]).collect());
        }
    }
    out
}

fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt()
}

/// Smallest enclosing circle by exhaustive search over diametral circles of
/// pairs and circumcircles of triples.
pub fn meb_radius(pts: &[[f64; 2]]) -> f64 {
    if pts.len() <= 1 {
        return 0.0;
    }
    let covers = |c: [f64; 2], r: f64| pts.iter().all(|&p| dist(c, p) <= r + GEOM_TOL);
    let mut best = f64::INFINITY;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let c = [(pts[i][0] + pts[j][0]) / 2.0, (pts[i][1] + pts[j][1]) / 2.0];
            let r = dist(pts[i], pts[j]) / 2.0;
            if r < best && covers(c, r) {
                best = r;
            }
            for k in j + 1..pts.len() {
                let (a, b, c3) = (pts[i], pts[j], pts[k]);
                let d = 2.0 * (a[0] * (b[1] - c3[1]) + b[0] * (c3[1] - a[1]) + c3[0] * (a[1] - b[1]));
                if d.abs() < 1e-15 {
                    continue;
                }
                let sq = |p: [f64; 2]| p[0] * p[0] + p[1] * p[1];
                let ux = (sq(a) * (b[1] - c3[1]) + sq(b) * (c3[1] - a[1]) + sq(c3) * (a[1] - b[1])) / d;
                let uy = (sq(a) * (c3[0] - b[0]) + sq(b) * (a[0] - c3[0]) + sq(c3) * (b[0] - a[0])) / d;
                let r = dist([ux, uy], a);
                if r < best && covers([ux, uy], r) {
                    best = r;
                }
            }
        }
    }
    best
}

/// Ambient Čech complex of planar points: simplices whose smallest enclosing
/// circle has radius at most `r`.
pub fn cech_complex(pts: &[[f64; 2]], vertices: &[usize], r: f64, dim_cap: usize) -> BTreeSet<Vec<usize>> {
    subsets(vertices, dim_cap + 1)
        .into_iter()
        .filter(|s| meb_radius(&s.iter().map(|&i| pts[i]).collect::<Vec<_>>()) <= r + GEOM_TOL)
        .collect()
}

/// Dual degree Čech complex by enumeration: `tau ⊆ support(mu)` is present iff
/// some witness `x` has `tau ⊆ B(x, r)` and `mu(B(x, r)) >= m`.
pub fn brute_dc(
    space: &FiniteMetricSpace,
    mu: &DiscreteMeasure,
    witnesses: &[usize],
    m: f64,
    r: f64,
    dim_cap: usize,
) -> BTreeSet<Vec<usize>> {
    let support: Vec<usize> = (0..space.len()).filter(|&i| mu.weights()[i] > 0.0).collect();
    let heavy: Vec<usize> = witnesses
        .iter()
        .copied()
        .filter(|&x| (0..space.len()).filter(|&y| space.d(x, y) <= r).map(|y| mu.weights()[y]).sum::<f64>() >= m)
        .collect();
    subsets(&support, dim_cap + 1)
        .into_iter()
        .filter(|tau| heavy.iter().any(|&x| tau.iter().all(|&y| space.d(x, y) <= r)))
        .collect()
}

pub fn as_sets(k: &SimplicialComplex) -> BTreeSet<Vec<usize>> {
    k.simplices().iter().map(|s| s.vertices().to_vec()).collect()
}

/// Rank over GF(2) of a dense 0/1 matrix by Gaussian elimination on rows.
pub fn gf2_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c]) else { continue };
        rows.swap(rank, p);
        for i in 0..rows.len() {
            if i != rank && rows[i][c] {
                for j in c..cols {
                    let v = rows[rank][j];
                    rows[i][j] ^= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers from dense boundary matrices: `b_k = n_k - rank d_k - rank d_{k+1}`.
pub fn dense_betti(simplices: &BTreeSet<Vec<usize>>, max_dim: usize) -> Vec<usize> {
    let by_dim = |d: usize| simplices.iter().filter(|s| s.len() == d + 1).cloned().collect::<Vec<_>>();
    let boundary_rank = |d: usize| -> usize {
        if d == 0 {
            return 0;
        }
        let (rows, cols) = (by_dim(d - 1), by_dim(d));
        if rows.is_empty() || cols.is_empty() {
            return 0;
        }
        let matrix = rows
            .iter()
            .map(|face| cols.iter().map(|s| face.iter().all(|v| s.contains(v))).collect())
            .collect();
        gf2_rank(matrix)
    };
    (0..=max_dim).map(|d| by_dim(d).len() - boundary_rank(d) - boundary_rank(d + 1)).collect()
}

/// Prohorov distance by searching the sorted candidate values for the first
/// one passing both inequalities on every subset of the whole space.
pub fn brute_prohorov(space: &FiniteMetricSpace, mu0: &DiscreteMeasure, mu1: &DiscreteMeasure) -> f64 {
    let n = space.len();
    let mass = |mu: &DiscreteMeasure, mask: u32| (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| mu.weights()[i]).sum::<f64>();
    let offset = |mask: u32, t: f64| -> u32 {
        (0..n).filter(|&y| (0..n).any(|x| mask >> x & 1 == 1 && space.d(x, y) <= t)).fold(0, |acc, y| acc | 1 << y)
    };
    let mut dists: Vec<f64> = space.matrix().iter().flatten().copied().filter(|d| d.is_finite()).collect();
    dists.push(0.0);
    let mut candidates = dists.clone();
    for mask in 1u32..(1 << n) {
        for &t in &dists {
            let o = offset(mask, t);
            candidates.push(mass(mu0, mask) - mass(mu1, o));
            candidates.push(mass(mu1, mask) - mass(mu0, o));
        }
    }
    candidates.retain(|&c| c >= 0.0);
    candidates.sort_by(|a, b| a.partial_cmp(b).unwrap());
    candidates.dedup();
    let feasible = |eps: f64| {
        (1u32..(1 << n)).all(|mask| {
            let o = offset(mask, eps);
            mass(mu0, mask) <= mass(mu1, o) + eps + 1e-12 && mass(mu1, mask) <= mass(mu0, o) + eps + 1e-12
        })
    };
    // feasibility is monotone in eps
    let first = candidates.partition_point(|&e| !feasible(e));
    candidates.get(first).copied().unwrap_or(f64::INFINITY)
}

/// Bottleneck distance by trying every bijection between the bars of one
/// barcode plus diagonal copies of the other and vice versa. Small inputs only.
pub fn exhaustive_bottleneck(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    #[derive(Clone, Copy)]
    enum Pt {
        Bar(f64, f64),
        Diag(f64, f64),
    }
    let left: Vec<Pt> = a.iter().map(|&(x, y)| Pt::Bar(x, y)).chain(b.iter().map(|&(x, y)| Pt::Diag(x, y))).collect();
    let right: Vec<Pt> = b.iter().map(|&(x, y)| Pt::Bar(x, y)).chain(a.iter().map(|&(x, y)| Pt::Diag(x, y))).collect();
    let half = |x: f64, y: f64| if y.is_infinite() { f64::INFINITY } else { (y - x) / 2.0 };
    let cost = |p: Pt, q: Pt| match (p, q) {
        (Pt::Bar(b1, d1), Pt::Bar(b2, d2)) => {
            let dd = if d1.is_infinite() && d2.is_infinite() {
                0.0
            } else if d1.is_infinite() || d2.is_infinite() {
                f64::INFINITY
            } else {
                (d1 - d2).abs()
            };
            (b1 - b2).abs().max(dd)
        }
        (Pt::Bar(x, y), Pt::Diag(..)) | (Pt::Diag(..), Pt::Bar(x, y)) => half(x, y),
        (Pt::Diag(..), Pt::Diag(..)) => 0.0,
    };
    fn search(i: usize, used: &mut Vec<bool>, cur: f64, best: &mut f64, c: &dyn Fn(usize, usize) -> f64, n: usize) {
        if cur >= *best {
            return;
        }
        if i == n {
            *best = cur;
            return;
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                search(i + 1, used, cur.max(c(i, j)), best, c, n);
                used[j] = false;
            }
        }
    }
    let n = left.len();
    let c = |i: usize, j: usize| cost(left[i], right[j]);
    let mut best = f64::INFINITY;
    search(0, &mut vec![false; n], 0.0, &mut best, &c, n);
    if n == 0 {
        0.0
    } else {
        best
    }
}
