//! Seeded random instances for the verification suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bifiltration::dowker::DowkerDissimilarity;
use crate::measure::DiscreteMeasure;
use crate::metric::{validate_metric, FiniteMetricSpace};

/// Independent generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Shortest-path metric of a random connected graph with integer edge
/// weights in `1..=max_weight`, so all distances are exact small integers.
pub fn graph_metric(rng: &mut impl Rng, n: usize, max_weight: u32) -> FiniteMetricSpace {
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0.0;
    }
    let edge = |d: &mut Vec<Vec<f64>>, i: usize, j: usize, w: f64| {
        d[i][j] = d[i][j].min(w);
        d[j][i] = d[i][j];
    };
    for i in 1..n {
        let j = rng.random_range(0..i);
        edge(&mut d, i, j, rng.random_range(1..=max_weight) as f64);
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(0.3) {
                edge(&mut d, i, j, rng.random_range(1..=max_weight) as f64);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    validate_metric(d, None).expect("shortest-path distances form a metric")
}

/// Uniform points in the unit square.
pub fn planar_points(rng: &mut impl Rng, n: usize) -> Vec<[f64; 2]> {
    (0..n).map(|_| [rng.random::<f64>(), rng.random::<f64>()]).collect()
}

pub fn planar_space(rng: &mut impl Rng, n: usize) -> FiniteMetricSpace {
    FiniteMetricSpace::from_points(planar_points(rng, n)).expect("finite coordinates")
}

/// Integer weights in `1..=3`, with `zeros` randomly chosen points set to 0.
/// At least one point keeps positive weight.
pub fn integer_measure(rng: &mut impl Rng, n: usize, zeros: usize) -> DiscreteMeasure {
    let mut w: Vec<f64> = (0..n).map(|_| rng.random_range(1..=3) as f64).collect();
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    for &i in order.iter().take(zeros.min(n - 1)) {
        w[i] = 0.0;
    }
    DiscreteMeasure::new(w).expect("at least one positive weight")
}

/// Random Dowker dissimilarity with integer values in `0..=max_value`.
pub fn dissimilarity(rng: &mut impl Rng, nx: usize, ny: usize, max_value: u32) -> DowkerDissimilarity {
    let values = (0..nx).map(|_| (0..ny).map(|_| rng.random_range(0..=max_value) as f64).collect()).collect();
    DowkerDissimilarity::new(values).expect("nonnegative values")
}

/// A sorted random subset of `0..n` of the given size.
pub fn subset(rng: &mut impl Rng, n: usize, size: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    let mut s: Vec<usize> = order.into_iter().take(size).collect();
    s.sort_unstable();
    s
}
