//! Exact Prohorov distance between finite measures on a common finite space.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::measure::DiscreteMeasure;
use crate::metric::{sort_dedup, FiniteMetricSpace};

/// Largest combined support accepted by [`prohorov_distance`].
pub const SUPPORT_CAP: usize = 15;
/// Largest support accepted by [`prohorov_check`].
pub const CHECK_SUPPORT_CAP: usize = 22;

fn check_inputs(space: &FiniteMetricSpace, mu0: &DiscreteMeasure, mu1: &DiscreteMeasure, cap: usize) -> Result<()> {
    if mu0.len() != mu1.len() {
        return Err(Error::DifferentSpaces(mu0.len(), mu1.len()));
    }
    if mu0.len() != space.len() {
        return Err(Error::DifferentSpaces(mu0.len(), space.len()));
    }
    let size = (0..space.len()).filter(|&i| mu0.weight(i) > 0.0 || mu1.weight(i) > 0.0).count();
    if size > cap {
        return Err(Error::SupportTooLarge { size, cap });
    }
    Ok(())
}

/// A subset of the support of one measure, as indices into the space.
fn members(support: &[usize], mask: u64) -> Vec<usize> {
    (0..support.len()).filter(|&k| mask >> k & 1 == 1).map(|k| support[k]).collect()
}

/// `d(y, B)` for every point `y`.
fn distances_to(space: &FiniteMetricSpace, set: &[usize]) -> Vec<f64> {
    (0..space.len())
        .map(|y| set.iter().map(|&b| space.d(b, y)).fold(f64::INFINITY, f64::min))
        .collect()
}

/// Smallest `eps` with `mu_i(B) <= mu_j(B^eps) + eps` for this `B`.
fn per_set_eps(space: &FiniteMetricSpace, mi: &DiscreteMeasure, mj: &DiscreteMeasure, set: &[usize]) -> f64 {
    let a = mi.mass(set);
    let dist = distances_to(space, set);
    let mut ts: Vec<f64> = dist.iter().copied().filter(|t| t.is_finite()).collect();
    ts.push(0.0);
    sort_dedup(&mut ts);
    ts.into_iter()
        .map(|t| {
            let c = mj.mass_where(|y| dist[y] <= t);
            t.max(a - c)
        })
        .fold(f64::INFINITY, f64::min)
}

/// Largest `(value, mask)` with ties broken by the smaller mask.
fn better(x: (f64, u64), y: (f64, u64)) -> (f64, u64) {
    if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) {
        y
    } else {
        x
    }
}

/// Exact Prohorov distance: the least `eps` such that
/// `mu_i(B) <= mu_j(B^eps) + eps` for all `B` and both orders of `(i, j)`,
/// where `B^eps` is the closed `eps`-offset. Measures need not be normalized.
pub fn prohorov_distance(space: &FiniteMetricSpace, mu0: &DiscreteMeasure, mu1: &DiscreteMeasure) -> Result<f64> {
    check_inputs(space, mu0, mu1, SUPPORT_CAP)?;
    let mut best: f64 = 0.0;
    for (mi, mj) in [(mu0, mu1), (mu1, mu0)] {
        let support = mi.support();
        let worst = (1u64..1 << support.len())
            .into_par_iter()
            .map(|mask| (per_set_eps(space, mi, mj, &members(&support, mask)), mask))
            .reduce(|| (0.0, 0), better);
        best = best.max(worst.0);
    }
    Ok(best)
}

/// Outcome of [`prohorov_check`]: the smallest slack `eps - (mu_i(B) - mu_j(B^eps))`
/// and where it occurs.
#[derive(Debug, Clone, PartialEq)]
pub struct ProhorovCheck {
    pub passed: bool,
    pub worst_slack: f64,
    /// `(i, B)`: the measure whose mass is on the left and the binding set.
    pub witness: Option<(usize, Vec<usize>)>,
}

/// Checks `mu_i(B) <= mu_j(B^eps) + eps` for all subsets `B` of the supports
/// and both orders.
pub fn prohorov_check(space: &FiniteMetricSpace, mu0: &DiscreteMeasure, mu1: &DiscreteMeasure, eps: f64) -> Result<ProhorovCheck> {
    check_inputs(space, mu0, mu1, CHECK_SUPPORT_CAP)?;
    let mut worst: Option<(f64, usize, Vec<usize>)> = None;
    for (i, (mi, mj)) in [(mu0, mu1), (mu1, mu0)].into_iter().enumerate() {
        let support = mi.support();
        let (neg_slack, mask) = (1u64..1 << support.len())
            .into_par_iter()
            .map(|mask| {
                let set = members(&support, mask);
                let dist = distances_to(space, &set);
                let excess = mi.mass(&set) - mj.mass_where(|y| dist[y] <= eps);
                let slack = if eps == f64::INFINITY { f64::INFINITY } else { eps - excess };
                (-slack, mask)
            })
            .reduce(|| (f64::NEG_INFINITY, 0), better);
        if mask != 0 && worst.as_ref().is_none_or(|w| -neg_slack < w.0) {
            worst = Some((-neg_slack, i, members(&support, mask)));
        }
    }
    Ok(match worst {
        Some((slack, i, set)) => ProhorovCheck { passed: slack >= 0.0, worst_slack: slack, witness: Some((i, set)) },
        None => ProhorovCheck { passed: true, worst_slack: f64::INFINITY, witness: None },
    })
}
