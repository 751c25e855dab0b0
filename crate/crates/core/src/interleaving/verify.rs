//! Machine checks of interleaving conditions between set bifiltrations and
//! between bifiltered complexes, and of the intrinsic/ambient sandwich.

use std::fmt;

use rayon::prelude::*;

use crate::bifiltration::dowker::SetBifiltration;
use crate::error::{Error, Result};
use crate::metric::sort_dedup;
use crate::shift::ForwardShift;
use crate::simplex::{subsets_up_to, Simplex};
use crate::staircase::BifilteredComplex;

/// How the composite shifts in the round-trip conditions are read.
/// `Standard` uses `beta . alpha` for the condition on `f_1` and
/// `alpha . beta` for the one on `f_0`; `Swapped` exchanges them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CompositeReading {
    #[default]
    Standard,
    Swapped,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub simplex: Simplex,
    pub m: Option<f64>,
    pub r: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConditionReport {
    pub name: String,
    pub checked: usize,
    /// Checks dropped because the required simplex exceeds the dimension cap.
    pub skipped: usize,
    /// Smallest right-hand side minus left-hand side; negative on failure.
    pub worst_slack: f64,
    /// Where the worst slack occurs.
    pub witness: Option<Witness>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.worst_slack >= 0.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterleavingReport {
    pub passed: bool,
    pub conditions: Vec<ConditionReport>,
}

impl InterleavingReport {
    fn new(conditions: Vec<ConditionReport>) -> Self {
        InterleavingReport { passed: conditions.iter().all(ConditionReport::passed), conditions }
    }

    pub fn worst_slack(&self) -> f64 {
        self.conditions.iter().map(|c| c.worst_slack).fold(f64::INFINITY, f64::min)
    }

    pub fn first_failure(&self) -> Option<&ConditionReport> {
        self.conditions.iter().find(|c| !c.passed())
    }
}

impl fmt::Display for InterleavingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.conditions {
            write!(f, "{} {}: worst slack {}", if c.passed() { "PASS" } else { "FAIL" }, c.name, c.worst_slack)?;
            if let Some(w) = &c.witness {
                write!(f, " at {}", w.simplex)?;
                if let Some(m) = w.m {
                    write!(f, " m={m}")?;
                }
                write!(f, " r={}", w.r)?;
            }
            if c.skipped > 0 {
                write!(f, " ({} skipped above the dimension cap)", c.skipped)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `rhs - lhs`, with equal infinities counting as 0 and absence as minus infinity.
fn slack(rhs: Option<f64>, lhs: f64) -> f64 {
    match rhs {
        None => f64::NEG_INFINITY,
        Some(v) if v == lhs => 0.0,
        Some(v) => v - lhs,
    }
}

/// One evaluated inequality: slack, simplex, optional m and r.
type Sample = (f64, Simplex, Option<f64>, f64);

fn summarize(name: &str, samples: Vec<Sample>, skipped: usize) -> ConditionReport {
    let checked = samples.len();
    let mut worst: Option<Sample> = None;
    for s in samples {
        if worst.as_ref().is_none_or(|w| s.0 < w.0) {
            worst = Some(s);
        }
    }
    ConditionReport {
        name: name.to_string(),
        checked,
        skipped,
        worst_slack: worst.as_ref().map_or(f64::INFINITY, |w| w.0),
        witness: worst.map(|(_, simplex, m, r)| Witness { simplex, m, r }),
    }
}

fn check_map(map: &[usize], src: &[usize], dst: &[usize]) -> Result<()> {
    if map.len() != src.len() {
        return Err(Error::DimensionMismatch { what: "vertex map", got: map.len(), expected: src.len() });
    }
    match map.iter().find(|v| dst.binary_search(v).is_err()) {
        Some(&bad) => Err(Error::IndexOutOfRange { index: bad, size: dst.len() }),
        None => Ok(()),
    }
}

/// Image of a simplex under a map given by source position.
fn map_simplex(s: &Simplex, src: &[usize], map: &[usize]) -> Simplex {
    s.image(|v| map[src.binary_search(&v).expect("vertex in source universe")])
}

fn compose(first: &ForwardShift, second: &ForwardShift, m: f64, r: f64) -> (f64, f64) {
    let (m1, r1) = first.apply(m, r);
    second.apply(m1, r1)
}

/// Radii to test for `f(sigma, .)`: the grid if given, otherwise every
/// left breakpoint of `f(sigma, .)` and infinity.
fn radii_for(f: &SetBifiltration, s: &Simplex, grid: Option<&[f64]>) -> Result<Vec<f64>> {
    let mut rs = match grid {
        Some(g) => g.to_vec(),
        None => f.candidate_radii(s)?,
    };
    rs.push(f64::INFINITY);
    sort_dedup(&mut rs);
    Ok(rs)
}

/// Samples `target(image, shift_r) - shift_m` over `sigma` in `Delta(source)`.
fn set_condition(
    source: &SetBifiltration,
    target: &SetBifiltration,
    grid: Option<&[f64]>,
    dim_cap: usize,
    image: &(dyn Fn(&Simplex) -> Simplex + Sync),
    shift: &(dyn Fn(f64, f64) -> (f64, f64) + Sync),
) -> Result<Vec<Sample>> {
    let per_simplex: Result<Vec<Vec<Sample>>> = subsets_up_to(source.x_ids(), dim_cap + 1)
        .into_par_iter()
        .map(|s| {
            let img = image(&s);
            let mut out = Vec::new();
            for r in radii_for(source, &s, grid)? {
                let (m1, r1) = shift(source.eval(&s, r)?, r);
                out.push((slack(Some(target.eval(&img, r1)?), m1), s.clone(), None, r));
            }
            Ok(out)
        })
        .collect();
    Ok(per_simplex?.into_iter().flatten().collect())
}

/// Checks the four conditions of a weak `(alpha, beta)` interleaving of set
/// bifiltrations, with `pi1: X_0 -> X_1` and `pi0: X_1 -> X_0` given by
/// source position:
///
/// 1. `alpha_0(f_1(s, r), r) <= f_0(pi0 s, alpha_1(f_1(s, r), r))`
/// 2. `beta_0(f_0(t, r), r) <= f_1(pi1 t, beta_1(f_0(t, r), r))`
/// 3. the composite shift of `(f_1(s, r), r)` bounds `f_1(s ∪ pi1 pi0 s, .)`
/// 4. the composite shift of `(f_0(t, r), r)` bounds `f_0(t ∪ pi0 pi1 t, .)`
///
/// Simplices up to `dim_cap` are checked. Without a grid, every left
/// breakpoint of the left-hand side is tested, which is exact.
#[allow(clippy::too_many_arguments)]
pub fn verify_set_interleaving_shift(
    f0: &SetBifiltration,
    f1: &SetBifiltration,
    pi1: &[usize],
    pi0: &[usize],
    alpha: &ForwardShift,
    beta: &ForwardShift,
    reading: CompositeReading,
    r_grid: Option<&[f64]>,
    dim_cap: usize,
) -> Result<InterleavingReport> {
    let (x0, x1) = (f0.x_ids(), f1.x_ids());
    check_map(pi1, x0, x1)?;
    check_map(pi0, x1, x0)?;
    let (c3, c4): (Box<dyn Fn(f64, f64) -> (f64, f64) + Sync>, Box<dyn Fn(f64, f64) -> (f64, f64) + Sync>) = match reading {
        CompositeReading::Standard => (Box::new(|m, r| compose(alpha, beta, m, r)), Box::new(|m, r| compose(beta, alpha, m, r))),
        CompositeReading::Swapped => (Box::new(|m, r| compose(beta, alpha, m, r)), Box::new(|m, r| compose(alpha, beta, m, r))),
    };
    let cond1 = set_condition(f1, f0, r_grid, dim_cap, &|s| map_simplex(s, x1, pi0), &|m, r| alpha.apply(m, r))?;
    let cond2 = set_condition(f0, f1, r_grid, dim_cap, &|t| map_simplex(t, x0, pi1), &|m, r| beta.apply(m, r))?;
    let cond3 = set_condition(
        f1,
        f1,
        r_grid,
        dim_cap,
        &|s| s.union(&map_simplex(&map_simplex(s, x1, pi0), x0, pi1)),
        &*c3,
    )?;
    let cond4 = set_condition(
        f0,
        f0,
        r_grid,
        dim_cap,
        &|t| t.union(&map_simplex(&map_simplex(t, x0, pi1), x1, pi0)),
        &*c4,
    )?;
    Ok(InterleavingReport::new(vec![
        summarize("(1) f1 -> f0 along pi0", cond1, 0),
        summarize("(2) f0 -> f1 along pi1", cond2, 0),
        summarize("(3) round trip on f1", cond3, 0),
        summarize("(4) round trip on f0", cond4, 0),
    ]))
}

/// Checks a weak additive `eps`-interleaving of set bifiltrations:
///
/// 1. `f_0(s, r) - eps <= f_1(pi1 s, r + eps)`
/// 2. `f_1(s, r) - eps <= f_0(pi0 s, r + eps)`
/// 3. `f_0(s, r) - 2 eps <= f_0(s ∪ pi0 pi1 s, r + 2 eps)`
/// 4. `f_1(s, r) - 2 eps <= f_1(s ∪ pi1 pi0 s, r + 2 eps)`
#[allow(clippy::too_many_arguments)]
pub fn verify_set_interleaving_eps(
    f0: &SetBifiltration,
    f1: &SetBifiltration,
    pi1: &[usize],
    pi0: &[usize],
    eps: f64,
    r_grid: Option<&[f64]>,
    dim_cap: usize,
) -> Result<InterleavingReport> {
    let shift = ForwardShift::additive(eps)?;
    let rep = verify_set_interleaving_shift(f0, f1, pi1, pi0, &shift, &shift, CompositeReading::Standard, r_grid, dim_cap)?;
    let mut c = rep.conditions;
    let names = ["(1) f0 -> f1 along pi1", "(2) f1 -> f0 along pi0", "(3) round trip on f0", "(4) round trip on f1"];
    let mut reordered = vec![c.remove(1), c.remove(0)];
    reordered.push(c.remove(1));
    reordered.push(c.remove(0));
    for (cond, name) in reordered.iter_mut().zip(names) {
        cond.name = name.to_string();
    }
    Ok(InterleavingReport::new(reordered))
}

/// Samples the image condition at every staircase corner of `source`.
fn complex_condition(
    source: &BifilteredComplex,
    target: &BifilteredComplex,
    image: &(dyn Fn(&Simplex) -> Simplex + Sync),
    shift: &(dyn Fn(f64, f64) -> (f64, f64) + Sync),
) -> (Vec<Sample>, usize) {
    let cap = target.dim_cap() + 1;
    let per: Vec<(Vec<Sample>, usize)> = source
        .entries()
        .par_iter()
        .map(|(s, st)| {
            let img = image(s);
            if img.len() > cap {
                return (Vec::new(), st.steps().len());
            }
            let target_st = target.staircase(&img);
            let out = st
                .steps()
                .iter()
                .map(|&(r, m)| {
                    let (m1, r1) = shift(m, r);
                    (slack(target_st.and_then(|t| t.value(r1)), m1), s.clone(), Some(m), r)
                })
                .collect();
            (out, 0)
        })
        .collect();
    let skipped = per.iter().map(|p| p.1).sum();
    (per.into_iter().flat_map(|p| p.0).collect(), skipped)
}

/// Checks that vertex maps `pi1: K0 -> K1` and `pi0: K1 -> K0` (by universe
/// position) induce a weak `(alpha, beta)` interleaving of bifiltered
/// complexes: `pi0` maps `K1_{m,r}` into `K0_{alpha(m,r)}`, `pi1` maps
/// `K0_{m,r}` into `K1_{beta(m,r)}`, and `s ∪ pi1 pi0 s` (resp.
/// `t ∪ pi0 pi1 t`) lies in `K1` (resp. `K0`) at the composite shift. The
/// last two are contiguity conditions: they imply the round trips are
/// homotopic to inclusions, but failing them does not refute that.
/// Checks at staircase corners are exact.
pub fn verify_complex_interleaving(
    k0: &BifilteredComplex,
    k1: &BifilteredComplex,
    pi1: &[usize],
    pi0: &[usize],
    alpha: &ForwardShift,
    beta: &ForwardShift,
    reading: CompositeReading,
) -> Result<InterleavingReport> {
    let (u0, u1) = (k0.universe(), k1.universe());
    check_map(pi1, u0, u1)?;
    check_map(pi0, u1, u0)?;
    let ab = |m, r| compose(beta, alpha, m, r);
    let ba = |m, r| compose(alpha, beta, m, r);
    let (c3, c4): (&(dyn Fn(f64, f64) -> (f64, f64) + Sync), &(dyn Fn(f64, f64) -> (f64, f64) + Sync)) = match reading {
        CompositeReading::Standard => (&ba, &ab),
        CompositeReading::Swapped => (&ab, &ba),
    };
    let (s1, k1_skip) = complex_condition(k1, k0, &|s| map_simplex(s, u1, pi0), &|m, r| alpha.apply(m, r));
    let (s2, k2_skip) = complex_condition(k0, k1, &|t| map_simplex(t, u0, pi1), &|m, r| beta.apply(m, r));
    let (s3, k3_skip) = complex_condition(k1, k1, &|s| s.union(&map_simplex(&map_simplex(s, u1, pi0), u0, pi1)), c3);
    let (s4, k4_skip) = complex_condition(k0, k0, &|t| t.union(&map_simplex(&map_simplex(t, u0, pi1), u1, pi0)), c4);
    Ok(InterleavingReport::new(vec![
        summarize("(1) pi0 maps K1 into K0", s1, k1_skip),
        summarize("(2) pi1 maps K0 into K1", s2, k2_skip),
        summarize("(3) contiguity check on K1", s3, k3_skip),
        summarize("(4) contiguity check on K0", s4, k4_skip),
    ]))
}

/// Checks `intrinsic_{m,r} ⊆ ambient_{m,r} ⊆ intrinsic_{m,2r}` for all
/// `(m, r)`, comparing staircases at every radius where either side changes.
pub fn verify_sandwich(intrinsic: &BifilteredComplex, ambient: &BifilteredComplex) -> Result<InterleavingReport> {
    if intrinsic.universe() != ambient.universe() {
        return Err(Error::DimensionMismatch {
            what: "sandwich vertex universe",
            got: ambient.universe().len(),
            expected: intrinsic.universe().len(),
        });
    }
    let mut keys: Vec<&Simplex> = intrinsic.entries().keys().chain(ambient.entries().keys()).collect();
    keys.sort();
    keys.dedup();
    let samples: Vec<(Vec<Sample>, Vec<Sample>)> = keys
        .par_iter()
        .map(|&s| {
            let int = intrinsic.staircase(s);
            let amb = ambient.staircase(s);
            let mut rs: Vec<f64> = Vec::new();
            for st in int.iter().chain(amb.iter()) {
                rs.extend(st.steps().iter().map(|p| p.0));
            }
            if let Some(st) = int {
                rs.extend(st.steps().iter().map(|p| 0.5 * p.0));
            }
            sort_dedup(&mut rs);
            let value = |st: Option<&crate::staircase::Staircase>, r: f64| st.and_then(|t| t.value(r));
            let mut lower = Vec::new();
            let mut upper = Vec::new();
            for r in rs {
                if let Some(v) = value(int, r) {
                    lower.push((slack(value(amb, r), v), s.clone(), None, r));
                }
                if let Some(v) = value(amb, r) {
                    upper.push((slack(value(int, 2.0 * r), v), s.clone(), None, r));
                }
            }
            (lower, upper)
        })
        .collect();
    let (lower, upper): (Vec<_>, Vec<_>) = samples.into_iter().unzip();
    Ok(InterleavingReport::new(vec![
        summarize("intrinsic(m, r) ⊆ ambient(m, r)", lower.into_iter().flatten().collect(), 0),
        summarize("ambient(m, r) ⊆ intrinsic(m, 2r)", upper.into_iter().flatten().collect(), 0),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bifiltration::cech::{ambient_dc_finite, intrinsic_dc};
    use crate::bifiltration::dowker::{degree_bifiltration, DowkerDissimilarity};
    use crate::measure::DiscreteMeasure;
    use crate::metric::FiniteMetricSpace;

    fn l3_degree() -> SetBifiltration {
        let s = FiniteMetricSpace::from_points(vec![[0.0, 0.0], [1.0, 0.0], [3.0, 0.0]]).unwrap();
        degree_bifiltration(&DowkerDissimilarity::from_metric(&s), &DiscreteMeasure::counting(3).unwrap()).unwrap()
    }

    #[test]
    fn identity_zero_shift_passes_with_zero_slack() {
        let f = l3_degree();
        let id = [0, 1, 2];
        let rep = verify_set_interleaving_eps(&f, &f, &id, &id, 0.0, None, 2).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.worst_slack(), 0.0);
    }

    #[test]
    fn collapsing_map_fails_with_witness() {
        let f = l3_degree();
        let rep = verify_set_interleaving_eps(&f, &f, &[2, 2, 2], &[0, 1, 2], 0.5, None, 2).unwrap();
        assert!(!rep.passed);
        let bad = rep.first_failure().unwrap();
        assert!(bad.witness.is_some());
    }

    #[test]
    fn complex_level_identity_and_constant_map() {
        let s = FiniteMetricSpace::from_points(vec![[0.0, 0.0], [1.0, 0.0], [3.0, 0.0]]).unwrap();
        let k = intrinsic_dc(&s, &DiscreteMeasure::counting(3).unwrap(), 2).unwrap();
        let zero = ForwardShift::additive(0.0).unwrap();
        let id = [0, 1, 2];
        assert!(verify_complex_interleaving(&k, &k, &id, &id, &zero, &zero, CompositeReading::Standard).unwrap().passed);
        let rep = verify_complex_interleaving(&k, &k, &[2, 2, 2], &id, &zero, &zero, CompositeReading::Standard).unwrap();
        assert!(!rep.conditions[1].passed());
    }

    #[test]
    fn sandwich_on_square_is_tight_on_the_diagonal() {
        let s = FiniteMetricSpace::from_points(vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]).unwrap();
        let mu = DiscreteMeasure::counting(4).unwrap();
        let int = intrinsic_dc(&s, &mu, 2).unwrap();
        let amb = crate::bifiltration::planar::ambient_dc_planar(&s, &mu, 2, None).unwrap();
        let rep = verify_sandwich(&int, &amb).unwrap();
        assert!(rep.passed, "{rep}");
        assert_eq!(rep.conditions[1].worst_slack, 0.0);
        let finite = ambient_dc_finite(&s, &mu, 2).unwrap();
        assert_eq!(finite, int);
    }
}
