//! Randomized verification suites shared by the command line tool and the
//! test harness. Each suite is self-checking: it compares quantities that
//! must agree (or satisfy an inequality) on every instance.

use std::fmt;

use rand::Rng;

use crate::bifiltration::cech::{ambient_dc_finite, intrinsic_dc, restrict_to_support};
use crate::bifiltration::dowker::{
    degree_bifiltration, dowker_dual, nerve_bifiltration, rectangle_bifiltration, DowkerDissimilarity,
};
use crate::bifiltration::measure_bif::cover_nerve;
use crate::bifiltration::planar::ambient_dc_planar;
use crate::error::Result;
use crate::homology::{betti, betti_table, bottleneck_distance, inclusion_induces_iso, slice_persistence};
use crate::interleaving::embedding::{
    check_projection_inequality, gp_upper_bound, nearest_neighbor_projection, CommonEmbedding,
};
use crate::interleaving::prohorov::prohorov_distance;
use crate::interleaving::verify::{verify_sandwich, verify_set_interleaving_shift, CompositeReading};
use crate::measure::DiscreteMeasure;
use crate::metric::{sort_dedup, FiniteMetricSpace};
use crate::random::{dissimilarity, graph_metric, integer_measure, planar_space, subset, trial_rng};
use crate::shift::{ForwardShift, MonotonePath};
use crate::staircase::BifilteredComplex;

/// Tolerance for floating point comparisons of distances.
pub const SLACK_TOLERANCE: f64 = 1e-9;

pub const SUITES: [&str; 7] = ["sandwich", "duality", "restriction", "nerve", "stability", "projection", "embedded"];

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub trials: usize,
    /// One line per failed trial, with its witness.
    pub failures: Vec<String>,
    /// Smallest slack over all checked inequalities, if the suite has any.
    pub worst_slack: Option<f64>,
    /// Extra lines that do not affect the verdict.
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str, trials: usize) -> Self {
        SuiteReport { name, trials, failures: Vec::new(), worst_slack: None, notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn slack(&mut self, s: f64) {
        self.worst_slack = Some(self.worst_slack.map_or(s, |w| w.min(s)));
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {} trials", if self.passed() { "PASS" } else { "FAIL" }, self.name, self.trials)?;
        if let Some(s) = self.worst_slack {
            write!(f, ", worst slack {s}")?;
        }
        writeln!(f)?;
        for line in self.failures.iter().take(10) {
            writeln!(f, "  failure: {line}")?;
        }
        if self.failures.len() > 10 {
            writeln!(f, "  ... {} more failures", self.failures.len() - 10)?;
        }
        for line in &self.notes {
            writeln!(f, "  note: {line}")?;
        }
        Ok(())
    }
}

pub fn run_suite(name: &str, seed: u64, trials: usize) -> Option<Result<SuiteReport>> {
    Some(match name {
        "sandwich" => sandwich(seed, trials),
        "duality" => duality(seed, trials),
        "restriction" => restriction(seed, trials),
        "nerve" => nerve(seed, trials),
        "stability" => stability(seed, trials),
        "projection" => projection(seed, trials),
        "embedded" => embedded(seed, trials),
        _ => return None,
    })
}

/// Radius grid of several complexes: 0 and every step radius.
fn joint_radii(ks: &[&BifilteredComplex]) -> Vec<f64> {
    let mut rs = vec![0.0];
    for k in ks {
        rs.extend(k.critical_grid().0);
    }
    sort_dedup(&mut rs);
    rs
}

/// Positive step masses of several complexes.
fn joint_masses(ks: &[&BifilteredComplex]) -> Vec<f64> {
    let mut ms: Vec<f64> = ks.iter().flat_map(|k| k.critical_grid().1).filter(|&m| m > 0.0).collect();
    sort_dedup(&mut ms);
    ms
}

/// Intrinsic versus ambient DC: half of the trials on graph metrics with a
/// strict sub-support (finite ambient), half on planar clouds (planar ambient).
pub fn sandwich(seed: u64, trials: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("sandwich", trials);
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let (int, amb, kind) = if t % 2 == 0 {
            let n = rng.random_range(3..=8);
            let space = graph_metric(&mut rng, n, 4);
            let zeros = rng.random_range(1..=(n - 1).min(3));
            let mu = integer_measure(&mut rng, n, zeros);
            (intrinsic_dc(&space, &mu, 3)?, ambient_dc_finite(&space, &mu, 3)?, "finite")
        } else {
            let n = rng.random_range(2..=8);
            let space = planar_space(&mut rng, n);
            let mu = integer_measure(&mut rng, n, 0);
            (intrinsic_dc(&space, &mu, 3)?, ambient_dc_planar(&space, &mu, 3, None)?, "planar")
        };
        let r = verify_sandwich(&int, &amb)?;
        rep.slack(r.worst_slack());
        if let Some(c) = r.first_failure() {
            rep.failures.push(format!("trial {t} ({kind}): {} slack {} at {:?}", c.name, c.worst_slack, c.witness));
        }
    }
    Ok(rep)
}

/// Betti numbers in degrees 0..=2 of `Nf`, the rectangle bifiltration and the
/// Dowker dual agree at every grid point with `m > 0`.
pub fn duality(seed: u64, trials: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("duality", trials);
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let (nx, ny) = (rng.random_range(1..=6), rng.random_range(1..=6));
        let lambda = dissimilarity(&mut rng, nx, ny, 4);
        let zeros = rng.random_range(0..ny);
        let mu = integer_measure(&mut rng, ny, zeros);
        let f = degree_bifiltration(&lambda, &mu)?;
        let nf = nerve_bifiltration(&f, 3)?;
        let d = dowker_dual(&lambda, &f, 3)?;
        let e = rectangle_bifiltration(&lambda, &f, 3)?;
        let ks = [&nf, &e, &d];
        let (ms, rs) = (joint_masses(&ks), joint_radii(&ks));
        let tables = ks.iter().map(|k| betti_table(k, &ms, &rs, 2)).collect::<Result<Vec<_>>>()?;
        'grid: for (i, m) in ms.iter().enumerate() {
            for (j, r) in rs.iter().enumerate() {
                let (a, b, c) = (tables[0].get(i, j), tables[1].get(i, j), tables[2].get(i, j));
                if a != b || a != c {
                    rep.failures.push(format!("trial {t}: at m={m} r={r} Nf {a:?}, E {b:?}, D {c:?}"));
                    break 'grid;
                }
            }
        }
    }
    Ok(rep)
}

/// The Dowker dual of the degree bifiltration on all of `M` restricted to
/// the support includes by homology isomorphisms in degrees 0..=2 at every
/// grid point with `m > 0`.
pub fn restriction(seed: u64, trials: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("restriction", trials);
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let n = rng.random_range(2..=8);
        let space = graph_metric(&mut rng, n, 4);
        let zeros = rng.random_range(1..=3.min(n - 1));
        let mu = integer_measure(&mut rng, n, zeros);
        let lambda = DowkerDissimilarity::from_metric(&space);
        let full = dowker_dual(&lambda, &degree_bifiltration(&lambda, &mu)?, 3)?;
        let restricted = restrict_to_support(&full, &mu.support());
        let (ms, rs) = (joint_masses(&[&full]), joint_radii(&[&full]));
        'grid: for &m in &ms {
            for &r in &rs {
                if !inclusion_induces_iso(&restricted.complex_at(m, r), &full.complex_at(m, r), 2)? {
                    rep.failures.push(format!("trial {t}: not an isomorphism at m={m} r={r}"));
                    break 'grid;
                }
            }
        }
    }
    Ok(rep)
}

/// Ball masses `mu(B(x, r))` over all points and distances.
fn ball_masses(space: &FiniteMetricSpace, mu: &DiscreteMeasure) -> Vec<f64> {
    let mut ms = Vec::new();
    for x in 0..space.len() {
        for r in space.distance_values() {
            ms.push(mu.mass_where(|y| space.d(x, y) <= r));
        }
    }
    ms.retain(|&m| m > 0.0);
    sort_dedup(&mut ms);
    ms
}

/// Betti numbers in degrees 0..=2 of the nerve of the ball cover of the
/// measure bifiltration agree with the ambient DC at every grid point with `m > 0`.
pub fn nerve(seed: u64, trials: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("nerve", trials);
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let n = rng.random_range(1..=8);
        let space = graph_metric(&mut rng, n, 4);
        let zeros = rng.random_range(0..n);
        let mu = integer_measure(&mut rng, n, zeros);
        let amb = ambient_dc_finite(&space, &mu, 3)?;
        let mut ms = ball_masses(&space, &mu);
        ms.extend(joint_masses(&[&amb]));
        sort_dedup(&mut ms);
        let mut rs = space.distance_values();
        rs.extend(joint_radii(&[&amb]));
        sort_dedup(&mut rs);
        let table = betti_table(&amb, &ms, &rs, 2)?;
        'grid: for (i, &m) in ms.iter().enumerate() {
            for (j, &r) in rs.iter().enumerate() {
                let cover = betti(&cover_nerve(&space, &mu, m, r, 3)?, 2);
                if &cover != table.get(i, j) {
                    rep.failures.push(format!("trial {t}: at m={m} r={r} cover nerve {cover:?}, DC {:?}", table.get(i, j)));
                    break 'grid;
                }
            }
        }
    }
    Ok(rep)
}

/// A planar cloud and a perturbation of it by at most `delta`, on their
/// common ambient space (first `n` points, then the perturbed copies).
pub fn perturbed_pair(rng: &mut impl Rng, n: usize) -> (FiniteMetricSpace, f64) {
    let pts = crate::random::planar_points(rng, n);
    let base = FiniteMetricSpace::from_points(pts.clone()).expect("finite coordinates");
    let delta = rng.random_range(0.0..=0.1) * base.diameter();
    let mut all = pts.clone();
    for p in &pts {
        let angle = rng.random_range(0.0..std::f64::consts::TAU);
        let len = delta * rng.random::<f64>();
        all.push([p[0] + len * angle.cos(), p[1] + len * angle.sin()]);
    }
    (FiniteMetricSpace::from_points(all).expect("finite coordinates"), delta)
}

fn diagonal_bottleneck(k0: &BifilteredComplex, k1: &BifilteredComplex, m0: f64, r0: f64) -> Result<f64> {
    let path = MonotonePath::diagonal_exact(m0, r0, &[k0, k1])?;
    let (b0, b1) = (slice_persistence(k0, &path, 1), slice_persistence(k1, &path, 1));
    Ok((0..=1).map(|d| bottleneck_distance(&b0.in_dim(d), &b1.in_dim(d))).fold(0.0, f64::max))
}

/// Prohorov distance of a cloud and its perturbation is at most the
/// perturbation size, and along diagonal slices the bottleneck distance
/// between DC barcodes (degrees 0 and 1) is at most the Prohorov distance.
/// The DCs live on the common space of both clouds. The same bound for the
/// intrinsic DCs is reported as a note only, since it does not hold in general.
pub fn stability(seed: u64, trials: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("stability", trials);
    let mut intrinsic_excess: Vec<f64> = Vec::new();
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let n = rng.random_range(2..=7);
        let (space, delta) = perturbed_pair(&mut rng, n);
        let mu0 = DiscreteMeasure::counting_on(2 * n, &(0..n).collect::<Vec<_>>())?;
        let mu1 = DiscreteMeasure::counting_on(2 * n, &(n..2 * n).collect::<Vec<_>>())?;
        let p = prohorov_distance(&space, &mu0, &mu1)?;
        rep.slack(delta + SLACK_TOLERANCE - p);
        if p > delta + SLACK_TOLERANCE {
            rep.failures.push(format!("trial {t}: Prohorov distance {p} exceeds perturbation {delta}"));
        }
        let (k0, k1) = (ambient_dc_finite(&space, &mu0, 2)?, ambient_dc_finite(&space, &mu1, 2)?);
        let (i0, i1) = (intrinsic_dc(&space, &mu0, 2)?, intrinsic_dc(&space, &mu1, 2)?);
        let diam = space.diameter();
        for _ in 0..5 {
            let m0 = rng.random_range(1..=n) as f64;
            let r0 = rng.random_range(0.0..=0.5) * diam;
            let b = diagonal_bottleneck(&k0, &k1, m0, r0)?;
            rep.slack(p + SLACK_TOLERANCE - b);
            if b > p + SLACK_TOLERANCE {
                rep.failures.push(format!("trial {t}: bottleneck {b} > Prohorov {p} on the diagonal through m={m0} r={r0}"));
            }
            intrinsic_excess.push(diagonal_bottleneck(&i0, &i1, m0, r0)? - p);
        }
    }
    let over = intrinsic_excess.iter().filter(|&&x| x > SLACK_TOLERANCE).count();
    let worst = intrinsic_excess.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    rep.notes.push(format!(
        "intrinsic DC barcodes: {over} of {} slices exceed the Prohorov distance (largest excess {worst})",
        intrinsic_excess.len()
    ));
    Ok(rep)
}

/// A random common embedding: two random subsets of a random ambient space.
pub fn random_embedding(rng: &mut impl Rng, ambient_max: usize, side_max: usize) -> CommonEmbedding {
    let n = rng.random_range(2..=ambient_max);
    let ambient = if rng.random_bool(0.5) { graph_metric(rng, n, 5) } else { planar_space(rng, n) };
    let k0 = rng.random_range(1..=side_max.min(n));
    let s0 = subset(rng, n, k0);
    let k1 = rng.random_range(1..=side_max.min(n));
    let s1 = subset(rng, n, k1);
    let x0 = ambient.restrict(&s0).expect("subset of the ambient space");
    let x1 = ambient.restrict(&s1).expect("subset of the ambient space");
    CommonEmbedding::new(ambient, &x0, s0, &x1, s1).expect("restrictions embed isometrically")
}

/// The nearest neighbour projection inequality, exhaustively per embedding.
pub fn projection(seed: u64, trials: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("projection", trials);
    let mut worst_ratio: f64 = 0.0;
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let emb = random_embedding(&mut rng, 25, 10);
        let p0 = nearest_neighbor_projection(&emb.ambient, &emb.iota0)?;
        let r = check_projection_inequality(&emb, &p0);
        worst_ratio = worst_ratio.max(r.worst_ratio);
        if let Some(&(x, y)) = r.violations.first() {
            rep.failures.push(format!("trial {t}: {} violations, first at x={x} y={y}", r.violations.len()));
        }
    }
    rep.notes.push(format!("largest ratio d(p0 x, y) / d(x, y) = {worst_ratio} (bound 2)"));
    Ok(rep)
}

/// Degree bifiltrations of two embedded spaces are weakly interleaved by the
/// doubling shift with `eps` above the Prohorov distance of the pushforwards,
/// with nearest neighbour projections as maps.
pub fn embedded(seed: u64, trials: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("embedded", trials);
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let emb = random_embedding(&mut rng, 25, 7);
        let (x0, x1) = (emb.side(0), emb.side(1));
        let mu0 = integer_measure(&mut rng, x0.len(), 0);
        let mu1 = integer_measure(&mut rng, x1.len(), 0);
        let eps = gp_upper_bound(&mu0, &mu1, &emb)? + 0.01;
        let f0 = degree_bifiltration(&DowkerDissimilarity::from_metric(&x0), &mu0)?;
        let f1 = degree_bifiltration(&DowkerDissimilarity::from_metric(&x1), &mu1)?;
        let shift = ForwardShift::doubling(eps)?;
        let cap = x0.len().max(x1.len()) - 1;
        let r = verify_set_interleaving_shift(&f0, &f1, &emb.pi1()?, &emb.pi0()?, &shift, &shift, CompositeReading::Standard, None, cap)?;
        rep.slack(r.worst_slack());
        if let Some(c) = r.first_failure() {
            rep.failures.push(format!("trial {t}: {} slack {} at {:?}", c.name, c.worst_slack, c.witness));
        }
    }
    Ok(rep)
}
