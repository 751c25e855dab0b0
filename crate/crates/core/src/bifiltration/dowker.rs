//! Dowker dissimilarities, set bifiltrations, their nerves, Dowker duals and
//! rectangle bifiltrations.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::measure::DiscreteMeasure;
use crate::metric::{sort_dedup, FiniteMetricSpace};
use crate::simplex::{subsets_up_to, Simplex, SimplicialComplex};
use crate::staircase::{BifilteredComplex, Staircase};

/// Nerves are materialized exhaustively; above this many vertices we warn.
pub const LARGE_UNIVERSE: usize = 20;

/// A `[0, inf]`-valued function on `X x Y`. Both sides carry sorted
/// point labels so that complexes built from it keep the caller's indices.
#[derive(Debug, Clone, PartialEq)]
pub struct DowkerDissimilarity {
    x_ids: Vec<usize>,
    y_ids: Vec<usize>,
    values: Vec<Vec<f64>>,
}

impl DowkerDissimilarity {
    /// `values[i][j]` is the dissimilarity between the i-th element of X and the j-th of Y.
    pub fn new(values: Vec<Vec<f64>>) -> Result<Self> {
        let nx = values.len();
        let ny = values.first().map_or(0, Vec::len);
        Self::with_ids((0..nx).collect(), (0..ny).collect(), values)
    }

    pub fn with_ids(x_ids: Vec<usize>, y_ids: Vec<usize>, values: Vec<Vec<f64>>) -> Result<Self> {
        if values.len() != x_ids.len() {
            return Err(Error::DimensionMismatch { what: "dissimilarity rows", got: values.len(), expected: x_ids.len() });
        }
        for ids in [&x_ids, &y_ids] {
            if ids.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::UnsortedSimplex(ids.clone()));
            }
        }
        for (x, row) in values.iter().enumerate() {
            if row.len() != y_ids.len() {
                return Err(Error::DimensionMismatch { what: "dissimilarity row", got: row.len(), expected: y_ids.len() });
            }
            for (y, &value) in row.iter().enumerate() {
                if value.is_nan() || value < 0.0 {
                    return Err(Error::InvalidDissimilarity { x, y, value });
                }
            }
        }
        Ok(DowkerDissimilarity { x_ids, y_ids, values })
    }

    /// The metric itself, `X = Y = M`.
    pub fn from_metric(space: &FiniteMetricSpace) -> Self {
        let ids: Vec<usize> = (0..space.len()).collect();
        Self::sub_metric(space, &ids, &ids)
    }

    /// The metric restricted to `xs x ys` (both sorted point indices).
    pub fn sub_metric(space: &FiniteMetricSpace, xs: &[usize], ys: &[usize]) -> Self {
        let values = xs.iter().map(|&x| ys.iter().map(|&y| space.d(x, y)).collect()).collect();
        DowkerDissimilarity { x_ids: xs.to_vec(), y_ids: ys.to_vec(), values }
    }

    /// Restriction to the columns whose labels lie in the sorted set `keep`.
    pub fn restrict_y(&self, keep: &[usize]) -> Self {
        let cols: Vec<usize> = (0..self.y_ids.len()).filter(|&j| keep.binary_search(&self.y_ids[j]).is_ok()).collect();
        DowkerDissimilarity {
            x_ids: self.x_ids.clone(),
            y_ids: cols.iter().map(|&j| self.y_ids[j]).collect(),
            values: self.values.iter().map(|row| cols.iter().map(|&j| row[j]).collect()).collect(),
        }
    }

    pub fn x_ids(&self) -> &[usize] {
        &self.x_ids
    }

    pub fn y_ids(&self) -> &[usize] {
        &self.y_ids
    }

    pub fn nx(&self) -> usize {
        self.x_ids.len()
    }

    pub fn ny(&self) -> usize {
        self.y_ids.len()
    }

    /// Value by positions.
    #[inline]
    pub fn at(&self, xi: usize, yj: usize) -> f64 {
        self.values[xi][yj]
    }

    pub fn x_pos(&self, id: usize) -> Result<usize> {
        self.x_ids.binary_search(&id).map_err(|_| Error::IndexOutOfRange { index: id, size: self.x_ids.len() })
    }

    pub fn y_pos(&self, id: usize) -> Result<usize> {
        self.y_ids.binary_search(&id).map_err(|_| Error::IndexOutOfRange { index: id, size: self.y_ids.len() })
    }

    fn x_positions(&self, sigma: &Simplex) -> Result<Vec<usize>> {
        sigma.vertices().iter().map(|&v| self.x_pos(v)).collect()
    }

    /// `max_{x in sigma} Lambda(x, y)` for the Y element at position `yj`.
    fn reach(&self, xs: &[usize], yj: usize) -> f64 {
        xs.iter().map(|&x| self.values[x][yj]).fold(0.0, f64::max)
    }

    /// Labels of `B_Lambda(sigma, r)`, the common Lambda-ball of a simplex over X.
    pub fn common_ball(&self, sigma: &Simplex, r: f64) -> Result<Vec<usize>> {
        let xs = self.x_positions(sigma)?;
        Ok((0..self.ny()).filter(|&j| self.reach(&xs, j) <= r).map(|j| self.y_ids[j]).collect())
    }

    /// Sorted distinct finite values, with 0.
    pub fn values_sorted(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.values.iter().flatten().copied().filter(|v| v.is_finite()).collect();
        v.push(0.0);
        sort_dedup(&mut v);
        v
    }
}

/// An order preserving function `f(sigma, r)`: antitone in the simplex,
/// monotone in the radius.
#[derive(Debug, Clone, PartialEq)]
pub enum SetBifiltration {
    /// `f(sigma, r) = mu(B_Lambda(sigma, r))`
    Degree { lambda: DowkerDissimilarity, weights: Vec<f64> },
    /// `f_p(sigma, r) = (sum over y in B_Lambda(sigma, r) of min_{x in sigma} Lambda(x, y)^p w_y)^(1/p)`
    DistanceToMeasure { lambda: DowkerDissimilarity, weights: Vec<f64>, p: f64 },
    /// Tabulated values; unlisted simplices and radii before the first step evaluate to 0.
    Table { x_ids: Vec<usize>, table: BTreeMap<Simplex, Staircase> },
}

/// Degree set bifiltration of `mu`, a measure indexed by the Y side of `lambda`.
pub fn degree_bifiltration(lambda: &DowkerDissimilarity, mu: &DiscreteMeasure) -> Result<SetBifiltration> {
    mu.check_len(lambda.ny(), "measure on Y")?;
    Ok(SetBifiltration::Degree { lambda: lambda.clone(), weights: mu.weights().to_vec() })
}

/// Distance-to-measure set bifiltration with exponent `p > 0` (uses `0^p = 0`).
pub fn dtm_bifiltration(lambda: &DowkerDissimilarity, mu: &DiscreteMeasure, p: f64) -> Result<SetBifiltration> {
    if !(p > 0.0) {
        return Err(Error::NonPositiveP(p));
    }
    mu.check_len(lambda.ny(), "measure on Y")?;
    Ok(SetBifiltration::DistanceToMeasure { lambda: lambda.clone(), weights: mu.weights().to_vec(), p })
}

impl SetBifiltration {
    /// A tabulated set bifiltration, validated for order preservation.
    pub fn table(x_ids: Vec<usize>, table: BTreeMap<Simplex, Staircase>) -> Result<Self> {
        let f = SetBifiltration::Table { x_ids, table };
        f.validate_table()?;
        Ok(f)
    }

    pub fn x_ids(&self) -> &[usize] {
        match self {
            SetBifiltration::Degree { lambda, .. } | SetBifiltration::DistanceToMeasure { lambda, .. } => lambda.x_ids(),
            SetBifiltration::Table { x_ids, .. } => x_ids,
        }
    }

    pub fn eval(&self, sigma: &Simplex, r: f64) -> Result<f64> {
        match self {
            SetBifiltration::Degree { lambda, weights } => {
                let xs = lambda.x_positions(sigma)?;
                let mut total = 0.0;
                for (j, &w) in weights.iter().enumerate() {
                    if lambda.reach(&xs, j) <= r {
                        total += w;
                    }
                }
                Ok(total)
            }
            SetBifiltration::DistanceToMeasure { lambda, weights, p } => {
                let xs = lambda.x_positions(sigma)?;
                let mut total = 0.0;
                for (j, &w) in weights.iter().enumerate() {
                    if w == 0.0 || lambda.reach(&xs, j) > r {
                        continue;
                    }
                    let near = xs.iter().map(|&x| lambda.at(x, j)).fold(f64::INFINITY, f64::min);
                    if near > 0.0 {
                        total += near.powf(*p) * w;
                    }
                }
                Ok(total.powf(1.0 / p))
            }
            SetBifiltration::Table { x_ids, table } => {
                for &v in sigma.vertices() {
                    if x_ids.binary_search(&v).is_err() {
                        return Err(Error::IndexOutOfRange { index: v, size: x_ids.len() });
                    }
                }
                Ok(table.get(sigma).and_then(|st| st.value(r)).unwrap_or(0.0))
            }
        }
    }

    /// Radii (including 0) outside of which `f(sigma, .)` is constant between consecutive entries.
    pub fn candidate_radii(&self, sigma: &Simplex) -> Result<Vec<f64>> {
        let mut out = vec![0.0];
        match self {
            SetBifiltration::Degree { lambda, .. } | SetBifiltration::DistanceToMeasure { lambda, .. } => {
                let xs = lambda.x_positions(sigma)?;
                out.extend((0..lambda.ny()).map(|j| lambda.reach(&xs, j)));
            }
            SetBifiltration::Table { table, .. } => {
                if let Some(st) = table.get(sigma) {
                    out.extend(st.steps().iter().map(|s| s.0));
                }
            }
        }
        sort_dedup(&mut out);
        Ok(out)
    }

    /// `r -> f(sigma, r)` as a staircase starting at 0.
    pub fn staircase(&self, sigma: &Simplex) -> Result<Staircase> {
        let radii = self.candidate_radii(sigma)?;
        let mut samples = Vec::with_capacity(radii.len());
        for r in radii {
            samples.push((r, Some(self.eval(sigma, r)?)));
        }
        Ok(Staircase::from_samples(samples).expect("set bifiltrations are defined from r = 0"))
    }

    fn validate_table(&self) -> Result<()> {
        let SetBifiltration::Table { x_ids, table } = self else { return Ok(()) };
        for (s, st) in table {
            for &v in s.vertices() {
                if x_ids.binary_search(&v).is_err() {
                    return Err(Error::IndexOutOfRange { index: v, size: x_ids.len() });
                }
            }
            if st.steps().iter().any(|&(_, m)| m < 0.0) {
                return Err(Error::NotOrderPreserving { simplex: s.vertices().to_vec(), r: st.start_r() });
            }
            for f in s.facets() {
                for &(r, m) in st.steps() {
                    if self.eval(&f, r)? < m {
                        return Err(Error::NotOrderPreserving { simplex: s.vertices().to_vec(), r });
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks the Dowker condition: `f(sigma, r) > 0` forces a nonempty
    /// common ball. Verified on every simplex up to `dim_cap` at every
    /// candidate radius of `f` and of the common ball.
    pub fn check_dowker_pair(&self, lambda: &DowkerDissimilarity, dim_cap: usize) -> Result<()> {
        if self.x_ids() != lambda.x_ids() {
            return Err(Error::DimensionMismatch { what: "set bifiltration universe", got: self.x_ids().len(), expected: lambda.nx() });
        }
        for s in subsets_up_to(lambda.x_ids(), dim_cap + 1) {
            let mut radii = self.candidate_radii(&s)?;
            let xs = lambda.x_positions(&s)?;
            radii.extend((0..lambda.ny()).map(|j| lambda.reach(&xs, j)));
            sort_dedup(&mut radii);
            for r in radii {
                if self.eval(&s, r)? > 0.0 && lambda.common_ball(&s, r)?.is_empty() {
                    return Err(Error::DowkerConditionViolated { simplex: s.vertices().to_vec(), r });
                }
            }
        }
        Ok(())
    }
}

fn warn_if_large(n: usize, what: &str) {
    if n > LARGE_UNIVERSE {
        log::warn!("{what}: materializing all simplices on {n} vertices up to the dimension cap");
    }
}

/// The nerve `Nf`: `sigma` is in `Nf_{m,r}` iff `f(sigma, r) >= m`.
pub fn nerve_bifiltration(f: &SetBifiltration, dim_cap: usize) -> Result<BifilteredComplex> {
    let universe = f.x_ids().to_vec();
    warn_if_large(universe.len(), "nerve bifiltration");
    let entries: Result<Vec<(Simplex, Staircase)>> = subsets_up_to(&universe, dim_cap + 1)
        .into_par_iter()
        .map(|s| {
            let st = f.staircase(&s)?;
            Ok((s, st))
        })
        .collect();
    Ok(BifilteredComplex::new_unchecked(universe, entries?.into_iter().collect(), dim_cap))
}

/// Precomputed singleton staircases `r -> f({x}, r)` by X position.
fn singleton_staircases(lambda: &DowkerDissimilarity, f: &SetBifiltration) -> Result<Vec<Staircase>> {
    if f.x_ids() != lambda.x_ids() {
        return Err(Error::DimensionMismatch { what: "set bifiltration universe", got: f.x_ids().len(), expected: lambda.nx() });
    }
    lambda.x_ids().iter().map(|&x| f.staircase(&Simplex::vertex(x))).collect()
}

/// Staircase of `tau` (Y positions) in the Dowker dual:
/// `r -> max { f({x}, r) : Lambda(x, y) <= r for all y in tau }`.
fn dual_staircase(lambda: &DowkerDissimilarity, singles: &[Staircase], ys: &[usize]) -> Option<Staircase> {
    let reach: Vec<f64> = (0..lambda.nx())
        .map(|x| ys.iter().map(|&y| lambda.at(x, y)).fold(0.0, f64::max))
        .collect();
    let mut radii: Vec<f64> = reach.clone();
    for (x, st) in singles.iter().enumerate() {
        radii.extend(st.steps().iter().map(|s| s.0).filter(|&r| r > reach[x]));
    }
    sort_dedup(&mut radii);
    Staircase::from_samples(radii.into_iter().map(|r| {
        let best = (0..lambda.nx())
            .filter(|&x| reach[x] <= r)
            .filter_map(|x| singles[x].value(r))
            .fold(None, |acc: Option<f64>, v| Some(acc.map_or(v, |a| a.max(v))));
        (r, best)
    }))
}

/// The Dowker dual `D_Lambda Nf` on Y: `tau` is present at `(m, r)` iff some
/// `x` has `f({x}, r) >= m` and `tau` inside `B_Lambda(x, r)`.
pub fn dowker_dual(lambda: &DowkerDissimilarity, f: &SetBifiltration, dim_cap: usize) -> Result<BifilteredComplex> {
    let singles = singleton_staircases(lambda, f)?;
    warn_if_large(lambda.ny(), "Dowker dual");
    let positions: Vec<usize> = (0..lambda.ny()).collect();
    let entries: Vec<(Simplex, Staircase)> = subsets_up_to(&positions, dim_cap + 1)
        .into_par_iter()
        .filter_map(|ys| {
            let st = dual_staircase(lambda, &singles, ys.vertices())?;
            Some((ys.image(|j| lambda.y_ids()[j]), st))
        })
        .collect();
    Ok(BifilteredComplex::new_unchecked(lambda.y_ids().to_vec(), entries.into_iter().collect(), dim_cap))
}

/// Label of the rectangle-complex vertex `(x, y)`, from positions.
pub fn pair_id(lambda: &DowkerDissimilarity, xi: usize, yj: usize) -> usize {
    xi * lambda.ny() + yj
}

/// Positions `(x, y)` of a rectangle-complex vertex label.
pub fn pair_of(lambda: &DowkerDissimilarity, id: usize) -> (usize, usize) {
    (id / lambda.ny(), id % lambda.ny())
}

/// The rectangle bifiltration `E(Lambda, f)` on `X x Y`, with vertex
/// `(x, y)` labelled by [`pair_id`]. `U` is present at `(m, r)` iff its X
/// projection is in `Nf_{m,r}`, its Y projection is in `(D_Lambda Nf)_{m,r}`
/// and every pair of `U` has `Lambda(x, y) <= r`.
pub fn rectangle_bifiltration(lambda: &DowkerDissimilarity, f: &SetBifiltration, dim_cap: usize) -> Result<BifilteredComplex> {
    let nerve = nerve_bifiltration(f, dim_cap)?;
    let dual = dowker_dual(lambda, f, dim_cap)?;
    let ids: Vec<usize> = (0..lambda.nx() * lambda.ny()).collect();
    let entries: Vec<(Simplex, Staircase)> = subsets_up_to(&ids, dim_cap + 1)
        .into_par_iter()
        .filter_map(|u| {
            let mut xs = Vec::with_capacity(u.len());
            let mut ys = Vec::with_capacity(u.len());
            let mut reach = 0.0f64;
            for &id in u.vertices() {
                let (x, y) = pair_of(lambda, id);
                xs.push(lambda.x_ids()[x]);
                ys.push(lambda.y_ids()[y]);
                reach = reach.max(lambda.at(x, y));
            }
            let px = Simplex::from_unsorted(xs).ok()?;
            let py = Simplex::from_unsorted(ys).ok()?;
            let fx = nerve.staircase(&px)?;
            let dy = dual.staircase(&py)?;
            let gate = Staircase::new(vec![(reach, f64::INFINITY)]).ok()?;
            let st = fx.min(dy)?.min(&gate)?;
            Some((u, st))
        })
        .collect();
    Ok(BifilteredComplex::new_unchecked(ids, entries.into_iter().collect(), dim_cap))
}

/// The rectangle complex `E(Lambda, f)_{m,r}`.
pub fn rectangle_complex(lambda: &DowkerDissimilarity, f: &SetBifiltration, m: f64, r: f64, dim_cap: usize) -> Result<SimplicialComplex> {
    Ok(rectangle_bifiltration(lambda, f, dim_cap)?.complex_at(m, r))
}
