//! The measure bifiltration of points and the nerve of its ball cover.

use crate::error::Result;
use crate::measure::DiscreteMeasure;
use crate::metric::FiniteMetricSpace;
use crate::simplex::{subsets_up_to, SimplicialComplex};

/// `M_{m,r} = { x : mu(B(x, r)) >= m }`, sorted.
pub fn measure_bifiltration_points(space: &FiniteMetricSpace, mu: &DiscreteMeasure, m: f64, r: f64) -> Result<Vec<usize>> {
    mu.check_len(space.len(), "measure")?;
    Ok((0..space.len()).filter(|&x| mu.mass_where(|y| space.d(x, y) <= r) >= m).collect())
}

/// Nerve of the cover of `M_{m,r}` by the balls `B(y, r)`, `y` in its
/// `r`-offset. `tau` is a simplex iff its balls meet inside `M_{m,r}`.
pub fn cover_nerve(space: &FiniteMetricSpace, mu: &DiscreteMeasure, m: f64, r: f64, dim_cap: usize) -> Result<SimplicialComplex> {
    let mmr = measure_bifiltration_points(space, mu, m, r)?;
    let vertices = space.offset(&mmr, r)?;
    let simplices = subsets_up_to(&vertices, dim_cap + 1)
        .into_iter()
        .filter(|tau| mmr.iter().any(|&z| tau.vertices().iter().all(|&y| space.d(y, z) <= r)));
    Ok(SimplicialComplex::new_unchecked((0..space.len()).collect(), simplices))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l3_cover_nerve() {
        let space = FiniteMetricSpace::from_points(vec![[0.0, 0.0], [1.0, 0.0], [3.0, 0.0]]).unwrap();
        let mu = DiscreteMeasure::counting(3).unwrap();
        assert_eq!(measure_bifiltration_points(&space, &mu, 2.0, 1.0).unwrap(), vec![0, 1]);
        let k = cover_nerve(&space, &mu, 2.0, 1.0, 3).unwrap();
        // offset of {a, b} at radius 1 is {a, b}; both balls contain a and b
        assert_eq!(k.len(), 3);
        assert!(cover_nerve(&space, &mu, 4.0, 1.0, 3).unwrap().is_empty());
    }
}
