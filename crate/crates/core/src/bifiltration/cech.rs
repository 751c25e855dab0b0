//! Dual degree Čech bifiltrations of finite measured metric spaces.

use crate::bifiltration::dowker::{degree_bifiltration, dowker_dual, DowkerDissimilarity};
use crate::error::Result;
use crate::measure::DiscreteMeasure;
use crate::metric::FiniteMetricSpace;
use crate::staircase::BifilteredComplex;

/// Intrinsic DC on `S = supp(mu)`: witnesses range over `S` only.
/// Vertices keep their indices in `space`.
pub fn intrinsic_dc(space: &FiniteMetricSpace, mu: &DiscreteMeasure, dim_cap: usize) -> Result<BifilteredComplex> {
    mu.check_len(space.len(), "measure")?;
    let s = mu.support();
    let lambda = DowkerDissimilarity::sub_metric(space, &s, &s);
    let f = degree_bifiltration(&lambda, &mu.restrict(&s)?)?;
    dowker_dual(&lambda, &f, dim_cap)
}

/// DC of `mu` seen inside the whole finite space: witnesses range over every
/// point of `space`, vertices over `supp(mu)`.
pub fn ambient_dc_finite(space: &FiniteMetricSpace, mu: &DiscreteMeasure, dim_cap: usize) -> Result<BifilteredComplex> {
    mu.check_len(space.len(), "measure")?;
    let s = mu.support();
    let all: Vec<usize> = (0..space.len()).collect();
    let lambda = DowkerDissimilarity::sub_metric(space, &all, &s);
    let f = degree_bifiltration(&lambda, &mu.restrict(&s)?)?;
    dowker_dual(&lambda, &f, dim_cap)
}

/// Restriction of a bifiltration to simplices spanned by the sorted vertex set `support`.
pub fn restrict_to_support(k: &BifilteredComplex, support: &[usize]) -> BifilteredComplex {
    let entries = k
        .entries()
        .iter()
        .filter(|(s, _)| s.vertices().iter().all(|v| support.binary_search(v).is_ok()))
        .map(|(s, st)| (s.clone(), st.clone()))
        .collect();
    BifilteredComplex::new_unchecked(support.to_vec(), entries, k.dim_cap())
}

/// Halves the radius axis: `K'_{m,r} = K_{m,2r}`.
pub fn measure_dowker_reindex(k: &BifilteredComplex) -> BifilteredComplex {
    k.rescale_radius(2.0)
}
