//! Export of one homological degree in a firep-style text format.
//!
//! ```text
//! firep
//! radius
//! negated_mass
//! <t> <s> <r>
//! <generator lines for degree d+1>
//! <generator lines for degree d>
//! ```
//!
//! `t`, `s` and `r` count generators in degrees `d+1`, `d` and `d-1`. A
//! generator line is `x y ; i j ...`: its bigrade (radius, negated mass) and
//! the indices of the generators of the next lower degree in its boundary.
//! The mass axis is negated so both grades are nondecreasing. Each
//! staircase step `(r_k, m_k)` of a simplex becomes one generator of
//! bigrade `(r_k, -m_k)`; its boundary names, for each facet, the facet's
//! generator of largest radius not exceeding `r_k`. Simplices are listed by
//! dimension, then lexicographically, steps in increasing radius.

use std::collections::HashMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::simplex::Simplex;
use crate::staircase::BifilteredComplex;

fn fmt_grade(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else {
        format!("{v}")
    }
}

/// Generators of one dimension: `(simplex, step index, r, m)`.
fn generators(k: &BifilteredComplex, dim: usize) -> Vec<(&Simplex, usize, f64, f64)> {
    k.entries()
        .iter()
        .filter(|(s, _)| s.dim() == dim)
        .flat_map(|(s, st)| st.steps().iter().enumerate().map(move |(i, &(r, m))| (s, i, r, m)))
        .collect()
}

pub fn export_firep(k: &BifilteredComplex, degree: usize) -> Result<String> {
    if degree + 1 > k.dim_cap() {
        return Err(Error::UnsupportedDimension { degree, dim_cap: k.dim_cap() });
    }
    let high = generators(k, degree + 1);
    let mid = generators(k, degree);
    let low = if degree == 0 { Vec::new() } else { generators(k, degree - 1) };
    let mut out = format!("firep\nradius\nnegated_mass\n{} {} {}\n", high.len(), mid.len(), low.len());
    for (gens, lower) in [(&high, &mid), (&mid, &low)] {
        let index: HashMap<(&Simplex, usize), usize> =
            lower.iter().enumerate().map(|(i, &(s, step, _, _))| ((s, step), i)).collect();
        for &(s, _, r, m) in gens.iter() {
            let mut bd: Vec<usize> = Vec::new();
            if !(degree == 0 && std::ptr::eq(gens, &mid)) {
                for f in s.facets() {
                    let st = k.staircase(&f).expect("facets of present simplices are present");
                    let step = st.steps().partition_point(|&(rf, _)| rf <= r) - 1;
                    bd.push(index[&(k.entries().get_key_value(&f).unwrap().0, step)]);
                }
            }
            bd.sort_unstable();
            write!(out, "{} {} ;", fmt_grade(r), fmt_grade(-m)).unwrap();
            for i in bd {
                write!(out, " {i}").unwrap();
            }
            out.push('\n');
        }
    }
    Ok(out)
}
