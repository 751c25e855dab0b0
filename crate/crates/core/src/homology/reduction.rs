//! Sparse boundary matrix reduction with clearing.

use std::collections::HashMap;

use crate::simplex::Simplex;

/// Result of reducing a filtered boundary matrix: `(birth, death)` index
/// pairs and the indices of unpaired (essential) simplices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Reduction {
    pub pairs: Vec<(usize, usize)>,
    pub essential: Vec<usize>,
}

fn add_into(target: &mut Vec<usize>, other: &[usize]) {
    let mut out = Vec::with_capacity(target.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() && j < other.len() {
        match target[i].cmp(&other[j]) {
            std::cmp::Ordering::Less => {
                out.push(target[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(other[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&target[i..]);
    out.extend_from_slice(&other[j..]);
    *target = out;
}

/// Reduces the boundary matrix of `order`, which must list every face
/// before its cofaces. Panics if a facet is missing.
pub fn reduce(order: &[Simplex]) -> Reduction {
    let index: HashMap<&Simplex, usize> = order.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let max_dim = order.iter().map(Simplex::dim).max().unwrap_or(0);
    let mut by_dim: Vec<Vec<usize>> = vec![Vec::new(); max_dim + 1];
    for (i, s) in order.iter().enumerate() {
        by_dim[s.dim()].push(i);
    }
    let mut cleared = vec![false; order.len()];
    let mut paired = vec![false; order.len()];
    let mut pivot_col: Vec<Option<usize>> = vec![None; order.len()];
    let mut reduced: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
    let mut pairs = Vec::new();
    for d in (1..=max_dim).rev() {
        for &j in &by_dim[d] {
            if cleared[j] {
                continue;
            }
            let mut col: Vec<usize> = order[j]
                .facets()
                .iter()
                .map(|f| *index.get(f).unwrap_or_else(|| panic!("facet {f} of {} is not in the filtration", order[j])))
                .collect();
            col.sort_unstable();
            while let Some(&low) = col.last() {
                match pivot_col[low] {
                    Some(k) => add_into(&mut col, &reduced[k]),
                    None => break,
                }
            }
            if let Some(&low) = col.last() {
                pivot_col[low] = Some(j);
                cleared[low] = true;
                paired[low] = true;
                paired[j] = true;
                pairs.push((low, j));
                reduced[j] = col;
            }
        }
    }
    pairs.sort_unstable();
    let essential = (0..order.len()).filter(|&i| !paired[i]).collect();
    Reduction { pairs, essential }
}
