//! Abstract simplices and simplicial complexes with ghost vertices.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A nonempty, strictly increasing list of vertex labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedSimplex(vertices));
        }
        Ok(Simplex(vertices))
    }

    /// Sorts and deduplicates arbitrary labels.
    pub fn from_unsorted(mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        Self::new(vertices)
    }

    pub fn vertex(v: usize) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    /// Codimension-one faces in lexicographic order (empty for vertices).
    pub fn facets(&self) -> Vec<Simplex> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        (0..self.0.len())
            .rev()
            .map(|skip| {
                let v = self.0.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                Simplex(v)
            })
            .collect()
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    /// Image under a vertex map (sorted, duplicates collapsed).
    pub fn image(&self, map: impl Fn(usize) -> usize) -> Simplex {
        let mut v: Vec<usize> = self.0.iter().map(|&x| map(x)).collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    /// Vertices that also lie in the sorted set `keep`; `None` if none do.
    pub fn intersect(&self, keep: &[usize]) -> Option<Simplex> {
        let v: Vec<usize> = self.0.iter().copied().filter(|x| keep.binary_search(x).is_ok()).collect();
        if v.is_empty() {
            None
        } else {
            Some(Simplex(v))
        }
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// All subsets of the sorted `universe` with between 1 and `max_size`
/// vertices, ordered by size then lexicographically.
pub fn subsets_up_to(universe: &[usize], max_size: usize) -> Vec<Simplex> {
    let mut out = Vec::new();
    for size in 1..=max_size.min(universe.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(Simplex(idx.iter().map(|&i| universe[i]).collect()));
            // advance to the next combination
            let mut k = size;
            while k > 0 && idx[k - 1] == universe.len() - size + k - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            idx[k - 1] += 1;
            for j in k..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}

/// A simplicial complex over an explicit vertex universe. Universe members
/// need not appear as vertices (ghost vertices).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    universe: Vec<usize>,
    simplices: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    /// Builds a complex and checks downward closure and universe membership.
    pub fn new(universe: Vec<usize>, simplices: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let k = Self::new_unchecked(universe, simplices);
        k.validate()?;
        Ok(k)
    }

    pub(crate) fn new_unchecked(mut universe: Vec<usize>, simplices: impl IntoIterator<Item = Simplex>) -> Self {
        universe.sort_unstable();
        universe.dedup();
        SimplicialComplex { universe, simplices: simplices.into_iter().collect() }
    }

    /// Downward closure of the given generators.
    pub fn closure(universe: Vec<usize>, generators: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let mut all = BTreeSet::new();
        for g in generators {
            for face in subsets_up_to(g.vertices(), g.len()) {
                all.insert(face);
            }
        }
        Self::new(universe, all)
    }

    pub fn validate(&self) -> Result<()> {
        for s in &self.simplices {
            for &v in s.vertices() {
                if self.universe.binary_search(&v).is_err() {
                    return Err(Error::IndexOutOfRange { index: v, size: self.universe.len() });
                }
            }
            for f in s.facets() {
                if !self.simplices.contains(&f) {
                    return Err(Error::NotAnInclusion(f.vertices().to_vec()));
                }
            }
        }
        Ok(())
    }

    pub fn universe(&self) -> &[usize] {
        &self.universe
    }

    pub fn simplices(&self) -> &BTreeSet<Simplex> {
        &self.simplices
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Vertices that actually occur as 0-simplices.
    pub fn vertices(&self) -> Vec<usize> {
        self.simplices.iter().filter(|s| s.len() == 1).map(|s| s.vertices()[0]).collect()
    }

    pub fn dim(&self) -> Option<usize> {
        self.simplices.iter().map(Simplex::dim).max()
    }

    pub fn count_by_dim(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for s in &self.simplices {
            if counts.len() <= s.dim() {
                counts.resize(s.dim() + 1, 0);
            }
            counts[s.dim()] += 1;
        }
        counts
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.simplices.iter().all(|s| other.contains(s))
    }

    /// First simplex of `self` missing from `other`.
    pub fn first_missing_in(&self, other: &SimplicialComplex) -> Option<&Simplex> {
        self.simplices.iter().find(|s| !other.contains(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_invariants() {
        assert_eq!(Simplex::new(vec![]), Err(Error::EmptySimplex));
        assert!(matches!(Simplex::new(vec![2, 1]), Err(Error::UnsortedSimplex(_))));
        assert!(matches!(Simplex::new(vec![1, 1]), Err(Error::UnsortedSimplex(_))));
        assert_eq!(Simplex::from_unsorted(vec![3, 1, 3]).unwrap().vertices(), &[1, 3]);
    }

    #[test]
    fn facets_and_faces() {
        let s = Simplex::new(vec![0, 1, 2]).unwrap();
        let f: Vec<Vec<usize>> = s.facets().iter().map(|x| x.vertices().to_vec()).collect();
        assert_eq!(f, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(Simplex::new(vec![0, 2]).unwrap().is_face_of(&s));
        assert!(!Simplex::new(vec![0, 3]).unwrap().is_face_of(&s));
    }

    #[test]
    fn subsets_enumeration() {
        let all = subsets_up_to(&[1, 4, 7, 9], 3);
        assert_eq!(all.len(), 4 + 6 + 4);
        assert_eq!(all[4].vertices(), &[1, 4]);
        assert_eq!(all.last().unwrap().vertices(), &[4, 7, 9]);
        assert!(subsets_up_to(&[], 3).is_empty());
    }

    #[test]
    fn closure_allows_ghosts_and_rejects_open_sets() {
        let k = SimplicialComplex::closure(vec![0, 1, 2], [Simplex::new(vec![0, 1]).unwrap()]).unwrap();
        assert_eq!(k.len(), 3);
        assert_eq!(k.vertices(), vec![0, 1]);
        let bad = SimplicialComplex::new(vec![0, 1], [Simplex::new(vec![0, 1]).unwrap()]);
        assert!(bad.is_err());
    }
}
