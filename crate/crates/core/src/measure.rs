use crate::error::{Error, Result};

/// A finitely supported measure: one nonnegative weight per point.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasure {
    weights: Vec<f64>,
}

impl DiscreteMeasure {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        for (index, &value) in weights.iter().enumerate() {
            if !(value.is_finite() && value >= 0.0) {
                return Err(Error::InvalidWeight { index, value });
            }
        }
        if !weights.iter().any(|&w| w > 0.0) {
            return Err(Error::EmptySupport);
        }
        Ok(DiscreteMeasure { weights })
    }

    /// Counting measure on `n` points.
    pub fn counting(n: usize) -> Result<Self> {
        Self::new(vec![1.0; n])
    }

    /// Unit masses on `support`, zero elsewhere.
    pub fn counting_on(n: usize, support: &[usize]) -> Result<Self> {
        let mut w = vec![0.0; n];
        for &i in support {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, size: n });
            }
            w[i] = 1.0;
        }
        Self::new(w)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    #[inline]
    pub fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }

    /// Indices with positive weight, sorted.
    pub fn support(&self) -> Vec<usize> {
        (0..self.weights.len()).filter(|&i| self.weights[i] > 0.0).collect()
    }

    pub fn total(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Mass of a sorted index set. Summation always runs in increasing index
    /// order so equal sets produce bit-identical masses.
    pub fn mass(&self, set: &[usize]) -> f64 {
        set.iter().map(|&i| self.weights[i]).sum()
    }

    /// Mass of the points selected by `member`, in increasing index order.
    pub fn mass_where(&self, mut member: impl FnMut(usize) -> bool) -> f64 {
        let mut total = 0.0;
        for (i, &w) in self.weights.iter().enumerate() {
            if member(i) {
                total += w;
            }
        }
        total
    }

    /// Restriction to `subset`, reindexed in the given order.
    pub fn restrict(&self, subset: &[usize]) -> Result<DiscreteMeasure> {
        for &i in subset {
            if i >= self.len() {
                return Err(Error::IndexOutOfRange { index: i, size: self.len() });
            }
        }
        DiscreteMeasure::new(subset.iter().map(|&i| self.weights[i]).collect())
    }

    pub(crate) fn check_len(&self, n: usize, what: &'static str) -> Result<()> {
        if self.len() != n {
            Err(Error::DimensionMismatch { what, got: self.len(), expected: n })
        } else {
            Ok(())
        }
    }
}
