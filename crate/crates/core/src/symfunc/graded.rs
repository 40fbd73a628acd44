use std::collections::BTreeMap;

use super::SymSeries;
use crate::error::{ChowError, Result};

/// A series split into homogeneous components indexed by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSeries {
    n_max: usize,
    components: BTreeMap<usize, SymSeries>,
}

impl GradedSeries {
    pub fn new(n_max: usize) -> Self {
        GradedSeries { n_max, components: BTreeMap::new() }
    }

    /// Splits a series by degree; zero components are not stored.
    pub fn from_series(s: &SymSeries) -> Self {
        let mut g = GradedSeries::new(s.n_max());
        for n in 0..=s.n_max() {
            let c = s.component(n);
            if !c.is_zero() {
                g.components.insert(n, c);
            }
        }
        g
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Stores component `n`; it must be homogeneous of degree `n`.
    pub fn set(&mut self, n: usize, c: SymSeries) -> Result<()> {
        if !c.is_homogeneous(n) {
            return Err(ChowError::NotHomogeneous(n));
        }
        if n > self.n_max {
            return Err(ChowError::OutOfRange(format!("component {n} above n_max {}", self.n_max)));
        }
        if c.is_zero() {
            self.components.remove(&n);
        } else {
            self.components.insert(n, c.truncate(self.n_max));
        }
        Ok(())
    }

    pub fn component(&self, n: usize) -> SymSeries {
        self.components.get(&n).cloned().unwrap_or_else(|| SymSeries::zero(self.n_max))
    }

    pub fn components(&self) -> &BTreeMap<usize, SymSeries> {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Sum of all components as one series.
    pub fn total(&self) -> SymSeries {
        self.components.values().fold(SymSeries::zero(self.n_max), |acc, c| acc.add(c))
    }
}
