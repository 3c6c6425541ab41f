//! Betti numbers, free resolutions, Ext windows and depth-type
//! classification for positively determined modules.

mod betti;
mod classify;
mod ext;
mod resolution;
mod taylor;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::boxmod::ModuleError;
use crate::lattice::{map_sqrt, ExponentVector};
use crate::linalg::LinalgError;

pub use betti::betti_table;
pub use classify::{classify, Classification};
pub use ext::{dual_t, ext_box, ext_canonical_nonnegative, ext_window, ext_window_a, ext_window_b, ExtSides};
pub use resolution::{minimal_resolution, FreeComplex};
pub use taylor::{taylor_oracle, TAYLOR_GENERATOR_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologicalError {
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("the Taylor oracle accepts at most {cap} generators, got {got}")]
    TooManyGenerators { cap: usize, got: usize },
    #[error("the zero module has no depth or Cohen-Macaulay type")]
    ZeroModule,
    #[error("complex is not exact at position {position} in degree {degree}")]
    NotExact {
        position: usize,
        degree: ExponentVector,
    },
    #[error("adjacent maps at position {0} do not compose to zero")]
    NotAComplex(usize),
}

/// Multigraded Betti numbers `β_{i,a}`; only nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, ExponentVector), usize>,
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable::default()
    }

    pub fn add(&mut self, i: usize, a: ExponentVector, count: usize) {
        if count > 0 {
            *self.entries.entry((i, a)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, a: &ExponentVector) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// Nonzero entries sorted by `(i, a)` with `a` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &ExponentVector, usize)> {
        self.entries.iter().map(|((i, a), &m)| (*i, a, m))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// The multiset of shifts in homological position `i`.
    pub fn row(&self, i: usize) -> Vec<ExponentVector> {
        let mut out = Vec::new();
        for ((j, a), &m) in &self.entries {
            if *j == i {
                out.extend(std::iter::repeat_n(a.clone(), m));
            }
        }
        out
    }

    /// `β_{i,j}` with `j` the total degree.
    pub fn by_total_degree(&self) -> BTreeMap<(usize, i64), usize> {
        let mut out = BTreeMap::new();
        for ((i, a), &m) in &self.entries {
            *out.entry((*i, a.total_degree())).or_insert(0) += m;
        }
        out
    }

    /// `Σ_{√a = b} β_{i,a}`, indexed by `(i, b)`.
    pub fn aggregated_by_support(&self) -> BTreeMap<(usize, ExponentVector), usize> {
        let mut out = BTreeMap::new();
        for ((i, a), &m) in &self.entries {
            let b = map_sqrt(a).expect("Betti degrees are nonnegative");
            *out.entry((*i, b)).or_insert(0) += m;
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((i, a), m) in &self.entries {
            writeln!(f, "{i}  {a}  {m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
