//! Registry of the bounds `N_d` and the value sets `N_d(Phi)`.
//!
//! Only the low-dimensional entries are established facts: `N_0 = 2` with
//! value set `{1, 2}` and `N_1 = 6` with value set `{1, 2, 3, 4, 6}`.
//! Entries for `d >= 2` are finite but have no published value, so they must
//! be supplied explicitly by the caller — never guessed.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sets::CoefficientSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementRegistry {
    known_n: BTreeMap<u32, u64>,
    known_sets: BTreeMap<u32, BTreeSet<u64>>,
}

impl Default for ComplementRegistry {
    fn default() -> Self {
        let mut r = ComplementRegistry {
            known_n: BTreeMap::new(),
            known_sets: BTreeMap::new(),
        };
        r.insert(0, 2, Some([1, 2].into_iter().collect()));
        r.insert(1, 6, Some([1, 2, 3, 4, 6].into_iter().collect()));
        r
    }
}

impl ComplementRegistry {
    /// Registers `N_d = value`, optionally with the full value set.
    pub fn insert(&mut self, dim: u32, value: u64, set: Option<BTreeSet<u64>>) {
        self.known_n.insert(dim, value);
        if let Some(set) = set {
            self.known_sets.insert(dim, set);
        }
    }

    /// `N_d`, if known.
    pub fn n_value(&self, dim: u32) -> Option<u64> {
        self.known_n.get(&dim).copied()
    }

    /// The value set `N_d(Phi)`, if known.
    pub fn known_set(&self, dim: u32) -> Option<&BTreeSet<u64>> {
        self.known_sets.get(&dim)
    }

    /// The coefficient set `M_m^d`. `M_m^1` is the standard set itself; for
    /// `d >= 2` it grows the tail `[1 - 1/(N_{d-1}+1), 1]`, which needs
    /// `N_{d-1}` from the registry.
    pub fn mmd(&self, dim: u32) -> Result<CoefficientSet> {
        if dim == 0 {
            return Err(Error::DimensionTooSmall(1));
        }
        if dim == 1 {
            return Ok(CoefficientSet::Msm);
        }
        let n_prev = self
            .n_value(dim - 1)
            .ok_or(Error::RegistryIncomplete(dim - 1))?;
        let tail_low = Rational::one()
            - Rational::new(1, n_prev as i64 + 1).expect("positive denominator");
        Ok(CoefficientSet::Mmd { dim, tail_low })
    }

    /// The discrepancy gap `delta_d = 1 / N_{d-1}`: over an exceptional pair
    /// of dimension `d`, every divisor other than the central one has
    /// discrepancy at least `-1 + delta_d`.
    pub fn delta(&self, dim: u32) -> Result<Rational> {
        if dim == 0 {
            return Err(Error::DimensionTooSmall(1));
        }
        let n_prev = self
            .n_value(dim - 1)
            .ok_or(Error::RegistryIncomplete(dim - 1))?;
        Rational::new(1, n_prev as i64)
    }
}
