//! The different-coefficient formula and closure of standard coefficients
//! under adjunction.
//!
//! A coefficient of the different along a divisor has the shape
//! `alpha = (m-1)/m + sum_j b_j n_j / m` with `m` the local index and `n_j`
//! the multiplicities of the boundary components `b_j` meeting the divisor.
//! The module computes the formula only; which `m` and `n_j` arise from
//! actual geometry is the caller's business (the dual-graph module supplies
//! them for surfaces).

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sets::CoefficientSet;

/// Input to the different formula: local index `m` and boundary terms
/// `(b_j, n_j)` with `b_j` in `(0, 1)` and integer multiplicities `n_j >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentInput {
    m: u64,
    terms: Vec<(Rational, u64)>,
}

impl DifferentInput {
    pub fn new(m: u64, terms: impl IntoIterator<Item = (Rational, u64)>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidDifferent("local index m must be positive".into()));
        }
        let terms: Vec<(Rational, u64)> = terms.into_iter().collect();
        for (b, _) in &terms {
            if !b.is_positive() || b >= &Rational::one() {
                return Err(Error::InvalidDifferent(format!(
                    "term coefficient {b} must lie in (0, 1)"
                )));
            }
        }
        Ok(DifferentInput { m, terms })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn terms(&self) -> &[(Rational, u64)] {
        &self.terms
    }

    /// `(m-1)/m + sum_j b_j n_j / m`, exactly. Errors when the result
    /// exceeds 1, i.e. the pair is not lc along the divisor.
    pub fn different_coefficient(&self) -> Result<Rational> {
        let m = Rational::from(self.m);
        let weighted: Rational = self
            .terms
            .iter()
            .map(|(b, n)| b * &Rational::from(*n))
            .sum();
        let alpha = (Rational::from(self.m - 1) + weighted) / m;
        if alpha > Rational::one() {
            return Err(Error::NotLcAlongDivisor(alpha));
        }
        Ok(alpha)
    }

    /// Closure test: with every `b_j` in `set` (standard or one of its
    /// interval extensions), does the different coefficient land in `set`
    /// again? A `false` here on inputs satisfying `sum n_j <= 1` would
    /// contradict the closure property, so it is assertion-worthy.
    pub fn closure_check(&self, set: &CoefficientSet) -> Result<bool> {
        if matches!(set, CoefficientSet::Union { .. }) {
            return Err(Error::UnsupportedCoefficientSet);
        }
        for (b, _) in &self.terms {
            if !set.is_member(b)? {
                return Err(Error::NotInSet(b.clone()));
            }
        }
        let alpha = self.different_coefficient()?;
        set.is_member(&alpha)
    }

    /// Closure of the standard set is only guaranteed when `sum n_j <= 1`
    /// (which follows from `b_j >= 1/2`); the formula itself is total, so a
    /// violation is reported as a warning, not an error.
    pub fn hypothesis_warning(&self) -> Option<String> {
        let total: u64 = self.terms.iter().map(|(_, n)| n).sum();
        (total > 1).then(|| {
            format!(
                "sum of multiplicities is {total} > 1: the different coefficient may \
                 leave the standard set"
            )
        })
    }
}
