//! Symbolic coefficient sets with exact membership.
//!
//! The standard set `Msm = {1 - 1/m : m in N ∪ {inf}}` (coefficient 1 plays
//! the role of `m = inf`), its interval extensions `M_m^d = Msm ∪ [1 -
//! 1/(N_{d-1}+1), 1]`, and plain finite unions of closed intervals and
//! isolated points.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A subset of `[0, 1]` that boundary coefficients are tested against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoefficientSet {
    /// The standard coefficients `{0, 1/2, 2/3, 3/4, ..., 1}`.
    Msm,
    /// `Msm ∪ [tail_low, 1]`, the set `M_m^d`; `tail_low = 1 - 1/(N_{d-1}+1)`.
    Mmd { dim: u32, tail_low: Rational },
    /// A finite union of closed intervals and isolated points.
    Union {
        intervals: Vec<(Rational, Rational)>,
        points: Vec<Rational>,
    },
}

impl CoefficientSet {
    /// Exact membership test. Errors if `alpha` lies outside `[0, 1]`.
    pub fn is_member(&self, alpha: &Rational) -> Result<bool> {
        if !alpha.in_unit_interval() {
            return Err(Error::CoefficientOutOfRange(alpha.clone()));
        }
        Ok(match self {
            CoefficientSet::Msm => in_msm(alpha),
            CoefficientSet::Mmd { tail_low, .. } => in_msm(alpha) || alpha >= tail_low,
            CoefficientSet::Union { intervals, points } => {
                intervals.iter().any(|(lo, hi)| lo <= alpha && alpha <= hi)
                    || points.contains(alpha)
            }
        })
    }

    /// For `alpha = 1 - 1/m` in `Msm`, the multiplicity `m`; `None` when
    /// `alpha` is not a finite standard coefficient (coefficient 1 included).
    pub fn standard_multiplicity(alpha: &Rational) -> Option<u64> {
        if !alpha.in_unit_interval() || alpha.is_one() {
            return None;
        }
        let rest = Rational::one() - alpha;
        if rest.numer().is_one() {
            // 1 - alpha = 1/m
            u64::try_from(rest.denom()).ok()
        } else {
            None
        }
    }
}

/// `alpha = 1` or `1/(1 - alpha)` a positive integer.
fn in_msm(alpha: &Rational) -> bool {
    alpha.is_one() || CoefficientSet::standard_multiplicity(alpha).is_some()
}

impl fmt::Display for CoefficientSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientSet::Msm => write!(f, "Msm"),
            CoefficientSet::Mmd { tail_low, .. } => write!(f, "Msm ∪ [{tail_low}, 1]"),
            CoefficientSet::Union { intervals, points } => {
                let mut parts: Vec<String> = intervals
                    .iter()
                    .map(|(lo, hi)| format!("[{lo}, {hi}]"))
                    .collect();
                parts.extend(points.iter().map(|p| format!("{{{p}}}")));
                if parts.is_empty() {
                    write!(f, "∅")
                } else {
                    write!(f, "{}", parts.join(" ∪ "))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn msm_membership() {
        let msm = CoefficientSet::Msm;
        assert!(msm.is_member(&Rational::ratio(6, 7)).unwrap());
        assert!(!msm.is_member(&Rational::ratio(5, 8)).unwrap());
        assert!(msm.is_member(&Rational::zero()).unwrap());
        assert!(msm.is_member(&Rational::one()).unwrap());
        assert!(msm.is_member(&Rational::ratio(1, 2)).unwrap());
        assert!(!msm.is_member(&Rational::ratio(2, 5)).unwrap());
        assert!(matches!(
            msm.is_member(&Rational::ratio(9, 8)),
            Err(Error::CoefficientOutOfRange(_))
        ));
    }

    #[test]
    fn mm2_membership() {
        let mm2 = CoefficientSet::Mmd {
            dim: 2,
            tail_low: Rational::ratio(6, 7),
        };
        // 9/10 is not standard but lies in the tail [6/7, 1]
        assert!(mm2.is_member(&Rational::ratio(9, 10)).unwrap());
        assert!(!mm2.is_member(&Rational::ratio(5, 8)).unwrap());
        assert!(mm2.is_member(&Rational::ratio(3, 4)).unwrap());
    }

    #[test]
    fn union_membership() {
        let set = CoefficientSet::Union {
            intervals: vec![(Rational::ratio(1, 3), Rational::ratio(1, 2))],
            points: vec![Rational::ratio(9, 10)],
        };
        assert!(set.is_member(&Rational::ratio(2, 5)).unwrap());
        assert!(set.is_member(&Rational::ratio(9, 10)).unwrap());
        assert!(!set.is_member(&Rational::ratio(8, 10)).unwrap());
    }

    #[test]
    fn multiplicity_recovery() {
        assert_eq!(
            CoefficientSet::standard_multiplicity(&Rational::ratio(6, 7)),
            Some(7)
        );
        assert_eq!(
            CoefficientSet::standard_multiplicity(&Rational::zero()),
            Some(1)
        );
        assert_eq!(CoefficientSet::standard_multiplicity(&Rational::one()), None);
        assert_eq!(
            CoefficientSet::standard_multiplicity(&Rational::ratio(5, 8)),
            None
        );
    }
}
