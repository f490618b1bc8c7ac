//! Complements and exceptionality for boundaries on the projective line.
//!
//! On `P^1` a ratio of degrees replaces all geometry: `-(K+D)` is nef iff
//! `deg D <= 2`, log canonicity is automatic for distinct points with
//! coefficients in `[0, 1]`, and `n(K+D^+) ~ 0` iff `deg D^+ = 2` exactly.
//! An n-complement therefore exists iff the minimal legal coefficients
//! `complement_coeff(d_i, n)` sum to at most `2n`; the remaining mass is
//! filled by fresh points in general position. Witnesses built here are the
//! canonical minimal ones: existing labels get exactly their minimal
//! coefficient and the deficit is padded greedily by reduced fresh points.

use serde::Serialize;

use crate::boundary::Boundary;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::rounding::{complement_coeff, is_n_complement_coeffwise};
use crate::sets::CoefficientSet;

/// Search cap for minimal complement indices when the coefficients are not
/// standard and no a-priori bound on the index is available.
pub const DEFAULT_SEARCH_CAP: u64 = 100;

/// When `D` has standard coefficients the minimal index is one of
/// `{1, 2, 3, 4, 6}`, so the search never needs to pass 6.
pub const STANDARD_SEARCH_BOUND: u64 = 6;

/// A boundary on `P^1` with `-(K+D)` nef.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePair {
    boundary: Boundary,
}

/// An explicit n-complement: the witness boundary of degree exactly 2,
/// together with the klt flag of the witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementReport {
    pub n: u64,
    pub witness: Boundary,
    pub klt: bool,
}

impl CurvePair {
    /// Errors with `NotNef` when `deg D > 2`.
    pub fn new(boundary: Boundary) -> Result<Self> {
        let degree = boundary.degree();
        if degree > Rational::from_integer(2) {
            return Err(Error::NotNef {
                degree,
                bound: Rational::from_integer(2),
            });
        }
        Ok(CurvePair { boundary })
    }

    /// Pair with standard coefficients `1 - 1/m_i` at points `P1, ..., Pr`.
    pub fn from_collection(multiplicities: &[u64]) -> Result<Self> {
        CurvePair::new(Boundary::from_collection(multiplicities)?)
    }

    pub fn boundary(&self) -> &Boundary {
        &self.boundary
    }

    pub fn degree(&self) -> Rational {
        self.boundary.degree()
    }

    fn is_standard(&self) -> bool {
        self.boundary
            .lies_in(&CoefficientSet::Msm)
            .expect("boundary coefficients lie in [0,1]")
    }

    /// Minimal coefficients `c_i = complement_coeff(d_i, n)` and the deficit
    /// `2n - sum c_i` (negative when no n-complement exists).
    fn minimal_coeffs(&self, n: u64) -> (Vec<u64>, i128) {
        let coeffs: Vec<u64> = self
            .boundary
            .iter()
            .map(|(_, d)| complement_coeff(d, n))
            .collect();
        let total: i128 = coeffs.iter().map(|&c| c as i128).sum();
        (coeffs, 2 * n as i128 - total)
    }

    /// True iff some n-complement exists.
    pub fn has_n_complement(&self, n: u64) -> bool {
        self.minimal_coeffs(n).1 >= 0
    }

    /// The canonical witness for index `n`, or `None` when no n-complement
    /// exists.
    pub fn report_for(&self, n: u64) -> Option<ComplementReport> {
        let (coeffs, deficit) = self.minimal_coeffs(n);
        if deficit < 0 {
            return None;
        }
        let witness = self.build_witness(n, &coeffs, deficit as u64, None);
        let klt = witness.iter().all(|(_, c)| !c.is_one());
        Some(ComplementReport { n, witness, klt })
    }

    /// Assembles a witness from integer coefficients `n * d_i^+`, padding
    /// `deficit` with fresh generic points. `raise` lifts one existing label
    /// to coefficient 1 (used by the non-klt search).
    fn build_witness(&self, n: u64, coeffs: &[u64], deficit: u64, raise: Option<usize>) -> Boundary {
        let mut entries: Vec<(String, Rational)> = Vec::new();
        let mut remaining = deficit;
        for (i, ((label, _), &c)) in self.boundary.iter().zip(coeffs).enumerate() {
            let c = if raise == Some(i) {
                remaining -= n - c;
                n
            } else {
                c
            };
            if c > 0 {
                entries.push((label.to_string(), Rational::ratio(c as i64, n as i64)));
            }
        }
        let mut k = 0;
        while remaining > 0 {
            k += 1;
            let label = format!("_generic_{k}");
            if self.boundary.contains_label(&label) {
                continue;
            }
            let part = remaining.min(n);
            entries.push((label, Rational::ratio(part as i64, n as i64)));
            remaining -= part;
        }
        let witness = Boundary::new(entries).expect("witness coefficients lie in [0,1]");
        debug_assert!(witness.degree() == Rational::from_integer(2));
        debug_assert!(is_n_complement_coeffwise(&self.boundary, &witness, n));
        witness
    }

    /// `compl`: the least `n <= cap` with an n-complement. With standard
    /// coefficients the scan stops at 6.
    pub fn compl(&self, cap: u64) -> Result<ComplementReport> {
        let bound = if self.is_standard() {
            cap.min(STANDARD_SEARCH_BOUND)
        } else {
            cap
        };
        (1..=bound)
            .find_map(|n| self.report_for(n))
            .ok_or(Error::NoComplementUpTo(bound))
    }

    /// `compll`: the least `n <= cap` admitting a non-klt n-complement, with
    /// a non-klt witness. Exceptional pairs have none for any `n`, so the
    /// search fails with the cap.
    pub fn compll(&self, cap: u64) -> Result<ComplementReport> {
        for n in 1..=cap {
            let (coeffs, deficit) = self.minimal_coeffs(n);
            if deficit < 0 {
                continue;
            }
            let deficit = deficit as u64;
            if coeffs.contains(&n) {
                // the minimal witness is already non-klt
                let report = self.report_for(n).expect("deficit is nonnegative");
                debug_assert!(!report.klt);
                return Ok(report);
            }
            // cheapest way to force a coefficient 1: raise the label with the
            // largest minimal coefficient, or add a fresh reduced point
            let best = coeffs.iter().enumerate().max_by_key(|(_, &c)| c);
            let raise_cost = best.map(|(_, &c)| n - c);
            if raise_cost.is_some_and(|cost| cost <= deficit) {
                let (idx, _) = best.expect("raise cost came from an entry");
                let witness = self.build_witness(n, &coeffs, deficit, Some(idx));
                return Ok(ComplementReport { n, witness, klt: false });
            }
            if deficit >= n {
                let witness = self.build_witness(n, &coeffs, deficit, None);
                debug_assert!(witness.iter().any(|(_, c)| c.is_one()));
                return Ok(ComplementReport { n, witness, klt: false });
            }
        }
        Err(Error::NoComplementUpTo(cap))
    }

    /// Global exceptionality: every `Q`-complement `D' >= D` of degree 2 is
    /// klt. This holds iff `deg D > 1` (a fresh reduced point would break
    /// nef) and raising any single coefficient to 1 breaks nef
    /// (`sum_{i != j} d_i > 1` for every `j`).
    ///
    /// The definition presupposes that some complement exists, which is
    /// automatic here: with `n` the common denominator of the coefficients,
    /// `floor((n+1) d_i) = n d_i` exactly and the floor sum is
    /// `n deg D <= 2n`.
    pub fn is_exceptional(&self) -> bool {
        let deg = self.degree();
        if deg <= Rational::one() {
            return false;
        }
        self.boundary
            .iter()
            .all(|(_, d)| &deg - d > Rational::one())
    }
}

/// All exceptional standard collections `(m_1 <= ... <= m_r)` with at most
/// `max_points` points. Degree `<= 2` forces `r <= 4`, so the answer is the
/// same seven collections for every `max_points >= 4`.
///
/// In reciprocal form the two defining conditions become
/// `sum_{i<r} 1/m_i < r - 2 <= sum_i 1/m_i` (nef plus exceptionality, the
/// latter binding at the largest entry), which is the bounded unit-fraction
/// search of [`crate::recip`].
pub fn enumerate_exceptional_standard(max_points: u32) -> Result<Vec<Vec<u64>>> {
    if max_points < 3 {
        return Err(Error::TooFewPoints(3));
    }
    let mut out = Vec::new();
    for r in 3..=max_points.min(4) as usize {
        let target = Rational::from_integer(r as i64 - 2);
        out.extend(crate::recip::bounded_unit_fraction_tuples(r, &target));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}
