//! Complements for boundaries on general-position hyperplane arrangements
//! in projective d-space.
//!
//! The input is purely combinatorial: a dimension and the coefficient list.
//! General position makes the arrangement simple normal crossing, so log
//! canonicity depends on the coefficients alone and `-(K+D)` is nef iff
//! `deg D <= d + 1`. Linear triviality of `n(K+D^+)` on `P^d` says
//! `deg D^+ = d + 1` exactly, and padding by fresh generic hyperplanes is
//! optimal, so the floor-sum criterion
//! `sum_i complement_coeff(d_i, n) <= (d+1) n` is exact.

use serde::Serialize;

use crate::boundary::Boundary;
use crate::curve::ComplementReport;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::rounding::{complement_coeff, is_n_complement_coeffwise};
use crate::sets::CoefficientSet;

/// Convention note surfaced by the CLI whenever the reciprocal-sum tests
/// run. Both tests are derived from anticanonical degrees on `P^d`.
pub const NEF_CONVENTION_NOTE: &str = "nef and exceptionality are degree tests: for standard \
coefficients 1 - 1/m_i on d+2 hyperplanes, -(K+D) is nef iff sum(1/m_i) >= 1, and the pair is \
candidate-exceptional iff every proper subsum sum_{i!=j}(1/m_i) stays strictly below 1";

/// A boundary supported on hyperplanes of `P^d` in general position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementPair {
    dim: u32,
    boundary: Boundary,
}

/// The finite table of candidate-exceptional collections in one dimension,
/// together with the largest multiplicity it realizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateEnumeration {
    pub dim: u32,
    pub const_bound: u64,
    pub collections: Vec<Vec<u64>>,
}

/// On-disk arrangement format: `{"dim": d, "boundary": [{"label", "coeff"}]}`.
#[derive(Debug, Clone, serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrangementFile {
    dim: u32,
    boundary: Boundary,
}

impl ArrangementPair {
    /// Errors with `NotNef` when `deg D > d + 1`.
    pub fn new(dim: u32, boundary: Boundary) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionTooSmall(1));
        }
        let degree = boundary.degree();
        let bound = Rational::from_integer(dim as i64 + 1);
        if degree > bound {
            return Err(Error::NotNef { degree, bound });
        }
        Ok(ArrangementPair { dim, boundary })
    }

    /// Arrangement of `d + 2` hyperplanes with standard coefficients
    /// `1 - 1/m_i`.
    pub fn from_collection(dim: u32, multiplicities: &[u64]) -> Result<Self> {
        ArrangementPair::new(dim, Boundary::from_collection(multiplicities)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ArrangementFile = serde_json::from_str(text)
            .map_err(|e| Error::InvalidBoundary(e.to_string()))?;
        ArrangementPair::new(file.dim, file.boundary)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn boundary(&self) -> &Boundary {
        &self.boundary
    }

    pub fn degree(&self) -> Rational {
        self.boundary.degree()
    }

    fn minimal_coeffs(&self, n: u64) -> (Vec<u64>, i128) {
        let coeffs: Vec<u64> = self
            .boundary
            .iter()
            .map(|(_, d)| complement_coeff(d, n))
            .collect();
        let total: i128 = coeffs.iter().map(|&c| c as i128).sum();
        let target = (self.dim as i128 + 1) * n as i128;
        (coeffs, target - total)
    }

    /// Floor-sum criterion for the existence of an n-complement.
    pub fn has_n_complement(&self, n: u64) -> bool {
        self.minimal_coeffs(n).1 >= 0
    }

    /// Canonical witness of degree exactly `d + 1`, padded by fresh generic
    /// hyperplanes; `None` when no n-complement exists.
    pub fn report_for(&self, n: u64) -> Option<ComplementReport> {
        let (coeffs, deficit) = self.minimal_coeffs(n);
        if deficit < 0 {
            return None;
        }
        let mut entries: Vec<(String, Rational)> = Vec::new();
        for ((label, _), &c) in self.boundary.iter().zip(&coeffs) {
            if c > 0 {
                entries.push((label.to_string(), Rational::ratio(c as i64, n as i64)));
            }
        }
        let mut remaining = deficit as u64;
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
        debug_assert!(witness.degree() == Rational::from_integer(self.dim as i64 + 1));
        debug_assert!(is_n_complement_coeffwise(&self.boundary, &witness, n));
        let klt = witness.iter().all(|(_, c)| !c.is_one());
        Some(ComplementReport { n, witness, klt })
    }

    /// Least `n <= cap` with an n-complement.
    pub fn compl(&self, cap: u64) -> Result<ComplementReport> {
        (1..=cap)
            .find_map(|n| self.report_for(n))
            .ok_or(Error::NoComplementUpTo(cap))
    }

    /// Necessary degree test for exceptionality: raising any single
    /// coefficient to 1 must break nef, and so must adding a fresh reduced
    /// hyperplane. Requires standard coefficients.
    pub fn candidate_exceptional(&self) -> Result<bool> {
        for (_, d) in self.boundary.iter() {
            if CoefficientSet::standard_multiplicity(d).is_none() {
                return Err(Error::NonStandardCoefficient(d.clone()));
            }
        }
        let deg = self.degree();
        let dim = Rational::from_integer(self.dim as i64);
        if deg <= dim {
            return Ok(false);
        }
        Ok(self.boundary.iter().all(|(_, d)| &deg - d > dim))
    }

    /// `(-(K+D))^d > d^d`, computed exactly from `deg(-(K+D)) = d+1-deg D`.
    /// When it holds, any reduced fresh hyperplane fits under every index:
    /// a non-klt n-complement exists for all `n`.
    pub fn degree_criterion(&self) -> bool {
        let anti = Rational::from_integer(self.dim as i64 + 1) - self.degree();
        let mut lhs = Rational::one();
        let mut rhs = Rational::one();
        for _ in 0..self.dim {
            lhs = lhs * &anti;
            rhs = rhs * Rational::from_integer(self.dim as i64);
        }
        lhs > rhs
    }
}

/// All candidate-exceptional standard collections `(m_1 <= ... <= m_{d+2})`
/// on `P^d`, found by branch-and-bound on partial reciprocal sums; reports
/// the effective bound `Const(d)` actually attained.
///
/// Sizes grow Sylvester-fast: 6 collections in dimension 1 (bound 6), 126
/// in dimension 2 (bound 42), 15321 in dimension 3 (bound 1806), and
/// 51682890 in dimension 4 (bound 3263442) — the last needs several GiB,
/// which is why the guard stops there.
pub fn enumerate_candidate_exceptional(dim: u32) -> Result<CandidateEnumeration> {
    if dim == 0 {
        return Err(Error::DimensionTooSmall(1));
    }
    if dim > 4 {
        return Err(Error::DimensionTooLarge(dim, 4));
    }
    let len = dim as usize + 2;
    let mut collections = crate::recip::bounded_unit_fraction_tuples(len, &Rational::one());
    collections.sort();
    let const_bound = collections
        .iter()
        .flatten()
        .copied()
        .max()
        .expect("the enumeration is never empty");
    Ok(CandidateEnumeration {
        dim,
        const_bound,
        collections,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurvePair;

    fn pair(dim: u32, coeffs: &[Rational]) -> ArrangementPair {
        let boundary = Boundary::new(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (format!("H{}", i + 1), c.clone())),
        )
        .unwrap();
        ArrangementPair::new(dim, boundary).unwrap()
    }

    fn ce8(r: u64) -> ArrangementPair {
        pair(
            2,
            &[
                Rational::ratio(1, 2),
                Rational::ratio(2, 3),
                Rational::ratio(4, 5),
                Rational::standard_coeff(r),
            ],
        )
    }

    #[test]
    fn ce8_diff_is_six_complementary() {
        let p = ce8(7);
        assert!(p.has_n_complement(6)); // 3 + 4 + 5 + 6 = 18 = 3*6
        assert!(!p.has_n_complement(5)); // 3 + 4 + 4 + 5 = 16 > 15
        assert_eq!(p.compl(100).unwrap().n, 6);
    }

    #[test]
    fn dimension_one_matches_curve() {
        let coeffs = [
            Rational::ratio(1, 2),
            Rational::ratio(7, 10),
            Rational::ratio(3, 4),
        ];
        let arr = pair(1, &coeffs);
        let curve = CurvePair::new(arr.boundary().clone()).unwrap();
        for n in 1..=10 {
            assert_eq!(arr.has_n_complement(n), curve.has_n_complement(n));
        }
    }

    #[test]
    fn reduced_hyperplanes_give_trivial_complement() {
        let empty = ArrangementPair::new(2, Boundary::empty()).unwrap();
        let report = empty.compl(100).unwrap();
        assert_eq!(report.n, 1);
        assert_eq!(report.witness.len(), 3); // three reduced generic lines
    }

    #[test]
    fn quadruple_three_quarters_in_p3() {
        // four reduced planes fit at n = 1: floor(2 * 3/4) = 1 each, 4 <= 4
        let p = pair(3, &vec![Rational::ratio(3, 4); 4]);
        assert!(p.has_n_complement(1));
        assert_eq!(p.compl(100).unwrap().n, 1);
    }

    #[test]
    fn not_nef_rejected() {
        let too_big = Boundary::new(
            (0..5).map(|i| (format!("H{i}"), Rational::ratio(9, 10))),
        )
        .unwrap();
        assert!(matches!(
            ArrangementPair::new(2, too_big),
            Err(Error::NotNef { .. })
        ));
    }

    #[test]
    fn candidate_exceptional_examples() {
        let e6 = ArrangementPair::from_collection(1, &[2, 3, 3]).unwrap();
        assert!(e6.candidate_exceptional().unwrap());
        let dn = ArrangementPair::from_collection(1, &[2, 2, 5]).unwrap();
        assert!(!dn.candidate_exceptional().unwrap());
        // (2,3,7,43) has reciprocal sum 1805/1806 < 1, so its degree exceeds
        // d + 1 and the pair is not even nef
        assert!(matches!(
            ArrangementPair::from_collection(2, &[2, 3, 7, 43]),
            Err(Error::NotNef { .. })
        ));
        // (2,3,7,42) reaches reciprocal sum exactly 1 and is the extremal
        // candidate on P^2
        let syl = ArrangementPair::from_collection(2, &[2, 3, 7, 42]).unwrap();
        assert!(syl.candidate_exceptional().unwrap());
        // (2,2,2,2) on P^2 has degree 2 = d: a fresh reduced line keeps nef
        let quad = ArrangementPair::from_collection(2, &[2, 2, 2, 2]).unwrap();
        assert!(!quad.candidate_exceptional().unwrap());

        let non_standard = pair(2, &[Rational::ratio(3, 5)]);
        assert!(matches!(
            non_standard.candidate_exceptional(),
            Err(Error::NonStandardCoefficient(_))
        ));
    }

    #[test]
    fn enumeration_dimension_one() {
        let result = enumerate_candidate_exceptional(1).unwrap();
        assert_eq!(
            result.collections,
            vec![
                vec![2, 3, 3],
                vec![2, 3, 4],
                vec![2, 3, 5],
                vec![2, 3, 6],
                vec![2, 4, 4],
                vec![3, 3, 3],
            ]
        );
        assert_eq!(result.const_bound, 6);
        // every collection passes the pair-level test
        for c in &result.collections {
            let p = ArrangementPair::from_collection(1, c).unwrap();
            assert!(p.candidate_exceptional().unwrap());
        }
        assert!(enumerate_candidate_exceptional(5).is_err());
    }

    #[test]
    fn degree_criterion_forces_nonklt_complements() {
        let small = pair(2, &[Rational::ratio(1, 3), Rational::ratio(2, 5)]);
        assert!(small.degree_criterion());
        for n in 1..=12 {
            let report = small.report_for(n).unwrap();
            assert!(!report.klt, "n={n} should admit a reduced fresh hyperplane");
        }
        let big = ce8(7);
        assert!(!big.degree_criterion());
    }

    #[test]
    fn zero_coefficient_never_changes_compl() {
        let base = ce8(11);
        let mut entries: Vec<(String, Rational)> = base
            .boundary()
            .iter()
            .map(|(l, c)| (l.to_string(), c.clone()))
            .collect();
        entries.push(("H_extra".into(), Rational::zero()));
        let padded = ArrangementPair::new(2, Boundary::new(entries).unwrap()).unwrap();
        assert_eq!(base.compl(100).unwrap().n, padded.compl(100).unwrap().n);
    }
}
