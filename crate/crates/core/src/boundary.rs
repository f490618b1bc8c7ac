//! Boundaries `D = sum d_i D_i` at the coefficient level.
//!
//! A boundary is a finite multiset of prime-divisor labels with rational
//! coefficients in `[0, 1]`. Geometry (which labels are points, hyperplanes
//! or exceptional curves) lives in the consuming modules; labels here are
//! opaque. Entries are kept in a canonical order — coefficient descending,
//! then label — so that witnesses and serialized output are deterministic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sets::CoefficientSet;

/// One component of a boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryEntry {
    pub label: String,
    pub coeff: Rational,
}

/// A boundary divisor, canonically ordered, with distinct labels and all
/// coefficients in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundary {
    entries: Vec<BoundaryEntry>,
}

impl Boundary {
    pub fn new(entries: impl IntoIterator<Item = (String, Rational)>) -> Result<Self> {
        let mut entries: Vec<BoundaryEntry> = entries
            .into_iter()
            .map(|(label, coeff)| BoundaryEntry { label, coeff })
            .collect();
        for e in &entries {
            if !e.coeff.in_unit_interval() {
                return Err(Error::CoefficientOutOfRange(e.coeff.clone()));
            }
        }
        entries.sort_by(|a, b| b.coeff.cmp(&a.coeff).then_with(|| a.label.cmp(&b.label)));
        for w in entries.windows(2) {
            if w[0].label == w[1].label {
                return Err(Error::InvalidBoundary(format!(
                    "duplicate label {:?}",
                    w[0].label
                )));
            }
        }
        // duplicate detection above relies on coefficient-major order, so
        // re-check across the whole list
        let mut labels: Vec<&str> = entries.iter().map(|e| e.label.as_str()).collect();
        labels.sort_unstable();
        for w in labels.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidBoundary(format!("duplicate label {:?}", w[0])));
            }
        }
        Ok(Boundary { entries })
    }

    pub fn empty() -> Self {
        Boundary { entries: Vec::new() }
    }

    /// Boundary with standard coefficients `1 - 1/m_i` at fresh points
    /// `P1, ..., Pr`.
    pub fn from_collection(multiplicities: &[u64]) -> Result<Self> {
        if multiplicities.contains(&0) {
            return Err(Error::InvalidBoundary("multiplicity 0 in collection".into()));
        }
        Boundary::new(
            multiplicities
                .iter()
                .enumerate()
                .map(|(i, &m)| (format!("P{}", i + 1), Rational::standard_coeff(m))),
        )
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BoundaryEntry] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Rational)> {
        self.entries.iter().map(|e| (e.label.as_str(), &e.coeff))
    }

    /// Coefficient at `label`; absent labels have coefficient 0.
    pub fn coeff(&self, label: &str) -> Rational {
        self.entries
            .iter()
            .find(|e| e.label == label)
            .map(|e| e.coeff.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn contains_label(&self, label: &str) -> bool {
        self.entries.iter().any(|e| e.label == label)
    }

    /// `deg D = sum d_i`.
    pub fn degree(&self) -> Rational {
        self.entries.iter().map(|e| &e.coeff).sum()
    }

    /// Labels of `S = floor(D)`, the reduced components (coefficient 1).
    pub fn reduced_labels(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| e.coeff.is_one())
            .map(|e| e.label.as_str())
            .collect()
    }

    /// True iff every coefficient lies in `set`.
    pub fn lies_in(&self, set: &CoefficientSet) -> Result<bool> {
        for e in &self.entries {
            if !set.is_member(&e.coeff)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coefficientwise comparison: `self >= other` at every label.
    pub fn dominates(&self, other: &Boundary) -> bool {
        other.entries.iter().all(|e| self.coeff(&e.label) >= e.coeff)
    }
}

impl Serialize for Boundary {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Boundary {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<BoundaryEntry>::deserialize(d)?;
        Boundary::new(entries.into_iter().map(|e| (e.label, e.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(entries: &[(&str, Rational)]) -> Boundary {
        Boundary::new(entries.iter().map(|(l, c)| (l.to_string(), c.clone()))).unwrap()
    }

    #[test]
    fn canonical_order_is_coeff_desc_then_label() {
        let d = b(&[
            ("P1", Rational::ratio(1, 2)),
            ("P3", Rational::ratio(2, 3)),
            ("P2", Rational::ratio(2, 3)),
        ]);
        let labels: Vec<&str> = d.iter().map(|(l, _)| l).collect();
        assert_eq!(labels, vec!["P2", "P3", "P1"]);
    }

    #[test]
    fn rejects_out_of_range_and_duplicates() {
        assert!(matches!(
            Boundary::new([("P".to_string(), Rational::ratio(3, 2))]),
            Err(Error::CoefficientOutOfRange(_))
        ));
        assert!(Boundary::new([
            ("P".to_string(), Rational::ratio(1, 2)),
            ("P".to_string(), Rational::ratio(1, 3)),
        ])
        .is_err());
    }

    #[test]
    fn degree_and_reduced_part() {
        let d = b(&[
            ("P1", Rational::one()),
            ("P2", Rational::ratio(51, 100)),
            ("P3", Rational::ratio(49, 100)),
        ]);
        assert_eq!(d.degree(), Rational::from_integer(2));
        assert_eq!(d.reduced_labels(), vec!["P1"]);
    }

    #[test]
    fn collection_coefficients() {
        let d = Boundary::from_collection(&[2, 3, 5]).unwrap();
        assert_eq!(d.coeff("P1"), Rational::ratio(1, 2));
        assert_eq!(d.coeff("P2"), Rational::ratio(2, 3));
        assert_eq!(d.coeff("P3"), Rational::ratio(4, 5));
    }

    proptest! {
        #[test]
        fn json_roundtrip(coeffs in proptest::collection::vec((0i64..=60, 1i64..=60), 0..6)) {
            let entries: Vec<(String, Rational)> = coeffs
                .iter()
                .enumerate()
                .map(|(i, &(p, q))| {
                    let c = Rational::ratio(p.min(q), q);
                    (format!("P{i}"), c)
                })
                .collect();
            let d = Boundary::new(entries).unwrap();
            let text = serde_json::to_string(&d).unwrap();
            let back: Boundary = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, d);
        }
    }
}
