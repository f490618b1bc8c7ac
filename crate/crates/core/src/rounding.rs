//! The rounding inequality and the n-complement coefficient arithmetic.
//!
//! The three functions here are the arithmetic heart of every complement
//! criterion in the crate: the rounding inequality `floor((n+1)a) >= n*a`
//! (which makes complements dominate the original boundary over standard
//! coefficients), the minimal legal complement coefficient, and the
//! coefficientwise n-complement test.

use num_bigint::BigInt;

use crate::boundary::Boundary;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// `floor((n+1)*alpha) >= n*alpha`, computed exactly.
pub fn rounding_lemma_holds(alpha: &Rational, n: u64) -> Result<bool> {
    if !alpha.in_unit_interval() {
        return Err(Error::CoefficientOutOfRange(alpha.clone()));
    }
    let np1 = Rational::from(n + 1);
    let lhs = Rational::from_integer((np1 * alpha).floor());
    Ok(lhs >= Rational::from(n) * alpha)
}

/// Minimal integer `c` such that `c/n` is a legal n-complement coefficient
/// over `d`: `c = n` when `d = 1` (reduced components stay reduced), else
/// `c = floor((n+1)d)`. Always `c <= n`.
pub fn complement_coeff(d: &Rational, n: u64) -> u64 {
    assert!(n >= 1, "complement index must be positive");
    assert!(d.in_unit_interval(), "coefficient {d} outside [0, 1]");
    if d.is_one() {
        return n;
    }
    let c = (Rational::from(n + 1) * d).floor();
    debug_assert!(c >= BigInt::from(0) && c <= BigInt::from(n));
    u64::try_from(&c).expect("floor((n+1)d) fits in u64 for d in [0,1)")
}

/// Coefficientwise n-complement test: at every label (of either boundary),
/// `n * dplus` must be an integer at least [`complement_coeff`] of the
/// corresponding coefficient of `d`. Labels absent from one side count as
/// coefficient 0 there. Linear triviality is the caller's business.
pub fn is_n_complement_coeffwise(d: &Boundary, dplus: &Boundary, n: u64) -> bool {
    let mut labels: Vec<&str> = d.iter().map(|(l, _)| l).collect();
    labels.extend(dplus.iter().map(|(l, _)| l));
    labels.sort_unstable();
    labels.dedup();

    labels.into_iter().all(|label| {
        let scaled = Rational::from(n) * dplus.coeff(label);
        if !scaled.is_integer() {
            return false;
        }
        scaled >= Rational::from(complement_coeff(&d.coeff(label), n))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(entries: &[(&str, Rational)]) -> Boundary {
        Boundary::new(entries.iter().map(|(l, c)| (l.to_string(), c.clone()))).unwrap()
    }

    #[test]
    fn rounding_examples() {
        assert!(rounding_lemma_holds(&Rational::ratio(2, 3), 3).unwrap());
        assert!(!rounding_lemma_holds(&Rational::ratio(51, 100), 2).unwrap());
        assert!(rounding_lemma_holds(&Rational::ratio(6, 7), 6).unwrap());
        assert!(rounding_lemma_holds(&Rational::one(), 17).unwrap());
        assert!(rounding_lemma_holds(&Rational::zero(), 17).unwrap());
        assert!(rounding_lemma_holds(&Rational::ratio(3, 2), 2).is_err());
    }

    #[test]
    fn rounding_holds_on_standard_grid() {
        for m in 1..=200u64 {
            let alpha = Rational::standard_coeff(m);
            for n in 1..=200u64 {
                assert!(
                    rounding_lemma_holds(&alpha, n).unwrap(),
                    "failed at m={m}, n={n}"
                );
            }
        }
    }

    #[test]
    fn complement_coeff_examples() {
        assert_eq!(complement_coeff(&Rational::one(), 5), 5);
        assert_eq!(complement_coeff(&Rational::ratio(501, 1000), 2), 1);
        assert_eq!(complement_coeff(&Rational::ratio(4, 5), 6), 5);
        assert_eq!(complement_coeff(&Rational::zero(), 9), 0);
    }

    #[test]
    fn coeffwise_examples() {
        // a 2-complement of P1 + (1/2+e)P2 + (1/2-e)P3
        let d = b(&[
            ("P1", Rational::one()),
            ("P2", Rational::ratio(51, 100)),
            ("P3", Rational::ratio(49, 100)),
        ]);
        let dplus = b(&[
            ("P1", Rational::one()),
            ("P2", Rational::ratio(1, 2)),
            ("P3", Rational::ratio(1, 2)),
        ]);
        assert!(is_n_complement_coeffwise(&d, &dplus, 2));

        let reduced = b(&[("P", Rational::one())]);
        assert!(is_n_complement_coeffwise(&reduced, &reduced, 1));

        // 2 * (2/3) is not an integer, so the pair fails the integrality test
        let third = b(&[("P", Rational::ratio(2, 3))]);
        assert!(!is_n_complement_coeffwise(&third, &third, 2));
        assert!(is_n_complement_coeffwise(&third, &third, 3));
    }

    #[test]
    fn coeffwise_handles_missing_labels() {
        let d = b(&[("P", Rational::ratio(1, 2))]);
        let dplus = b(&[("Q", Rational::one())]);
        // P needs coefficient >= 1/n in D+, absent means 0: fails
        assert!(!is_n_complement_coeffwise(&d, &dplus, 2));
        // extra labels in D+ are fine as long as n*coeff is integral
        let dplus2 = b(&[("P", Rational::ratio(1, 2)), ("Q", Rational::one())]);
        assert!(is_n_complement_coeffwise(&d, &dplus2, 2));
    }

    proptest! {
        #[test]
        fn coeff_at_most_n(p in 0i64..=60, q in 1i64..=60, n in 1u64..=30) {
            let d = Rational::ratio(p.min(q), q);
            prop_assert!(complement_coeff(&d, n) <= n);
        }

        // d <= d' implies complement_coeff(d, n) <= complement_coeff(d', n)
        #[test]
        fn coeff_monotone(p1 in 0i64..=60, p2 in 0i64..=60, q in 1i64..=60, n in 1u64..=30) {
            let (lo, hi) = (p1.min(p2).min(q), p1.max(p2).min(q));
            let dlo = Rational::ratio(lo, q);
            let dhi = Rational::ratio(hi, q);
            prop_assert!(complement_coeff(&dlo, n) <= complement_coeff(&dhi, n));
        }
    }
}
