//! Bounded enumeration of unit-fraction tuples.
//!
//! Emits all sorted tuples `(m_1 <= ... <= m_r)` of integers `>= 2` with
//! `sum_{i < r} 1/m_i < target <= sum_i 1/m_i`. The strict inequality on the
//! first `r - 1` entries is exactly what makes the search finite: at every
//! level the nef-style lower bound `sum >= target` caps the next entry by
//! `(entries left) / (target - partial sum)`, the Sylvester-sequence bound.

use crate::rational::Rational;

pub(crate) fn bounded_unit_fraction_tuples(len: usize, target: &Rational) -> Vec<Vec<u64>> {
    assert!(len >= 1);
    assert!(target.is_positive());
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(len);
    recurse(len, target, &mut prefix, Rational::zero(), 2, &mut out);
    out
}

fn recurse(
    len: usize,
    target: &Rational,
    prefix: &mut Vec<u64>,
    recip_sum: Rational,
    min_m: u64,
    out: &mut Vec<Vec<u64>>,
) {
    let k = prefix.len();
    if k == len {
        debug_assert!(&recip_sum >= target);
        out.push(prefix.clone());
        return;
    }
    let slack = target - &recip_sum;
    debug_assert!(slack.is_positive());
    // the remaining len - k entries are all >= m, so the total can reach
    // target only if m <= (len - k) / slack
    let max_m = (Rational::from_integer((len - k) as i64) / &slack).floor();
    let Ok(max_m) = u64::try_from(&max_m) else {
        return;
    };
    for m in min_m..=max_m {
        let next_sum = &recip_sum + &Rational::ratio(1, m as i64);
        if k + 1 == len {
            // last entry: must reach the target
            if &next_sum >= target {
                prefix.push(m);
                recurse(len, target, prefix, next_sum, m, out);
                prefix.pop();
            }
        } else if &next_sum < target {
            // proper prefixes stay strictly below the target
            prefix.push(m);
            recurse(len, target, prefix, next_sum, m, out);
            prefix.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_reaching_one() {
        // (m1, m2) with 1/m1 < 1 <= 1/m1 + 1/m2: exactly (2,2)
        let tuples = bounded_unit_fraction_tuples(2, &Rational::one());
        assert_eq!(tuples, vec![vec![2, 2]]);
    }

    #[test]
    fn triples_reaching_one() {
        let tuples = bounded_unit_fraction_tuples(3, &Rational::one());
        let expected: Vec<Vec<u64>> = vec![
            vec![2, 3, 3],
            vec![2, 3, 4],
            vec![2, 3, 5],
            vec![2, 3, 6],
            vec![2, 4, 4],
            vec![3, 3, 3],
        ];
        let mut sorted = tuples.clone();
        sorted.sort();
        assert_eq!(sorted, expected);
        // Sylvester bound for two prior entries: 1/2 + 1/3 leaves 1/6
        assert_eq!(
            tuples.iter().map(|t| t[2]).max(),
            Some(6)
        );
    }

    #[test]
    fn matches_brute_force_for_quadruples() {
        let fast = bounded_unit_fraction_tuples(4, &Rational::one());
        let mut slow = Vec::new();
        // 42 = Sylvester bound for the last entry of a quadruple
        for a in 2..=50u64 {
            for b in a..=50 {
                for c in b..=50 {
                    for d in c..=50 {
                        let sum: Rational = [a, b, c, d]
                            .iter()
                            .map(|&m| Rational::ratio(1, m as i64))
                            .sum();
                        let head: Rational = [a, b, c]
                            .iter()
                            .map(|&m| Rational::ratio(1, m as i64))
                            .sum();
                        if head < Rational::one() && sum >= Rational::one() {
                            slow.push(vec![a, b, c, d]);
                        }
                    }
                }
            }
        }
        let mut fast_sorted = fast.clone();
        fast_sorted.sort();
        slow.sort();
        assert_eq!(fast_sorted, slow);
        // every entry respects the Sylvester bound 42
        assert!(fast.iter().flatten().all(|&m| m <= 42));
    }
}
