//! Shared oracles and generators for the integration suites.
//!
//! The complement oracles here re-derive everything from the definition of
//! an n-complement — integral divisors of degree `(d+1)n` dominating
//! `nS + floor((n+1)B)` — without calling the production floor-sum
//! criterion, so agreement between the two is a real check.

#![allow(dead_code)]

use complements::boundary::Boundary;
use complements::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;

/// Definition-level lower bound for `n * d_i^+` at one label, computed with
/// integer division on the raw numerator and denominator (independent of
/// `Rational::floor` and of `complement_coeff`).
pub fn definition_lower_bound(coeff: &Rational, n: u64) -> u64 {
    if coeff.is_one() {
        // reduced components stay reduced: n * 1 + floor((n+1) * 0)
        return n;
    }
    let num = coeff.numer() * BigInt::from(n + 1);
    let bound = num.div_floor(coeff.denom());
    u64::try_from(&bound).expect("bound fits for coefficients in [0, 1)")
}

/// Exhaustive oracle: search every integral vector `e` in the box
/// `[0, n]^r` for one with `e_i >= bound_i` and `sum e_i <= (dim+1) n`
/// (the slack is fresh generic mass, fillable in parts of size at most n).
pub fn oracle_has_complement_exhaustive(coeffs: &[Rational], n: u64, dim: u32) -> bool {
    let bounds: Vec<u64> = coeffs.iter().map(|c| definition_lower_bound(c, n)).collect();
    let target = (dim as u64 + 1) * n;
    let mut e = vec![0u64; coeffs.len()];
    loop {
        let sum: u64 = e.iter().sum();
        if sum <= target && e.iter().zip(&bounds).all(|(ei, bi)| ei >= bi) {
            return true;
        }
        // odometer over the box
        let mut k = 0;
        loop {
            if k == e.len() {
                return false;
            }
            if e[k] < n {
                e[k] += 1;
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

/// Depth-first oracle over the same search space, pruned by suffix sums of
/// the definition-level lower bounds. Used on grids too large for the full
/// box sweep.
pub fn oracle_has_complement_dfs(coeffs: &[Rational], n: u64, dim: u32) -> bool {
    let bounds: Vec<u64> = coeffs.iter().map(|c| definition_lower_bound(c, n)).collect();
    let target = (dim as u64 + 1) * n;
    let mut suffix = vec![0u64; bounds.len() + 1];
    for k in (0..bounds.len()).rev() {
        suffix[k] = suffix[k + 1] + bounds[k];
    }
    fn recurse(k: usize, sum: u64, n: u64, target: u64, bounds: &[u64], suffix: &[u64]) -> bool {
        if sum + suffix[k] > target {
            return false;
        }
        if k == bounds.len() {
            return true;
        }
        for e in bounds[k]..=n {
            if recurse(k + 1, sum + e, n, target, bounds, suffix) {
                return true;
            }
        }
        false
    }
    recurse(0, 0, n, target, &bounds, &suffix)
}

/// Minimal complement index by the exhaustive oracle, searching `n <= cap`.
pub fn oracle_compl(coeffs: &[Rational], cap: u64, dim: u32) -> Option<u64> {
    (1..=cap).find(|&n| oracle_has_complement_exhaustive(coeffs, n, dim))
}

pub fn coeffs_of(boundary: &Boundary) -> Vec<Rational> {
    boundary.iter().map(|(_, c)| c.clone()).collect()
}

/// Random rational in `[0, 1]` with denominator at most `max_denom`.
pub fn random_unit_rational(rng: &mut impl Rng, max_denom: u64) -> Rational {
    let q = rng.gen_range(1..=max_denom);
    let p = rng.gen_range(0..=q);
    Rational::ratio(p as i64, q as i64)
}

/// Random boundary on distinct labels with degree at most `max_degree`.
pub fn random_boundary(
    rng: &mut impl Rng,
    max_points: usize,
    max_denom: u64,
    max_degree: i64,
) -> Boundary {
    loop {
        let r = rng.gen_range(0..=max_points);
        let entries: Vec<(String, Rational)> = (0..r)
            .map(|i| (format!("P{}", i + 1), random_unit_rational(rng, max_denom)))
            .collect();
        let b = Boundary::new(entries).expect("generated coefficients lie in [0,1]");
        if b.degree() <= Rational::from_integer(max_degree) {
            return b;
        }
    }
}

/// All coefficient multisets of size at most `max_points` drawn from
/// `values` (which must be sorted ascending) with total at most
/// `max_degree`. Emitted as nondecreasing tuples, each exactly once.
pub fn all_boundaries_up_to_degree(
    values: &[Rational],
    max_points: usize,
    max_degree: &Rational,
) -> Vec<Vec<Rational>> {
    fn recurse(
        values: &[Rational],
        start: usize,
        left: usize,
        current: &mut Vec<Rational>,
        degree: &Rational,
        max_degree: &Rational,
        out: &mut Vec<Vec<Rational>>,
    ) {
        out.push(current.clone());
        if left == 0 {
            return;
        }
        for v in start..values.len() {
            let next_degree = degree + &values[v];
            if &next_degree > max_degree {
                break; // values ascend, so later ones overflow too
            }
            current.push(values[v].clone());
            recurse(values, v, left - 1, current, &next_degree, max_degree, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    recurse(
        values,
        0,
        max_points,
        &mut current,
        &Rational::zero(),
        max_degree,
        &mut out,
    );
    out
}

/// Farey-style list of all fractions in [0, 1] with denominator <= max_denom.
pub fn unit_fractions_up_to(max_denom: u64) -> Vec<Rational> {
    let mut out = Vec::new();
    for q in 1..=max_denom {
        for p in 0..=q {
            out.push(Rational::ratio(p as i64, q as i64));
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn boundary_from_coeffs(coeffs: &[Rational]) -> Boundary {
    Boundary::new(
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("P{}", i + 1), c.clone())),
    )
    .expect("coefficients lie in [0,1]")
}
