//! Exact piecewise-linear log-canonical-threshold machinery.
//!
//! A threshold problem is a finite table of prime-divisor rows. Row `E`
//! carries the discrepancy `disD = a(E, D)`, the multiplicity `multDelta =
//! mult_E(D' - D)` of the direction divisor, and `multF = mult_E(F) >= 0`.
//! Along the segment `D(alpha) = D + alpha (D' - D)` the discrepancy of `E`
//! in `D(alpha) + beta F` is affine:
//!
//! ```text
//! a(E, D(alpha) + beta F) = disD - alpha * multDelta - beta * multF,
//! ```
//!
//! so the threshold `sigma(alpha) = sup { beta : lc }` is the lower envelope
//! of the affine functions `(1 + disD - alpha * multDelta) / multF` over the
//! rows with `multF > 0` — piecewise linear, continuous and concave, with
//! rational breakpoints. Rows with `multF = 0` never constrain `sigma`; they
//! only participate in activity and in the critical parameter `alpha0`, the
//! largest `alpha` keeping the distinguished row at discrepancy exactly -1.
//!
//! Whether a user-supplied table is complete (lists every relevant divisor
//! of some log resolution) cannot be checked here; completeness is a caller
//! obligation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// One prime-divisor row of a threshold problem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Row {
    pub label: String,
    #[serde(rename = "disD")]
    pub dis_d: Rational,
    #[serde(rename = "multDelta")]
    pub mult_delta: Rational,
    #[serde(rename = "multF")]
    pub mult_f: Rational,
}

/// A threshold problem: rows plus the distinguished label `S` with
/// `a(S, D) = -1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdProblem {
    rows: Vec<Row>,
    s_label: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    rows: Vec<Row>,
    #[serde(rename = "S")]
    s: String,
}

/// One affine piece of a piecewise-linear function on `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Piece {
    #[serde(rename = "from")]
    pub lo: Rational,
    #[serde(rename = "to")]
    pub hi: Rational,
    pub slope: Rational,
    pub intercept: Rational,
}

/// A continuous piecewise-linear function covering `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PiecewiseLinear {
    pub pieces: Vec<Piece>,
}

impl Piece {
    pub fn eval(&self, x: &Rational) -> Rational {
        &self.slope * x + &self.intercept
    }
}

impl PiecewiseLinear {
    /// Exact lower envelope of `value = slope * x + intercept` lines over
    /// `[0, 1]`: pairwise intersections give the candidate breakpoints, a
    /// midpoint probe picks the dominating line on each cell, and equal
    /// neighbours are merged.
    pub fn lower_envelope(lines: &[(Rational, Rational)]) -> Self {
        assert!(!lines.is_empty(), "envelope of no lines");
        let mut cuts = vec![Rational::zero(), Rational::one()];
        for (i, (s1, t1)) in lines.iter().enumerate() {
            for (s2, t2) in lines.iter().skip(i + 1) {
                if s1 == s2 {
                    continue;
                }
                let x = (t2 - t1) / (s1 - s2);
                if x.is_positive() && x < Rational::one() {
                    cuts.push(x);
                }
            }
        }
        cuts.sort();
        cuts.dedup();
        let mut pieces: Vec<Piece> = Vec::new();
        for w in cuts.windows(2) {
            let (lo, hi) = (w[0].clone(), w[1].clone());
            let mid = (&lo + &hi) / Rational::from_integer(2);
            let (slope, intercept) = lines
                .iter()
                .min_by(|(s1, t1), (s2, t2)| (s1 * &mid + t1).cmp(&(s2 * &mid + t2)))
                .cloned()
                .expect("lines is nonempty");
            match pieces.last_mut() {
                Some(prev) if prev.slope == slope && prev.intercept == intercept => {
                    prev.hi = hi;
                }
                _ => pieces.push(Piece { lo, hi, slope, intercept }),
            }
        }
        PiecewiseLinear { pieces }
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if !x.in_unit_interval() {
            return Err(Error::ParameterOutOfRange(x.clone()));
        }
        let piece = self
            .pieces
            .iter()
            .find(|p| &p.lo <= x && x <= &p.hi)
            .expect("pieces cover [0, 1]");
        Ok(piece.eval(x))
    }

    /// Breakpoints including both endpoints of `[0, 1]`.
    pub fn breakpoints(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self.pieces.iter().map(|p| p.lo.clone()).collect();
        out.push(self.pieces.last().expect("nonempty").hi.clone());
        out
    }

    /// Slopes nonincreasing from piece to piece.
    pub fn is_concave(&self) -> bool {
        self.pieces.windows(2).all(|w| w[0].slope >= w[1].slope)
    }
}

impl ThresholdProblem {
    pub fn new(rows: Vec<Row>, s_label: impl Into<String>) -> Result<Self> {
        let s_label = s_label.into();
        if rows.is_empty() {
            return Err(Error::InvalidTable("no rows".into()));
        }
        let mut labels: Vec<&str> = rows.iter().map(|r| r.label.as_str()).collect();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidTable("duplicate row label".into()));
        }
        let minus_one = Rational::ratio(-1, 1);
        for row in &rows {
            if row.dis_d < minus_one {
                return Err(Error::InvalidTable(format!(
                    "row {:?} has discrepancy {} < -1: K + D is not lc",
                    row.label, row.dis_d
                )));
            }
            if row.mult_f.is_negative() {
                return Err(Error::InvalidTable(format!(
                    "row {:?} has negative multF {}",
                    row.label, row.mult_f
                )));
            }
        }
        let s = rows
            .iter()
            .find(|r| r.label == s_label)
            .ok_or_else(|| Error::InvalidTable(format!("distinguished row {s_label:?} missing")))?;
        if s.dis_d != minus_one {
            return Err(Error::InvalidTable(format!(
                "distinguished row {:?} has a(S, D) = {}, expected -1",
                s_label, s.dis_d
            )));
        }
        Ok(ThresholdProblem { rows, s_label })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: TableFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidTable(e.to_string()))?;
        ThresholdProblem::new(file.rows, file.s)
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn s_label(&self) -> &str {
        &self.s_label
    }

    fn s_row(&self) -> &Row {
        self.rows
            .iter()
            .find(|r| r.label == self.s_label)
            .expect("validated at construction")
    }

    /// `sigma(alpha) = min over rows with multF > 0 of
    /// `(1 + disD - alpha multDelta) / multF`. No clamping at 0: a zero or
    /// negative value records that some divisor is already (beyond) critical.
    pub fn sigma(&self) -> Result<PiecewiseLinear> {
        let lines: Vec<(Rational, Rational)> = self
            .rows
            .iter()
            .filter(|r| r.mult_f.is_positive())
            .map(|r| {
                let slope = -(&r.mult_delta / &r.mult_f);
                let intercept = (Rational::one() + &r.dis_d) / &r.mult_f;
                (slope, intercept)
            })
            .collect();
        if lines.is_empty() {
            return Err(Error::NoDivisorMeetsF);
        }
        Ok(PiecewiseLinear::lower_envelope(&lines))
    }

    /// `a(E, T(alpha))` for a given row, where `T(alpha) = D(alpha) +
    /// sigma(alpha) F`.
    fn discrepancy_along(&self, row: &Row, alpha: &Rational, sigma_at: &Rational) -> Rational {
        &row.dis_d - &(alpha * &row.mult_delta) - &(sigma_at * &row.mult_f)
    }

    /// The critical parameter: the largest `alpha` in `[0, 1]` with
    /// `a(S, T(alpha)) = -1`. Always defined: `a(S, T(0)) = -1` holds for
    /// every valid table, and `alpha0 = 1` is allowed.
    pub fn alpha0(&self) -> Result<Rational> {
        let sigma = self.sigma()?;
        let s = self.s_row();
        let mut best: Option<Rational> = None;
        for piece in &sigma.pieces {
            // h(alpha) = a(S, T(alpha)) + 1 restricted to this piece
            let b = -(&s.mult_delta + &(&piece.slope * &s.mult_f));
            let a = (Rational::one() + &s.dis_d) - &(&piece.intercept * &s.mult_f);
            if b.is_zero() {
                if a.is_zero() {
                    best = Some(piece.hi.clone());
                }
            } else {
                let root = -(&a / &b);
                if root >= piece.lo && root <= piece.hi {
                    let candidate = root;
                    if best.as_ref().is_none_or(|b| &candidate > b) {
                        best = Some(candidate);
                    }
                }
            }
        }
        let alpha0 = best.expect("a(S, T(0)) = -1 guarantees a zero at alpha = 0");
        debug_assert!({
            let v = sigma.eval(&alpha0).expect("alpha0 lies in [0,1]");
            self.discrepancy_along(s, &alpha0, &v) == Rational::ratio(-1, 1)
        });
        Ok(alpha0)
    }

    /// The active set at `alpha`: labels of all rows with
    /// `a(E, T(alpha)) = -1`. At least one row with `multF > 0` is always
    /// active (`T(alpha)` is maximally lc), and ties at breakpoints keep
    /// every tight label.
    pub fn active_rows(&self, alpha: &Rational) -> Result<Vec<String>> {
        let sigma = self.sigma()?;
        let value = sigma.eval(alpha)?;
        let minus_one = Rational::ratio(-1, 1);
        Ok(self
            .rows
            .iter()
            .filter(|r| self.discrepancy_along(r, alpha, &value) == minus_one)
            .map(|r| r.label.clone())
            .collect())
    }
}
