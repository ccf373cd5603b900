//! Monotone piecewise-defined scalar functions.
//!
//! These house the closed forms the two-item mechanisms are built from:
//! breakpoints partition the domain and each segment carries a closed
//! piece descriptor. Interpolation tables are supported for data-driven
//! pieces, but the mechanism functions themselves use closed forms so
//! downstream checks can rely on 1e-9 accuracy.

use crate::error::{Error, Result};
use crate::numeric::central_diff;

/// Closed-form (or tabulated) descriptor of one segment.
///
/// `LogForm` evaluates `a0 + a1*s + ar/s + al*ln(ls*s)` where `s` is
/// the argument itself, or `1 - t` when `reflect` is set.
#[derive(Debug, Clone, PartialEq)]
pub enum Piece {
    Constant(f64),
    Affine { intercept: f64, slope: f64 },
    LogForm { a0: f64, a1: f64, ar: f64, al: f64, ls: f64, reflect: bool },
    /// Piecewise-linear interpolation through sorted `(x, y)` knots.
    Table(Vec<(f64, f64)>),
}

impl Piece {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            Piece::Constant(c) => *c,
            Piece::Affine { intercept, slope } => intercept + slope * t,
            Piece::LogForm { a0, a1, ar, al, ls, reflect } => {
                let s = if *reflect { 1.0 - t } else { t };
                let mut v = a0 + a1 * s;
                if *ar != 0.0 {
                    v += ar / s;
                }
                if *al != 0.0 {
                    v += al * (ls * s).ln();
                }
                v
            }
            Piece::Table(knots) => {
                let n = knots.len();
                if t <= knots[0].0 {
                    return knots[0].1;
                }
                if t >= knots[n - 1].0 {
                    return knots[n - 1].1;
                }
                let i = knots.partition_point(|(x, _)| *x <= t);
                let (x0, y0) = knots[i - 1];
                let (x1, y1) = knots[i];
                y0 + (y1 - y0) * (t - x0) / (x1 - x0)
            }
        }
    }

    /// Derivative; exact for closed forms, finite differences for tables.
    pub fn derivative(&self, t: f64) -> f64 {
        match self {
            Piece::Constant(_) => 0.0,
            Piece::Affine { slope, .. } => *slope,
            Piece::LogForm { a1, ar, al, reflect, .. } => {
                let s = if *reflect { 1.0 - t } else { t };
                let d = a1 - ar / (s * s) + al / s;
                if *reflect {
                    -d
                } else {
                    d
                }
            }
            Piece::Table(_) => central_diff(|x| self.eval(x), t, 1e-7),
        }
    }
}

/// A nondecreasing function on `[breakpoints[0], breakpoints.last()]`
/// given by one piece per consecutive breakpoint interval.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseFunction {
    breakpoints: Vec<f64>,
    pieces: Vec<Piece>,
}

/// Continuity tolerance at interior breakpoints.
pub const CONTINUITY_TOL: f64 = 1e-10;
const MONOTONE_SAMPLES: usize = 10_000;

impl PiecewiseFunction {
    /// Builds and validates: breakpoints sorted, pieces cover every
    /// interval, continuity at interior breakpoints within 1e-10, and
    /// nondecreasing on a 10^4-point sample.
    pub fn new(breakpoints: Vec<f64>, pieces: Vec<Piece>) -> Result<Self> {
        if breakpoints.len() < 2 || pieces.len() != breakpoints.len() - 1 {
            return Err(Error::Piecewise(format!(
                "{} breakpoints need {} pieces, got {}",
                breakpoints.len(),
                breakpoints.len().saturating_sub(1),
                pieces.len()
            )));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Piecewise("breakpoints not strictly increasing".into()));
        }
        let f = Self { breakpoints, pieces };
        for (i, bp) in f.breakpoints[1..f.breakpoints.len() - 1].iter().enumerate() {
            let left = f.pieces[i].eval(*bp);
            let right = f.pieces[i + 1].eval(*bp);
            if (left - right).abs() > CONTINUITY_TOL {
                return Err(Error::Piecewise(format!(
                    "discontinuity {:.3e} at breakpoint {bp}",
                    (left - right).abs()
                )));
            }
        }
        let (lo, hi) = f.domain();
        let mut prev = f.eval(lo);
        for k in 1..=MONOTONE_SAMPLES {
            let t = lo + (hi - lo) * k as f64 / MONOTONE_SAMPLES as f64;
            let v = f.eval(t);
            if v < prev - CONTINUITY_TOL {
                return Err(Error::Piecewise(format!("not nondecreasing near t = {t}")));
            }
            prev = v;
        }
        Ok(f)
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.breakpoints[0], *self.breakpoints.last().unwrap())
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// Index of the piece covering `t` (clamped to the domain).
    fn piece_index(&self, t: f64) -> usize {
        let n = self.pieces.len();
        self.breakpoints[1..self.breakpoints.len() - 1]
            .partition_point(|bp| *bp < t)
            .min(n - 1)
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.pieces[self.piece_index(t)].eval(t)
    }

    /// One-sided-agnostic derivative: the derivative of the piece
    /// covering `t`. Not meaningful exactly at a breakpoint where the
    /// function has a kink.
    pub fn derivative(&self, t: f64) -> f64 {
        self.pieces[self.piece_index(t)].derivative(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_discontinuous_and_decreasing_functions() {
        let jump = PiecewiseFunction::new(
            vec![0.0, 0.5, 1.0],
            vec![Piece::Constant(0.0), Piece::Constant(1.0)],
        );
        assert!(jump.is_err());

        let decreasing = PiecewiseFunction::new(
            vec![0.0, 1.0],
            vec![Piece::Affine { intercept: 1.0, slope: -1.0 }],
        );
        assert!(decreasing.is_err());
    }

    #[test]
    fn evaluates_log_form_pieces() {
        // 0.5 - t + ln(2t) on [1/2, 1], value 0 at 1/2
        let p = Piece::LogForm { a0: 0.5, a1: -1.0, ar: 0.0, al: 1.0, ls: 2.0, reflect: false };
        assert!(p.eval(0.5).abs() < 1e-15);
        assert!((p.eval(1.0) - (2.0_f64.ln() - 0.5)).abs() < 1e-15);
        // derivative 1/t - 1
        assert!((p.derivative(0.8) - (1.0 / 0.8 - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn table_piece_interpolates() {
        let p = Piece::Table(vec![(0.0, 0.0), (1.0, 2.0)]);
        assert!((p.eval(0.25) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn piece_lookup_covers_domain() {
        let f = PiecewiseFunction::new(
            vec![0.0, 0.5, 1.0],
            vec![
                Piece::Affine { intercept: 0.0, slope: 1.0 },
                Piece::Affine { intercept: 0.25, slope: 0.5 },
            ],
        )
        .unwrap();
        assert!((f.eval(0.25) - 0.25).abs() < 1e-15);
        assert!((f.eval(0.75) - 0.625).abs() < 1e-15);
        assert!((f.eval(1.0) - 0.75).abs() < 1e-15);
    }
}
