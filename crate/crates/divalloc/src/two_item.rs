//! Symmetric two-item mechanisms.
//!
//! With two items every normalized utility vector is `(t, 1-t)`, so a
//! symmetric mechanism is a single scalar function `A(b1, b2)` — the
//! fraction of item 1 handed to agent 1 — with the remaining three
//! allocation entries given by swapping agents and complementing bids:
//!
//! ```text
//! A11 = A(b1, b2)    A12 = A(1-b1, 1-b2)
//! A21 = A(b2, b1)    A22 = A(1-b2, 1-b1)
//! ```
//!
//! This module holds the 5/6-competitive full mechanism derived from
//! the shape `A(t1, t2) = f(t1) - f(t2) + 1/2`, and the partial family
//! built from `(f1, f2, Q, R)` with opponent-bid rounding.

use std::path::Path;
use std::sync::Arc;

use crate::core::{Allocation, MechanismHandle};
use crate::error::{Error, Result};
use crate::piecewise::{Piece, PiecewiseFunction};

/// A symmetric mechanism on two items, described by its scalar
/// allocation function plus the breakpoints of its piecewise structure.
#[derive(Clone)]
pub struct SymmetricTwoItemMechanism {
    label: String,
    a_fn: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
    breakpoints: Vec<f64>,
}

impl std::fmt::Debug for SymmetricTwoItemMechanism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SymmetricTwoItemMechanism")
            .field("label", &self.label)
            .field("breakpoints", &self.breakpoints)
            .finish()
    }
}

impl SymmetricTwoItemMechanism {
    /// `breakpoints` are the interior points where `A(., b2)` may be
    /// non-differentiable; checkers avoid their neighborhoods.
    pub fn new<F>(label: impl Into<String>, breakpoints: Vec<f64>, a_fn: F) -> Self
    where
        F: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            label: label.into(),
            a_fn: Arc::new(a_fn),
            breakpoints,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// The scalar allocation function `A(b1, b2)`.
    pub fn a(&self, b1: f64, b2: f64) -> f64 {
        (self.a_fn)(b1, b2)
    }

    /// The full 2x2 allocation under the symmetry convention.
    pub fn allocation(&self, b1: f64, b2: f64) -> Result<Allocation> {
        Allocation::new(
            vec![self.a(b1, b2), self.a(1.0 - b1, 1.0 - b2)],
            vec![self.a(b2, b1), self.a(1.0 - b2, 1.0 - b1)],
        )
    }

    /// Wraps into a generic mechanism over two-item utility vectors.
    pub fn to_handle(&self) -> MechanismHandle {
        let this = self.clone();
        MechanismHandle::new(self.label.clone(), move |b1, b2| {
            if b1.num_items() != 2 {
                return Err(Error::InvalidInput(format!(
                    "symmetric two-item mechanism got {} items",
                    b1.num_items()
                )));
            }
            this.allocation(b1.first(), b2.first())
        })
    }
}

/// Truthful utility of agent 1 with type `(b1, 1-b1)` facing bid `b2`:
/// `b1 * A(b1,b2) + (1-b1) * A(1-b1,1-b2)`.
pub fn u_hat(mech: &SymmetricTwoItemMechanism, b1: f64, b2: f64) -> f64 {
    b1 * mech.a(b1, b2) + (1.0 - b1) * mech.a(1.0 - b1, 1.0 - b2)
}

/// The four-piece function behind the 5/6-competitive mechanism:
/// zero up to 1/5, two log pieces, constant 1/2 from 4/5.
pub fn f_five_sixths(t: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::InvalidInput(format!("t = {t} outside [0,1]")));
    }
    Ok(if t <= 0.2 {
        0.0
    } else if t <= 0.5 {
        5.0 / 6.0 - 1.0 / (6.0 * t) - (5.0 * t).ln() / 6.0
    } else if t <= 0.8 {
        0.5 - (5.0 - 5.0 * t).ln() / 6.0
    } else {
        0.5
    })
}

/// The same function as an explicit [`PiecewiseFunction`].
pub fn five_sixths_f() -> PiecewiseFunction {
    PiecewiseFunction::new(
        vec![0.0, 0.2, 0.5, 0.8, 1.0],
        vec![
            Piece::Constant(0.0),
            Piece::LogForm { a0: 5.0 / 6.0, a1: 0.0, ar: -1.0 / 6.0, al: -1.0 / 6.0, ls: 5.0, reflect: false },
            Piece::LogForm { a0: 0.5, a1: 0.0, ar: 0.0, al: -1.0 / 6.0, ls: 5.0, reflect: true },
            Piece::Constant(0.5),
        ],
    )
    .expect("closed-form pieces are continuous and nondecreasing")
}

/// The 5/6-competitive full mechanism `A(b1,b2) = f(b1) - f(b2) + 1/2`.
pub fn five_sixths_mechanism() -> SymmetricTwoItemMechanism {
    SymmetricTwoItemMechanism::new("five-sixths", vec![0.2, 0.8], |b1, b2| {
        let f = |t: f64| f_five_sixths(t.clamp(0.0, 1.0)).expect("clamped");
        f(b1) - f(b2) + 0.5
    })
}

/// `f1(t) = t` on `[0, 1/2]`, the partial family's first branch.
pub fn partial_f1() -> PiecewiseFunction {
    PiecewiseFunction::new(
        vec![0.0, 0.5],
        vec![Piece::Affine { intercept: 0.0, slope: 1.0 }],
    )
    .expect("affine piece is valid")
}

/// `f2(t) = ln(2t) - t + 1/2` on `[1/2, 1]`, the branch coupled to
/// `f1(t) = t` by `t f1'(t) = (1-t) f2'(1-t)`.
pub fn partial_f2() -> PiecewiseFunction {
    PiecewiseFunction::new(
        vec![0.5, 1.0],
        vec![Piece::LogForm { a0: 0.5, a1: -1.0, ar: 0.0, al: 1.0, ls: 2.0, reflect: false }],
    )
    .expect("log piece is valid")
}

/// Solved `Q, R` tables on the grid of multiples of `1/n`, together
/// with the feasibility headroom `delta` and the certified objective.
#[derive(Debug, Clone, PartialEq)]
pub struct QRTables {
    pub n: usize,
    pub q_values: Vec<f64>,
    pub r_values: Vec<f64>,
    pub delta: f64,
    pub lambda: f64,
}

impl QRTables {
    pub fn new(n: usize, q_values: Vec<f64>, r_values: Vec<f64>, delta: f64, lambda: f64) -> Result<Self> {
        if q_values.len() != n + 1 || r_values.len() != n + 1 {
            return Err(Error::InvalidInput(format!(
                "expected {} table entries, got {} and {}",
                n + 1,
                q_values.len(),
                r_values.len()
            )));
        }
        if q_values.iter().chain(&r_values).any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidInput("Q, R entries must be nonnegative".into()));
        }
        Ok(Self { n, q_values, r_values, delta, lambda })
    }

    pub fn max_q(&self) -> f64 {
        self.q_values.iter().cloned().fold(0.0, f64::max)
    }

    /// Writes the `t,q,r` CSV and the `key=value` metadata sidecar.
    pub fn save(&self, csv_path: &Path, meta_path: &Path) -> Result<()> {
        let mut csv = String::from("t,q,r\n");
        for i in 0..=self.n {
            csv.push_str(&format!(
                "{},{},{}\n",
                i as f64 / self.n as f64,
                self.q_values[i],
                self.r_values[i]
            ));
        }
        std::fs::write(csv_path, csv)?;
        let meta = format!("n={}\ndelta={}\nlambda={}\n", self.n, self.delta, self.lambda);
        std::fs::write(meta_path, meta)?;
        Ok(())
    }

    pub fn load(csv_path: &Path, meta_path: &Path) -> Result<Self> {
        let meta = std::fs::read_to_string(meta_path)?;
        let mut n = None;
        let mut delta = None;
        let mut lambda = None;
        for line in meta.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad metadata line: {line}")))?;
            match key.trim() {
                "n" => n = Some(value.trim().parse::<usize>().map_err(|e| Error::Parse(e.to_string()))?),
                "delta" => delta = Some(value.trim().parse::<f64>().map_err(|e| Error::Parse(e.to_string()))?),
                "lambda" => lambda = Some(value.trim().parse::<f64>().map_err(|e| Error::Parse(e.to_string()))?),
                other => return Err(Error::Parse(format!("unknown metadata key: {other}"))),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("metadata missing n".into()))?;
        let csv = std::fs::read_to_string(csv_path)?;
        let mut q = Vec::with_capacity(n + 1);
        let mut r = Vec::with_capacity(n + 1);
        for (ln, line) in csv.lines().enumerate() {
            if ln == 0 {
                continue; // header
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 3 {
                return Err(Error::Parse(format!("bad CSV row: {line}")));
            }
            q.push(fields[1].trim().parse::<f64>().map_err(|e| Error::Parse(e.to_string()))?);
            r.push(fields[2].trim().parse::<f64>().map_err(|e| Error::Parse(e.to_string()))?);
        }
        Self::new(
            n,
            q,
            r,
            delta.ok_or_else(|| Error::Parse("metadata missing delta".into()))?,
            lambda.ok_or_else(|| Error::Parse("metadata missing lambda".into()))?,
        )
    }
}

/// Rounds to the nearest multiple of `1/n`, halfway cases away from
/// 1/2. That tie rule keeps the rounding compatible with the bid
/// symmetry — `round(1 - t) = 1 - round(t)` — which the allocation
/// convention (and hence strategyproofness) relies on at exact
/// half-grid bids. Halfway detection snaps within 1e-9 so that `t` and
/// `1 - t`, which differ by rounding noise, take consistent branches.
fn round_to_grid(t: f64, n: usize) -> usize {
    let x = (t * n as f64).clamp(0.0, n as f64);
    let frac = x - x.floor();
    let i = if (frac - 0.5).abs() <= 1e-9 {
        if t < 0.5 {
            x.floor()
        } else {
            x.floor() + 1.0
        }
    } else {
        x.round()
    };
    (i.max(0.0) as usize).min(n)
}

/// Tolerance for the `t f1'(t) = (1-t) f2'(1-t)` coupling condition.
pub const COUPLING_TOL: f64 = 1e-8;

/// Builds the rounding mechanism of the partial family: bids enter
/// `f1`/`f2` exactly, but the opponent's bid is rounded to the nearest
/// grid multiple before indexing the solved `Q`, `R` tables.
pub fn partial_family_mechanism(
    f1: &PiecewiseFunction,
    f2: &PiecewiseFunction,
    qr: &QRTables,
) -> Result<SymmetricTwoItemMechanism> {
    let (lo1, hi1) = f1.domain();
    let (lo2, hi2) = f2.domain();
    if (lo1, hi1) != (0.0, 0.5) || (lo2, hi2) != (0.5, 1.0) {
        return Err(Error::InvalidInput(
            "f1 must live on [0,1/2] and f2 on [1/2,1]".into(),
        ));
    }
    if f1.eval(0.0).abs() > 1e-12 || f2.eval(0.5).abs() > 1e-12 {
        return Err(Error::InvalidInput("need f1(0) = 0 and f2(1/2) = 0".into()));
    }
    // coupling condition on a sample grid, avoiding the endpoints where
    // the derivative of f2 blows up
    let mut worst = (0.0_f64, 0.0_f64);
    let samples = 1000;
    for k in 1..samples {
        let t = 0.5 * k as f64 / samples as f64;
        let lhs = t * f1.derivative(t);
        let rhs = (1.0 - t) * f2.derivative(1.0 - t);
        let gap = (lhs - rhs).abs();
        if gap > worst.1 {
            worst = (t, gap);
        }
    }
    if worst.1 > COUPLING_TOL {
        return Err(Error::InvalidInput(format!(
            "coupling condition violated by {:.3e} at t = {}",
            worst.1, worst.0
        )));
    }

    let f1 = f1.clone();
    let f2 = f2.clone();
    let qr = qr.clone();
    let label = format!("partial-qr(n={}, delta={})", qr.n, qr.delta);
    Ok(SymmetricTwoItemMechanism::new(label, vec![0.5], move |b1, b2| {
        let j = round_to_grid(b2, qr.n);
        let at_half = qr.q_values[j] * f1.eval(0.5) + qr.r_values[j];
        if b1 <= 0.5 {
            qr.q_values[j] * f1.eval(b1) + qr.r_values[j]
        } else {
            at_half + qr.q_values[qr.n - j] * f2.eval(b1)
        }
    }))
}

/// Serial-dictator allocation in symmetric form: agent 1 takes all of
/// item 1 when it bids more than the opponent, ties split evenly.
/// Maximizes welfare but is manipulable — a negative control for the
/// checkers.
pub fn dictator_fixture_symmetric() -> SymmetricTwoItemMechanism {
    SymmetricTwoItemMechanism::new("dictator-fixture", vec![], |b1, b2| {
        if b1 > b2 {
            1.0
        } else if b1 < b2 {
            0.0
        } else {
            0.5
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{social_welfare, UtilityVector};

    #[test]
    fn f_examples_from_the_closed_form() {
        assert_eq!(f_five_sixths(0.1).unwrap(), 0.0);
        assert_eq!(f_five_sixths(0.9).unwrap(), 0.5);
        let expected = 0.5 - (5.0_f64 / 2.0).ln() / 6.0;
        assert!((f_five_sixths(0.5).unwrap() - expected).abs() < 1e-15);
        assert!(f_five_sixths(1.2).is_err());
        assert!(f_five_sixths(-0.1).is_err());
    }

    #[test]
    fn f_closed_form_matches_piecewise_representation() {
        let pw = five_sixths_f();
        for k in 0..=1000 {
            let t = k as f64 / 1000.0;
            assert!((pw.eval(t) - f_five_sixths(t).unwrap()).abs() < 1e-12, "t = {t}");
        }
    }

    #[test]
    fn five_sixths_allocation_examples() {
        let mech = five_sixths_mechanism();
        assert!((mech.a(0.3, 0.3) - 0.5).abs() < 1e-15);
        assert!((mech.a(1.0, 0.0) - 1.0).abs() < 1e-15);
        // both bids inside the flat piece of f
        assert!((mech.a(0.1, 0.15) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn five_sixths_is_exactly_full() {
        let mech = five_sixths_mechanism();
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10_000 {
            let (b1, b2): (f64, f64) = (rng.gen(), rng.gen());
            let total = mech.a(b1, b2) + mech.a(b2, b1);
            assert!((total - 1.0).abs() < 1e-14, "not full at ({b1},{b2})");
        }
    }

    #[test]
    fn five_sixths_social_welfare_at_half_zero() {
        let handle = five_sixths_mechanism().to_handle();
        let sw = social_welfare(
            &handle,
            &UtilityVector::two_item(0.5).unwrap(),
            &UtilityVector::two_item(0.0).unwrap(),
        )
        .unwrap();
        assert!((sw - 1.25).abs() < 1e-12);
    }

    #[test]
    fn assumption_band_and_difference_inequality() {
        // f(t) - f(1-t) = 1/3 - 1/(6t) on [1/5, 1/2]
        for k in 0..=300 {
            let t = 0.2 + 0.3 * k as f64 / 300.0;
            let lhs = f_five_sixths(t).unwrap() - f_five_sixths(1.0 - t).unwrap();
            let rhs = 1.0 / 3.0 - 1.0 / (6.0 * t);
            assert!((lhs - rhs).abs() < 1e-10, "band equality fails at t = {t}");
        }
        // and >= everywhere on (0, 1]
        for k in 1..=1000 {
            let t = k as f64 / 1000.0;
            let lhs = f_five_sixths(t).unwrap() - f_five_sixths(1.0 - t).unwrap();
            let rhs = 1.0 / 3.0 - 1.0 / (6.0 * t);
            assert!(lhs >= rhs - 1e-10, "difference inequality fails at t = {t}");
        }
    }

    #[test]
    fn derivative_balance_away_from_breakpoints() {
        // t f'(t) = (1-t) f'(1-t) by central differences
        let f = |t: f64| f_five_sixths(t).unwrap();
        let h = 1e-6;
        for k in 1..1000 {
            let t = k as f64 / 1000.0;
            if (t - 0.2).abs() < 1e-3 || (t - 0.8).abs() < 1e-3 || t < h || t > 1.0 - h {
                continue;
            }
            let d = |x: f64| (f(x + h) - f(x - h)) / (2.0 * h);
            assert!((t * d(t) - (1.0 - t) * d(1.0 - t)).abs() < 1e-7, "t = {t}");
        }
    }

    #[test]
    fn u_hat_examples() {
        let even = SymmetricTwoItemMechanism::new("half", vec![], |_, _| 0.5);
        assert!((u_hat(&even, 0.3, 0.9) - 0.5).abs() < 1e-15);

        let mech = five_sixths_mechanism();
        // (A(1/2,0) + A(1/2,1)) / 2 = f(1/2) + 1/4
        let expected = f_five_sixths(0.5).unwrap() + 0.25;
        assert!((u_hat(&mech, 0.5, 0.0) - expected).abs() < 1e-12);
        for b in [0.0, 0.25, 0.5, 0.75, 1.0] {
            assert!((u_hat(&mech, b, b) - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn rounding_ties_go_away_from_half() {
        assert_eq!(round_to_grid(0.25, 2), 0); // halfway between 0 and 1/2
        assert_eq!(round_to_grid(0.75, 2), 2); // mirror tie goes up
        assert_eq!(round_to_grid(0.26, 2), 1);
        assert_eq!(round_to_grid(0.74, 2), 1);
        assert_eq!(round_to_grid(1.0, 4), 4);
        assert_eq!(round_to_grid(0.0, 4), 0);
        // the symmetry round(1-t) = 1 - round(t), including at ties
        for n in [2usize, 4, 10, 250] {
            for k in 0..=1000 {
                let t = k as f64 / 1000.0;
                assert_eq!(round_to_grid(1.0 - t, n), n - round_to_grid(t, n), "t = {t}, n = {n}");
            }
        }
    }

    #[test]
    fn partial_family_rejects_uncoupled_pair() {
        // f2(t) = t - 1/2 does not satisfy the coupling with f1(t) = t
        let bad_f2 = PiecewiseFunction::new(
            vec![0.5, 1.0],
            vec![Piece::Affine { intercept: -0.5, slope: 1.0 }],
        )
        .unwrap();
        let qr = QRTables::new(4, vec![0.0; 5], vec![0.0; 5], 0.0, 0.0).unwrap();
        let err = partial_family_mechanism(&partial_f1(), &bad_f2, &qr);
        assert!(err.is_err());
    }

    #[test]
    fn partial_family_rounding_is_identity_on_grid() {
        let n = 10;
        let q: Vec<f64> = (0..=n).map(|i| 0.5 + 0.02 * i as f64).collect();
        let r: Vec<f64> = (0..=n).map(|i| 0.1 + 0.01 * i as f64).collect();
        let qr = QRTables::new(n, q.clone(), r.clone(), 0.01, 0.8).unwrap();
        let mech = partial_family_mechanism(&partial_f1(), &partial_f2(), &qr).unwrap();
        // t2 already a grid multiple: table lookup without rounding error
        let t2 = 0.3;
        let j = 3;
        let expected = q[j] * 0.37 + r[j];
        assert!((mech.a(0.37, t2) - expected).abs() < 1e-14);
    }

    #[test]
    fn qr_tables_round_trip_through_files() {
        let dir = tempfile::tempdir().unwrap();
        let qr = QRTables::new(4, vec![0.0, 0.1, 0.2, 0.3, 0.4], vec![0.5; 5], 0.001, 0.83).unwrap();
        let csv = dir.path().join("qr.csv");
        let meta = dir.path().join("qr.meta");
        qr.save(&csv, &meta).unwrap();
        let back = QRTables::load(&csv, &meta).unwrap();
        assert_eq!(qr, back);
    }
}
