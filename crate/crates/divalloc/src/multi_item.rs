//! Partial Allocation mechanisms for any number of items.
//!
//! `PA_c` first finds the allocation maximizing the weighted product
//! `u1(a1) * u2(a2)^c`, then hands each agent a scaled-down fraction of
//! its bundle: agent 1 keeps a `u2(a2)^c` fraction, agent 2 a
//! `u1(a1)^(1/c)` fraction. The scaling is what buys strategyproofness;
//! the attained utilities are `W` and `W^(1/c)` where `W` is the
//! maximal product value. `PA_max` plays the better of `PA_1` and the
//! even split, and a fixed three-way average of `PA_0.421`,
//! `PA_{1/0.421}` and `PA_max` is certified competitive by a grid scan
//! over attainable-utility frontiers.

use std::io::Write as _;
use std::path::Path;

use rayon::prelude::*;

use crate::core::{
    even_split_mechanism, ratio_sorted_items, Allocation, MechanismHandle, UtilityPoint,
    UtilityVector,
};
use crate::error::{Error, Result};
use crate::numeric::golden_section_max;

/// Maximizer of the weighted product, before any scaling.
#[derive(Debug, Clone)]
pub struct PAResult {
    pub allocation: Allocation,
    /// The product value `u1(a1) * u2(a2)^c` at the maximizer.
    pub product: f64,
    pub u1_value: f64,
    pub u2_value: f64,
}

fn check_exponent(c: f64) -> Result<()> {
    if !(c.is_finite() && c > 0.0) {
        return Err(Error::InvalidInput(format!("exponent c = {c} must be positive")));
    }
    Ok(())
}

fn pow_c(base: f64, c: f64) -> f64 {
    base.max(0.0).powf(c)
}

/// Maximizes `u1(a1) * u2(a2)^c` over feasible allocations.
///
/// A maximizer splits at most one item: sorting items by `u1j / u2j`
/// descending, agent 1 takes a prefix plus a fraction of the next item.
/// The split fraction is a one-dimensional log-concave maximization,
/// solved by golden-section search to 1e-12.
pub fn solve_weighted_product(
    u1: &UtilityVector,
    u2: &UtilityVector,
    c: f64,
) -> Result<PAResult> {
    check_exponent(c)?;
    if u1.num_items() != u2.num_items() {
        return Err(Error::DimensionMismatch(u1.num_items(), u2.num_items()));
    }
    let order = ratio_sorted_items(u1, u2);
    let m = order.len();
    // suffix sums of u2 over the sorted order
    let mut u2_after = vec![0.0; m + 1];
    for k in (0..m).rev() {
        u2_after[k] = u2_after[k + 1] + u2.entries()[order[k]];
    }
    let mut best: Option<(f64, usize, f64)> = None; // (value, split index, fraction)
    let mut p1 = 0.0;
    for k in 0..m {
        let (a, b) = (u1.entries()[order[k]], u2.entries()[order[k]]);
        let q2 = u2_after[k + 1];
        let g = |s: f64| (p1 + s * a) * pow_c(q2 + (1.0 - s) * b, c);
        let (s, v) = golden_section_max(g, 0.0, 1.0, 1e-12);
        if best.map_or(true, |(bv, _, _)| v > bv) {
            best = Some((v, k, s));
        }
        p1 += a;
    }
    let (product, split, frac) = best.expect("at least two items");
    let mut a1 = vec![0.0; m];
    let mut a2 = vec![0.0; m];
    for (k, &j) in order.iter().enumerate() {
        if k < split {
            a1[j] = 1.0;
        } else if k == split {
            a1[j] = frac;
            a2[j] = 1.0 - frac;
        } else {
            a2[j] = 1.0;
        }
    }
    let allocation = Allocation::new(a1, a2)?;
    let u1_value = u1.value_of(allocation.agent(0));
    let u2_value = u2.value_of(allocation.agent(1));
    Ok(PAResult { allocation, product, u1_value, u2_value })
}

/// The `PA_c` mechanism: scale the product maximizer's bundles so the
/// attained utilities are `W` and `W^(1/c)`.
pub fn pa_mechanism(c: f64) -> Result<MechanismHandle> {
    check_exponent(c)?;
    Ok(MechanismHandle::new(format!("pa({c})"), move |b1, b2| {
        let r = solve_weighted_product(b1, b2, c)?;
        let scale1 = pow_c(r.u2_value, c);
        let scale2 = pow_c(r.u1_value, 1.0 / c);
        let a1: Vec<f64> = r.allocation.agent(0).iter().map(|x| scale1 * x).collect();
        let a2: Vec<f64> = r.allocation.agent(1).iter().map(|x| scale2 * x).collect();
        Allocation::new(a1, a2)
    }))
}

/// `PA_max`: the better (by welfare under the bids) of `PA_1` and the
/// even split; exact ties go to the even split.
pub fn pa_max_mechanism() -> MechanismHandle {
    let pa1 = pa_mechanism(1.0).expect("c = 1 is valid");
    let even = even_split_mechanism();
    MechanismHandle::new("pa-max", move |b1, b2| {
        let cand = pa1.allocate(b1, b2)?;
        let base = even.allocate(b1, b2)?;
        let sw = |a: &Allocation| b1.value_of(a.agent(0)) + b2.value_of(a.agent(1));
        Ok(if sw(&cand) > sw(&base) { cand } else { base })
    })
}

/// Weights of the certified three-way average.
pub const AVERAGE_WEIGHTS: (f64, f64, f64) = (1029.0 / 4000.0, 1029.0 / 4000.0, 971.0 / 2000.0);
/// Exponent of the certified average's `PA_c` component.
pub const AVERAGE_EXPONENT: f64 = 0.421;

/// The fixed average `1029/4000 PA_0.421 + 1029/4000 PA_{1/0.421} +
/// 971/2000 PA_max`, strategyproof and better than 0.677-competitive.
pub fn averaged_pa_mechanism() -> Result<MechanismHandle> {
    let (w0, w1, w2) = AVERAGE_WEIGHTS;
    crate::core::average_mechanisms(vec![
        (w0, pa_mechanism(AVERAGE_EXPONENT)?),
        (w1, pa_mechanism(1.0 / AVERAGE_EXPONENT)?),
        (w2, pa_max_mechanism()),
    ])
}

/// Maximum of `r1 * r2^c` over the attainable-utility frontier with
/// corner `u_star`: the segments from `(1,0)` and `(0,1)` to `u_star`.
/// Each segment is a concave one-dimensional maximization, solved by
/// golden-section search to 1e-12.
pub fn aur_segment_bound(u_star: &UtilityPoint, c: f64) -> Result<f64> {
    check_exponent(c)?;
    let mut best = 0.0_f64;
    for (a1, a2) in [(1.0, 0.0), (0.0, 1.0)] {
        let (d1, d2) = (u_star.r1 - a1, u_star.r2 - a2);
        let g = |s: f64| (a1 + s * d1) * pow_c(a2 + s * d2, c);
        let (_, v) = golden_section_max(g, 0.0, 1.0, 1e-12);
        best = best.max(v);
    }
    Ok(best)
}

/// Output of [`pa_ratio_certificate`].
#[derive(Debug, Clone, Copy)]
pub struct PaCertificate {
    /// Minimum of the welfare lower bound over the frontier-corner grid.
    pub grid_min: f64,
    /// `grid_min * (1 - 2 * grid_step)`: valid at every real corner,
    /// since rounding a corner down to the grid scales the frontier by
    /// at most that factor.
    pub corrected: f64,
    /// Grid corner attaining the minimum.
    pub argmin: (f64, f64),
    pub grid_step: f64,
}

/// Certifies a competitive-ratio lower bound for the weighted average
/// of `PA_c`, `PA_{1/c}` and `PA_max` by scanning all grid corners
/// `(u1*, u2*)` of two-agent attainable-utility frontiers
/// (`u1* + u2* >= 1`). Each component's welfare is lower-bounded via
/// [`aur_segment_bound`]; `csv_path`, when given, receives one
/// `u1,u2,bound` row per corner.
pub fn pa_ratio_certificate(
    c: f64,
    weights: (f64, f64, f64),
    grid_step: f64,
    csv_path: Option<&Path>,
) -> Result<PaCertificate> {
    check_exponent(c)?;
    if !(grid_step > 0.0 && grid_step < 1.0) {
        return Err(Error::InvalidInput(format!("grid_step = {grid_step} outside (0,1)")));
    }
    let n = (1.0 / grid_step).round() as usize;
    if n < 2 || ((1.0 / grid_step) - n as f64).abs() > 1e-9 {
        return Err(Error::InvalidInput(format!(
            "grid_step = {grid_step} is not a unit fraction 1/n with n >= 2"
        )));
    }
    let (w0, w1, w2) = weights;
    let bound_at = |u1: f64, u2: f64| -> Result<f64> {
        let star = UtilityPoint::new(u1, u2)?;
        let wc = aur_segment_bound(&star, c)?;
        let winv = aur_segment_bound(&star, 1.0 / c)?;
        let w_one = aur_segment_bound(&star, 1.0)?;
        let sw = w0 * (wc + pow_c(wc, 1.0 / c))
            + w1 * (winv + pow_c(winv, c))
            + w2 * (2.0 * w_one).max(1.0);
        Ok(sw / (u1 + u2))
    };
    let row_min = |i: usize| -> Result<(f64, (f64, f64))> {
        let u1 = i as f64 / n as f64;
        let mut best = (f64::INFINITY, (0.0, 0.0));
        for j in (n - i)..=n {
            let u2 = j as f64 / n as f64;
            let b = bound_at(u1, u2)?;
            if b < best.0 {
                best = (b, (u1, u2));
            }
        }
        Ok(best)
    };
    let (grid_min, argmin) = (0..=n)
        .into_par_iter()
        .map(row_min)
        .try_reduce(
            || (f64::INFINITY, (0.0, 0.0)),
            |a, b| Ok(if b.0 < a.0 { b } else { a }),
        )?;
    if let Some(path) = csv_path {
        let file = std::fs::File::create(path)?;
        let mut out = std::io::BufWriter::new(file);
        writeln!(out, "u1,u2,bound")?;
        for i in 0..=n {
            let u1 = i as f64 / n as f64;
            for j in (n - i)..=n {
                let u2 = j as f64 / n as f64;
                writeln!(out, "{},{},{}", u1, u2, bound_at(u1, u2)?)?;
            }
        }
    }
    Ok(PaCertificate {
        grid_min,
        corrected: grid_min * (1.0 - 2.0 * grid_step),
        argmin,
        grid_step,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::social_welfare;

    fn uv(entries: &[f64]) -> UtilityVector {
        UtilityVector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn product_maximizer_on_the_contested_example() {
        let u1 = uv(&[0.99, 0.01]);
        let u2 = uv(&[0.5, 0.5]);
        let r = solve_weighted_product(&u1, &u2, 1.0).unwrap();
        assert!((r.product - 0.495).abs() < 1e-9);
        assert!((r.allocation.agent(0)[0] - 1.0).abs() < 1e-9);
        assert!(r.allocation.agent(0)[1].abs() < 1e-9);
        assert!((r.allocation.agent(1)[1] - 1.0).abs() < 1e-9);
        assert!((r.u1_value - 0.99).abs() < 1e-9);
        assert!((r.u2_value - 0.5).abs() < 1e-9);
    }

    #[test]
    fn product_maximizer_matches_brute_force_on_small_grids() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for c in [0.421, 1.0, 2.375] {
            for _ in 0..20 {
                let raw: Vec<f64> = (0..3).map(|_| rng.gen::<f64>() + 0.01).collect();
                let s: f64 = raw.iter().sum();
                let u1 = uv(&raw.iter().map(|x| x / s).collect::<Vec<_>>());
                let raw: Vec<f64> = (0..3).map(|_| rng.gen::<f64>() + 0.01).collect();
                let s: f64 = raw.iter().sum();
                let u2 = uv(&raw.iter().map(|x| x / s).collect::<Vec<_>>());
                // brute force over per-item shares on a 1/40 grid
                let n = 40;
                let mut best = 0.0_f64;
                for i in 0..=n {
                    for j in 0..=n {
                        for k in 0..=n {
                            let x = [i as f64 / n as f64, j as f64 / n as f64, k as f64 / n as f64];
                            let v1: f64 = (0..3).map(|t| u1.entries()[t] * x[t]).sum();
                            let v2: f64 = (0..3).map(|t| u2.entries()[t] * (1.0 - x[t])).sum();
                            best = best.max(v1 * v2.powf(c));
                        }
                    }
                }
                let r = solve_weighted_product(&u1, &u2, c).unwrap();
                assert!(
                    r.product >= best - 1e-3,
                    "threshold solution {} below grid {} (c = {c})",
                    r.product,
                    best
                );
            }
        }
    }

    #[test]
    fn pa_scaling_examples() {
        let u1 = uv(&[0.99, 0.01]);
        let u2 = uv(&[0.5, 0.5]);
        // c = 1: each agent gets half its bundle
        let alloc = pa_mechanism(1.0).unwrap().allocate(&u1, &u2).unwrap();
        assert!((alloc.agent(0)[0] - 0.5).abs() < 1e-9);
        assert!((alloc.agent(1)[1] - 0.99).abs() < 1e-9);
        // c = 0.5
        let alloc = pa_mechanism(0.5).unwrap().allocate(&u1, &u2).unwrap();
        assert!((alloc.agent(0)[0] - 0.5_f64.sqrt()).abs() < 1e-9);
        assert!(alloc.agent(0)[1].abs() < 1e-9);
        assert!((alloc.agent(1)[1] - 0.9801).abs() < 1e-9);
        assert!(alloc.agent(1)[0].abs() < 1e-9);

        assert!(pa_mechanism(0.0).is_err());
        assert!(pa_mechanism(-1.0).is_err());
    }

    #[test]
    fn attained_utilities_are_w_and_w_to_the_inverse_c() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let c = 0.421;
        let mech = pa_mechanism(c).unwrap();
        for _ in 0..50 {
            let t1: f64 = rng.gen();
            let t2: f64 = rng.gen();
            let u1 = UtilityVector::two_item(t1).unwrap();
            let u2 = UtilityVector::two_item(t2).unwrap();
            let w = solve_weighted_product(&u1, &u2, c).unwrap().product;
            let alloc = mech.allocate(&u1, &u2).unwrap();
            assert!((u1.value_of(alloc.agent(0)) - w).abs() < 1e-9);
            assert!((u2.value_of(alloc.agent(1)) - w.powf(1.0 / c)).abs() < 1e-9);
        }
    }

    #[test]
    fn pa_max_picks_the_better_side_and_breaks_ties_to_even_split() {
        let mech = pa_max_mechanism();
        // contested: PA_1 welfare 0.99 < 1, even split wins
        let alloc = mech.allocate(&uv(&[0.99, 0.01]), &uv(&[0.5, 0.5])).unwrap();
        assert_eq!(alloc.agent(0), &[0.5, 0.5]);
        // disjoint supports: PA_1 welfare 2 > 1
        let alloc = mech.allocate(&uv(&[1.0, 0.0]), &uv(&[0.0, 1.0])).unwrap();
        assert!((alloc.agent(0)[0] - 1.0).abs() < 1e-9);
        assert!((alloc.agent(1)[1] - 1.0).abs() < 1e-9);
        // identical utilities: W = 1/4, welfare 1/2 < 1
        let alloc = mech.allocate(&uv(&[0.5, 0.5]), &uv(&[0.5, 0.5])).unwrap();
        assert_eq!(alloc.agent(0), &[0.5, 0.5]);
    }

    #[test]
    fn pa_max_welfare_never_below_one() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mech = pa_max_mechanism();
        for _ in 0..200 {
            let u1 = UtilityVector::two_item(rng.gen()).unwrap();
            let u2 = UtilityVector::two_item(rng.gen()).unwrap();
            assert!(social_welfare(&mech, &u1, &u2).unwrap() >= 1.0 - 1e-12);
        }
    }

    #[test]
    fn segment_bound_examples() {
        let one = aur_segment_bound(&UtilityPoint::new(1.0, 1.0).unwrap(), 1.0).unwrap();
        assert!((one - 1.0).abs() < 1e-9);
        // against a dense sampling oracle
        let star = UtilityPoint::new(0.6, 0.6).unwrap();
        for c in [0.421, 1.0, 1.0 / 0.421] {
            let fast = aur_segment_bound(&star, c).unwrap();
            let mut dense = 0.0_f64;
            for (a1, a2) in [(1.0, 0.0), (0.0, 1.0)] {
                for k in 0..=100_000 {
                    let s = k as f64 / 100_000.0;
                    let r1 = a1 + s * (star.r1 - a1);
                    let r2 = a2 + s * (star.r2 - a2);
                    dense = dense.max(r1 * pow_c(r2, c));
                }
            }
            assert!((fast - dense).abs() < 1e-8, "c = {c}: {fast} vs {dense}");
            // the corner itself is on both segments
            assert!(fast >= 0.6 * pow_c(0.6, c) - 1e-9);
        }
    }

    #[test]
    fn certificate_on_a_coarse_grid_is_in_the_right_range() {
        let cert =
            pa_ratio_certificate(AVERAGE_EXPONENT, AVERAGE_WEIGHTS, 1.0 / 50.0, None).unwrap();
        // coarse grids scan a subset of the finer grids' points
        assert!(cert.grid_min >= 0.67844 - 1e-9, "grid min {}", cert.grid_min);
        assert!(cert.grid_min < 0.75);
        assert!((cert.corrected - cert.grid_min * 0.96).abs() < 1e-12);
        let (u1, u2) = cert.argmin;
        assert!(u1 + u2 >= 1.0 - 1e-12);

        assert!(pa_ratio_certificate(0.421, AVERAGE_WEIGHTS, 0.3, None).is_err());
        assert!(pa_ratio_certificate(0.421, AVERAGE_WEIGHTS, 0.0, None).is_err());
    }

    #[test]
    fn certificate_csv_rows_match_recomputation() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cert.csv");
        let cert =
            pa_ratio_certificate(AVERAGE_EXPONENT, AVERAGE_WEIGHTS, 1.0 / 10.0, Some(&path))
                .unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let mut min_in_file = f64::INFINITY;
        let mut rows = 0;
        for line in text.lines().skip(1) {
            let fields: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
            assert!(fields[0] + fields[1] >= 1.0 - 1e-12);
            min_in_file = min_in_file.min(fields[2]);
            rows += 1;
        }
        assert_eq!(rows, 11 * 11 - (10 * 11) / 2); // corners with u1 + u2 >= 1
        assert!((min_in_file - cert.grid_min).abs() < 1e-12);
    }
}
