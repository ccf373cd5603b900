//! Domain types and welfare arithmetic shared by every mechanism.
//!
//! Utilities are linear and *normalized*: agent `i` values a bundle
//! `x` at `sum_j u_ij * x_j` with `sum_j u_ij = 1`. An allocation is a
//! 2×m matrix of item fractions; feasibility means nonnegative shares
//! with per-item column sums at most 1.
//!
//! ```
//! use divalloc::core::{UtilityVector, even_split_mechanism, social_welfare};
//!
//! let u1 = UtilityVector::new(vec![0.7, 0.3]).unwrap();
//! let u2 = UtilityVector::new(vec![0.2, 0.8]).unwrap();
//! let even = even_split_mechanism();
//! let sw = social_welfare(&even, &u1, &u2).unwrap();
//! assert!((sw - 1.0).abs() < 1e-12);
//! ```

use std::sync::Arc;

use crate::error::{Error, Result};

/// Tolerance for the `sum = 1` normalization check.
pub const NORMALIZATION_TOL: f64 = 1e-12;
/// Tolerance for allocation feasibility checks.
pub const FEASIBILITY_TOL: f64 = 1e-12;

/// A normalized linear utility (or bid) vector over `m >= 2` items.
#[derive(Debug, Clone, PartialEq)]
pub struct UtilityVector {
    entries: Vec<f64>,
}

impl UtilityVector {
    /// Validates and wraps a utility vector. Inputs outside the
    /// normalization tolerance are rejected, not renormalized.
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidUtilityVector(format!(
                "need at least 2 items, got {}",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !e.is_finite() || **e < 0.0) {
            return Err(Error::InvalidUtilityVector(format!(
                "entries must be finite and nonnegative, got {bad}"
            )));
        }
        let sum: f64 = entries.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::InvalidUtilityVector(format!(
                "entries sum to {sum}, expected 1 within {NORMALIZATION_TOL:e}"
            )));
        }
        Ok(Self { entries })
    }

    /// The two-item vector `(t, 1-t)`.
    pub fn two_item(t: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::InvalidUtilityVector(format!(
                "two-item parameter {t} outside [0,1]"
            )));
        }
        Self::new(vec![t, 1.0 - t])
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Number of items.
    pub fn num_items(&self) -> usize {
        self.entries.len()
    }

    /// First entry; for two items this is the scalar type parameter.
    pub fn first(&self) -> f64 {
        self.entries[0]
    }

    /// Linear utility of a bundle of item fractions.
    pub fn value_of(&self, bundle: &[f64]) -> f64 {
        self.entries.iter().zip(bundle).map(|(u, x)| u * x).sum()
    }
}

/// A feasible split of the items between the two agents.
#[derive(Debug, Clone, PartialEq)]
pub struct Allocation {
    shares: [Vec<f64>; 2],
}

impl Allocation {
    pub fn new(agent1: Vec<f64>, agent2: Vec<f64>) -> Result<Self> {
        if agent1.len() != agent2.len() {
            return Err(Error::InvalidAllocation(format!(
                "row lengths differ: {} vs {}",
                agent1.len(),
                agent2.len()
            )));
        }
        for row in [&agent1, &agent2] {
            if let Some(bad) = row
                .iter()
                .find(|s| !s.is_finite() || **s < -FEASIBILITY_TOL || **s > 1.0 + FEASIBILITY_TOL)
            {
                return Err(Error::InvalidAllocation(format!(
                    "share {bad} outside [0,1]"
                )));
            }
        }
        for (j, (a, b)) in agent1.iter().zip(&agent2).enumerate() {
            if a + b > 1.0 + FEASIBILITY_TOL {
                return Err(Error::InvalidAllocation(format!(
                    "item {j} over-allocated: {a} + {b} > 1"
                )));
            }
        }
        Ok(Self {
            shares: [agent1, agent2],
        })
    }

    /// Shares handed to agent 1 or 2 (`agent` is 0-based).
    pub fn agent(&self, agent: usize) -> &[f64] {
        &self.shares[agent]
    }

    pub fn num_items(&self) -> usize {
        self.shares[0].len()
    }

    /// Share-wise convex combination. Feasibility is preserved because
    /// each per-item column sum is a convex combination of sums <= 1.
    pub fn convex_combination(parts: &[(f64, &Allocation)]) -> Result<Self> {
        let m = parts
            .first()
            .ok_or_else(|| Error::InvalidInput("empty combination".into()))?
            .1
            .num_items();
        let mut rows = [vec![0.0; m], vec![0.0; m]];
        for (w, alloc) in parts {
            if alloc.num_items() != m {
                return Err(Error::DimensionMismatch(m, alloc.num_items()));
            }
            for i in 0..2 {
                for j in 0..m {
                    rows[i][j] += w * alloc.agent(i)[j];
                }
            }
        }
        let [a1, a2] = rows;
        Allocation::new(a1, a2)
    }
}

/// A pair of attained utilities `(r1, r2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UtilityPoint {
    pub r1: f64,
    pub r2: f64,
}

impl UtilityPoint {
    pub fn new(r1: f64, r2: f64) -> Result<Self> {
        for r in [r1, r2] {
            if !(-FEASIBILITY_TOL..=1.0 + FEASIBILITY_TOL).contains(&r) {
                return Err(Error::InvalidInput(format!("utility {r} outside [0,1]")));
            }
        }
        Ok(Self { r1, r2 })
    }
}

type Evaluator =
    dyn Fn(&UtilityVector, &UtilityVector) -> Result<Allocation> + Send + Sync + 'static;

/// A deterministic mechanism: bids in, allocation out.
#[derive(Clone)]
pub struct MechanismHandle {
    label: String,
    evaluator: Arc<Evaluator>,
}

impl std::fmt::Debug for MechanismHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MechanismHandle")
            .field("label", &self.label)
            .finish()
    }
}

impl MechanismHandle {
    pub fn new<F>(label: impl Into<String>, evaluator: F) -> Self
    where
        F: Fn(&UtilityVector, &UtilityVector) -> Result<Allocation> + Send + Sync + 'static,
    {
        Self {
            label: label.into(),
            evaluator: Arc::new(evaluator),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn allocate(&self, b1: &UtilityVector, b2: &UtilityVector) -> Result<Allocation> {
        if b1.num_items() != b2.num_items() {
            return Err(Error::DimensionMismatch(b1.num_items(), b2.num_items()));
        }
        (self.evaluator)(b1, b2)
    }
}

/// Gives every agent half of every item, ignoring the bids.
pub fn even_split_mechanism() -> MechanismHandle {
    MechanismHandle::new("even-split", |b1, _b2| {
        let m = b1.num_items();
        Allocation::new(vec![0.5; m], vec![0.5; m])
    })
}

/// First-best allocation with ties to agent 1, used as a negative
/// control: it maximizes welfare but is not strategyproof (agent 2
/// gains by exaggerating contested items).
pub fn first_best_dictator_mechanism() -> MechanismHandle {
    MechanismHandle::new("dictator-fixture", |b1, b2| {
        let (_, alloc) = first_best(b1, b2)?;
        Ok(alloc)
    })
}

/// Welfare under truthful bids: `u1·A1 + u2·A2`.
pub fn social_welfare(mech: &MechanismHandle, u1: &UtilityVector, u2: &UtilityVector) -> Result<f64> {
    let alloc = mech.allocate(u1, u2)?;
    Ok(u1.value_of(alloc.agent(0)) + u2.value_of(alloc.agent(1)))
}

/// Maximum welfare over all feasible allocations, and an allocation
/// achieving it. Each item goes wholly to the agent valuing it more;
/// ties go to agent 1. The value is tie-invariant, the allocation is not.
pub fn first_best(u1: &UtilityVector, u2: &UtilityVector) -> Result<(f64, Allocation)> {
    if u1.num_items() != u2.num_items() {
        return Err(Error::DimensionMismatch(u1.num_items(), u2.num_items()));
    }
    let m = u1.num_items();
    let mut a1 = vec![0.0; m];
    let mut a2 = vec![0.0; m];
    let mut value = 0.0;
    for j in 0..m {
        if u1.entries()[j] >= u2.entries()[j] {
            a1[j] = 1.0;
            value += u1.entries()[j];
        } else {
            a2[j] = 1.0;
            value += u2.entries()[j];
        }
    }
    Ok((value, Allocation::new(a1, a2)?))
}

/// Truthful welfare divided by the first-best welfare. The denominator
/// is at least 1 for normalized utilities, so this is always defined.
pub fn competitive_ratio_at(
    mech: &MechanismHandle,
    u1: &UtilityVector,
    u2: &UtilityVector,
) -> Result<f64> {
    let sw = social_welfare(mech, u1, u2)?;
    let (opt, _) = first_best(u1, u2)?;
    Ok(sw / opt)
}

/// Weighted average of mechanisms. Averaging preserves both
/// strategyproofness (for linear utilities) and feasibility.
pub fn average_mechanisms(parts: Vec<(f64, MechanismHandle)>) -> Result<MechanismHandle> {
    if parts.is_empty() {
        return Err(Error::InvalidInput("no mechanisms to average".into()));
    }
    if let Some((w, _)) = parts.iter().find(|(w, _)| !(*w > 0.0)) {
        return Err(Error::InvalidInput(format!("weight {w} not positive")));
    }
    let total: f64 = parts.iter().map(|(w, _)| w).sum();
    if (total - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::InvalidInput(format!(
            "weights sum to {total}, expected 1 within {NORMALIZATION_TOL:e}"
        )));
    }
    let label = format!(
        "avg({})",
        parts
            .iter()
            .map(|(w, m)| format!("{:.6}*{}", w, m.label()))
            .collect::<Vec<_>>()
            .join(" + ")
    );
    Ok(MechanismHandle::new(label, move |b1, b2| {
        let allocs = parts
            .iter()
            .map(|(w, m)| Ok((*w, m.allocate(b1, b2)?)))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<(f64, &Allocation)> = allocs.iter().map(|(w, a)| (*w, a)).collect();
        Allocation::convex_combination(&refs)
    }))
}

/// Items sorted by the ratio `u1j / u2j`, descending. Items agent 2
/// does not value sort first, items agent 1 does not value sort last,
/// ties break by index.
pub(crate) fn ratio_sorted_items(u1: &UtilityVector, u2: &UtilityVector) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..u1.num_items()).collect();
    let key = |j: usize| -> f64 {
        let (a, b) = (u1.entries()[j], u2.entries()[j]);
        if b == 0.0 {
            if a == 0.0 {
                f64::INFINITY // 0/0 sorts with the "agent 1" side; tie-break by index
            } else {
                f64::INFINITY
            }
        } else {
            a / b
        }
    };
    idx.sort_by(|&i, &j| key(j).partial_cmp(&key(i)).unwrap().then(i.cmp(&j)));
    idx
}

/// Largest `r2` attainable while giving agent 1 utility at least `r1`,
/// or `None` when `r1` itself is unattainable. Greedy over the ratio
/// order: agent 1 is served from the items that cost agent 2 least per
/// unit of agent-1 utility.
pub fn aur_frontier(u1: &UtilityVector, u2: &UtilityVector, r1: f64) -> Option<f64> {
    if r1 > 1.0 + FEASIBILITY_TOL {
        return None;
    }
    let mut need = r1.max(0.0);
    let mut r2 = 1.0;
    for j in ratio_sorted_items(u1, u2) {
        if need <= 0.0 {
            break;
        }
        let gain = u1.entries()[j];
        if gain <= 0.0 {
            continue; // cannot help agent 1, leave with agent 2
        }
        let frac = (need / gain).min(1.0);
        need -= frac * gain;
        r2 -= frac * u2.entries()[j];
    }
    if need > FEASIBILITY_TOL {
        None
    } else {
        Some(r2.max(0.0))
    }
}

/// Membership test for the attainable utility region, closed-form
/// greedy path. Works for any `m`; cross-checked against the LP path.
pub fn aur_contains_closed_form(
    u1: &UtilityVector,
    u2: &UtilityVector,
    p: &UtilityPoint,
    tol: f64,
) -> Result<bool> {
    if u1.num_items() != u2.num_items() {
        return Err(Error::DimensionMismatch(u1.num_items(), u2.num_items()));
    }
    if p.r1 > 1.0 + tol || p.r2 > 1.0 + tol {
        return Ok(false);
    }
    match aur_frontier(u1, u2, p.r1 - tol) {
        None => Ok(false),
        Some(max_r2) => Ok(p.r2 <= max_r2 + tol),
    }
}

/// Membership test via a feasibility LP over the 2m shares.
pub fn aur_contains_lp(
    u1: &UtilityVector,
    u2: &UtilityVector,
    p: &UtilityPoint,
    tol: f64,
) -> Result<bool> {
    use microlp::{ComparisonOp, OptimizationDirection, Problem};
    if u1.num_items() != u2.num_items() {
        return Err(Error::DimensionMismatch(u1.num_items(), u2.num_items()));
    }
    let m = u1.num_items();
    let mut prob = Problem::new(OptimizationDirection::Maximize);
    let x1: Vec<_> = (0..m).map(|_| prob.add_var(0.0, (0.0, 1.0))).collect();
    let x2: Vec<_> = (0..m).map(|_| prob.add_var(0.0, (0.0, 1.0))).collect();
    for j in 0..m {
        prob.add_constraint([(x1[j], 1.0), (x2[j], 1.0)], ComparisonOp::Le, 1.0);
    }
    let row1: Vec<_> = (0..m).map(|j| (x1[j], u1.entries()[j])).collect();
    let row2: Vec<_> = (0..m).map(|j| (x2[j], u2.entries()[j])).collect();
    prob.add_constraint(row1.clone(), ComparisonOp::Ge, p.r1 - tol);
    prob.add_constraint(row1, ComparisonOp::Le, p.r1 + tol);
    prob.add_constraint(row2.clone(), ComparisonOp::Ge, p.r2 - tol);
    prob.add_constraint(row2, ComparisonOp::Le, p.r2 + tol);
    match prob.solve() {
        Ok(_) => Ok(true),
        Err(microlp::Error::Infeasible) => Ok(false),
        Err(e) => Err(Error::Lp(e.to_string())),
    }
}

/// Whether some feasible allocation attains `p` within `tol`.
/// Two items use the closed-form frontier, more items the LP.
pub fn aur_contains(
    u1: &UtilityVector,
    u2: &UtilityVector,
    p: &UtilityPoint,
    tol: f64,
) -> Result<bool> {
    if u1.num_items() == 2 {
        aur_contains_closed_form(u1, u2, p, tol)
    } else {
        aur_contains_lp(u1, u2, p, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uv(entries: &[f64]) -> UtilityVector {
        UtilityVector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn rejects_unnormalized_and_short_vectors() {
        assert!(UtilityVector::new(vec![0.5, 0.6]).is_err());
        assert!(UtilityVector::new(vec![1.0]).is_err());
        assert!(UtilityVector::new(vec![-0.1, 1.1]).is_err());
        assert!(UtilityVector::new(vec![0.25; 4]).is_ok());
    }

    #[test]
    fn allocation_rejects_overfull_items() {
        assert!(Allocation::new(vec![0.7, 0.0], vec![0.4, 0.0]).is_err());
        assert!(Allocation::new(vec![0.7, 0.0], vec![0.3, 1.0]).is_ok());
    }

    #[test]
    fn even_split_welfare_is_one() {
        let even = even_split_mechanism();
        for (a, b) in [(0.3, 0.9), (0.0, 1.0), (0.5, 0.5)] {
            let sw = social_welfare(
                &even,
                &UtilityVector::two_item(a).unwrap(),
                &UtilityVector::two_item(b).unwrap(),
            )
            .unwrap();
            assert!((sw - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn first_best_examples() {
        let (opt, alloc) = first_best(&uv(&[0.99, 0.01]), &uv(&[0.5, 0.5])).unwrap();
        assert!((opt - 1.49).abs() < 1e-12);
        assert_eq!(alloc.agent(0), &[1.0, 0.0]);
        assert_eq!(alloc.agent(1), &[0.0, 1.0]);

        let (opt, _) = first_best(&uv(&[0.4, 0.6]), &uv(&[0.4, 0.6])).unwrap();
        assert!((opt - 1.0).abs() < 1e-12);

        let (opt, _) = first_best(
            &UtilityVector::two_item(0.5).unwrap(),
            &UtilityVector::two_item(0.0).unwrap(),
        )
        .unwrap();
        assert!((opt - 1.5).abs() < 1e-12);
    }

    #[test]
    fn first_best_ties_go_to_agent_1() {
        let (_, alloc) = first_best(&uv(&[0.5, 0.5]), &uv(&[0.5, 0.5])).unwrap();
        assert_eq!(alloc.agent(0), &[1.0, 1.0]);
    }

    #[test]
    fn even_split_ratio_at_opposed_bids() {
        let r = competitive_ratio_at(&even_split_mechanism(), &uv(&[1.0, 0.0]), &uv(&[0.0, 1.0]))
            .unwrap();
        assert!((r - 0.5).abs() < 1e-12);
    }

    #[test]
    fn averaging_is_idempotent_and_validates_weights() {
        let m = even_split_mechanism();
        let avg = average_mechanisms(vec![(0.5, m.clone()), (0.5, m.clone())]).unwrap();
        let b1 = uv(&[0.3, 0.7]);
        let b2 = uv(&[0.8, 0.2]);
        assert_eq!(avg.allocate(&b1, &b2).unwrap(), m.allocate(&b1, &b2).unwrap());

        assert!(average_mechanisms(vec![(0.5, m.clone()), (0.6, m.clone())]).is_err());
        assert!(average_mechanisms(vec![(-0.5, m.clone()), (1.5, m)]).is_err());
    }

    #[test]
    fn aur_corners_are_attainable() {
        let u1 = uv(&[0.6, 0.4]);
        let u2 = uv(&[0.1, 0.9]);
        for p in [UtilityPoint::new(1.0, 0.0).unwrap(), UtilityPoint::new(0.0, 1.0).unwrap()] {
            assert!(aur_contains(&u1, &u2, &p, 1e-9).unwrap());
        }
    }

    #[test]
    fn aur_rejects_infeasible_point_for_identical_utilities() {
        // brute-force grid over allocations confirms r1 + r2 <= 1 here
        let u = uv(&[0.5, 0.5]);
        let mut best = 0.0_f64;
        let n = 40;
        for i in 0..=n {
            for j in 0..=n {
                let x1 = [i as f64 / n as f64, j as f64 / n as f64];
                let r1 = 0.5 * x1[0] + 0.5 * x1[1];
                let r2 = 0.5 * (1.0 - x1[0]) + 0.5 * (1.0 - x1[1]);
                best = best.max(r1 + r2);
            }
        }
        assert!(best <= 1.0 + 1e-12);
        let p = UtilityPoint::new(1.0, 1.0).unwrap();
        assert!(!aur_contains(&u, &u, &p, 1e-9).unwrap());
    }

    #[test]
    fn closed_form_and_lp_paths_agree_on_two_items() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let t1: f64 = rng.gen();
            let t2: f64 = rng.gen();
            let u1 = UtilityVector::two_item(t1).unwrap();
            let u2 = UtilityVector::two_item(t2).unwrap();
            let p = UtilityPoint::new(rng.gen(), rng.gen()).unwrap();
            let a = aur_contains_closed_form(&u1, &u2, &p, 1e-9).unwrap();
            let b = aur_contains_lp(&u1, &u2, &p, 1e-9).unwrap();
            assert_eq!(a, b, "disagreement at {p:?} for ({t1},{t2})");
        }
    }

    #[test]
    fn dictator_fixture_matches_first_best() {
        let u1 = uv(&[0.2, 0.8]);
        let u2 = uv(&[0.6, 0.4]);
        let alloc = first_best_dictator_mechanism().allocate(&u1, &u2).unwrap();
        let (opt, _) = first_best(&u1, &u2).unwrap();
        let sw = u1.value_of(alloc.agent(0)) + u2.value_of(alloc.agent(1));
        assert!((sw - opt).abs() < 1e-12);
    }
}
