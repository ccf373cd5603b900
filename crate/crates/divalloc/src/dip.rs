//! Dynamic-increasing-price mechanisms.
//!
//! Each agent faces per-item marginal price curves that depend only on
//! the *other* agent's bid, and spends one unit of virtual money to
//! maximize its own linear utility. Because the prices are outside the
//! agent's control and the purchase is a best response by construction,
//! any mechanism of this shape is strategyproof.
//!
//! The module provides the price-curve machinery (closed-form
//! integration and price inversion, with `+inf` tails as explicit
//! sentinels rather than large floats), a budget-constrained purchase
//! solver, and the schedule that realizes the 5/6-competitive two-item
//! mechanism in this form.

use crate::core::{Allocation, MechanismHandle, UtilityVector};
use crate::error::{Error, Result};
use crate::two_item::f_five_sixths;

/// One closed-form segment of a marginal price curve.
#[derive(Debug, Clone, PartialEq)]
pub enum PricePiece {
    Constant(f64),
    Affine { intercept: f64, slope: f64 },
    /// `scale / g(y) - scale`, where `g(y)` is the `z` in `[1/5, 1/2]`
    /// solving `f(1-z) = y - tau` for the 5/6 mechanism's `f`. Rises
    /// from `scale` to `4 * scale` over its segment.
    FiveSixthsTail { scale: f64, tau: f64 },
}

/// Bisection inverse of `z -> f(1-z)` on `[1/5, 1/2]`; the function is
/// decreasing in `z`, and the bracket is exact — callers must not ask
/// for values outside the segment this piece covers.
fn g_inverse(target: f64) -> f64 {
    let (mut lo, mut hi) = (0.2_f64, 0.5_f64);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        let v = f_five_sixths(1.0 - mid).expect("argument stays in [1/2, 4/5]");
        if v > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

impl PricePiece {
    /// Marginal price at quantity `y` (within the piece's segment).
    pub fn price(&self, y: f64) -> f64 {
        match self {
            PricePiece::Constant(c) => *c,
            PricePiece::Affine { intercept, slope } => intercept + slope * y,
            PricePiece::FiveSixthsTail { scale, tau } => {
                let g = g_inverse(y - tau).clamp(0.2, 0.5);
                scale / g - scale
            }
        }
    }

    /// Closed-form integral of the price over `[a, b]` (both inside the
    /// piece's segment). The tail integrates by substituting `z = g(y)`,
    /// `dy = -dz / (6z)`, giving the antiderivative
    /// `(scale/6) (1/z + ln z)`.
    fn integral(&self, a: f64, b: f64) -> f64 {
        match self {
            PricePiece::Constant(c) => c * (b - a),
            PricePiece::Affine { intercept, slope } => {
                intercept * (b - a) + 0.5 * slope * (b * b - a * a)
            }
            PricePiece::FiveSixthsTail { scale, tau } => {
                let anti = |y: f64| {
                    let z = g_inverse(y - tau).clamp(0.2, 0.5);
                    scale / 6.0 * (1.0 / z + z.ln())
                };
                anti(b) - anti(a)
            }
        }
    }

    /// Largest quantity in `[lo, hi]` whose price is at most `p`, given
    /// the piece covers `[lo, hi]`; prices are nondecreasing, so this is
    /// a per-piece closed-form inverse.
    fn quantity_below(&self, p: f64, lo: f64, hi: f64) -> f64 {
        match self {
            PricePiece::Constant(c) => {
                if *c <= p {
                    hi
                } else {
                    lo
                }
            }
            PricePiece::Affine { intercept, slope } => {
                if *slope <= 0.0 {
                    if *intercept <= p {
                        hi
                    } else {
                        lo
                    }
                } else {
                    ((p - intercept) / slope).clamp(lo, hi)
                }
            }
            PricePiece::FiveSixthsTail { scale, tau } => {
                // price <= p  <=>  g(y) >= scale / (scale + p)
                let z = (scale / (scale + p)).clamp(0.2, 0.5);
                let y = f_five_sixths(1.0 - z).expect("z in [1/5,1/2]") + tau;
                y.clamp(lo, hi)
            }
        }
    }
}

/// Marginal price curve for one item: closed-form pieces on
/// `[0, finite_end]` and `+inf` beyond (no tail when `finite_end = 1`).
#[derive(Debug, Clone, PartialEq)]
pub struct ItemSchedule {
    /// `pieces.len() + 1` boundaries, from `0` to `finite_end`.
    breakpoints: Vec<f64>,
    pieces: Vec<PricePiece>,
}

impl ItemSchedule {
    pub fn new(breakpoints: Vec<f64>, pieces: Vec<PricePiece>) -> Result<Self> {
        if breakpoints.len() != pieces.len() + 1 || breakpoints.is_empty() {
            return Err(Error::InvalidInput(format!(
                "{} breakpoints need {} pieces",
                breakpoints.len(),
                breakpoints.len().saturating_sub(1)
            )));
        }
        if breakpoints[0] != 0.0 || *breakpoints.last().unwrap() > 1.0 + 1e-12 {
            return Err(Error::InvalidInput("price curve must start at 0 and end by 1".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput("breakpoints not strictly increasing".into()));
        }
        let sched = Self { breakpoints, pieces };
        // nonnegative and nondecreasing, sampled inside each piece and
        // across the (possibly jumping-up) piece boundaries
        let mut prev = 0.0_f64;
        for k in 0..sched.pieces.len() {
            let (a, b) = (sched.breakpoints[k], sched.breakpoints[k + 1]);
            for s in 0..=20 {
                let y = a + (b - a) * s as f64 / 20.0;
                let p = sched.pieces[k].price(y);
                if !(p >= 0.0) {
                    return Err(Error::InvalidInput(format!("negative price {p} at y = {y}")));
                }
                if p < prev - 1e-9 {
                    return Err(Error::InvalidInput(format!("price decreases at y = {y}")));
                }
                prev = p;
            }
        }
        Ok(sched)
    }

    /// End of the finite-price range; price is `+inf` beyond it.
    pub fn finite_end(&self) -> f64 {
        *self.breakpoints.last().unwrap()
    }

    /// Segment boundaries of the finite-price range.
    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// Marginal price at `y`, `+inf` past the finite range. At an
    /// upward jump the curve takes the lower value: segments are closed
    /// on the left, matching a free piece on `[0, tau]` followed by a
    /// paid piece on `(tau, ...]`.
    pub fn price(&self, y: f64) -> f64 {
        if y > self.finite_end() {
            return f64::INFINITY;
        }
        let k = self.breakpoints[1..self.breakpoints.len() - 1]
            .partition_point(|b| *b < y)
            .min(self.pieces.len() - 1);
        self.pieces[k].price(y)
    }

    /// `T(x)`: total cost of the first `x` units, `+inf` past the
    /// finite range.
    pub fn cumulative_cost(&self, x: f64) -> f64 {
        if x > self.finite_end() + 1e-12 {
            return f64::INFINITY;
        }
        let x = x.min(self.finite_end());
        let mut total = 0.0;
        for k in 0..self.pieces.len() {
            let (a, b) = (self.breakpoints[k], self.breakpoints[k + 1]);
            if x <= a {
                break;
            }
            total += self.pieces[k].integral(a, x.min(b));
        }
        total
    }

    /// Largest quantity whose marginal price is at most `p`.
    pub fn quantity_below(&self, p: f64) -> f64 {
        let mut y = 0.0;
        for k in 0..self.pieces.len() {
            let (a, b) = (self.breakpoints[k], self.breakpoints[k + 1]);
            let reach = self.pieces[k].quantity_below(p, a, b);
            if reach <= a + 1e-15 && self.pieces[k].price(a.min(b)) > p {
                break;
            }
            y = reach;
            if reach < b - 1e-15 {
                break;
            }
        }
        y
    }
}

/// Per-item price curves faced by one agent.
#[derive(Debug, Clone, PartialEq)]
pub struct PriceSchedule {
    items: Vec<ItemSchedule>,
}

impl PriceSchedule {
    pub fn new(items: Vec<ItemSchedule>) -> Result<Self> {
        if items.len() < 2 {
            return Err(Error::InvalidInput("need at least two items".into()));
        }
        Ok(Self { items })
    }

    pub fn num_items(&self) -> usize {
        self.items.len()
    }

    pub fn item(&self, j: usize) -> &ItemSchedule {
        &self.items[j]
    }
}

/// What an agent bought: quantities per item and virtual money spent.
#[derive(Debug, Clone, PartialEq)]
pub struct Purchase {
    pub quantities: Vec<f64>,
    pub spent: f64,
}

/// The unit budget every agent spends.
pub const BUDGET: f64 = 1.0;

/// Maximizes `sum_j u_j x_j` subject to `sum_j T_j(x_j) <= 1`.
///
/// Nondecreasing marginal prices make this a concave maximization, so
/// a greedy that always buys the cheapest utility-per-money unit is
/// optimal. The greedy's limit is computed directly: free segments are
/// taken in full, then a price threshold per unit of utility is bisected
/// so total spending meets the budget, and any residual (from several
/// items' constant-price segments tying at the critical threshold,
/// where spending can jump) is topped up item by item, lowest index
/// first — ties have equal utility per unit of money, so the split does
/// not affect the attained utility.
pub fn optimal_purchase(u: &UtilityVector, sched: &PriceSchedule) -> Result<Purchase> {
    if u.num_items() != sched.num_items() {
        return Err(Error::DimensionMismatch(u.num_items(), sched.num_items()));
    }
    let m = u.num_items();
    // threshold purchase: buy everything with price <= u_j * level
    let quantities_at = |level: f64| -> Vec<f64> {
        (0..m)
            .map(|j| sched.item(j).quantity_below(u.entries()[j] * level))
            .collect()
    };
    let spend_of = |q: &[f64]| -> f64 {
        (0..m).map(|j| sched.item(j).cumulative_cost(q[j])).sum()
    };
    // "level" is money per unit of utility; spending is nondecreasing in it
    let (mut lo, mut hi) = (0.0_f64, 1e9_f64);
    let q_hi = quantities_at(hi);
    let mut best = if spend_of(&q_hi) <= BUDGET + 1e-15 {
        q_hi // the budget never binds: buy the whole finite range
    } else {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if spend_of(&quantities_at(mid)) <= BUDGET {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        quantities_at(lo)
    };
    // Top-up: spend any residual at the critical price. The residual
    // exists because spending jumps when several constant-price
    // segments tie at the threshold; candidates are visited best
    // utility-per-money first (ties lowest index first), and each
    // purchase is price-capped at the next candidate's rate so a rising
    // segment is never bought past the point where another item becomes
    // the better deal.
    let mut remaining = BUDGET - spend_of(&best);
    for _ in 0..100 {
        if remaining <= 1e-13 {
            break;
        }
        let mut candidates: Vec<(f64, usize, f64)> = (0..m) // (rate, item, price)
            .filter_map(|j| {
                let item = sched.item(j);
                if best[j] >= item.finite_end() - 1e-15 || u.entries()[j] <= 0.0 {
                    return None;
                }
                let p = item.price(best[j] + 1e-13);
                if !p.is_finite() || p <= 0.0 {
                    return None;
                }
                Some((u.entries()[j] / p, j, p))
            })
            .collect();
        candidates.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(a.1.cmp(&b.1)));
        if candidates.is_empty() {
            break;
        }
        let buy_capped = |j: usize, price_cap: f64, best: &[f64], budget_left: f64| -> f64 {
            let item = sched.item(j);
            let base_cost = item.cumulative_cost(best[j]);
            let cap = if price_cap.is_finite() {
                item.quantity_below(price_cap)
            } else {
                item.finite_end()
            };
            let (mut qlo, mut qhi) = (best[j], cap.max(best[j]));
            for _ in 0..100 {
                let mid = 0.5 * (qlo + qhi);
                if item.cumulative_cost(mid) - base_cost <= budget_left {
                    qlo = mid;
                } else {
                    qhi = mid;
                }
            }
            qlo
        };
        let mut progressed = false;
        for (k, &(_, j, _)) in candidates.iter().enumerate() {
            // cap at the price where the next-best candidate's rate is met
            let price_cap = candidates
                .get(k + 1)
                .map_or(f64::INFINITY, |&(next_rate, _, _)| u.entries()[j] / next_rate);
            let q = buy_capped(j, price_cap * (1.0 + 1e-12), &best, remaining);
            if q > best[j] + 1e-15 {
                best[j] = q;
                remaining = BUDGET - spend_of(&best);
                progressed = true;
                break;
            }
        }
        if !progressed {
            // equal-rate rising segments: the split cannot change the
            // attained utility, so buy from the best candidate alone
            let (_, j, _) = candidates[0];
            let q = buy_capped(j, f64::INFINITY, &best, remaining);
            if q <= best[j] + 1e-15 {
                break;
            }
            best[j] = q;
            remaining = BUDGET - spend_of(&best);
        }
    }
    let spent = spend_of(&best);
    Ok(Purchase { quantities: best, spent })
}

/// The free-up-to-one-half schedule under which both agents' optimal
/// purchase is the even split.
pub fn even_split_price_schedule(m: usize) -> Result<PriceSchedule> {
    let item = ItemSchedule::new(vec![0.0, 0.5], vec![PricePiece::Constant(0.0)])?;
    PriceSchedule::new(vec![item; m])
}

fn five_sixths_item_schedule(opp: f64) -> Result<ItemSchedule> {
    let f_half = f_five_sixths(0.5)?;
    let tau = 0.5 - f_five_sixths(opp)?;
    if !(0.0..=0.5 + 1e-12).contains(&tau) {
        return Err(Error::InvalidInput(format!("piece boundaries non-monotone: tau = {tau}")));
    }
    // the plateau scale C is pinned by the unit budget: the integral
    // over the whole finite range is linear in C, so integrate at C = 1
    // and divide
    let probe = ItemSchedule::new(
        vec![0.0, tau.max(1e-12), f_half + tau, 0.5 + tau],
        vec![
            PricePiece::Constant(0.0),
            PricePiece::Constant(1.0),
            PricePiece::FiveSixthsTail { scale: 1.0, tau },
        ],
    )?;
    let unit_total = probe.cumulative_cost(0.5 + tau);
    let scale = 1.0 / unit_total;
    if tau < 1e-12 {
        ItemSchedule::new(
            vec![0.0, f_half, 0.5],
            vec![
                PricePiece::Constant(scale),
                PricePiece::FiveSixthsTail { scale, tau: 0.0 },
            ],
        )
    } else {
        ItemSchedule::new(
            vec![0.0, tau, f_half + tau, 0.5 + tau],
            vec![
                PricePiece::Constant(0.0),
                PricePiece::Constant(scale),
                PricePiece::FiveSixthsTail { scale, tau },
            ],
        )
    }
}

/// The price schedule an agent faces when its opponent bids `(t2, 1-t2)`:
/// item 1 is free up to `tau = 1/2 - f(t2)`, costs a constant up to
/// `f(1/2) + tau`, rises along the tail family up to `1/2 + tau`, and is
/// unavailable beyond; item 2 is the same construction with `1 - t2`.
/// Spending the whole unit budget optimally reproduces the 5/6
/// mechanism's allocation.
pub fn five_sixths_price_schedule(t2: f64) -> Result<PriceSchedule> {
    PriceSchedule::new(vec![
        five_sixths_item_schedule(t2)?,
        five_sixths_item_schedule(1.0 - t2)?,
    ])
}

/// The 5/6 mechanism realized as a purchase process: each agent's
/// optimal purchase against the schedule built from the *other* agent's
/// bid. Strategyproof by construction.
pub fn five_sixths_dip_mechanism() -> MechanismHandle {
    MechanismHandle::new("dip-five-sixths", |b1, b2| {
        if b1.num_items() != 2 {
            return Err(Error::InvalidInput(format!(
                "the 5/6 schedule is a two-item construction, got {} items",
                b1.num_items()
            )));
        }
        let p1 = optimal_purchase(b1, &five_sixths_price_schedule(b2.first())?)?;
        let p2 = optimal_purchase(b2, &five_sixths_price_schedule(b1.first())?)?;
        // purchases solve two independent problems whose quantities sum
        // to 1 analytically; clamp the ~1e-9 solver slack to feasibility
        let a2: Vec<f64> = p2
            .quantities
            .iter()
            .zip(&p1.quantities)
            .map(|(x2, x1)| x2.min(1.0 - x1))
            .collect();
        Allocation::new(p1.quantities, a2)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::adaptive_simpson;
    use crate::two_item::five_sixths_mechanism;

    #[test]
    fn free_then_unavailable_curve_costs_nothing() {
        let sched = even_split_price_schedule(2).unwrap();
        assert_eq!(sched.item(0).cumulative_cost(0.5), 0.0);
        assert_eq!(sched.item(0).cumulative_cost(0.7), f64::INFINITY);
        assert_eq!(sched.item(0).price(0.3), 0.0);
        assert_eq!(sched.item(0).price(0.6), f64::INFINITY);
    }

    #[test]
    fn even_split_schedule_purchase_is_half_of_everything() {
        let sched = even_split_price_schedule(2).unwrap();
        for t in [0.0, 0.3, 1.0] {
            let p = optimal_purchase(&UtilityVector::two_item(t).unwrap(), &sched).unwrap();
            assert_eq!(p.quantities, vec![0.5, 0.5]);
            assert_eq!(p.spent, 0.0);
        }
    }

    #[test]
    fn constant_piece_integrates_to_a_rectangle() {
        let sched = ItemSchedule::new(
            vec![0.0, 0.25, 0.75],
            vec![PricePiece::Constant(0.0), PricePiece::Constant(2.0)],
        )
        .unwrap();
        assert!((sched.cumulative_cost(0.75) - 1.0).abs() < 1e-15);
        assert!((sched.cumulative_cost(0.5) - 0.5).abs() < 1e-15);
        assert!((sched.quantity_below(2.0) - 0.75).abs() < 1e-15);
        assert!((sched.quantity_below(1.0) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn rejects_decreasing_prices() {
        let bad = ItemSchedule::new(
            vec![0.0, 0.5, 1.0],
            vec![PricePiece::Constant(2.0), PricePiece::Constant(1.0)],
        );
        assert!(bad.is_err());
        let bad = ItemSchedule::new(
            vec![0.0, 1.0],
            vec![PricePiece::Affine { intercept: 1.0, slope: -0.5 }],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn five_sixths_schedule_has_the_stated_breakpoints() {
        let t2 = 0.3;
        let tau = 0.5 - f_five_sixths(t2).unwrap();
        let sched = five_sixths_price_schedule(t2).unwrap();
        let item = sched.item(0);
        assert_eq!(item.price(tau - 1e-9), 0.0);
        assert_eq!(item.price(tau), 0.0); // free segment is closed on the right
        assert!(item.price(tau + 1e-9) > 1.0);
        assert!((item.finite_end() - (0.5 + tau)).abs() < 1e-12);
        assert_eq!(item.price(0.5 + tau + 1e-9), f64::INFINITY);
        // the tail quadruples the plateau price by the end
        let plateau = item.price(tau + 1e-9);
        assert!((item.price(0.5 + tau) - 4.0 * plateau).abs() < 1e-6);
    }

    #[test]
    fn budget_integral_is_one_by_quadrature() {
        for t2 in [0.0, 0.1, 0.3, 0.5, 0.77, 0.9, 1.0] {
            let sched = five_sixths_price_schedule(t2).unwrap();
            for j in 0..2 {
                let item = sched.item(j).clone();
                let end = item.finite_end();
                // closed form
                assert!((item.cumulative_cost(end) - 1.0).abs() < 1e-9, "t2 = {t2}");
                // independent quadrature of the price curve, segment by
                // segment so no sample pattern can fool the refinement
                let q: f64 = item
                    .breakpoints()
                    .windows(2)
                    .map(|w| {
                        adaptive_simpson(
                            &|y| item.price(y.clamp(w[0] + 1e-13, end - 1e-13)),
                            w[0],
                            w[1],
                            1e-10,
                        )
                    })
                    .sum();
                assert!((q - 1.0).abs() < 1e-6, "t2 = {t2}, quadrature {q}");
            }
        }
    }

    #[test]
    fn single_minded_agent_buys_only_its_item() {
        let sched = five_sixths_price_schedule(0.4).unwrap();
        let p = optimal_purchase(&UtilityVector::two_item(1.0).unwrap(), &sched).unwrap();
        assert!((p.quantities[0] - sched.item(0).finite_end()).abs() < 1e-9);
        assert!((p.quantities[1] - sched.item(1).quantity_below(0.0)).abs() < 1e-9);
        assert!(p.spent <= 1.0 + 1e-9);
    }

    #[test]
    fn purchases_reproduce_the_five_sixths_allocation() {
        let mech = five_sixths_mechanism();
        let n = 21;
        for i in 0..=n {
            let t1 = i as f64 / n as f64;
            for j in 0..=n {
                let t2 = j as f64 / n as f64;
                let sched = five_sixths_price_schedule(t2).unwrap();
                let p =
                    optimal_purchase(&UtilityVector::two_item(t1).unwrap(), &sched).unwrap();
                assert!(
                    (p.quantities[0] - mech.a(t1, t2)).abs() < 1e-6,
                    "item 1 at ({t1},{t2}): {} vs {}",
                    p.quantities[0],
                    mech.a(t1, t2)
                );
                assert!(
                    (p.quantities[1] - mech.a(1.0 - t1, 1.0 - t2)).abs() < 1e-6,
                    "item 2 at ({t1},{t2})"
                );
                assert!(p.spent <= 1.0 + 1e-9);
            }
        }
    }

    #[test]
    fn purchase_matches_discretized_knapsack() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..8 {
            // random two-piece nondecreasing schedules
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                let p0: f64 = 2.0 * rng.gen::<f64>();
                let slope: f64 = 3.0 * rng.gen::<f64>();
                let cut = 0.3 + 0.4 * rng.gen::<f64>();
                ItemSchedule::new(
                    vec![0.0, cut, 1.0],
                    vec![
                        PricePiece::Constant(p0),
                        PricePiece::Affine { intercept: p0, slope },
                    ],
                )
                .unwrap()
            };
            let sched = PriceSchedule::new(vec![mk(&mut rng), mk(&mut rng)]).unwrap();
            let u = UtilityVector::two_item(rng.gen()).unwrap();
            let fast = optimal_purchase(&u, &sched).unwrap();
            let fast_utility = u.value_of(&fast.quantities);
            // brute force over quantity pairs on a 1/500 grid
            let steps = 500;
            let mut brute = 0.0_f64;
            for a in 0..=steps {
                let x0 = a as f64 / steps as f64;
                let c0 = sched.item(0).cumulative_cost(x0);
                if c0 > 1.0 {
                    break;
                }
                for b in 0..=steps {
                    let x1 = b as f64 / steps as f64;
                    if c0 + sched.item(1).cumulative_cost(x1) > 1.0 {
                        break;
                    }
                    brute = brute.max(u.value_of(&[x0, x1]));
                }
            }
            assert!(
                fast_utility >= brute - 1e-3,
                "purchase utility {fast_utility} below grid {brute}"
            );
            assert!(fast.spent <= 1.0 + 1e-9);
        }
    }

    #[test]
    fn dip_mechanism_allocations_are_feasible_and_match() {
        let dip = five_sixths_dip_mechanism();
        let mech = five_sixths_mechanism();
        for (t1, t2) in [(0.5, 0.0), (0.5, 0.5), (0.33, 0.77), (1.0, 0.0), (0.2, 0.8)] {
            let alloc = dip
                .allocate(
                    &UtilityVector::two_item(t1).unwrap(),
                    &UtilityVector::two_item(t2).unwrap(),
                )
                .unwrap();
            let expect = mech.allocation(t1, t2).unwrap();
            for j in 0..2 {
                assert!(
                    (alloc.agent(0)[j] - expect.agent(0)[j]).abs() < 1e-6,
                    "agent 1 item {j} at ({t1},{t2})"
                );
                assert!(
                    (alloc.agent(1)[j] - expect.agent(1)[j]).abs() < 1e-6,
                    "agent 2 item {j} at ({t1},{t2})"
                );
            }
        }
    }
}
