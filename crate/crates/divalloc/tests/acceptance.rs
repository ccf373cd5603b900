//! Acceptance gate: one pass/fail line per criterion. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use divalloc::core::{UtilityVector};
use divalloc::multi_item::{
    pa_mechanism, pa_ratio_certificate, solve_weighted_product, AVERAGE_EXPONENT, AVERAGE_WEIGHTS,
};
use divalloc::two_item::{
    dictator_fixture_symmetric, five_sixths_mechanism, partial_f1, partial_f2,
    partial_family_mechanism,
};
use divalloc::{dip, lp, verify};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn report(n: usize, desc: &str, passed: bool) {
    println!(
        "criterion {n:2}: {} - {desc}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {n} failed: {desc}");
}

#[test]
fn criterion_01_five_sixths_worst_case_ratio() {
    let mech = five_sixths_mechanism().to_handle();
    let r = verify::measure_ratio(&mech, 1000).unwrap();
    let value_ok = (r.min_ratio - 5.0 / 6.0).abs() <= 1e-9;
    let (t1, t2) = (r.argmin_bid1[0], r.argmin_bid2[0]);
    // the minimum is attained with an indifferent opponent and the
    // other bid on the equality band [1/5, 1/2] (or its mirror image)
    let argmin_ok = (t2.abs() <= 1e-12 && (0.2..=0.5).contains(&t1))
        || ((t2 - 1.0).abs() <= 1e-12 && (0.5..=0.8).contains(&t1));
    report(
        1,
        "five-sixths mechanism: min ratio = 5/6 on the 1000-grid, argmin on the equality band",
        value_ok && argmin_ok,
    );
}

#[test]
fn criterion_02_five_sixths_strategyproof() {
    let sym = five_sixths_mechanism();
    let direct = verify::check_sp_direct(&sym.to_handle(), 200, 1e-9).unwrap();
    let rochet = verify::check_rochet(&sym, 200, 1e-9).unwrap();
    let breakpoints = sym.breakpoints().to_vec();
    let sufficient = verify::check_sufficient_condition(&sym, &breakpoints, 1e-6).unwrap();
    report(
        2,
        "five-sixths mechanism: direct, convexity/subgradient, and coupling checks all pass",
        direct.passed
            && direct.max_regret <= 1e-9
            && rochet.passed
            && sufficient.passed,
    );
}

fn solve_gc(n: usize, variant: lp::GcVariant, prune: bool) -> f64 {
    let inst = lp::build_gc_lp(n, variant, prune).unwrap();
    lp::solve(&inst, &lp::ClarabelBackend)
        .unwrap()
        .objective_value
}

#[test]
fn criterion_03_grid_lp_full_bound_n50() {
    let lam = solve_gc(50, lp::GcVariant::Full, false);
    let lam_pruned = solve_gc(50, lp::GcVariant::Full, true);
    report(
        3,
        "grid LP (full, n=50): lambda = 0.841 +- 0.001, pruned run agrees to 1e-6",
        (lam - 0.841).abs() <= 1e-3 && (lam - lam_pruned).abs() <= 1e-6,
    );
}

#[test]
fn criterion_04_grid_lp_orderings() {
    let full_25 = solve_gc(25, lp::GcVariant::Full, false);
    let partial_25 = solve_gc(25, lp::GcVariant::Partial, false);
    let full_50 = solve_gc(50, lp::GcVariant::Full, false);
    let partial_50 = solve_gc(50, lp::GcVariant::Partial, false);
    report(
        4,
        "grid LP orderings: partial >= full at n in {25, 50}; full(50) <= full(25)",
        partial_25 >= full_25 - 1e-6
            && partial_50 >= full_50 - 1e-6
            && full_50 <= full_25 + 1e-6,
    );
}

#[test]
fn criterion_05_qr_mechanism_reduced_scale() {
    let n = 250;
    let delta = 2.92 / (2.0 * n as f64);
    let inst = lp::build_qr_lp(n, delta, &partial_f1(), &partial_f2()).unwrap();
    let sol = lp::solve(&inst, &lp::ClarabelBackend).unwrap();
    let tables = lp::extract_qr_tables(&sol, n, delta).unwrap();
    let lambda = tables.lambda;
    let mech = partial_family_mechanism(&partial_f1(), &partial_f2(), &tables).unwrap();

    // feasibility at off-grid bid pairs
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut feasible = true;
    for _ in 0..10_000 {
        let (t1, t2): (f64, f64) = (rng.gen(), rng.gen());
        if mech.a(t1, t2) + mech.a(t2, t1) > 1.0 + 1e-9 {
            feasible = false;
            break;
        }
    }

    let sp = verify::check_sp_direct(&mech.to_handle(), 200, 1e-8).unwrap();
    let ratio = verify::measure_ratio(&mech.to_handle(), 500).unwrap();
    report(
        5,
        "Q/R mechanism (n=250): feasible off-grid, strategyproof at 1e-8, ratio >= lambda - 1/(2n)",
        feasible && sp.passed && ratio.min_ratio >= lambda - 1.0 / (2.0 * n as f64),
    );
}

#[test]
fn criterion_06_product_mechanism_worked_numbers() {
    let u1 = UtilityVector::new(vec![0.99, 0.01]).unwrap();
    let u2 = UtilityVector::new(vec![0.5, 0.5]).unwrap();

    // exponent 1: agent 1's bundle is half of her ideal item
    let a = pa_mechanism(1.0).unwrap().allocate(&u1, &u2).unwrap();
    let ok1 = (a.agent(0)[0] - 0.5).abs() <= 1e-9
        && a.agent(0)[1].abs() <= 1e-9
        && (u1.value_of(a.agent(0)) - 0.495).abs() <= 1e-9;

    // exponent 1/2: scalings sqrt(1/2) for agent 1 and 0.99^2 for agent 2
    let a = pa_mechanism(0.5).unwrap().allocate(&u1, &u2).unwrap();
    let ok2 = (a.agent(0)[0] - 0.5f64.sqrt()).abs() <= 1e-9
        && (a.agent(1)[1] - 0.99f64 * 0.99).abs() <= 1e-9;

    report(
        6,
        "weighted-product mechanism reproduces the three worked allocation numbers",
        ok1 && ok2,
    );
}

#[test]
fn criterion_07_averaged_product_certificate() {
    // coarse grid: the raw minimum already clears the target
    let coarse =
        pa_ratio_certificate(AVERAGE_EXPONENT, AVERAGE_WEIGHTS, 1.0 / 200.0, None).unwrap();
    // fine grid: the discretization correction still clears 0.67776
    let fine =
        pa_ratio_certificate(AVERAGE_EXPONENT, AVERAGE_WEIGHTS, 1.0 / 2000.0, None).unwrap();
    report(
        7,
        "averaged product mechanism: grid certificate >= 0.67844 raw, >= 0.67776 corrected",
        coarse.grid_min >= 0.67844 && fine.corrected >= 0.67776,
    );
}

#[test]
fn criterion_08_bound_certificate() {
    let cert = verify::BoundCertificate {
        h: 0.9523,
        q_star: 0.6979,
        t1_prime: 0.26,
        t1_double_prime: 0.32,
    };
    let rep = verify::check_bound_certificate(&cert).unwrap();
    let slacks_ok = rep.valid
        && rep.slack_a > 0.0
        && rep.slack_a < 1e-3
        && rep.slack_b > 0.0
        && rep.slack_b < 1e-3;
    let envelope_ok = (verify::l_lower(0.0, cert.h).unwrap() - 0.4753).abs() <= 5e-5;
    report(
        8,
        "hand-found certificate at h=0.9523 is valid with tight slacks; envelope value checks out",
        slacks_ok && envelope_ok,
    );
}

#[test]
fn criterion_09_price_schedule_equivalence() {
    let sym = five_sixths_mechanism();
    let dip_mech = dip::five_sixths_dip_mechanism();
    let mut max_diff = 0.0_f64;
    for i in 0..=100 {
        for j in 0..=100 {
            let (t1, t2) = (i as f64 / 100.0, j as f64 / 100.0);
            let via_prices = dip_mech
                .allocate(
                    &UtilityVector::two_item(t1).unwrap(),
                    &UtilityVector::two_item(t2).unwrap(),
                )
                .unwrap();
            let direct = sym.allocation(t1, t2).unwrap();
            for agent in 0..2 {
                for item in 0..2 {
                    max_diff =
                        max_diff.max((via_prices.agent(agent)[item] - direct.agent(agent)[item]).abs());
                }
            }
        }
    }

    // every schedule exhausts exactly the unit budget per item
    let mut budget_ok = true;
    for j in 0..=100 {
        let sched = dip::five_sixths_price_schedule(j as f64 / 100.0).unwrap();
        for k in 0..sched.num_items() {
            let item = sched.item(k);
            if (item.cumulative_cost(item.finite_end()) - 1.0).abs() > 1e-9 {
                budget_ok = false;
            }
        }
    }

    // purchases never overspend, and no misreported purchase beats the
    // truthful one (the schedule does not depend on the buyer's bid)
    let mut truthful_ok = true;
    for i in 0..=10 {
        let t1 = i as f64 / 10.0;
        let u1 = UtilityVector::two_item(t1).unwrap();
        for j in 0..=10 {
            let sched = dip::five_sixths_price_schedule(j as f64 / 10.0).unwrap();
            let truthful = dip::optimal_purchase(&u1, &sched).unwrap();
            if truthful.spent > 1.0 + 1e-9 {
                truthful_ok = false;
            }
            let honest_value = u1.value_of(&truthful.quantities);
            for k in 0..=20 {
                let lie = UtilityVector::two_item(k as f64 / 20.0).unwrap();
                let lied = dip::optimal_purchase(&lie, &sched).unwrap();
                if u1.value_of(&lied.quantities) > honest_value + 1e-8 {
                    truthful_ok = false;
                }
            }
        }
    }

    report(
        9,
        "price-schedule realization matches the five-sixths mechanism; budgets and optimality hold",
        max_diff <= 1e-6 && budget_ok && truthful_ok,
    );
}

/// Brute-force the weighted product over a per-item split grid.
fn brute_force_product(u1: &UtilityVector, u2: &UtilityVector, c: f64, steps: usize) -> f64 {
    let m = u1.num_items();
    let mut best = 0.0_f64;
    let total = (steps + 1).pow(m as u32);
    for code in 0..total {
        let mut rest = code;
        let mut v1 = 0.0;
        let mut v2 = 0.0;
        for j in 0..m {
            let x = (rest % (steps + 1)) as f64 / steps as f64;
            rest /= steps + 1;
            v1 += u1.entries()[j] * x;
            v2 += u2.entries()[j] * (1.0 - x);
        }
        best = best.max(v1 * v2.powf(c));
    }
    best
}

#[test]
fn criterion_10_oracle_equivalences() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let simplex = |rng: &mut ChaCha8Rng, m: usize| {
        let mut v: Vec<f64> = (0..m).map(|_| rng.gen_range(1e-3..1.0)).collect();
        let s: f64 = v.iter().sum();
        v.iter_mut().for_each(|x| *x /= s);
        let fix = 1.0 - v.iter().skip(1).sum::<f64>();
        v[0] = fix;
        UtilityVector::new(v).unwrap()
    };

    // weighted product vs a brute-force split grid
    let mut product_ok = true;
    for k in 0..100 {
        let m = if k % 2 == 0 { 2 } else { 3 };
        let c = [0.421, 0.5, 1.0, 2.0][k % 4];
        let u1 = simplex(&mut rng, m);
        let u2 = simplex(&mut rng, m);
        let exact = solve_weighted_product(&u1, &u2, c).unwrap().product;
        let grid = brute_force_product(&u1, &u2, c, if m == 2 { 60 } else { 30 });
        if exact + 1e-9 < grid || exact > grid + 1e-3 {
            product_ok = false;
        }
    }

    // optimal purchase vs a discretized two-item knapsack
    let mut purchase_ok = true;
    for _ in 0..50 {
        let t2: f64 = rng.gen();
        let sched = dip::five_sixths_price_schedule(t2).unwrap();
        let u = UtilityVector::two_item(rng.gen()).unwrap();
        let purchase = dip::optimal_purchase(&u, &sched).unwrap();
        let value = u.value_of(&purchase.quantities);
        let steps = 500;
        let mut best = 0.0_f64;
        for k1 in 0..=steps {
            let item1 = sched.item(0);
            let x1 = item1.finite_end() * k1 as f64 / steps as f64;
            let cost1 = item1.cumulative_cost(x1);
            if cost1 > 1.0 {
                break;
            }
            // spend the remaining budget on item 2 directly
            let x2 = sched.item(1).quantity_below(f64::INFINITY).min(
                sched.item(1).finite_end(),
            );
            let mut lo = 0.0_f64;
            let mut hi = x2;
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if sched.item(1).cumulative_cost(mid) <= 1.0 - cost1 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            best = best.max(u.entries()[0] * x1 + u.entries()[1] * lo);
        }
        if (value - best).abs() > 1e-3 {
            purchase_ok = false;
        }
    }

    // closed-form region membership vs the LP route
    let mut aur_ok = true;
    for _ in 0..1000 {
        let u1 = UtilityVector::two_item(rng.gen()).unwrap();
        let u2 = UtilityVector::two_item(rng.gen()).unwrap();
        let point = divalloc::core::UtilityPoint::new(rng.gen(), rng.gen()).unwrap();
        let closed = divalloc::core::aur_contains_closed_form(&u1, &u2, &point, 1e-9).unwrap();
        let via_lp = divalloc::core::aur_contains_lp(&u1, &u2, &point, 1e-9).unwrap();
        if closed != via_lp {
            aur_ok = false;
        }
    }

    report(
        10,
        "independent oracles agree: product solver, purchase greedy, region membership",
        product_ok && purchase_ok && aur_ok,
    );
}

#[test]
fn criterion_11_negative_controls() {
    let fixture = dictator_fixture_symmetric();
    let direct = verify::check_sp_direct(&fixture.to_handle(), 60, 1e-9).unwrap();
    let rochet = verify::check_rochet(&fixture, 60, 1e-9).unwrap();
    report(
        11,
        "non-strategyproof fixture fails both the direct and the subgradient checks",
        !direct.passed && direct.max_regret > 0.0 && !rochet.passed,
    );
}

// Extended runs: heavyweight reproductions that sit outside the
// desk-scale gate. Run them with `cargo test --test acceptance -- --ignored`.

/// Full-scale table design: n = 1000, delta = 2.92/2000. Takes a few
/// minutes (the LP has ~10^6 rows; the interior-point backend solves it
/// whole in ~3.5 min).
#[test]
#[ignore = "extended: ~5 min"]
fn extended_qr_mechanism_full_scale() {
    let n = 1000;
    let delta = 2.92 / 2000.0;
    let inst = lp::build_qr_lp(n, delta, &partial_f1(), &partial_f2()).unwrap();
    let sol = lp::solve(&inst, &lp::ClarabelBackend).unwrap();
    let tables = lp::extract_qr_tables(&sol, n, delta).unwrap();
    assert!(
        tables.lambda > 0.835524,
        "lambda = {} should exceed 0.835524",
        tables.lambda
    );
    let max_q = tables
        .q_values
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);
    assert!(max_q < 1.46, "max Q = {max_q} should stay below 1.46");

    let mech = partial_family_mechanism(&partial_f1(), &partial_f2(), &tables).unwrap();
    let ratio = verify::measure_ratio(&mech.to_handle(), 1000).unwrap();
    assert!(
        ratio.min_ratio >= 0.833689,
        "measured ratio = {} should be >= 0.833689",
        ratio.min_ratio
    );
}

/// Fine grid LP upper bound: the pruned full program at n = 400 pushes
/// the bound down toward the 5/6 worst case of the closed-form
/// mechanism (0.8412 at n = 50, 0.8354 at n = 400; the gap shrinks
/// roughly like 1/n).
#[test]
#[ignore = "extended: ~4 min"]
fn extended_grid_lp_full_bound_n400() {
    let lam = solve_gc(400, lp::GcVariant::Full, true);
    let eps = lam - 5.0 / 6.0;
    assert!(
        eps >= -1e-7 && eps < 3e-3,
        "lambda = {lam} should sit just above 5/6 (eps = {eps:.3e})"
    );
}
