//! Randomized invariants that must hold for every mechanism and every
//! valid input, complementing the value-pinning acceptance gate.

use divalloc::core::{
    average_mechanisms, even_split_mechanism, MechanismHandle, UtilityVector,
};
use divalloc::multi_item::{averaged_pa_mechanism, pa_max_mechanism, pa_mechanism};
use divalloc::two_item::five_sixths_mechanism;
use divalloc::dip;
use proptest::prelude::*;

fn all_two_item_mechanisms() -> Vec<MechanismHandle> {
    vec![
        even_split_mechanism(),
        five_sixths_mechanism().to_handle(),
        pa_mechanism(1.0).unwrap(),
        pa_mechanism(0.421).unwrap(),
        pa_max_mechanism(),
        averaged_pa_mechanism().unwrap(),
        dip::five_sixths_dip_mechanism(),
    ]
}

fn check_feasible(alloc: &divalloc::core::Allocation) {
    for agent in 0..2 {
        for &x in alloc.agent(agent) {
            prop_assert_is_feasible_share(x);
        }
    }
    for item in 0..alloc.num_items() {
        let sum = alloc.agent(0)[item] + alloc.agent(1)[item];
        assert!(sum <= 1.0 + 1e-9, "item {item} oversold: {sum}");
    }
}

fn prop_assert_is_feasible_share(x: f64) {
    assert!((-1e-12..=1.0 + 1e-9).contains(&x), "share out of range: {x}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn allocations_are_feasible_for_every_mechanism(t1 in 0.0..=1.0f64, t2 in 0.0..=1.0f64) {
        let u1 = UtilityVector::two_item(t1).unwrap();
        let u2 = UtilityVector::two_item(t2).unwrap();
        for mech in all_two_item_mechanisms() {
            let alloc = mech.allocate(&u1, &u2).unwrap();
            check_feasible(&alloc);
        }
    }

    #[test]
    fn multi_item_product_allocations_are_feasible(
        raw1 in proptest::collection::vec(1e-3..1.0f64, 3),
        raw2 in proptest::collection::vec(1e-3..1.0f64, 3),
        c in 0.1..4.0f64,
    ) {
        let norm = |mut v: Vec<f64>| {
            let s: f64 = v.iter().sum();
            v.iter_mut().for_each(|x| *x /= s);
            let fix = 1.0 - v[1] - v[2];
            v[0] = fix;
            UtilityVector::new(v).unwrap()
        };
        let (u1, u2) = (norm(raw1), norm(raw2));
        let alloc = pa_mechanism(c).unwrap().allocate(&u1, &u2).unwrap();
        check_feasible(&alloc);
    }

    #[test]
    fn averaging_preserves_feasibility(t1 in 0.0..=1.0f64, t2 in 0.0..=1.0f64, w in 0.0..=1.0f64) {
        let avg = average_mechanisms(vec![
            (w, even_split_mechanism()),
            (1.0 - w, five_sixths_mechanism().to_handle()),
        ]).unwrap();
        let alloc = avg
            .allocate(&UtilityVector::two_item(t1).unwrap(), &UtilityVector::two_item(t2).unwrap())
            .unwrap();
        check_feasible(&alloc);
    }

    #[test]
    fn purchases_respect_the_budget(t1 in 0.0..=1.0f64, t2 in 0.0..=1.0f64) {
        let sched = dip::five_sixths_price_schedule(t2).unwrap();
        let u = UtilityVector::two_item(t1).unwrap();
        let purchase = dip::optimal_purchase(&u, &sched).unwrap();
        assert!(purchase.spent <= 1.0 + 1e-9, "overspent: {}", purchase.spent);
        for (j, &q) in purchase.quantities.iter().enumerate() {
            let end = sched.item(j).finite_end();
            assert!((-1e-12..=end + 1e-9).contains(&q), "item {j} quantity {q} beyond {end}");
        }
    }

    #[test]
    fn welfare_never_exceeds_first_best(t1 in 0.0..=1.0f64, t2 in 0.0..=1.0f64) {
        let u1 = UtilityVector::two_item(t1).unwrap();
        let u2 = UtilityVector::two_item(t2).unwrap();
        let (opt, _) = divalloc::core::first_best(&u1, &u2).unwrap();
        for mech in all_two_item_mechanisms() {
            let sw = divalloc::core::social_welfare(&mech, &u1, &u2).unwrap();
            assert!(sw <= opt + 1e-9, "{}: welfare {sw} above first-best {opt}", mech.label());
        }
    }
}
