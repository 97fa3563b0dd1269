use menon_core::groups::{
    cyclic_count_burnside, cyclic_count_enumerate, cyclic_count_formula, DirectProductSpec,
};
use menon_core::multifunc::{check_multiplicative, MultiFunc};
use menon_core::verify::groups;
use menon_core::{Limits, Rational};
use proptest::prelude::*;

fn count(orders: &[u64]) -> u64 {
    cyclic_count_formula(
        &DirectProductSpec::new(orders.to_vec()).unwrap(),
        &Limits::default(),
    )
    .unwrap()
}

#[test]
fn three_way_agreement_and_closed_forms() {
    let out = groups(600, &Limits::default());
    assert!(out.passed(), "{:?}", out.failures);
}

#[test]
fn spot_values() {
    assert_eq!(count(&[2, 2]), 4);
    assert_eq!(count(&[4, 2]), 6);
    assert_eq!(count(&[2, 2, 2]), 8);
    assert_eq!(count(&[9, 9]), 17);
}

#[test]
fn count_is_multiplicative() {
    let l = Limits::default();
    for r in 1..=3 {
        let f = MultiFunc::new(r, move |m| {
            Ok(Rational::from(cyclic_count_formula(
                &DirectProductSpec::new(m.to_vec())?,
                &l,
            )?))
        });
        assert!(check_multiplicative(&f, 8).unwrap().is_empty(), "r={r}");
    }
}

proptest! {
    #[test]
    fn order_invariance(mut orders in prop::collection::vec(1u64..=30, 1..=4), seed in any::<u64>()) {
        let l = Limits::default();
        let base = count(&orders);
        let n = orders.len();
        orders.rotate_left((seed % n as u64) as usize);
        if n > 1 {
            orders.swap(0, (seed as usize / 7) % n);
        }
        prop_assert_eq!(count(&orders), base);
        let spec = DirectProductSpec::new(orders).unwrap();
        if spec.group_order().unwrap() <= 5000 {
            prop_assert_eq!(cyclic_count_burnside(&spec, &l).unwrap(), base);
            prop_assert_eq!(cyclic_count_enumerate(&spec, &l).unwrap(), base);
        }
    }
}
