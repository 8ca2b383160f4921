use mckay_core::chartab::binary_icosahedral_table;
use mckay_core::groups::{build_named_group, GroupName};
use mckay_core::mckaycheck::{
    builder_battery, count_irr_prime_to_p, mckay_check, mckay_check_named, prime_divisors,
    run_battery,
};

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v
}

#[test]
fn icosahedral_at_two() {
    let r = mckay_check_named(GroupName::BinaryIcosahedral, 2).unwrap();
    assert_eq!(r.sylow_size, 8);
    assert!(r.sylow_is_quaternion8);
    assert_eq!(r.normalizer_size, 24);
    assert_eq!((r.count_g, r.count_n), (4, 4));
    assert_eq!(sorted(r.degrees_g.clone()), vec![1, 3, 3, 5]);
    assert_eq!(sorted(r.degrees_n.clone()), vec![1, 1, 1, 3]);
    assert!(r.holds);
}

#[test]
fn icosahedral_at_five_and_seven() {
    let five = mckay_check_named(GroupName::BinaryIcosahedral, 5).unwrap();
    assert_eq!(five.sylow_size, 5);
    assert!(five.holds, "{}", five.summary());
    let seven = mckay_check_named(GroupName::BinaryIcosahedral, 7).unwrap();
    assert_eq!(seven.sylow_size, 1);
    assert_eq!(seven.normalizer_size, 120);
    assert_eq!((seven.count_g, seven.count_n), (9, 9));
    assert!(seven.holds);
}

#[test]
fn transcribed_table_counts() {
    let (count, degrees) = count_irr_prime_to_p(&binary_icosahedral_table(), 2);
    assert_eq!(count, 4);
    assert_eq!(sorted(degrees), vec![1, 3, 3, 5]);
    let (all, _) = count_irr_prime_to_p(&binary_icosahedral_table(), 131);
    assert_eq!(all, 9);
}

/// Irreducible degrees from the standard classification of each group.
fn known_degrees(name: GroupName) -> Vec<u64> {
    match name {
        GroupName::Cyclic(n) => vec![1; n as usize],
        GroupName::BinaryDihedral(3) => vec![1, 1, 1, 1, 2, 2],
        GroupName::BinaryOctahedral => vec![1, 1, 2, 2, 2, 3, 3, 4],
        GroupName::Sl2(5) => vec![1, 2, 2, 3, 3, 4, 4, 5, 6],
        _ => unreachable!(),
    }
}

#[test]
fn full_battery_holds() {
    let reports = run_battery(&builder_battery()).unwrap();
    let expected_pairs: usize = builder_battery()
        .iter()
        .map(|g| prime_divisors(g.expected_order()).len())
        .sum();
    assert_eq!(reports.len(), expected_pairs);
    for r in &reports {
        assert!(r.holds, "{}", r.summary());
        assert_eq!(r.normalizer_size % r.sylow_size, 0, "{}", r.summary());
        assert_eq!(r.group_order % r.normalizer_size, 0, "{}", r.summary());
        // the Sylow size is the full p-part of the order
        let rest = r.group_order / r.sylow_size;
        assert_ne!(rest as u64 % r.p, 0, "{}", r.summary());
    }
}

#[test]
fn counts_agree_with_known_degrees() {
    for name in [
        GroupName::Cyclic(12),
        GroupName::BinaryDihedral(3),
        GroupName::BinaryOctahedral,
        GroupName::Sl2(5),
    ] {
        for p in prime_divisors(name.expected_order()) {
            let r = mckay_check_named(name, p).unwrap();
            let want: Vec<u64> = known_degrees(name)
                .into_iter()
                .filter(|d| d % p != 0)
                .collect();
            assert_eq!(sorted(r.degrees_g.clone()), want, "{name} p={p}");
        }
    }
}

#[test]
fn prime_outside_order_counts_every_row() {
    for name in [
        GroupName::Cyclic(6),
        GroupName::BinaryTetrahedral,
        GroupName::Sl2(3),
    ] {
        let g = build_named_group(name).unwrap();
        let r = mckay_check(&g, 11, &name.to_string()).unwrap();
        let classes = g.conjugacy_classes().count();
        assert_eq!(r.sylow_size, 1);
        assert_eq!(r.normalizer_size, g.order());
        assert_eq!((r.count_g, r.count_n), (classes, classes));
    }
}
