use std::collections::HashMap;

use mckay_core::groups::{
    build_named_group, check_named_presentation, is_quaternion8, standard_assignment, su2_group,
    verify_presentation, FiniteGroup, GroupName, MatrixGroup, DEFAULT_SIZE_CAP,
};
use mckay_core::scalar::Fp;
use mckay_core::{Cyclotomic, Error};
use proptest::prelude::*;

fn icosahedral() -> FiniteGroup {
    build_named_group(GroupName::BinaryIcosahedral).unwrap()
}

#[test]
fn builder_orders() {
    for name in GroupName::catalogue(2184) {
        if matches!(name, GroupName::Cyclic(n) | GroupName::BinaryDihedral(n) if n > 30) {
            continue;
        }
        let g = build_named_group(name).unwrap();
        assert_eq!(g.order() as u64, name.expected_order(), "{name}");
    }
    assert_eq!(
        build_named_group(GroupName::BinaryDihedral(3))
            .unwrap()
            .order(),
        12
    );
    assert_eq!(
        build_named_group(GroupName::BinaryOctahedral)
            .unwrap()
            .order(),
        48
    );
    assert_eq!(icosahedral().order(), 120);
    assert_eq!(build_named_group(GroupName::Sl2(5)).unwrap().order(), 120);
    let c7 = build_named_group(GroupName::Cyclic(7)).unwrap();
    assert!(c7.is_abelian());
}

#[test]
fn unknown_names_are_rejected() {
    assert!(matches!(
        mckay_core::groups::group_by_name("icosahedral-ish"),
        Err(Error::UnknownGroup(_))
    ));
}

#[test]
fn presentations_hold() {
    for name in GroupName::catalogue(48)
        .into_iter()
        .chain([GroupName::BinaryIcosahedral])
    {
        if !name.is_su2() {
            continue;
        }
        let g = build_named_group(name).unwrap();
        assert!(check_named_presentation(name, &g).unwrap(), "{name}");
    }
}

#[test]
fn tetrahedral_fails_octahedral_relations() {
    let g = build_named_group(GroupName::BinaryTetrahedral).unwrap();
    let assignment = standard_assignment(GroupName::BinaryTetrahedral, &g);
    assert!(!verify_presentation(&g, &assignment, &["RST = R^2 = S^3 = T^4"]).unwrap());
    assert!(verify_presentation(&g, &assignment, &["RST = R^2 = S^3 = T^3"]).unwrap());
}

#[test]
fn cyclic_relation() {
    let g = build_named_group(GroupName::Cyclic(5)).unwrap();
    let assignment = HashMap::from([('R', g.generators()[0])]);
    assert!(verify_presentation(&g, &assignment, &["R^5 = 1"]).unwrap());
    assert!(!verify_presentation(&g, &assignment, &["R^4 = 1"]).unwrap());
    assert!(verify_presentation(&g, &assignment, &["R^-1 = R^4", "(RR)^3 = R"]).unwrap());
    assert!(matches!(
        verify_presentation(&g, &assignment, &["Q = 1"]),
        Err(Error::Parse(_))
    ));
}

#[test]
fn icosahedral_classes() {
    let classes = icosahedral().conjugacy_classes();
    assert_eq!(classes.count(), 9);
    let mut sorted = classes.sizes.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, vec![1, 1, 12, 12, 12, 12, 20, 20, 30]);
}

#[test]
fn cyclic_classes_are_singletons() {
    for n in 1..=12 {
        let g = build_named_group(GroupName::Cyclic(n)).unwrap();
        let classes = g.conjugacy_classes();
        assert_eq!(classes.count(), n as usize);
        assert!(classes.sizes.iter().all(|&s| s == 1));
    }
}

#[test]
fn sylow_and_normalizer_of_icosahedral() {
    let g = icosahedral();
    let s2 = g.sylow(2).unwrap();
    assert_eq!(s2.order(), 8);
    assert!(is_quaternion8(&g.restrict(&s2).unwrap()));
    let n = g.normalizer(&s2).unwrap();
    assert_eq!(n.order(), 24);
    let mut sizes = g.restrict(&n).unwrap().conjugacy_classes().sizes;
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 1, 4, 4, 4, 4, 6]);
    assert_eq!(g.sylow(5).unwrap().order(), 5);
    assert_eq!(g.sylow(3).unwrap().order(), 3);
    assert_eq!(g.sylow(7).unwrap().order(), 1);
}

#[test]
fn sylow_conjugates_count_is_odd() {
    let g = icosahedral();
    let s2 = g.sylow(2).unwrap();
    let mut conjugates: Vec<Vec<usize>> = (0..g.order())
        .map(|x| g.conjugate_subgroup(&s2, x).elements().to_vec())
        .collect();
    conjugates.sort();
    conjugates.dedup();
    assert_eq!(conjugates.len() % 2, 1);
    // index of the normalizer
    assert_eq!(conjugates.len(), 5);
    for c in &conjugates {
        let sub = g.subgroup_from_elements(c).unwrap();
        assert!(is_quaternion8(&g.restrict(&sub).unwrap()));
    }
}

#[test]
fn normalizer_edge_cases() {
    let g = icosahedral();
    assert_eq!(g.normalizer(&g.trivial_subgroup()).unwrap().order(), 120);
    let c12 = build_named_group(GroupName::Cyclic(12)).unwrap();
    let s = c12.sylow(2).unwrap();
    assert_eq!(c12.normalizer(&s).unwrap().order(), 12);
    // a subgroup of a different group is rejected
    let other = build_named_group(GroupName::Cyclic(5)).unwrap().whole();
    assert_eq!(g.normalizer(&other), Err(Error::NotASubgroup));
}

#[test]
fn quaternion_recognition() {
    let q8 = build_named_group(GroupName::BinaryDihedral(2)).unwrap();
    assert!(is_quaternion8(&q8));
    let mut profile = [0; 5];
    for x in 0..8 {
        profile[q8.element_order(x) as usize] += 1;
    }
    assert_eq!(profile, [0, 1, 1, 0, 6]);
    assert!(!is_quaternion8(
        &build_named_group(GroupName::Cyclic(8)).unwrap()
    ));
}

#[test]
fn matrix_closures() {
    let minus = mckay_core::CyclotomicMatrix::scalar(2, Cyclotomic::from_integer(-1));
    assert_eq!(
        MatrixGroup::generate(&[minus], 10).unwrap().group().order(),
        2
    );
    let f = |x| Fp::<5>::new(x);
    let gens = [
        mckay_core::groups::Matrix::two_by_two(f(1), f(1), f(0), f(1)),
        mckay_core::groups::Matrix::two_by_two(f(0), f(-1), f(1), f(0)),
    ];
    assert_eq!(
        MatrixGroup::generate(&gens, 1000).unwrap().group().order(),
        120
    );
    assert_eq!(
        MatrixGroup::generate(&gens, 100).unwrap_err(),
        Error::GroupTooLarge { cap: 100 }
    );
}

#[test]
fn matrices_have_unit_determinant() {
    let g = su2_group(GroupName::BinaryIcosahedral, DEFAULT_SIZE_CAP).unwrap();
    for m in g.elements() {
        assert_eq!(m.determinant(), Cyclotomic::from_integer(1));
    }
}

#[test]
fn element_order_is_deterministic() {
    let a = su2_group(GroupName::BinaryOctahedral, DEFAULT_SIZE_CAP).unwrap();
    let b = su2_group(GroupName::BinaryOctahedral, DEFAULT_SIZE_CAP).unwrap();
    assert_eq!(a.elements(), b.elements());
}

fn small_group() -> impl Strategy<Value = GroupName> {
    prop_oneof![
        (1u64..=24).prop_map(GroupName::Cyclic),
        (1u64..=12).prop_map(GroupName::BinaryDihedral),
        Just(GroupName::BinaryTetrahedral),
        Just(GroupName::BinaryOctahedral),
        Just(GroupName::Sl2(3)),
        Just(GroupName::Sl2(5)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn class_equation(name in small_group()) {
        let g = build_named_group(name).unwrap();
        let classes = g.conjugacy_classes();
        prop_assert_eq!(classes.sizes.iter().sum::<usize>(), g.order());
        prop_assert_eq!(classes.sizes[0], 1);
        prop_assert_eq!(classes.class_of[0], 0);
    }

    #[test]
    fn lagrange_for_sylow_and_normalizers(name in small_group(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let g = build_named_group(name).unwrap();
        let s = g.sylow(p).unwrap();
        let mut part = 1;
        while g.order() % (part * p as usize) == 0 {
            part *= p as usize;
        }
        prop_assert_eq!(s.order(), part);
        let n = g.normalizer(&s).unwrap();
        prop_assert_eq!(g.order() % n.order(), 0);
        prop_assert_eq!(n.order() % s.order(), 0);
        prop_assert!(s.elements().iter().all(|&x| n.contains(x)));
        prop_assert!(g.subgroup_from_elements(n.elements()).is_ok());
    }

    #[test]
    fn generated_subgroups_divide(name in small_group(), seed in any::<u64>()) {
        let g = build_named_group(name).unwrap();
        let x = (seed as usize) % g.order();
        let y = (seed as usize / 7) % g.order();
        let s = g.subgroup_generated(&[x, y]);
        prop_assert_eq!(g.order() % s.order(), 0);
        prop_assert_eq!(g.normalizer(&s).unwrap().order() % s.order(), 0);
    }
}
