use mckay_core::chartab::{
    binary_icosahedral_table, binary_tetrahedral_table, character_of_defining_rep, character_table,
    kernel_classes, table_equivalent, CharacterTable,
};
use mckay_core::groups::{build_named_group, FiniteGroup, GroupName};
use mckay_core::Cyclotomic;
use num_traits::One;

fn table_of(name: GroupName) -> (FiniteGroup, CharacterTable) {
    let g = build_named_group(name).unwrap();
    let t = character_table(&g).unwrap();
    (g, t)
}

#[test]
fn reference_tables_are_orthonormal() {
    for t in [binary_icosahedral_table(), binary_tetrahedral_table()] {
        assert!(t.rows_orthonormal());
        assert!(t.columns_orthogonal());
    }
    assert_eq!(binary_icosahedral_table().order(), 120);
    assert_eq!(binary_tetrahedral_table().order(), 24);
}

#[test]
fn icosahedral_table() {
    let (_, t) = table_of(GroupName::BinaryIcosahedral);
    assert_eq!(t.degrees(), vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
    assert_eq!(t.prime(), Some(61));
    assert!(t.row(0).iter().all(|x| *x == Cyclotomic::one()));
    assert!(t.columns_orthogonal());
    assert!(table_equivalent(&t, &binary_icosahedral_table()));
    assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), 120);
}

#[test]
fn normalizer_table() {
    let g = build_named_group(GroupName::BinaryIcosahedral).unwrap();
    let n = g
        .restrict(&g.normalizer(&g.sylow(2).unwrap()).unwrap())
        .unwrap();
    let t = character_table(&n).unwrap();
    assert_eq!(t.degrees(), vec![1, 1, 1, 2, 2, 2, 3]);
    assert!(table_equivalent(&t, &binary_tetrahedral_table()));
    // entries lie in Q(omega_3)
    assert!(t.entries().iter().flatten().all(|x| 3 % x.conductor() == 0));
}

#[test]
fn cyclic_three() {
    let (_, t) = table_of(GroupName::Cyclic(3));
    assert_eq!(t.degrees(), vec![1, 1, 1]);
    let w = Cyclotomic::root_of_unity(3, 1);
    for row in t.entries() {
        for x in row {
            assert!(*x == Cyclotomic::one() || *x == w || *x == w.conj());
        }
    }
}

#[test]
fn equivalence_under_shuffles() {
    let t = binary_icosahedral_table();
    let shuffled = t.with_rows_permuted(&[3, 1, 0, 8, 2, 5, 4, 7, 6]);
    assert!(table_equivalent(&t, &shuffled));
    assert!(!table_equivalent(&t, &binary_tetrahedral_table()));
    // swapping two entries breaks it
    let mut rows = t.entries().to_vec();
    rows[1].swap(1, 2);
    let broken = CharacterTable::from_entries(t.class_sizes().to_vec(), rows);
    assert!(!table_equivalent(&t, &broken));
}

#[test]
fn defining_character() {
    let (g, t) = table_of(GroupName::BinaryIcosahedral);
    let classes = t.classes().unwrap();
    let chi = character_of_defining_rep(&g, classes).unwrap();
    assert_eq!(chi[0], Cyclotomic::from_integer(2));
    let minus = classes.class_of[(0..g.order()).find(|&x| g.element_order(x) == 2).unwrap()];
    assert_eq!(chi[minus], Cyclotomic::from_integer(-2));
    // trace of the order-10 generator T is phi
    let phi =
        &(&Cyclotomic::one() + &Cyclotomic::root_of_unity(5, 1)) + &Cyclotomic::root_of_unity(5, 4);
    let t_gen = g.generators()[2];
    assert_eq!(g.element_order(t_gen), 10);
    assert_eq!(chi[classes.class_of[t_gen]], phi);
    // it is one of the degree-two rows and is faithful
    assert!(t
        .entries()
        .iter()
        .any(|row| row.as_slice() == chi.as_slice()));
    assert_eq!(kernel_classes(&chi), vec![0]);
    let sl = build_named_group(GroupName::Sl2(5)).unwrap();
    let sl_classes = sl.conjugacy_classes();
    assert!(character_of_defining_rep(&sl, &sl_classes).is_err());
}

#[test]
fn every_builder_group_satisfies_orthogonality() {
    let mut names = GroupName::catalogue(60);
    names.retain(|n| !matches!(n, GroupName::Cyclic(k) | GroupName::BinaryDihedral(k) if *k > 12));
    names.extend([GroupName::BinaryIcosahedral, GroupName::Sl2(7)]);
    for name in names {
        let (g, t) = table_of(name);
        assert_eq!(t.count(), g.conjugacy_classes().count(), "{name}");
        assert!(t.columns_orthogonal(), "{name}");
        for d in t.degrees() {
            assert_eq!(g.order() as u64 % d, 0, "{name}");
        }
        let exponent = g.exponent();
        assert!(t
            .entries()
            .iter()
            .flatten()
            .all(|x| exponent % x.conductor() == 0));
    }
}

#[test]
fn sl2_thirteen() {
    let (g, t) = table_of(GroupName::Sl2(13));
    assert_eq!(g.order(), 2184);
    assert_eq!(t.count(), 17);
    assert_eq!(t.prime(), Some(1093));
    assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), 2184);
}
