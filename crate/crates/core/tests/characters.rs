use num_bigint::{BigInt, BigUint};
use symcay::characters::{character_table, degree, mn_character, MnEvaluator, PartOrder, TABLE_CAP};
use symcay::partitions::{enumerate_partitions, Partition};
use symcay::symgroup::{all_permutations, binomial, factorial};

#[test]
fn identity_column_reproduces_hook_length_degrees() {
    for n in 0..=9 {
        let mut mn = MnEvaluator::new();
        let id = Partition::column(n);
        for alpha in enumerate_partitions(n) {
            assert_eq!(mn.character(&alpha, &id).unwrap(), BigInt::from(degree(&alpha)), "{alpha}");
        }
    }
}

#[test]
fn cycle_order_does_not_matter() {
    for n in 1..=7 {
        let mut largest = MnEvaluator::with_order(PartOrder::LargestFirst);
        let mut smallest = MnEvaluator::with_order(PartOrder::SmallestFirst);
        for alpha in enumerate_partitions(n) {
            for beta in enumerate_partitions(n) {
                assert_eq!(
                    largest.character(&alpha, &beta).unwrap(),
                    smallest.character(&alpha, &beta).unwrap(),
                    "chi^{alpha}({beta})"
                );
            }
        }
    }
}

#[test]
fn conjugate_shape_twists_by_sign() {
    for n in 1..=7 {
        let table = character_table(n, TABLE_CAP).unwrap();
        for alpha in table.partitions() {
            for beta in table.partitions() {
                let twisted = table.value(&alpha.conjugate(), beta).unwrap();
                let sign = if (n - beta.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(*twisted, table.value(alpha, beta).unwrap() * sign);
            }
        }
    }
}

/// Characters that have elementary closed forms on permutations:
/// trivial, sign, and the standard representation (fixed points - 1).
#[test]
fn agrees_with_permutation_characters() {
    for n in 2..=7 {
        let mut mn = MnEvaluator::new();
        let standard = Partition::from_unsorted(vec![n - 1, 1]).unwrap();
        for x in all_permutations(n) {
            let t = x.cycle_type();
            let sign = if (n - t.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(mn.character(&Partition::row(n), &t).unwrap(), BigInt::from(1));
            assert_eq!(mn.character(&Partition::column(n), &t).unwrap(), BigInt::from(sign));
            let fixed = x.fixed_points() as i64 - 1;
            assert_eq!(mn.character(&standard, &t).unwrap(), BigInt::from(fixed), "{x}");
        }
    }
}

#[test]
fn degree_squares_sum_to_group_order() {
    for n in 0..=12 {
        let total: BigUint = enumerate_partitions(n).iter().map(|a| degree(a).pow(2)).sum();
        assert_eq!(total, factorial(n), "n = {n}");
    }
}

#[test]
fn long_cycle_column_is_supported_on_hooks() {
    for n in 1..=12 {
        let beta = Partition::row(n);
        let mut mn = MnEvaluator::new();
        for alpha in enumerate_partitions(n) {
            let value = mn.character(&alpha, &beta).unwrap();
            match alpha.hook_partition_index() {
                Some(m) => {
                    let expected = if (n - m - 1) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(value, BigInt::from(expected), "{alpha}");
                    assert_eq!(degree(&alpha), binomial(n - 1, m));
                }
                None => assert_eq!(value, BigInt::from(0), "{alpha}"),
            }
        }
    }
}

#[test]
fn tables_are_orthogonal() {
    for n in 0..=7 {
        let table = character_table(n, TABLE_CAP).unwrap();
        let report = table.check_orthogonality();
        assert!(report.passed(), "n = {n}: {:?}", report.violation);
        assert!(table.degree_sum_holds());
    }
}

#[test]
fn full_table_at_cap_is_consistent() {
    let table = character_table(12, TABLE_CAP).unwrap();
    assert_eq!(table.partitions().len(), 77);
    assert!(table.degree_sum_holds());
    let sizes: BigUint = table.class_sizes().iter().sum();
    assert_eq!(sizes, factorial(12));
}

#[test]
fn five_cycle_column_has_five_signed_units() {
    let table = character_table(5, TABLE_CAP).unwrap();
    let col = table.index_of(&Partition::row(5)).unwrap();
    let nonzero: Vec<&BigInt> = table.values().iter().map(|r| &r[col]).filter(|v| **v != BigInt::from(0)).collect();
    assert_eq!(nonzero.len(), 5);
    assert!(nonzero.iter().all(|v| **v == BigInt::from(1) || **v == BigInt::from(-1)));
    assert_eq!(mn_character(&"2,2,1".parse().unwrap(), &Partition::row(5)).unwrap(), BigInt::from(0));
}
