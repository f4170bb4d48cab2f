use std::collections::BTreeMap;

use proptest::prelude::*;
use symcay::partitions::{enumerate_partitions, Node, Partition};

/// p(n) by Euler's pentagonal-number recurrence.
fn pentagonal_counts(max: usize) -> Vec<i64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut total = 0i64;
        for k in 1i64.. {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                total += sign * p[n - g2];
            }
        }
        p[n] = total;
    }
    p
}

/// Hook length by walking the diagram cell by cell.
fn hook_by_counting(p: &Partition, node: Node) -> usize {
    p.nodes()
        .filter(|x| (x.row == node.row && x.col >= node.col) || (x.col == node.col && x.row >= node.row))
        .count()
}

fn hook_multiset(p: &Partition) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for h in p.hook_lengths().into_iter().flatten() {
        *m.entry(h).or_insert(0) += 1;
    }
    m
}

#[test]
fn partition_counts_follow_pentagonal_recurrence() {
    let expected = pentagonal_counts(40);
    for (n, &p) in expected.iter().enumerate() {
        assert_eq!(enumerate_partitions(n).len() as i64, p, "p({n})");
    }
}

#[test]
fn enumeration_has_no_duplicates_and_right_sizes() {
    for n in 0..=15 {
        let ps = enumerate_partitions(n);
        assert!(ps.iter().all(|p| p.size() == n));
        assert!(ps.windows(2).all(|w| w[0] > w[1]), "strictly descending for n = {n}");
    }
}

#[test]
fn conjugation_is_an_involution() {
    for n in 0..=12 {
        for p in enumerate_partitions(n) {
            assert_eq!(p.conjugate().conjugate(), p);
            assert_eq!(p.conjugate().size(), n);
        }
    }
}

#[test]
fn hook_lengths_transpose_with_the_diagram() {
    for n in 1..=10 {
        for p in enumerate_partitions(n) {
            let c = p.conjugate();
            for node in p.nodes() {
                let h = p.hook_length(node).unwrap();
                assert_eq!(h, c.hook_length(Node::new(node.col, node.row)).unwrap());
                assert_eq!(h, hook_by_counting(&p, node));
            }
            assert_eq!(hook_multiset(&p), hook_multiset(&c));
        }
    }
}

#[test]
fn rim_removal_is_exhaustively_valid() {
    for n in 1..=9 {
        for p in enumerate_partitions(n) {
            for node in p.nodes() {
                let h = p.hook_length(node).unwrap();
                let rim = p.rim(node).unwrap();
                assert_eq!(rim.len(), h, "rim of {p} at {node}");
                let q = p.remove_rim_hook(node).unwrap();
                assert_eq!(q.size(), n - h);
                // The remaining diagram is exactly the complement of the rim.
                let remaining: Vec<Node> = p.nodes().filter(|x| !rim.contains(x)).collect();
                let rebuilt: Vec<Node> = q.nodes().collect();
                assert_eq!(remaining, rebuilt, "{p} minus rim at {node}");
            }
        }
    }
}

#[test]
fn hook_index_iff_principal_hook_is_everything() {
    for n in 1..=10 {
        for p in enumerate_partitions(n) {
            let full = p.hook_length(Node::new(1, 1)).unwrap() == n;
            let at_most_one_big = p.parts().iter().filter(|&&x| x > 1).count() <= 1;
            assert_eq!(p.hook_partition_index().is_some(), full, "{p}");
            assert_eq!(full, at_most_one_big);
            if let Some(m) = p.hook_partition_index() {
                assert_eq!(Partition::hook(n, m).unwrap(), p);
            }
        }
    }
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..9, 0..9).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

proptest! {
    #[test]
    fn text_round_trips(p in arb_partition()) {
        prop_assert_eq!(p.to_text().parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn legs_and_arms_swap_under_conjugation(p in arb_partition()) {
        let c = p.conjugate();
        for node in p.nodes() {
            let t = Node::new(node.col, node.row);
            prop_assert_eq!(p.leg_length(node).unwrap(), c.arm_length(t).unwrap());
            prop_assert_eq!(
                p.hook_length(node).unwrap(),
                p.arm_length(node).unwrap() + p.leg_length(node).unwrap() + 1
            );
        }
    }

    #[test]
    fn hooks_of_length_partition_the_nodes(p in arb_partition()) {
        let total: usize = (1..=p.size()).map(|k| p.hooks_of_length(k).len()).sum();
        prop_assert_eq!(total, p.size());
    }
}
