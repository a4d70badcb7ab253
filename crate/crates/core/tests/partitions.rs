mod common;

use liedens::partitions::{
    count_partitions, enumerate_partitions, partition_count_table, Partition, PartitionConstraint,
    ENUMERATION_COUNT_CAP,
};
use proptest::prelude::*;

const ALL: [PartitionConstraint; 3] = [
    PartitionConstraint::Unrestricted,
    PartitionConstraint::DistinctParts,
    PartitionConstraint::DistinctOddParts,
];

#[test]
fn pentagonal_recurrence_matches_table() {
    let pent = common::pentagonal_partition_counts(400);
    let table = partition_count_table(400, PartitionConstraint::Unrestricted).unwrap();
    assert_eq!(table, pent);
}

#[test]
fn pentagonal_recurrence_matches_enumeration() {
    let pent = common::pentagonal_partition_counts(40);
    for n in 0..=40 {
        let got = enumerate_partitions(n, PartitionConstraint::Unrestricted).len() as u128;
        assert_eq!(got, pent[n as usize], "p({n})");
    }
}

#[test]
fn enumeration_and_table_agree_on_overlap() {
    for c in ALL {
        let table = partition_count_table(ENUMERATION_COUNT_CAP, c).unwrap();
        for n in 0..=ENUMERATION_COUNT_CAP {
            let listed = enumerate_partitions(n, c).len() as u128;
            assert_eq!(listed, table[n as usize], "{c:?} at {n}");
            assert_eq!(count_partitions(n, c).unwrap(), listed);
        }
    }
}

#[test]
fn distinct_parts_equinumerous_with_odd_parts() {
    // Euler: distinct parts <-> odd parts
    let distinct = partition_count_table(30, PartitionConstraint::DistinctParts).unwrap();
    for n in 0..=30 {
        let odd = enumerate_partitions(n, PartitionConstraint::Unrestricted)
            .iter()
            .filter(|p| p.parts().iter().all(|x| x % 2 == 1))
            .count() as u128;
        assert_eq!(odd, distinct[n as usize]);
    }
}

#[test]
fn distinct_odd_parts_equinumerous_with_self_conjugate() {
    for n in 0..=30 {
        let selfconj = enumerate_partitions(n, PartitionConstraint::Unrestricted)
            .iter()
            .filter(|p| p.conjugate() == **p)
            .count();
        assert_eq!(selfconj, enumerate_partitions(n, PartitionConstraint::DistinctOddParts).len());
    }
}

#[test]
fn enumeration_is_strictly_decreasing_and_valid() {
    for c in ALL {
        for n in 0..=20 {
            let list = enumerate_partitions(n, c);
            for w in list.windows(2) {
                assert!(w[0] > w[1], "{} before {}", w[0], w[1]);
            }
            for p in &list {
                assert_eq!(p.total(), n);
                assert!(p.satisfies(c));
            }
        }
    }
}

#[test]
fn constraint_subsets() {
    for n in 0..=25 {
        let all = enumerate_partitions(n, PartitionConstraint::Unrestricted);
        let distinct = enumerate_partitions(n, PartitionConstraint::DistinctParts);
        let odd = enumerate_partitions(n, PartitionConstraint::DistinctOddParts);
        assert!(odd.iter().all(|p| distinct.contains(p)));
        assert!(distinct.iter().all(|p| all.contains(p)));
        let filtered: Vec<_> = all
            .iter()
            .filter(|p| p.satisfies(PartitionConstraint::DistinctParts))
            .cloned()
            .collect();
        assert_eq!(filtered, distinct);
    }
}

#[test]
fn conjugation_is_an_involution_up_to_20() {
    for n in 0..=20 {
        for p in enumerate_partitions(n, PartitionConstraint::Unrestricted) {
            let c = p.conjugate();
            assert_eq!(c.conjugate(), p);
            assert_eq!(c.total(), n);
        }
    }
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=30, 0..12).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugate_shape(p in partition_strategy()) {
        let c = p.conjugate();
        prop_assert_eq!(c.conjugate(), p.clone());
        prop_assert_eq!(c.total(), p.total());
        prop_assert_eq!(c.len() as u32, p.parts().first().copied().unwrap_or(0));
        prop_assert_eq!(c.parts().first().copied().unwrap_or(0), p.len() as u32);
    }

    #[test]
    fn form_predicates_match_multiplicities(p in partition_strategy()) {
        let ok = |parity: u32| {
            p.parts()
                .iter()
                .filter(|&&x| x % 2 == parity)
                .all(|&x| p.parts().iter().filter(|&&y| y == x).count() % 2 == 0)
        };
        prop_assert_eq!(p.is_symplectic(), ok(1));
        prop_assert_eq!(p.is_orthogonal(), ok(0));
    }

    #[test]
    fn serde_round_trip(p in partition_strategy()) {
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&text).unwrap(), p);
    }

    #[test]
    fn rejects_unsorted(mut v in prop::collection::vec(1u32..=9, 2..8)) {
        v.sort_unstable();
        prop_assume!(v.first() != v.last());
        prop_assert!(Partition::new(v.clone()).is_err());
        prop_assert!(serde_json::from_str::<Partition>(&serde_json::to_string(&v).unwrap()).is_err());
    }
}
