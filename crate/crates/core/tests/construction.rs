use std::collections::BTreeSet;

use num_bigint::BigUint;
use semichain::construction::{
    brute_force_total_orders, count_ci_orders, count_internal_orders, count_nondecreasing_orders,
    count_orders_for, total_orders_ci, total_orders_for, total_orders_internal,
    total_orders_nondecreasing, Mode,
};
use semichain::enumerate::labeled_binary_tree_orders;
use semichain::hasse::TreeShape;
use semichain::{samples, SemilatticeOrder, TotalOrder};

fn seqs(orders: &[TotalOrder]) -> BTreeSet<Vec<usize>> {
    orders.iter().map(|t| t.sequence().to_vec()).collect()
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn cherry() -> SemilatticeOrder {
    SemilatticeOrder::from_pairs(3, &[(1, 2), (3, 2)]).unwrap()
}

fn edge() -> SemilatticeOrder {
    TotalOrder::natural(2).as_semilattice()
}

#[test]
fn forked_tree_orders() {
    // a = 1, b = 2, c = 3, d = 4, r = 5
    let forked = samples::forked_tree();
    let expected: BTreeSet<Vec<usize>> = [
        vec![5, 2, 1, 3, 4],
        vec![5, 2, 1, 4, 3],
        vec![5, 3, 4, 1, 2],
        vec![5, 4, 3, 1, 2],
    ]
    .into_iter()
    .flat_map(|s| {
        let mut r = s.clone();
        r.reverse();
        [s, r]
    })
    .collect();
    assert_eq!(
        seqs(&total_orders_nondecreasing(&forked).unwrap()),
        expected
    );
    assert_eq!(count_nondecreasing_orders(&forked).unwrap(), big(8));
}

#[test]
fn small_counts() {
    assert_eq!(
        count_nondecreasing_orders(&TotalOrder::natural(4).as_semilattice()).unwrap(),
        big(8)
    );
    let perfect = TreeShape::from_code("((()())(()()))")
        .unwrap()
        .to_tree()
        .to_semilattice();
    assert_eq!(perfect.n(), 7);
    assert_eq!(count_nondecreasing_orders(&perfect).unwrap(), big(8));
    assert_eq!(total_orders_nondecreasing(&perfect).unwrap().len(), 8);

    assert_eq!(count_internal_orders(&edge()).unwrap(), big(2));
    assert_eq!(count_internal_orders(&cherry()).unwrap(), big(2));
    assert_eq!(count_ci_orders(&edge()).unwrap(), big(2));
    assert_eq!(count_ci_orders(&cherry()).unwrap(), big(6));

    let single = TotalOrder::natural(1).as_semilattice();
    for mode in Mode::ALL {
        assert_eq!(total_orders_for(&single, mode).unwrap().len(), 1);
    }
}

#[test]
fn cherry_orders() {
    let internal = seqs(&total_orders_internal(&cherry()).unwrap());
    assert_eq!(
        internal,
        [vec![1, 2, 3], vec![3, 2, 1]].into_iter().collect()
    );
    assert_eq!(total_orders_ci(&cherry()).unwrap().len(), 6);
    assert_eq!(seqs(&total_orders_internal(&edge()).unwrap()).len(), 2);
}

#[test]
fn rejects_non_binary_trees() {
    for s in [samples::diamond(), samples::three_leaf_star()] {
        for mode in Mode::ALL {
            assert!(total_orders_for(&s, mode).is_err());
            assert!(count_orders_for(&s, mode).is_err());
        }
    }
}

#[test]
fn constructions_match_brute_force() {
    for n in 1..=6 {
        for s in labeled_binary_tree_orders(n).unwrap() {
            for mode in Mode::ALL {
                let built = total_orders_for(&s, mode).unwrap();
                let brute = brute_force_total_orders(&s, mode);
                assert_eq!(
                    built.len(),
                    seqs(&built).len(),
                    "duplicates for {s:?} {mode:?}"
                );
                assert_eq!(seqs(&built), seqs(&brute), "{s:?} {mode:?}");
                assert_eq!(count_orders_for(&s, mode).unwrap(), big(built.len() as u64));
                assert!(built.iter().all(|t| mode.accepts(&s, t)));
            }
            let leaves = s.minimal_elements().len();
            assert_eq!(
                count_nondecreasing_orders(&s).unwrap(),
                big(1 << (n - leaves))
            );
        }
    }
}

#[test]
fn nondecreasing_is_internal_and_ci() {
    for n in 1..=6 {
        for s in labeled_binary_tree_orders(n).unwrap() {
            let nd = seqs(&total_orders_nondecreasing(&s).unwrap());
            let internal = seqs(&total_orders_internal(&s).unwrap());
            let ci = seqs(&total_orders_ci(&s).unwrap());
            let both: BTreeSet<_> = internal.intersection(&ci).cloned().collect();
            assert_eq!(nd, both, "{s:?}");
        }
    }
}

#[test]
fn closed_under_reversal() {
    for n in 1..=6 {
        for s in labeled_binary_tree_orders(n).unwrap() {
            for mode in Mode::ALL {
                let set = seqs(&total_orders_for(&s, mode).unwrap());
                for t in &set {
                    let r: Vec<usize> = t.iter().rev().copied().collect();
                    assert!(set.contains(&r), "{s:?} {mode:?}");
                }
            }
        }
    }
}

#[test]
fn mode_names_round_trip() {
    for mode in Mode::ALL {
        assert_eq!(mode.name().parse::<Mode>().unwrap(), mode);
    }
    assert!("smooth".parse::<Mode>().is_err());
}
