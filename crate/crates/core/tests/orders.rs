mod common;

use itertools::Itertools;
use proptest::prelude::*;
use semichain::order::{is_single_peaked, join_op, order_from_op};
use semichain::{samples, SemilatticeOrder, TotalOrder};

use common::{is_convex, pairwise_incomparable, semilattices};

fn vee_below_one() -> SemilatticeOrder {
    // 2 ⪯ 1, 3 ⪯ 1, 2 || 3
    SemilatticeOrder::from_pairs(3, &[(2, 1), (3, 1)]).unwrap()
}

#[test]
fn vee_and_chain_examples() {
    let nat = TotalOrder::natural(3);
    let vee = vee_below_one();
    assert!(vee.has_ci_property(&nat));
    assert!(!vee.is_internal_for(&nat));
    assert!(!vee.is_nondecreasing_for(&nat));
    assert!(vee.has_linear_filter_property());
    assert_eq!(vee.join(2, 3), 1);
    assert!(!join_op(&vee).is_preserving(&nat));

    let chain = TotalOrder::from_sequence(vec![1, 3, 2])
        .unwrap()
        .as_semilattice();
    assert!(chain.is_internal_for(&nat));
    assert!(!chain.has_ci_property(&nat));
}

#[test]
fn linear_filter_without_ci() {
    // 1 ⪯ 3, 4 ⪯ 3, 3 ⪯ 2
    let s = SemilatticeOrder::from_pairs(4, &[(1, 3), (4, 3), (3, 2)]).unwrap();
    assert!(s.has_linear_filter_property());
    assert!(!s.has_ci_property(&TotalOrder::natural(4)));
    assert!(!samples::diamond().has_linear_filter_property());
}

#[test]
fn order_examples() {
    let nat = TotalOrder::natural(3).as_semilattice();
    assert_eq!(order_from_op(&semichain::OpTable::max(3)).unwrap(), nat);
    assert_eq!(nat.principal_ideal(2), vec![1, 2]);
    assert_eq!(nat.principal_ideal(3), vec![1, 2, 3]);
    let forked = samples::forked_tree();
    assert_eq!(forked.principal_ideal(1), vec![1, 2, 3, 4]);
    let vee = order_from_op(&samples::vee_join()).unwrap();
    assert!(vee.leq(1, 2) && vee.leq(3, 2) && vee.incomparable(1, 3));
    assert!(order_from_op(&samples::zero_but_not_associative()).is_err());
}

#[test]
fn round_trip_through_join() {
    for n in 0..=5 {
        for s in semilattices(n) {
            assert_eq!(order_from_op(&join_op(&s)).unwrap(), s);
            let text = s.to_text();
            assert_eq!(text.parse::<SemilatticeOrder>().unwrap(), s);
            let json = serde_json::to_string(&s.to_json()).unwrap();
            assert_eq!(json.parse::<SemilatticeOrder>().unwrap(), s);
        }
    }
}

#[test]
fn preserving_iff_nondecreasing() {
    for n in 0..=4 {
        let orders: Vec<TotalOrder> = TotalOrder::all(n).collect();
        for s in semilattices(n) {
            let join = join_op(&s);
            for t in &orders {
                assert_eq!(
                    join.is_preserving(t),
                    s.is_nondecreasing_for(t),
                    "{s:?} {t:?}"
                );
            }
        }
    }
}

#[test]
fn nondecreasing_implies_linear_filter() {
    for n in 0..=5 {
        let nat = TotalOrder::natural(n);
        for s in semilattices(n) {
            if s.is_nondecreasing_for(&nat) {
                assert!(s.has_linear_filter_property(), "{s:?}");
            }
        }
    }
}

#[test]
fn internality_forms_agree() {
    for n in 0..=5 {
        let nat = TotalOrder::natural(n);
        for s in semilattices(n) {
            let internal = s.is_internal_for(&nat);
            assert_eq!(internal, join_op(&s).is_internal(&nat));
            let no_bad_triple = (1..=n).tuple_combinations().all(|(a, b, c)| {
                let (ab, bc) = (s.join(a, b), s.join(b, c));
                !(ab == bc && (ab == a || ab == c))
            });
            assert_eq!(internal, no_bad_triple, "{s:?}");
            if internal {
                let triple = (1..=n).tuple_combinations().any(|(a, b, c)| {
                    pairwise_incomparable(&s, a, b, c)
                        && s.join(a, b) == s.join(a, c)
                        && s.join(a, c) == s.join(b, c)
                });
                assert!(!triple, "{s:?}");
            }
        }
    }
}

#[test]
fn internal_with_equal_joins_of_incomparables() {
    // a < e < c < d < b as 1 < 2 < 3 < 4 < 5: a=1, e=2, c=3, d=4, b=5
    let s = SemilatticeOrder::from_parent_map(&[Some(2), Some(4), Some(2), None, Some(4)]).unwrap();
    let nat = TotalOrder::natural(5);
    assert!(s.is_internal_for(&nat));
    assert!(pairwise_incomparable(&s, 1, 5, 3));
    assert_eq!(s.join(1, 5), s.join(5, 3));
}

#[test]
fn ci_forms_agree() {
    for n in 0..=5 {
        let nat = TotalOrder::natural(n);
        for s in semilattices(n) {
            let ci = s.has_ci_property(&nat);
            // ideals are down-closed and closed under joins
            let all_ideals = (0u32..1 << n).all(|mask| {
                let set: Vec<usize> = (1..=n).filter(|&x| mask >> (x - 1) & 1 == 1).collect();
                let down_closed = set
                    .iter()
                    .all(|&x| s.principal_ideal(x).iter().all(|y| set.contains(y)));
                let directed = set
                    .iter()
                    .all(|&x| set.iter().all(|&y| set.contains(&s.join(x, y))));
                !(down_closed && directed) || is_convex(&set, &nat)
            });
            let principal = (1..=n).all(|x| is_convex(&s.principal_ideal(x), &nat));
            let bounds = (1..=n).all(|x| {
                (1..=n).all(|xp| {
                    // strict: x' = x would put x inside its own ideal
                    if xp == x || !(s.leq(xp, x) || s.incomparable(xp, x)) {
                        return true;
                    }
                    let ideal = s.principal_ideal(xp);
                    ideal.iter().all(|&y| y <= x) || ideal.iter().all(|&y| y >= x)
                })
            });
            assert_eq!(ci, all_ideals, "{s:?}");
            assert_eq!(ci, principal, "{s:?}");
            assert_eq!(ci, bounds, "{s:?}");
        }
    }
}

#[test]
fn linear_filter_means_chain_filters() {
    for n in 0..=5 {
        for s in semilattices(n) {
            let chains = (1..=n).all(|z| {
                s.principal_filter(z)
                    .iter()
                    .tuple_combinations()
                    .all(|(&x, &y)| !s.incomparable(x, y))
            });
            let no_common_lower = (1..=n).tuple_combinations().all(|(a, b)| {
                !s.incomparable(a, b) || !(1..=n).any(|c| s.leq(c, a) && s.leq(c, b))
            });
            assert_eq!(s.has_linear_filter_property(), chains);
            assert_eq!(chains, no_common_lower);
        }
    }
}

#[test]
fn binary_tree_iff_linear_filter_without_three_way_joins() {
    use semichain::hasse::is_binary_tree_semilattice;
    for n in 0..=5 {
        for s in semilattices(n) {
            let no_triple = (1..=n).tuple_combinations().all(|(a, b, c)| {
                !(pairwise_incomparable(&s, a, b, c)
                    && s.join(a, b) == s.join(b, c)
                    && s.join(a, b) == s.join(a, c))
            });
            assert_eq!(
                is_binary_tree_semilattice(&s),
                s.has_linear_filter_property() && no_triple,
                "{s:?}"
            );
        }
    }
}

#[test]
fn single_peaked_examples() {
    let nat = TotalOrder::natural(4);
    assert!(is_single_peaked(&nat.reverse(), &nat));
    assert!(is_single_peaked(&nat, &nat));
    let p = TotalOrder::from_sequence(vec![1, 3, 2]).unwrap();
    assert!(!is_single_peaked(&p, &TotalOrder::natural(3)));
    for n in 1..=7 {
        let t = TotalOrder::natural(n);
        let count = TotalOrder::all(n)
            .filter(|p| is_single_peaked(p, &t))
            .count();
        assert_eq!(count, 1 << (n - 1));
    }
}

#[test]
fn parse_rejects_non_semilattices() {
    assert!("4\n1 2\n1 3\n".parse::<SemilatticeOrder>().is_err());
    assert!("2\n1 2\n2 1\n".parse::<SemilatticeOrder>().is_err());
    assert!("2\n1 3\n".parse::<SemilatticeOrder>().is_err());
    assert!("2\n1\n".parse::<SemilatticeOrder>().is_err());
}

fn arb_total(max_n: usize) -> impl Strategy<Value = TotalOrder> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|seq| TotalOrder::from_sequence(seq).unwrap())
}

proptest! {
    #[test]
    fn nondecreasing_is_self_dual(t in arb_total(7), seed in any::<u64>()) {
        let n = t.n();
        let orders: Vec<_> = semichain::enumerate::generate_nondecreasing_orders(n).unwrap().collect();
        let s = &orders[(seed % orders.len() as u64) as usize];
        prop_assert_eq!(s.is_nondecreasing_for(&t), s.is_nondecreasing_for(&t.reverse()));
        prop_assert_eq!(s.has_ci_property(&t), s.has_ci_property(&t.reverse()));
        prop_assert_eq!(s.is_internal_for(&t), s.is_internal_for(&t.reverse()));
    }

    #[test]
    fn total_order_text_round_trip(t in arb_total(9)) {
        prop_assert_eq!(t.to_text().parse::<TotalOrder>().unwrap(), t.clone());
        prop_assert_eq!(t.reverse().reverse(), t);
    }

    #[test]
    fn chains_are_nondecreasing_for_themselves(t in arb_total(8)) {
        prop_assert!(t.as_semilattice().is_nondecreasing_for(&t));
        prop_assert!(is_single_peaked(&t, &t));
    }
}
