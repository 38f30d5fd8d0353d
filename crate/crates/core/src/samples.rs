//! Small named operations and orders used throughout the tests and examples.

use crate::order::{SemilatticeOrder, TotalOrder};
use crate::table::OpTable;

/// Symmetric, idempotent and `≤₄`-preserving on `{1..4}`, with `4` as zero
/// element, yet not associative: its restriction to `{1, 2, 3}` has no zero.
///
/// `F(1,1) = F(1,2) = 1`, `F(2,2) = F(1,3) = 2`, `F(2,3) = F(3,3) = 3` and
/// `F(x, 4) = 4`.
pub fn zero_but_not_associative() -> OpTable {
    OpTable::from_rows(&[
        vec![1, 1, 2, 4],
        vec![1, 2, 3, 4],
        vec![2, 3, 3, 4],
        vec![4, 4, 4, 4],
    ])
    .unwrap()
}

/// Idempotent and `≤₃`-preserving with `deg(2) = 5`, but without a zero element.
pub fn monotone_without_zero() -> OpTable {
    OpTable::from_rows(&[vec![1, 2, 2], vec![2, 2, 3], vec![2, 3, 3]]).unwrap()
}

/// Join of the order `1 ⪯ 2`, `3 ⪯ 2`: everything off the corners is `2`.
pub fn vee_join() -> OpTable {
    OpTable::from_rows(&[vec![1, 2, 2], vec![2, 2, 2], vec![2, 2, 3]]).unwrap()
}

/// The five-element binary tree with top `r = 5` above `a = 1`, where `a`
/// covers `b = 2` and `c = 3`, and `c` covers `d = 4`.
pub fn forked_tree() -> SemilatticeOrder {
    SemilatticeOrder::from_parent_map(&[Some(5), Some(1), Some(1), Some(3), None]).unwrap()
}

/// Bottom `1`, incomparable `2` and `3`, top `4`.
pub fn diamond() -> SemilatticeOrder {
    SemilatticeOrder::from_pairs(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap()
}

/// Top `4` with three leaves below it.
pub fn three_leaf_star() -> SemilatticeOrder {
    SemilatticeOrder::from_parent_map(&[Some(4), Some(4), Some(4), None]).unwrap()
}

/// Join table of the chain listed bottom-to-top in `seq`.
pub fn join_of_chain(seq: &[usize]) -> OpTable {
    let t = TotalOrder::from_sequence(seq.to_vec()).expect("permutation");
    OpTable::from_fn(seq.len(), |x, y| t.max_of(x, y)).unwrap()
}
