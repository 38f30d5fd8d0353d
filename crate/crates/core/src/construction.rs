//! Total orders compatible with a binary-tree semilattice.
//!
//! For a semilattice order whose Hasse diagram is a binary tree, the total
//! orders `t` making it nondecreasing, internal, or CI are built bottom-up
//! over the tree. Every generator returns its orders deduplicated and in a
//! fixed order; each has a matching closed-form count.
//!
//! | mode          | one child `C`                  | two children `C₁, C₂`                     |
//! |---------------|--------------------------------|-------------------------------------------|
//! | nondecreasing | `r` below or above `t_C`       | `t₁ r t₂` or `t₂ r t₁`                    |
//! | internal      | `r` at any of the `m` positions| `t₁ r t₂` or `t₂ r t₁`                    |
//! | CI            | `r` below or above `t_C`       | the two splices, plus `r` below or above `t₁ ⊕ t₂` and `t₂ ⊕ t₁` |

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::One;

use crate::enumerate::BigCount;
use crate::error::Result;
use crate::hasse::{binary_tree, RootedTree};
use crate::order::{SemilatticeOrder, TotalOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Nondecreasing,
    Internal,
    Ci,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Nondecreasing, Mode::Internal, Mode::Ci];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Nondecreasing => "nondecreasing",
            Mode::Internal => "internal",
            Mode::Ci => "ci",
        }
    }

    /// Whether `t` has this relation to `order`, checked directly.
    pub fn accepts(self, order: &SemilatticeOrder, t: &TotalOrder) -> bool {
        match self {
            Mode::Nondecreasing => order.is_nondecreasing_for(t),
            Mode::Internal => order.is_internal_for(t),
            Mode::Ci => order.has_ci_property(t),
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown mode `{s}`"))
    }
}

type Chain = Vec<usize>;

fn concat(parts: &[&[usize]]) -> Chain {
    parts.concat()
}

fn dedup(chains: Vec<Chain>) -> Vec<Chain> {
    let mut seen = HashSet::new();
    chains
        .into_iter()
        .filter(|c| seen.insert(c.clone()))
        .collect()
}

fn chains_at(tree: &RootedTree, x: usize, mode: Mode) -> Vec<Chain> {
    let r = [x];
    match *tree.children(x) {
        [] => vec![vec![x]],
        [c] => {
            let sub = chains_at(tree, c, mode);
            match mode {
                Mode::Nondecreasing | Mode::Ci => {
                    let below = sub.iter().map(|t| concat(&[&r, t]));
                    let above = sub.iter().map(|t| concat(&[t, &r]));
                    below.chain(above).collect()
                }
                Mode::Internal => {
                    let m = sub[0].len() + 1;
                    (0..m)
                        .flat_map(|pos| {
                            sub.iter()
                                .map(move |t| concat(&[&t[..pos], &[x], &t[pos..]]))
                        })
                        .collect()
                }
            }
        }
        [c1, c2] => {
            let s1 = chains_at(tree, c1, mode);
            let s2 = chains_at(tree, c2, mode);
            let mut out = Vec::new();
            let pairs = || s1.iter().flat_map(|a| s2.iter().map(move |b| (a, b)));
            out.extend(pairs().map(|(a, b)| concat(&[a, &r, b])));
            out.extend(pairs().map(|(a, b)| concat(&[b, &r, a])));
            if mode == Mode::Ci {
                out.extend(pairs().map(|(a, b)| concat(&[&r, a, b])));
                out.extend(pairs().map(|(a, b)| concat(&[a, b, &r])));
                out.extend(pairs().map(|(a, b)| concat(&[&r, b, a])));
                out.extend(pairs().map(|(a, b)| concat(&[b, a, &r])));
            }
            dedup(out)
        }
        _ => unreachable!("binary tree"),
    }
}

fn total_orders(order: &SemilatticeOrder, mode: Mode) -> Result<Vec<TotalOrder>> {
    if order.n() == 0 {
        return Ok(vec![TotalOrder::natural(0)]);
    }
    let tree = binary_tree(order)?;
    Ok(dedup(chains_at(&tree, tree.root(), mode))
        .into_iter()
        .map(|c| TotalOrder::from_sequence(c).expect("each label appears once"))
        .collect())
}

/// Total orders for which `order` is nondecreasing. Orders with the root
/// below its subtree come first.
pub fn total_orders_nondecreasing(order: &SemilatticeOrder) -> Result<Vec<TotalOrder>> {
    total_orders(order, Mode::Nondecreasing)
}

/// Total orders for which `order` is internal.
pub fn total_orders_internal(order: &SemilatticeOrder) -> Result<Vec<TotalOrder>> {
    total_orders(order, Mode::Internal)
}

/// Total orders for which `order` has the CI-property.
pub fn total_orders_ci(order: &SemilatticeOrder) -> Result<Vec<TotalOrder>> {
    total_orders(order, Mode::Ci)
}

pub fn total_orders_for(order: &SemilatticeOrder, mode: Mode) -> Result<Vec<TotalOrder>> {
    total_orders(order, mode)
}

/// `2^(n - L)`, `L` the number of minimal elements.
pub fn count_nondecreasing_orders(order: &SemilatticeOrder) -> Result<BigCount> {
    if order.n() == 0 {
        return Ok(BigCount::one());
    }
    let tree = binary_tree(order)?;
    Ok(BigUint::one() << (order.n() - tree.leaves().len()))
}

/// `γ = 2^(i-1) · m^(2-i) · γ(C₁) · γ(C₂)` with `i` children and `m` the
/// size of the current subtree.
pub fn count_internal_orders(order: &SemilatticeOrder) -> Result<BigCount> {
    count_recursive(order, |i, m| match i {
        1 => BigCount::from(m),
        _ => BigCount::from(2u32),
    })
}

/// `η = 3^(i-1) · 2 · η(C₁) · η(C₂)` with `i` children.
pub fn count_ci_orders(order: &SemilatticeOrder) -> Result<BigCount> {
    count_recursive(order, |i, _| match i {
        1 => BigCount::from(2u32),
        _ => BigCount::from(6u32),
    })
}

pub fn count_orders_for(order: &SemilatticeOrder, mode: Mode) -> Result<BigCount> {
    match mode {
        Mode::Nondecreasing => count_nondecreasing_orders(order),
        Mode::Internal => count_internal_orders(order),
        Mode::Ci => count_ci_orders(order),
    }
}

fn count_recursive(
    order: &SemilatticeOrder,
    factor: impl Fn(usize, usize) -> BigCount + Copy,
) -> Result<BigCount> {
    fn go(
        tree: &RootedTree,
        x: usize,
        factor: impl Fn(usize, usize) -> BigCount + Copy,
    ) -> BigCount {
        let kids = tree.children(x);
        if kids.is_empty() {
            return BigCount::one();
        }
        let m = tree.subtree(x).len();
        kids.iter()
            .map(|&c| go(tree, c, factor))
            .fold(factor(kids.len(), m), |acc, g| acc * g)
    }
    if order.n() == 0 {
        return Ok(BigCount::one());
    }
    let tree = binary_tree(order)?;
    Ok(go(&tree, tree.root(), factor))
}

/// Every total order on `{1..n}` for which `mode` holds, by filtering all
/// `n!` permutations.
pub fn brute_force_total_orders(order: &SemilatticeOrder, mode: Mode) -> Vec<TotalOrder> {
    TotalOrder::all(order.n())
        .filter(|t| mode.accepts(order, t))
        .collect()
}
