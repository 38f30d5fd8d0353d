//! Counting sequences and exhaustive generators.
//!
//! The four sequences are computed bottom-up with exact big integers:
//!
//! | sequence | counts (orders on `{1..n}`)                               | OEIS    |
//! |----------|-----------------------------------------------------------|---------|
//! | `alpha`  | semilattice orders nondecreasing for `≤ₙ` (Catalan)       | A000108 |
//! | `tau`    | their isomorphism types (unordered binary trees)          | A001190 |
//! | `beta`   | internal for `≤ₙ` with the linear filter property         | A006014 |
//! | `delta`  | binary semilattice orders with the CI-property for `≤ₙ`  |         |
//!
//! The brute-force generators here (all partial orders, all symmetric
//! idempotent monotone tables, all labelled binary trees) are the independent
//! oracles the recurrences are checked against.

use std::collections::BTreeSet;
use std::rc::Rc;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hasse::TreeShape;
use crate::order::{PartialOrder, SemilatticeOrder, TotalOrder};
use crate::table::OpTable;

pub type BigCount = BigUint;

/// Environment variable overriding [`DEFAULT_GENERATION_BOUND`].
pub const BOUND_ENV: &str = "SEMICHAIN_MAX_N";
pub const DEFAULT_GENERATION_BOUND: usize = 10;
pub const TABLE_ENUMERATION_BOUND: usize = 5;
pub const TREE_ENUMERATION_BOUND: usize = 7;
pub const POSET_ENUMERATION_BOUND: usize = 6;
pub const INTERNAL_ONLY_BOUND: usize = 5;

/// Upper bound on `n` for [`generate_nondecreasing_orders`].
pub fn generation_bound() -> usize {
    std::env::var(BOUND_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_GENERATION_BOUND)
}

fn check_bound(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::BoundExceeded { what, n, max })
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sequence {
    Alpha,
    Tau,
    Beta,
    Delta,
}

impl Sequence {
    pub const ALL: [Sequence; 4] = [
        Sequence::Alpha,
        Sequence::Tau,
        Sequence::Beta,
        Sequence::Delta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sequence::Alpha => "alpha",
            Sequence::Tau => "tau",
            Sequence::Beta => "beta",
            Sequence::Delta => "delta",
        }
    }

    /// Values for `0..=n`.
    pub fn upto(self, n: usize) -> Vec<BigCount> {
        match self {
            Sequence::Alpha => alpha_upto(n),
            Sequence::Tau => tau_upto(n),
            Sequence::Beta => beta_upto(n),
            Sequence::Delta => delta_upto(n),
        }
    }

    pub fn value(self, n: usize) -> BigCount {
        self.upto(n).pop().expect("upto(n) has n + 1 entries")
    }
}

impl std::str::FromStr for Sequence {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Sequence::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| format!("unknown sequence `{s}`"))
    }
}

fn base(n: usize) -> Vec<BigCount> {
    vec![BigCount::one(); n.min(1) + 1]
}

/// `α(n) = Σ_{i=1}^{n} α(n-i) α(i-1)`, `α(0) = 1`.
pub fn alpha_upto(n: usize) -> Vec<BigCount> {
    let mut a = vec![BigCount::one()];
    for m in 1..=n {
        let v = (1..=m).map(|i| &a[m - i] * &a[i - 1]).sum();
        a.push(v);
    }
    a
}

pub fn alpha(n: usize) -> BigCount {
    Sequence::Alpha.value(n)
}

/// `τ(2m) = Σ_{i<m} τ(i) τ(2m-1-i)` and
/// `τ(2m+1) = Σ_{i<m} τ(i) τ(2m-i) + τ(m)(τ(m)+1)/2`.
pub fn tau_upto(n: usize) -> Vec<BigCount> {
    let mut t = base(n);
    for m in 2..=n {
        let half = m / 2;
        let mut v: BigCount = (0..half).map(|i| &t[i] * &t[m - 1 - i]).sum();
        if m % 2 == 1 {
            v += &t[half] * (&t[half] + 1u32) / 2u32;
        }
        t.push(v);
    }
    t
}

pub fn tau(n: usize) -> BigCount {
    Sequence::Tau.value(n)
}

/// `β(n) = Σ_{i=1}^{n-2} β(i) β(n-i-1) + n β(n-1)` for `n ≥ 2`.
pub fn beta_upto(n: usize) -> Vec<BigCount> {
    let mut b = base(n);
    for m in 2..=n {
        let mut v: BigCount = (1..m - 1).map(|i| &b[i] * &b[m - i - 1]).sum();
        v += &b[m - 1] * m;
        b.push(v);
    }
    b
}

pub fn beta(n: usize) -> BigCount {
    Sequence::Beta.value(n)
}

/// `δ(n) = Σ_{i=1}^{n} δ(i-1) δ(n-i) + Σ_{j=1}^{n-2} C(n-1, j) δ(j) δ(n-j-1)`.
pub fn delta_upto(n: usize) -> Vec<BigCount> {
    let mut d = base(n);
    for m in 2..=n {
        let mut v: BigCount = (1..=m).map(|i| &d[i - 1] * &d[m - i]).sum();
        for j in 1..m - 1 {
            v += binomial(m - 1, j) * &d[j] * &d[m - j - 1];
        }
        d.push(v);
    }
    d
}

pub fn delta(n: usize) -> BigCount {
    Sequence::Delta.value(n)
}

/// Binary semilattice orders with the CI-property for `≤ₙ`, counted
/// directly: `c(n) = Σ_{i=1}^{n} c(i-1) c(n-i) + 2 Σ_{j=1}^{n-2} c(j) c(n-1-j)`.
///
/// The second sum covers a top `r ∈ {1, n}` with two children. Their ideals
/// must be convex, so they are `[2, j+1]`, `[j+2, n]` (or the mirror image),
/// not an arbitrary `j`-subset as in [`delta`]. The two agree up to `n = 3`.
pub fn binary_ci_upto(n: usize) -> Vec<BigCount> {
    let mut c = base(n);
    for m in 2..=n {
        let mut v: BigCount = (1..=m).map(|i| &c[i - 1] * &c[m - i]).sum();
        let split: BigCount = (1..m - 1).map(|j| &c[j] * &c[m - 1 - j]).sum();
        v += split * 2u32;
        c.push(v);
    }
    c
}

pub fn binary_ci(n: usize) -> BigCount {
    binary_ci_upto(n).pop().expect("n + 1 entries")
}

/// `C(n, k)` by the multiplicative formula; each partial product is exact.
pub fn binomial(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A semilattice order under construction: its top and `(child, parent)` edges.
#[derive(Clone)]
struct Partial {
    top: Option<usize>,
    edges: Vec<(usize, usize)>,
}

type PartialStream = Box<dyn Iterator<Item = Partial>>;

fn nondecreasing_on(lo: usize, hi: usize) -> PartialStream {
    if lo > hi {
        return Box::new(std::iter::once(Partial {
            top: None,
            edges: Vec::new(),
        }));
    }
    Box::new((lo..=hi).flat_map(move |r| -> PartialStream {
        let attach = move |mut edges: Vec<(usize, usize)>, sub_top: Option<usize>| {
            if let Some(c) = sub_top {
                edges.push((c, r));
            }
            edges
        };
        if r == lo || r == hi {
            let (a, b) = if r == lo { (lo + 1, hi) } else { (lo, hi - 1) };
            Box::new(nondecreasing_on(a, b).map(move |sub| Partial {
                top: Some(r),
                edges: attach(sub.edges, sub.top),
            }))
        } else {
            let right: Rc<Vec<Partial>> = Rc::new(nondecreasing_on(r + 1, hi).collect());
            Box::new(nondecreasing_on(lo, r - 1).flat_map(move |left| {
                let right = Rc::clone(&right);
                (0..right.len()).map(move |k| {
                    let rt = &right[k];
                    let mut edges = attach(left.edges.clone(), left.top);
                    edges.extend_from_slice(&rt.edges);
                    Partial {
                        top: Some(r),
                        edges: attach(edges, rt.top),
                    }
                })
            }))
        }
    }))
}

/// Streams every semilattice order on `{1..n}` that is nondecreasing for
/// `≤ₙ`, each once.
///
/// The top `r` runs over `1..=n` in ascending order. For `r ∈ {1, n}` the
/// remaining elements form one nondecreasing order below `r`; otherwise
/// `[1, r-1]` and `[r+1, n]` are generated independently, the lower side
/// varying slowest.
pub struct NondecreasingOrders {
    n: usize,
    inner: PartialStream,
}

impl Iterator for NondecreasingOrders {
    type Item = SemilatticeOrder;

    fn next(&mut self) -> Option<SemilatticeOrder> {
        let partial = self.inner.next()?;
        let mut parent = vec![None; self.n];
        for (c, p) in partial.edges {
            parent[c - 1] = Some(p);
        }
        Some(SemilatticeOrder::from_parent_map(&parent).expect("generated trees are valid"))
    }
}

pub fn generate_nondecreasing_orders(n: usize) -> Result<NondecreasingOrders> {
    check_bound("nondecreasing order generation", n, generation_bound())?;
    Ok(NondecreasingOrders {
        n,
        inner: nondecreasing_on(1, n),
    })
}

/// Every symmetric, idempotent, `≤ₙ`-preserving table on `{1..n}`.
///
/// The strict upper triangle is filled row by row with `F(x, y) ∈ [x, y]`,
/// kept nondecreasing along rows and columns; symmetry and idempotency fill
/// the rest.
pub fn symmetric_idempotent_monotone_tables(n: usize) -> Result<Vec<OpTable>> {
    check_bound("table enumeration", n, TABLE_ENUMERATION_BOUND)?;
    let cells: Vec<(usize, usize)> = (1..=n)
        .flat_map(|x| (x + 1..=n).map(move |y| (x, y)))
        .collect();
    let mut values = vec![0; n * n];
    for x in 1..=n {
        values[(x - 1) * n + (x - 1)] = x;
    }
    let mut out = Vec::new();
    fill(n, &cells, 0, &mut values, &mut out);
    Ok(out)
}

fn fill(
    n: usize,
    cells: &[(usize, usize)],
    k: usize,
    values: &mut [usize],
    out: &mut Vec<OpTable>,
) {
    let Some(&(x, y)) = cells.get(k) else {
        out.push(OpTable::from_raw(n, values.to_vec()));
        return;
    };
    let at = |v: &[usize], a: usize, b: usize| v[(a - 1) * n + (b - 1)];
    // left neighbour in the row and lower neighbour in the column
    let mut lo = at(values, x, y - 1).max(x);
    if x > 1 {
        lo = lo.max(at(values, x - 1, y));
    }
    for v in lo..=y {
        values[(x - 1) * n + (y - 1)] = v;
        values[(y - 1) * n + (x - 1)] = v;
        fill(n, cells, k + 1, values, out);
    }
}

/// Every partial order on `{1..n}`.
///
/// Built one element at a time: the new element `k` picks a down-closed set
/// `D` of elements below it and an up-closed set `U` above it with
/// `D ⪯ U` elementwise, which reaches each labelled poset exactly once.
pub fn all_partial_orders(n: usize) -> Result<Vec<PartialOrder>> {
    check_bound("partial order enumeration", n, POSET_ENUMERATION_BOUND)?;
    // below[i]: bitmask of elements strictly below i
    let mut posets: Vec<Vec<u32>> = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for below in &posets {
            let above: Vec<u32> = (0..k)
                .map(|i| {
                    (0..k)
                        .filter(|&j| below[j] >> i & 1 == 1)
                        .fold(0, |m, j| m | 1 << j)
                })
                .collect();
            let full = (1u32 << k) - 1;
            for down in 0..=full {
                if !(0..k).all(|i| down >> i & 1 == 0 || below[i] & !down == 0) {
                    continue;
                }
                let rest = full & !down;
                let mut up = rest;
                loop {
                    let ok = (0..k).all(|i| {
                        up >> i & 1 == 0 || (above[i] & !up == 0 && down & !below[i] == 0)
                    });
                    if ok {
                        let mut b = below.clone();
                        for (i, bi) in b.iter_mut().enumerate() {
                            if up >> i & 1 == 1 {
                                *bi |= 1 << k;
                            }
                        }
                        b.push(down);
                        next.push(b);
                    }
                    if up == 0 {
                        break;
                    }
                    up = (up - 1) & rest;
                }
            }
        }
        posets = next;
    }
    Ok(posets
        .into_iter()
        .map(|below| {
            let mut leq = vec![false; n * n];
            for y in 0..n {
                leq[y * n + y] = true;
                for x in 0..n {
                    if below[y] >> x & 1 == 1 {
                        leq[x * n + y] = true;
                    }
                }
            }
            PartialOrder::from_raw(n, leq)
        })
        .collect())
}

/// Every semilattice order on `{1..n}`: the partial orders in which all
/// pairs have a join.
pub fn all_semilattice_orders(n: usize) -> Result<Vec<SemilatticeOrder>> {
    Ok(all_partial_orders(n)?
        .into_iter()
        .filter_map(|po| SemilatticeOrder::from_partial_order(po).ok())
        .collect())
}

/// Every semilattice order on `{1..n}` whose Hasse diagram is a binary tree,
/// obtained by labelling each binary shape in all `n!` ways and dropping
/// repeats.
pub fn labeled_binary_tree_orders(n: usize) -> Result<Vec<SemilatticeOrder>> {
    check_bound(
        "labelled binary tree enumeration",
        n,
        TREE_ENUMERATION_BOUND,
    )?;
    if n == 0 {
        return Ok(vec![SemilatticeOrder::from_parent_map(&[])?]);
    }
    let mut seen: BTreeSet<Vec<Option<usize>>> = BTreeSet::new();
    for shape in TreeShape::all_binary(n) {
        let tree = shape.to_tree();
        for perm in (1..=n).permutations(n) {
            let mut parent = vec![None; n];
            for x in 1..=n {
                parent[perm[x - 1] - 1] = tree.parent(x).map(|p| perm[p - 1]);
            }
            seen.insert(parent);
        }
    }
    seen.into_iter()
        .map(|p| SemilatticeOrder::from_parent_map(&p))
        .collect()
}

/// Properties filtering the labelled binary tree oracle, all relative to `≤ₙ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TreeFilter {
    pub ci: bool,
    pub internal: bool,
    pub linear_filter: bool,
}

impl TreeFilter {
    pub fn accepts(&self, order: &SemilatticeOrder, t: &TotalOrder) -> bool {
        (!self.ci || order.has_ci_property(t))
            && (!self.internal || order.is_internal_for(t))
            && (!self.linear_filter || order.has_linear_filter_property())
    }
}

/// What [`brute_count_operations`] enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BruteDomain {
    /// Associative tables among the symmetric, idempotent, `≤ₙ`-preserving ones.
    AssociativeMonotoneTables,
    /// Labelled binary-tree semilattice orders passing the filter.
    BinaryTrees(TreeFilter),
}

pub fn brute_count_operations(n: usize, domain: BruteDomain) -> Result<BigCount> {
    let count = match domain {
        BruteDomain::AssociativeMonotoneTables => symmetric_idempotent_monotone_tables(n)?
            .iter()
            .filter(|t| t.is_associative())
            .count(),
        BruteDomain::BinaryTrees(filter) => {
            let t = TotalOrder::natural(n);
            labeled_binary_tree_orders(n)?
                .iter()
                .filter(|s| filter.accepts(s, &t))
                .count()
        }
    };
    Ok(BigCount::from(count))
}

/// Semilattice orders on `{1..n}` internal for `≤ₙ`, with no further
/// constraint. Exhaustive over all partial orders.
pub fn count_internal_only(n: usize) -> Result<BigCount> {
    check_bound("internal-only count", n, INTERNAL_ONLY_BOUND)?;
    let t = TotalOrder::natural(n);
    let count = all_semilattice_orders(n)?
        .iter()
        .filter(|s| s.is_internal_for(&t))
        .count();
    Ok(BigCount::from(count))
}
