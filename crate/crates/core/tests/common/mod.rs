#![allow(dead_code)]

use semichain::enumerate::all_semilattice_orders;
use semichain::{OpTable, SemilatticeOrder, TotalOrder};

/// Triple loop written independently of `OpTable::is_associative`.
pub fn associative_oracle(op: &OpTable) -> bool {
    let n = op.n();
    for x in 1..=n {
        for y in 1..=n {
            let xy = op.get(x, y);
            for z in 1..=n {
                if op.get(xy, z) != op.get(x, op.get(y, z)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every idempotent `≤ₙ`-preserving table, symmetric or not.
pub fn idempotent_monotone_tables(n: usize) -> Vec<OpTable> {
    fn go(n: usize, cell: usize, values: &mut Vec<usize>, out: &mut Vec<OpTable>) {
        if cell == n * n {
            out.push(OpTable::new(n, values.clone()).unwrap());
            return;
        }
        let (x, y) = (cell / n, cell % n);
        if x == y {
            values.push(x + 1);
            go(n, cell + 1, values, out);
            values.pop();
            return;
        }
        let mut lo = x.min(y) + 1;
        if y > 0 {
            lo = lo.max(values[x * n + y - 1]);
        }
        if x > 0 {
            lo = lo.max(values[(x - 1) * n + y]);
        }
        for v in lo..=x.max(y) + 1 {
            values.push(v);
            go(n, cell + 1, values, out);
            values.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut Vec::new(), &mut out);
    out.retain(|t| t.is_natural_preserving());
    out
}

pub fn semilattices(n: usize) -> Vec<SemilatticeOrder> {
    all_semilattice_orders(n).unwrap()
}

pub fn pairwise_incomparable(s: &SemilatticeOrder, a: usize, b: usize, c: usize) -> bool {
    s.incomparable(a, b) && s.incomparable(a, c) && s.incomparable(b, c)
}

/// `lo..=hi` in `t`-rank terms contains exactly the ranks of `set`.
pub fn is_convex(set: &[usize], t: &TotalOrder) -> bool {
    if set.is_empty() {
        return true;
    }
    let ranks: Vec<usize> = set.iter().map(|&x| t.rank(x)).collect();
    let lo = *ranks.iter().min().unwrap();
    let hi = *ranks.iter().max().unwrap();
    hi + 1 - lo == set.len()
}
