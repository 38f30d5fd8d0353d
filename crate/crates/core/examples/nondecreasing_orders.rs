//! Streams every semilattice order nondecreasing for 1 < 2 < ... < n.
//!
//! cargo run --example nondecreasing_orders -- 5

use std::collections::BTreeMap;

use semichain::enumerate::generate_nondecreasing_orders;
use semichain::hasse::binary_tree;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    let mut by_shape: BTreeMap<String, usize> = BTreeMap::new();
    let mut total = 0;
    for order in generate_nondecreasing_orders(n).expect("within SEMICHAIN_MAX_N") {
        if total < 20 {
            println!("{:?}", order.covers());
        }
        let shape = binary_tree(&order).expect("always a binary tree").shape();
        *by_shape.entry(shape.code().to_string()).or_default() += 1;
        total += 1;
    }
    println!("{total} orders, {} shapes", by_shape.len());
    for (code, count) in by_shape {
        println!("  {code}: {count}");
    }
}
