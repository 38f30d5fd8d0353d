//! Total orders for which a binary-tree semilattice is nondecreasing,
//! internal, or has the CI-property.
//!
//! cargo run --example construct_total_orders

use semichain::construction::{count_orders_for, total_orders_for, Mode};
use semichain::samples;

fn main() {
    let order = samples::forked_tree();
    println!("covers {:?}", order.covers());
    for mode in Mode::ALL {
        let list = total_orders_for(&order, mode).unwrap();
        let count = count_orders_for(&order, mode).unwrap();
        println!("{}: {} orders (formula {count})", mode.name(), list.len());
        for t in list.iter().take(8) {
            println!("  {}", t.to_text());
        }
        if list.len() > 8 {
            println!("  ...");
        }
    }
}
