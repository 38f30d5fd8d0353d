//! Property panel for a few small operation tables.
//!
//! cargo run --example classify_table

use semichain::{samples, OpTable, SemilatticeOrder, TotalOrder};

fn describe(name: &str, op: &OpTable) {
    let nat = TotalOrder::natural(op.n());
    println!("{name}");
    println!("  associative  {}", op.is_associative());
    println!("  idempotent   {}", op.is_idempotent());
    println!("  symmetric    {}", op.is_symmetric());
    println!("  monotone     {}", op.is_natural_preserving());
    println!("  quasitrivial {}", op.is_quasitrivial());
    println!("  internal     {}", op.is_internal(&nat));
    println!("  zero         {:?}", op.zero_element());
    println!("  neutral      {:?}", op.neutral_element());
    println!("  degrees      {:?}", op.degree_sequence().as_slice());
    match SemilatticeOrder::from_op(op) {
        Ok(order) => println!("  covers       {:?}", order.covers()),
        Err(e) => println!("  no order     ({e})"),
    }
}

fn main() {
    describe("max on 4 elements", &OpTable::max(4));
    describe("join of 1, 3 below 2", &samples::vee_join());
    describe(
        "zero element but not associative",
        &samples::zero_but_not_associative(),
    );

    let text = "3\n1 2 2\n2 2 2\n2 2 3\n";
    let parsed: OpTable = text.parse().expect("valid table");
    assert_eq!(parsed, samples::vee_join());
}
