//! The recursive associativity test, step by step.
//!
//! cargo run --example fast_associativity

use semichain::assoc::{fast_associativity_test, find_zero_by_degree, Verdict};
use semichain::enumerate::symmetric_idempotent_monotone_tables;
use semichain::{samples, OpTable};

fn trace(name: &str, op: &OpTable) {
    let t = fast_associativity_test(op).expect("idempotent, symmetric, monotone");
    println!("{name}");
    for step in &t.steps {
        match step.zero {
            Some(z) => println!("  {} has zero {z}", step.interval),
            None => println!("  {} has no zero", step.interval),
        }
    }
    match &t.verdict {
        Verdict::Associative(order) => println!("  associative, covers {:?}", order.covers()),
        Verdict::NotAssociative(iv) => println!("  not associative, fails on {iv}"),
    }
}

fn main() {
    trace("fixture with a zero", &samples::zero_but_not_associative());
    trace("vee join", &samples::vee_join());
    println!(
        "zero by degree for max(5): {:?}",
        find_zero_by_degree(&OpTable::max(5)).unwrap()
    );

    // the fast test against the plain triple loop
    for n in 1..=5 {
        let tables = symmetric_idempotent_monotone_tables(n).unwrap();
        let agree = tables
            .iter()
            .all(|op| fast_associativity_test(op).unwrap().is_associative() == op.is_associative());
        let assoc = tables.iter().filter(|op| op.is_associative()).count();
        println!(
            "n = {n}: {} candidate tables, {assoc} associative, agreement {agree}",
            tables.len()
        );
    }
}
