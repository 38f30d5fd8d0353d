//! Extends a join to a k-ary operation and reduces it back.
//!
//! cargo run --example kary_reduction

use semichain::kary::{
    alternating_sum_z3, extend, is_kary_associative, kary_semilattice_tables, reduce,
    ternary_median,
};
use semichain::samples;

fn main() {
    let vee = samples::vee_join();
    for k in 2..=4 {
        let f = extend(&vee, k).unwrap();
        let back = reduce(&f).unwrap();
        println!(
            "k = {k}: {} cells, reduces back: {}",
            f.values().len(),
            back == vee
        );
    }

    println!("median: {}", reduce(&ternary_median(3)).unwrap_err());
    let alt = alternating_sum_z3();
    println!(
        "x - y + z on Z3: associative {}, reducible: {}",
        is_kary_associative(&alt).unwrap(),
        reduce(&alt).is_ok()
    );

    for n in 0..=3 {
        println!(
            "ternary semilattice tables on {n} elements: {}",
            kary_semilattice_tables(n, 3).unwrap().len()
        );
    }
}
