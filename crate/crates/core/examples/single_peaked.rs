//! Chains, single-peakedness and neutral elements.
//!
//! cargo run --example single_peaked

use semichain::hasse::neutral_iff_single_peaked_check;
use semichain::order::is_single_peaked;
use semichain::TotalOrder;

fn main() {
    let t = TotalOrder::natural(4);
    println!("rankings of 1..4 single-peaked for 1 < 2 < 3 < 4:");
    for p in TotalOrder::all(4) {
        if is_single_peaked(&p, &t) {
            let chain = p.as_semilattice();
            let neutral = neutral_iff_single_peaked_check(&chain, &t).unwrap();
            println!("  {}  neutral element: {neutral}", p.to_text());
        }
    }
    for n in 1..=8 {
        let t = TotalOrder::natural(n);
        let count = TotalOrder::all(n)
            .filter(|p| is_single_peaked(p, &t))
            .count();
        println!("n = {n}: {count} single-peaked rankings");
    }
}
