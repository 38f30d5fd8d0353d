//! The four counting sequences, with brute-force checks where they are cheap.
//!
//! cargo run --example sequence_table

use semichain::enumerate::{
    binary_ci_upto, brute_count_operations, count_internal_only, BruteDomain, Sequence, TreeFilter,
};

fn main() {
    let upto = 10;
    let columns: Vec<_> = Sequence::ALL.iter().map(|s| s.upto(upto)).collect();
    print!("{:>2}", "n");
    for s in Sequence::ALL {
        print!("{:>10}", s.name());
    }
    println!();
    for n in 0..=upto {
        print!("{n:>2}");
        for col in &columns {
            print!("{:>10}", col[n].to_string());
        }
        println!();
    }

    println!();
    println!("associative tables by brute force:");
    for n in 0..=5 {
        let c = brute_count_operations(n, BruteDomain::AssociativeMonotoneTables).unwrap();
        println!("  n = {n}: {c}");
    }
    let lin = TreeFilter {
        internal: true,
        linear_filter: true,
        ..TreeFilter::default()
    };
    let ci = TreeFilter {
        ci: true,
        ..TreeFilter::default()
    };
    println!("labelled binary trees, brute force vs recurrence:");
    for (n, corrected) in binary_ci_upto(6).iter().enumerate() {
        let b = brute_count_operations(n, BruteDomain::BinaryTrees(lin)).unwrap();
        let d = brute_count_operations(n, BruteDomain::BinaryTrees(ci)).unwrap();
        println!(
            "  n = {n}: internal+filter {b} (beta {}), CI {d} (delta {}, corrected {})",
            Sequence::Beta.value(n),
            Sequence::Delta.value(n),
            corrected
        );
    }
    let internal: Vec<String> = (0..=5)
        .map(|n| count_internal_only(n).unwrap().to_string())
        .collect();
    println!("internal only: {}", internal.join(", "));
}
