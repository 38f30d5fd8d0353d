//! Hasse diagram of a semilattice order as Graphviz.
//!
//! cargo run --example hasse_dot | dot -Tsvg > hasse.svg

use semichain::hasse::{binary_tree, satisfies_structure_condition, to_dot};
use semichain::{samples, TotalOrder};

fn main() {
    let order = samples::forked_tree();
    let tree = binary_tree(&order).unwrap();
    eprintln!(
        "root {}, leaves {:?}, shape {}",
        tree.root(),
        tree.leaves(),
        tree.shape().code()
    );
    for t in [
        TotalOrder::natural(5),
        TotalOrder::from_sequence(vec![5, 2, 1, 3, 4]).unwrap(),
    ] {
        eprintln!(
            "structure condition for {:?}: {}",
            t.sequence(),
            satisfies_structure_condition(&order, &t).unwrap()
        );
    }
    print!("{}", to_dot(&order));
}
