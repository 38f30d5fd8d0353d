//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fail.
//!
//! Run with `cargo test --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use semichain::assoc::{fast_associativity_test, Interval};
use semichain::construction::{brute_force_total_orders, count_orders_for, total_orders_for, Mode};
use semichain::enumerate::{
    all_semilattice_orders, alpha, binomial, brute_count_operations, count_internal_only,
    delta_upto, generate_nondecreasing_orders, labeled_binary_tree_orders,
    symmetric_idempotent_monotone_tables, BruteDomain, Sequence,
};
use semichain::hasse::theorem_main_check;
use semichain::kary::{extend, kary_semilattice_tables, reduce};
use semichain::order::join_op;
use semichain::{samples, OpTable, TotalOrder};

/// Published sequence table, n = 0..=8.
const TABLE: [(Sequence, [u64; 9]); 4] = [
    (Sequence::Alpha, [1, 1, 2, 5, 14, 42, 132, 429, 1430]),
    (Sequence::Tau, [1, 1, 1, 2, 3, 5, 10, 21, 42]),
    (Sequence::Beta, [1, 1, 2, 7, 32, 178, 1160, 8653, 72704]),
    (Sequence::Delta, [1, 1, 2, 7, 30, 158, 984, 7129, 59026]),
];
const INTERNAL_ONLY: [u64; 6] = [1, 1, 2, 7, 36, 247];

const TABLE_BUDGET: Duration = Duration::from_secs(1);
const OPERATION_COUNT_BUDGET: Duration = Duration::from_secs(120);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn sequence_table() -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    for (seq, expected) in TABLE {
        let got = seq.upto(8);
        for (n, &e) in expected.iter().enumerate() {
            if got[n] != big(e) {
                mismatches.push(format!("{}({n}) = {} vs table {e}", seq.name(), got[n]));
            }
        }
    }
    let elapsed = start.elapsed();
    if !mismatches.is_empty() {
        return Err(mismatches.join(", "));
    }
    if elapsed > TABLE_BUDGET {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("36 values exact in {elapsed:?}"))
}

fn catalan_identity() -> Outcome {
    let fact = |k: usize| (1..=k).fold(big(1), |acc, i| acc * big(i as u64));
    for n in 0..=30 {
        let closed = fact(2 * n) / (fact(n) * fact(n + 1));
        if alpha(n) != closed {
            return Err(format!("n={n}: {} vs {closed}", alpha(n)));
        }
    }
    Ok(format!("n <= 30, alpha(30) = {}", alpha(30)))
}

fn operation_count_oracle() -> Outcome {
    let start = Instant::now();
    for n in 0..=5 {
        let count = brute_count_operations(n, BruteDomain::AssociativeMonotoneTables)
            .map_err(|e| e.to_string())?;
        if count != alpha(n) {
            return Err(format!("n={n}: {count} tables vs alpha = {}", alpha(n)));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > OPERATION_COUNT_BUDGET {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("n <= 5, 42 tables at n = 5, {elapsed:?}"))
}

fn fast_test_agreement() -> Outcome {
    let mut checked = 0;
    for n in 0..=5 {
        for op in symmetric_idempotent_monotone_tables(n).map_err(|e| e.to_string())? {
            let trace = fast_associativity_test(&op).map_err(|e| e.to_string())?;
            if trace.is_associative() != op.is_associative() {
                return Err(format!("disagreement on {op:?}"));
            }
            checked += 1;
        }
    }
    let fixture =
        fast_associativity_test(&samples::zero_but_not_associative()).map_err(|e| e.to_string())?;
    match fixture.failing_interval() {
        Some(iv) if iv == Interval::new(1, 3) => {
            Ok(format!("{checked} tables, fixture fails on {iv}"))
        }
        other => Err(format!("fixture verdict {other:?}")),
    }
}

fn theorem_equivalences() -> Outcome {
    let mut pairs = 0;
    for n in 0..=4 {
        let orders: Vec<TotalOrder> = TotalOrder::all(n).collect();
        for s in all_semilattice_orders(n).map_err(|e| e.to_string())? {
            let join = join_op(&s);
            for t in &orders {
                let nd = s.is_nondecreasing_for(t);
                if join.is_preserving(t) != nd {
                    return Err(format!("preserving vs nondecreasing: {s:?} {t:?}"));
                }
                if theorem_main_check(&s, t) != nd {
                    return Err(format!("structure vs nondecreasing: {s:?} {t:?}"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} (order, chain) pairs, no counterexample"))
}

fn construction_counts() -> Outcome {
    let mut trees = 0;
    for n in 1..=6 {
        for s in labeled_binary_tree_orders(n).map_err(|e| e.to_string())? {
            for mode in Mode::ALL {
                let built = total_orders_for(&s, mode).map_err(|e| e.to_string())?;
                let count = count_orders_for(&s, mode).map_err(|e| e.to_string())?;
                let brute = brute_force_total_orders(&s, mode);
                let built_set: BTreeSet<_> = built.iter().map(|t| t.sequence().to_vec()).collect();
                let brute_set: BTreeSet<_> = brute.iter().map(|t| t.sequence().to_vec()).collect();
                if big(built.len() as u64) != count
                    || built_set.len() != built.len()
                    || built_set != brute_set
                {
                    return Err(format!("{} mismatch on {s:?}", mode.name()));
                }
            }
            trees += 1;
        }
    }
    // a = 1, b = 2, c = 3, d = 4, r = 5
    let listed = [
        [5, 2, 1, 3, 4],
        [5, 2, 1, 4, 3],
        [5, 3, 4, 1, 2],
        [5, 4, 3, 1, 2],
    ];
    let expected: BTreeSet<Vec<usize>> = listed
        .iter()
        .flat_map(|s| [s.to_vec(), s.iter().rev().copied().collect()])
        .collect();
    let fixture: BTreeSet<Vec<usize>> =
        total_orders_for(&samples::forked_tree(), Mode::Nondecreasing)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|t| t.sequence().to_vec())
            .collect();
    if fixture != expected {
        return Err(format!("fixture orders {fixture:?}"));
    }
    Ok(format!(
        "{trees} labelled trees x 3 modes, fixture gives the 8 listed orders"
    ))
}

fn internal_only_sequence() -> Outcome {
    let got: Vec<BigUint> = (0..=5)
        .map(count_internal_only)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let expected: Vec<BigUint> = INTERNAL_ONLY.iter().map(|&v| big(v)).collect();
    let shown = got
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    if got == expected {
        Ok(shown)
    } else {
        Err(format!("got {shown}, published {INTERNAL_ONLY:?}"))
    }
}

fn kary_round_trip() -> Outcome {
    let mut joins = 0;
    for n in 1..=4 {
        for s in generate_nondecreasing_orders(n).map_err(|e| e.to_string())? {
            let j: OpTable = join_op(&s);
            for k in [3, 4] {
                let f = extend(&j, k).map_err(|e| e.to_string())?;
                if reduce(&f).map_err(|e| e.to_string())? != j {
                    return Err(format!("round trip failed for {s:?}, k = {k}"));
                }
            }
            joins += 1;
        }
    }
    for n in 0..=3 {
        let count = kary_semilattice_tables(n, 3)
            .map_err(|e| e.to_string())?
            .len();
        if big(count as u64) != alpha(n) {
            return Err(format!("ternary count at n={n}: {count}"));
        }
    }
    Ok(format!(
        "{joins} joins x k in {{3, 4}}, ternary counts 1, 1, 2, 5"
    ))
}

fn delta_identity() -> Outcome {
    let d = delta_upto(21);
    for n in 2..=20 {
        let rhs: BigUint = (0..=n)
            .map(|i| (binomial(n, i) + big(1)) * &d[i] * &d[n - i])
            .sum();
        if &d[n + 1] + big(2) * &d[n] != rhs {
            return Err(format!("n={n}"));
        }
    }
    Ok("2 <= n <= 20".to_string())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("sequence table", sequence_table),
        ("Catalan identity", catalan_identity),
        ("operation-count oracle", operation_count_oracle),
        ("fast test vs oracle", fast_test_agreement),
        ("theorem equivalences", theorem_equivalences),
        ("construction counts", construction_counts),
        ("internal-only sequence", internal_only_sequence),
        ("k-ary round trip", kary_round_trip),
        ("delta identity", delta_identity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
