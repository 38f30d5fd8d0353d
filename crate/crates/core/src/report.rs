//! Rendering behind the `semichain` command line tool.
//!
//! Each function takes parsed inputs and returns a [`Report`]: the text and
//! JSON renderings plus the exit status. Nothing here touches the process
//! environment, so the whole CLI surface is testable in-process.

use itertools::Itertools;
use serde_json::{json, Value};

use crate::assoc::{contour_plot, fast_associativity_test, Verdict};
use crate::construction::{count_orders_for, total_orders_for, Mode};
use crate::enumerate::{count_internal_only, generate_nondecreasing_orders, Sequence};
use crate::error::{Error, Result};
use crate::hasse::{is_smooth, to_dot};
use crate::kary::{reduce, KaryOpTable};
use crate::order::{SemilatticeOrder, TotalOrder};
use crate::table::OpTable;

/// Success or a true verdict.
pub const EXIT_OK: u8 = 0;
/// A false verdict, or input that lacks a property the command needs.
pub const EXIT_FALSE: u8 = 1;
/// Usage or parse error.
pub const EXIT_USAGE: u8 = 2;

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub exit: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            exit: EXIT_OK,
        }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

/// Exit status for an error surfaced by a command.
pub fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. }
        | Error::Json(_)
        | Error::OutOfRange { .. }
        | Error::SizeMismatch(_)
        | Error::Io(_)
        | Error::NotPartialOrder(_)
        | Error::NotTotalOrder(_)
        | Error::BoundExceeded { .. } => EXIT_USAGE,
        Error::NotSemilattice(_)
        | Error::NotBinaryTree
        | Error::PreconditionViolated(_)
        | Error::NotAssociative
        | Error::ReductionMismatch => EXIT_FALSE,
    }
}

pub fn error_report(err: &Error) -> Report {
    Report {
        text: format!("error: {err}\n"),
        json: json!({ "error": err.to_string() }),
        exit: exit_code_for(err),
    }
}

fn pairs_line(order: &SemilatticeOrder) -> String {
    let covers = order.covers();
    if covers.is_empty() {
        "-".to_string()
    } else {
        covers.iter().map(|(x, y)| format!("{x} {y}")).join("; ")
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |v| v.to_string())
}

/// Property panel and fast-test verdict. Exit `0` iff associative.
pub fn check(op: &OpTable) -> Report {
    let n = op.n();
    let nat = TotalOrder::natural(n);
    let associative = op.is_associative();
    let monotone = op.is_natural_preserving();
    let props = [
        ("associative", associative),
        ("idempotent", op.is_idempotent()),
        ("symmetric", op.is_symmetric()),
        ("monotone", monotone),
        ("quasitrivial", op.is_quasitrivial()),
        ("smooth", monotone && is_smooth(op)),
        ("internal", op.is_internal(&nat)),
    ];
    let degrees = op.degree_sequence();
    let mut text = String::new();
    for (name, v) in props {
        text.push_str(&format!("{name:<13}{}\n", if v { "yes" } else { "no" }));
    }
    text.push_str(&format!("{:<13}{}\n", "zero", opt(op.zero_element())));
    text.push_str(&format!("{:<13}{}\n", "neutral", opt(op.neutral_element())));
    text.push_str(&format!(
        "{:<13}{}\n",
        "degrees",
        degrees.as_slice().iter().join(" ")
    ));

    let (verdict_text, verdict_json) = match fast_associativity_test(op) {
        Ok(trace) => {
            let steps: Vec<Value> = trace
                .steps
                .iter()
                .map(|s| json!({ "interval": [s.interval.lo, s.interval.hi], "zero": s.zero }))
                .collect();
            match trace.verdict {
                Verdict::Associative(_) => (
                    "Associative".to_string(),
                    json!({ "result": "associative", "steps": steps }),
                ),
                Verdict::NotAssociative(iv) => (
                    format!("NotAssociative({iv})"),
                    json!({ "result": "not_associative", "interval": [iv.lo, iv.hi], "steps": steps }),
                ),
            }
        }
        Err(e) => (
            format!("n/a ({e})"),
            json!({ "result": "not_applicable", "reason": e.to_string() }),
        ),
    };
    text.push_str(&format!("{:<13}{verdict_text}\n", "fast test"));

    let order = SemilatticeOrder::from_op(op).ok();
    let order_text = order
        .as_ref()
        .map_or_else(|| "none".to_string(), pairs_line);
    text.push_str(&format!("{:<13}{order_text}\n", "order"));

    let mut props_json = serde_json::Map::new();
    for (name, v) in props {
        props_json.insert(name.to_string(), json!(v));
    }
    let json = json!({
        "n": n,
        "properties": props_json,
        "zero": op.zero_element(),
        "neutral": op.neutral_element(),
        "degrees": degrees.as_slice(),
        "fast_test": verdict_json,
        "order": order.map(|o| o.to_json()),
    });
    Report {
        text,
        json,
        exit: if associative { EXIT_OK } else { EXIT_FALSE },
    }
}

/// One value of a sequence.
pub fn count_sequence(seq: Sequence, n: usize) -> Report {
    let v = seq.value(n);
    Report::ok(
        format!("{v}\n"),
        json!({ "sequence": seq.name(), "n": n, "value": v.to_string() }),
    )
}

/// The four sequences side by side for `0..=upto`.
pub fn count_table(upto: usize) -> Report {
    let cols: Vec<Vec<String>> = Sequence::ALL
        .iter()
        .map(|s| s.upto(upto).iter().map(|v| v.to_string()).collect())
        .collect();
    let width = |i: usize| {
        cols[i]
            .iter()
            .map(String::len)
            .chain([Sequence::ALL[i].name().len()])
            .max()
            .unwrap_or(0)
    };
    let nw = upto.to_string().len().max(1);
    let mut text = format!("{:>nw$}", "n");
    for (i, s) in Sequence::ALL.iter().enumerate() {
        text.push_str(&format!("  {:>w$}", s.name(), w = width(i)));
    }
    text.push('\n');
    let mut rows = Vec::new();
    for n in 0..=upto {
        text.push_str(&format!("{n:>nw$}"));
        let mut row = serde_json::Map::new();
        row.insert("n".into(), json!(n));
        for (i, (s, col)) in Sequence::ALL.iter().zip(&cols).enumerate() {
            text.push_str(&format!("  {:>w$}", col[n], w = width(i)));
            row.insert(s.name().into(), json!(col[n]));
        }
        text.push('\n');
        rows.push(Value::Object(row));
    }
    Report::ok(text, Value::Array(rows))
}

/// Brute-force count of semilattice orders internal for `≤ₙ`.
pub fn count_internal(n: usize) -> Result<Report> {
    let v = count_internal_only(n)?;
    Ok(Report::ok(
        format!("{v}\n"),
        json!({ "sequence": "internal", "n": n, "value": v.to_string() }),
    ))
}

/// Every nondecreasing order for `≤ₙ`, one line of cover pairs each.
pub fn gen(n: usize) -> Result<Report> {
    let mut text = String::new();
    let mut list = Vec::new();
    for order in generate_nondecreasing_orders(n)? {
        text.push_str(&pairs_line(&order));
        text.push('\n');
        list.push(json!(order.to_json()));
    }
    Ok(Report::ok(text, Value::Array(list)))
}

/// Total orders for which `order` is nondecreasing, internal or CI, one
/// bottom-to-top sequence per line.
pub fn orders(order: &SemilatticeOrder, mode: Mode, count_only: bool) -> Result<Report> {
    if count_only {
        let c = count_orders_for(order, mode)?;
        return Ok(Report::ok(
            format!("{c}\n"),
            json!({ "mode": mode.name(), "count": c.to_string() }),
        ));
    }
    let list = total_orders_for(order, mode)?;
    let text: String = list.iter().map(|t| format!("{}\n", t.to_text())).collect();
    let json = json!({
        "mode": mode.name(),
        "orders": list.iter().map(|t| t.sequence().to_vec()).collect::<Vec<_>>(),
    });
    Ok(Report::ok(text, json))
}

/// ASCII contour plot, or with `dot` the Hasse diagram of the table's order.
pub fn plot(op: &OpTable, dot: bool) -> Result<Report> {
    if dot {
        return hasse(&SemilatticeOrder::from_op(op)?, true);
    }
    let plot = contour_plot(op);
    let comps: Vec<Value> = plot
        .components()
        .iter()
        .map(|(z, cells)| json!({ "value": z, "cells": cells.len() }))
        .collect();
    Ok(Report::ok(
        plot.render_ascii(),
        json!({ "table": op.to_json(), "components": comps }),
    ))
}

/// Cover pairs, or with `dot` a Graphviz digraph.
pub fn hasse(order: &SemilatticeOrder, dot: bool) -> Result<Report> {
    let text = if dot { to_dot(order) } else { order.to_text() };
    let mut json = json!(order.to_json());
    if dot {
        json["dot"] = json!(text);
    }
    Ok(Report::ok(text, json))
}

/// The binary operation behind a reducible k-ary table.
pub fn reduce_report(f: &KaryOpTable) -> Result<Report> {
    let g = reduce(f)?;
    Ok(Report::ok(g.to_text(), json!(g.to_json())))
}
