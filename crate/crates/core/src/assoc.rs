//! Fast associativity test for idempotent, symmetric, `≤ₙ`-preserving
//! operations.
//!
//! Such an operation is associative iff, recursively, every interval still to
//! be placed has a zero element. The zero `r` of an interval becomes the top
//! of the sub-order on it; if `r` is an endpoint the rest of the interval is
//! processed below it, otherwise the two sides `[lo, r-1]` and `[r+1, hi]`
//! are processed independently. Zeros are located with the degree formula
//! `deg(a) = 2a(m - a + 1) - 1` (relative position `a` in an interval of
//! length `m`) instead of a scan.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::SemilatticeOrder;
use crate::table::OpTable;

/// A closed interval `[lo, hi]` of `{1..n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Self {
        Interval { lo, hi }
    }

    pub fn len(&self) -> usize {
        self.hi + 1 - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The operation is associative; its semilattice order.
    Associative(SemilatticeOrder),
    /// The restriction to this interval has no zero element.
    NotAssociative(Interval),
}

/// One visited interval and the zero found on it, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub interval: Interval,
    pub zero: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestTrace {
    pub verdict: Verdict,
    /// Intervals in visiting order (lower interval before upper one).
    pub steps: Vec<Step>,
}

impl TestTrace {
    pub fn is_associative(&self) -> bool {
        matches!(self.verdict, Verdict::Associative(_))
    }

    pub fn failing_interval(&self) -> Option<Interval> {
        match self.verdict {
            Verdict::NotAssociative(iv) => Some(iv),
            Verdict::Associative(_) => None,
        }
    }

    pub fn order(&self) -> Option<&SemilatticeOrder> {
        match &self.verdict {
            Verdict::Associative(order) => Some(order),
            Verdict::NotAssociative(_) => None,
        }
    }
}

fn check_monotone_idempotent(op: &OpTable) -> Result<()> {
    if !op.is_idempotent() {
        return Err(Error::PreconditionViolated(
            "operation is not idempotent".into(),
        ));
    }
    if !op.is_natural_preserving() {
        return Err(Error::PreconditionViolated(
            "operation is not preserving for the natural order".into(),
        ));
    }
    Ok(())
}

/// Zero element on `[lo, hi]` by the degree formula.
///
/// Idempotency and monotonicity make every interval closed under `op`, so the
/// restricted degrees are well defined.
fn zero_on_interval(op: &OpTable, iv: Interval) -> Option<usize> {
    let m = iv.len();
    let mut deg = vec![0usize; m];
    for x in iv.lo..=iv.hi {
        for y in iv.lo..=iv.hi {
            deg[op.get(x, y) - iv.lo] += 1;
        }
    }
    let zero = (1..=m)
        .find(|&a| deg[a - 1] + 1 == 2 * a * (m - a + 1))
        .map(|a| a + iv.lo - 1);
    debug_assert_eq!(
        zero,
        (iv.lo..=iv.hi).find(|&a| (iv.lo..=iv.hi).all(|x| op.get(a, x) == a && op.get(x, a) == a)),
        "degree formula disagrees with the direct scan on {iv}"
    );
    zero
}

/// The zero element of an idempotent, `≤ₙ`-preserving operation, located by
/// its degree `2a(n - a + 1) - 1`.
pub fn find_zero_by_degree(op: &OpTable) -> Result<Option<usize>> {
    check_monotone_idempotent(op)?;
    if op.n() == 0 {
        return Ok(None);
    }
    Ok(zero_on_interval(op, Interval::new(1, op.n())))
}

/// Runs the recursive test; see the module docs.
pub fn fast_associativity_test(op: &OpTable) -> Result<TestTrace> {
    check_monotone_idempotent(op)?;
    if !op.is_symmetric() {
        return Err(Error::PreconditionViolated(
            "operation is not symmetric".into(),
        ));
    }
    let n = op.n();
    let mut parent = vec![None; n];
    let mut steps = Vec::new();
    let verdict = match place(op, Interval::new(1, n), &mut parent, &mut steps) {
        Ok(_) => {
            let order = SemilatticeOrder::from_parent_map(&parent)?;
            debug_assert_eq!(order.join_table(), op);
            Verdict::Associative(order)
        }
        Err(iv) => Verdict::NotAssociative(iv),
    };
    Ok(TestTrace { verdict, steps })
}

/// Places the interval below a new top and returns that top (`None` when the
/// interval is empty). `Err` carries the interval without a zero.
fn place(
    op: &OpTable,
    iv: Interval,
    parent: &mut [Option<usize>],
    steps: &mut Vec<Step>,
) -> std::result::Result<Option<usize>, Interval> {
    if iv.is_empty() {
        return Ok(None);
    }
    let zero = zero_on_interval(op, iv);
    steps.push(Step { interval: iv, zero });
    let r = zero.ok_or(iv)?;
    let below = if r == iv.lo {
        vec![Interval::new(r + 1, iv.hi)]
    } else if r == iv.hi {
        vec![Interval::new(iv.lo, r - 1)]
    } else {
        vec![Interval::new(iv.lo, r - 1), Interval::new(r + 1, iv.hi)]
    };
    for sub in below {
        if let Some(child) = place(op, sub, parent, steps)? {
            parent[child - 1] = Some(r);
        }
    }
    Ok(Some(r))
}

/// Level sets of an operation: cells `(x, y)` are joined by an edge exactly
/// when they carry the same value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContourPlot {
    table: OpTable,
    levels: Vec<Vec<(usize, usize)>>,
}

pub fn contour_plot(op: &OpTable) -> ContourPlot {
    let n = op.n();
    let mut levels = vec![Vec::new(); n];
    for x in 1..=n {
        for y in 1..=n {
            levels[op.get(x, y) - 1].push((x, y));
        }
    }
    ContourPlot {
        table: op.clone(),
        levels,
    }
}

impl ContourPlot {
    /// Cells carrying value `z`.
    pub fn level(&self, z: usize) -> &[(usize, usize)] {
        &self.levels[z - 1]
    }

    /// Connected components with their value, in ascending value order.
    pub fn components(&self) -> Vec<(usize, &[(usize, usize)])> {
        self.levels
            .iter()
            .enumerate()
            .filter(|(_, cells)| !cells.is_empty())
            .map(|(i, cells)| (i + 1, cells.as_slice()))
            .collect()
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        self.components().iter().map(|(_, c)| c.len()).collect()
    }

    pub fn has_edge(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        a != b && self.table.get(a.0, a.1) == self.table.get(b.0, b.1)
    }

    /// Value grid with `y` growing upwards, followed by the level-set sizes.
    pub fn render_ascii(&self) -> String {
        let n = self.table.n();
        let width = n.to_string().len();
        let mut out = String::new();
        for y in (1..=n).rev() {
            let _ = write!(out, "{y:>width$} |");
            for x in 1..=n {
                let _ = write!(out, " {:>width$}", self.table.get(x, y));
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{} +{}",
            " ".repeat(width),
            "-".repeat((width + 1) * n)
        );
        let _ = write!(out, "{}  ", " ".repeat(width));
        for x in 1..=n {
            let _ = write!(out, " {x:>width$}");
        }
        out.push('\n');
        let comps = self.components();
        let _ = writeln!(out, "components: {}", comps.len());
        for (z, cells) in comps {
            let _ = writeln!(out, "  value {z}: {} cells", cells.len());
        }
        out
    }
}
