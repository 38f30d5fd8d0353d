//! Binary operation tables on `{1..n}` and their elementary properties.
//!
//! An [`OpTable`] stores `F(x, y)` densely, row `x` holding `F(x, 1..=n)`.
//! Elements are always `1..=n`; a chain other than the natural one is passed
//! explicitly as a [`TotalOrder`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::TotalOrder;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTable {
    n: usize,
    values: Vec<usize>,
}

impl OpTable {
    /// Builds a table from row-major values, checking the shape and that every
    /// entry lies in `1..=n`.
    pub fn new(n: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != n * n {
            return Err(Error::SizeMismatch(format!(
                "expected {} entries for n = {n}, got {}",
                n * n,
                values.len()
            )));
        }
        for (i, &v) in values.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::OutOfRange {
                    x: i / n + 1,
                    y: i % n + 1,
                    value: v,
                    n,
                });
            }
        }
        Ok(OpTable { n, values })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut values = Vec::with_capacity(n * n);
        for x in 1..=n {
            for y in 1..=n {
                values.push(f(x, y));
            }
        }
        Self::new(n, values)
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::SizeMismatch(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        Self::new(n, rows.concat())
    }

    /// `max` for the natural order, the join of the chain `1 < 2 < ... < n`.
    pub fn max(n: usize) -> Self {
        Self::from_fn(n, |x, y| x.max(y)).expect("max stays in range")
    }

    pub fn min(n: usize) -> Self {
        Self::from_fn(n, |x, y| x.min(y)).expect("min stays in range")
    }

    pub(crate) fn from_raw(n: usize, values: Vec<usize>) -> Self {
        debug_assert_eq!(values.len(), n * n);
        OpTable { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        debug_assert!((1..=self.n).contains(&x) && (1..=self.n).contains(&y));
        self.values[(x - 1) * self.n + (y - 1)]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        // chunks(0) panics, and n = 0 has no rows anyway
        self.values.chunks(self.n.max(1)).take(self.n)
    }

    /// Restriction to the interval `[lo, hi]`, relabelled to `1..=hi-lo+1`.
    ///
    /// Fails if some cell of the square leaves the interval.
    pub fn restrict(&self, lo: usize, hi: usize) -> Result<OpTable> {
        if lo == 0 || hi > self.n || lo > hi + 1 {
            return Err(Error::PreconditionViolated(format!(
                "[{lo}, {hi}] is not an interval of 1..={}",
                self.n
            )));
        }
        let m = hi + 1 - lo;
        let mut values = Vec::with_capacity(m * m);
        for x in lo..=hi {
            for y in lo..=hi {
                let v = self.get(x, y);
                if v < lo || v > hi {
                    return Err(Error::PreconditionViolated(format!(
                        "F({x}, {y}) = {v} leaves [{lo}, {hi}]"
                    )));
                }
                values.push(v + 1 - lo);
            }
        }
        Ok(OpTable { n: m, values })
    }

    /// Brute-force check of `F(x, F(y, z)) = F(F(x, y), z)` over all triples.
    pub fn is_associative(&self) -> bool {
        let n = self.n;
        (1..=n).all(|x| {
            (1..=n).all(|y| {
                let xy = self.get(x, y);
                (1..=n).all(|z| self.get(x, self.get(y, z)) == self.get(xy, z))
            })
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.n).all(|x| (x + 1..=self.n).all(|y| self.get(x, y) == self.get(y, x)))
    }

    pub fn is_idempotent(&self) -> bool {
        (1..=self.n).all(|x| self.get(x, x) == x)
    }

    pub fn is_quasitrivial(&self) -> bool {
        (1..=self.n).all(|x| {
            (1..=self.n).all(|y| {
                let v = self.get(x, y);
                v == x || v == y
            })
        })
    }

    /// Monotone in each argument with respect to `t`.
    ///
    /// Only neighbouring elements of the chain are compared; transitivity
    /// covers the rest.
    pub fn is_preserving(&self, t: &TotalOrder) -> bool {
        assert_eq!(t.n(), self.n, "total order and table sizes differ");
        let seq = t.sequence();
        seq.windows(2).all(|w| {
            let (lo, hi) = (w[0], w[1]);
            (1..=self.n).all(|y| {
                t.le(self.get(lo, y), self.get(hi, y)) && t.le(self.get(y, lo), self.get(y, hi))
            })
        })
    }

    pub fn is_natural_preserving(&self) -> bool {
        self.is_preserving(&TotalOrder::natural(self.n))
    }

    /// `min(x, y) <= F(x, y) <= max(x, y)` in `t` for every pair.
    pub fn is_internal(&self, t: &TotalOrder) -> bool {
        assert_eq!(t.n(), self.n, "total order and table sizes differ");
        (1..=self.n).all(|x| {
            (1..=self.n).all(|y| {
                let (lo, hi) = if t.le(x, y) { (x, y) } else { (y, x) };
                let v = self.get(x, y);
                t.le(lo, v) && t.le(v, hi)
            })
        })
    }

    /// The absorbing element `a` with `F(a, x) = F(x, a) = a` for all `x`.
    pub fn zero_element(&self) -> Option<usize> {
        (1..=self.n).find(|&a| (1..=self.n).all(|x| self.get(a, x) == a && self.get(x, a) == a))
    }

    pub fn neutral_element(&self) -> Option<usize> {
        (1..=self.n).find(|&e| (1..=self.n).all(|x| self.get(e, x) == x && self.get(x, e) == x))
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut counts = vec![0; self.n];
        for &v in &self.values {
            counts[v - 1] += 1;
        }
        DegreeSequence { counts }
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing size line"))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::parse(line_no, format!("expected table size, got `{header}`")))?;
        let mut values = Vec::with_capacity(n * n);
        for x in 1..=n {
            let (line_no, row) = lines
                .next()
                .ok_or_else(|| Error::parse(line_no, format!("missing row {x} of {n}")))?;
            let parsed = parse_numbers(row, line_no)?;
            if parsed.len() != n {
                return Err(Error::parse(
                    line_no,
                    format!("row {x} has {} entries, expected {n}", parsed.len()),
                ));
            }
            for (y, &v) in parsed.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(Error::parse(
                        line_no,
                        format!("entry {v} at ({x}, {}) is outside 1..={n}", y + 1),
                    ));
                }
            }
            values.extend(parsed);
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::parse(line_no, "trailing content after the table"));
        }
        Ok(OpTable { n, values })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: TableJson = serde_json::from_str(text)?;
        if raw.table.len() != raw.n {
            return Err(Error::SizeMismatch(format!(
                "n = {} but the table has {} rows",
                raw.n,
                raw.table.len()
            )));
        }
        Self::from_rows(&raw.table)
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            n: self.n,
            table: self.rows().map(|r| r.to_vec()).collect(),
        }
    }
}

impl fmt::Debug for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for OpTable {
    type Err = Error;

    /// Accepts either the plain text layout or the JSON object.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            Self::from_json(s)
        } else {
            Self::parse_text(s)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub n: usize,
    pub table: Vec<Vec<usize>>,
}

/// `counts[z - 1]` is the number of cells `(x, y)` with `F(x, y) = z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSequence {
    counts: Vec<usize>,
}

impl DegreeSequence {
    pub fn degree(&self, z: usize) -> usize {
        self.counts[z - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_numbers(line: &str, line_no: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::parse(line_no, format!("`{tok}` is not a nonnegative integer")))
        })
        .collect()
}
