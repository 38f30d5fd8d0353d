//! k-ary operations on `{1..n}`.
//!
//! An associative binary `H` extends to any arity by left nesting,
//! `H_{k+1}(x₁, …, x_{k+1}) = H(H_k(x₁, …, x_k), x_{k+1})`. Conversely an
//! associative, idempotent, symmetric, `≤ₙ`-preserving k-ary operation is
//! determined by the binary `G(x, y) = F(x, …, x, y)`, and is then the k-ary
//! join of a nondecreasing semilattice order.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::order::TotalOrder;
use crate::table::{content_lines, parse_numbers, OpTable};

/// Largest `n^k` accepted for a dense table.
pub const MAX_CELLS: usize = 1 << 24;
/// Largest `n^(2k-1)` accepted by [`is_kary_associative`].
pub const MAX_ASSOC_TUPLES: usize = 1 << 24;
/// Largest search space accepted by [`kary_semilattice_tables`].
pub const MAX_SEARCH: usize = 1 << 22;

/// Dense table of `F: {1..n}^k → {1..n}`, last index fastest.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KaryOpTable {
    n: usize,
    k: usize,
    values: Vec<usize>,
}

fn cells(n: usize, k: usize) -> Option<usize> {
    let c = n.checked_pow(u32::try_from(k).ok()?)?;
    (c <= MAX_CELLS).then_some(c)
}

/// All tuples of `{1..n}^k` in table order, `k ≥ 1`.
fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..k).map(|_| 1..=n).multi_cartesian_product()
}

impl KaryOpTable {
    pub fn new(n: usize, k: usize, values: Vec<usize>) -> Result<Self> {
        if k < 2 {
            return Err(Error::PreconditionViolated(format!("arity {k} is below 2")));
        }
        let expected = cells(n, k).ok_or(Error::BoundExceeded {
            what: "k-ary table size",
            n,
            max: MAX_CELLS,
        })?;
        if values.len() != expected {
            return Err(Error::SizeMismatch(format!(
                "expected {expected} values for n = {n}, k = {k}, got {}",
                values.len()
            )));
        }
        if let Some((i, &v)) = values.iter().enumerate().find(|(_, &v)| v == 0 || v > n) {
            return Err(Error::SizeMismatch(format!(
                "value {v} at cell {i} is outside 1..={n}"
            )));
        }
        Ok(KaryOpTable { n, k, values })
    }

    pub fn from_fn(n: usize, k: usize, f: impl Fn(&[usize]) -> usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::PreconditionViolated(format!("arity {k} is below 2")));
        }
        cells(n, k).ok_or(Error::BoundExceeded {
            what: "k-ary table size",
            n,
            max: MAX_CELLS,
        })?;
        let values = tuples(n, k).map(|t| f(&t)).collect();
        KaryOpTable::new(n, k, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    fn index(&self, args: &[usize]) -> usize {
        args.iter().fold(0, |acc, &x| acc * self.n + (x - 1))
    }

    /// `F(args)`; `args` must have length `k` with entries in `1..=n`.
    pub fn get(&self, args: &[usize]) -> usize {
        assert_eq!(args.len(), self.k, "expected {} arguments", self.k);
        self.values[self.index(args)]
    }

    /// `n k` on the first line, then one line per prefix of length `k - 1`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.k);
        if self.n > 0 {
            for row in self.values.chunks(self.n) {
                out.push_str(&row.iter().join(" "));
                out.push('\n');
            }
        }
        out
    }

    /// Parses the [`to_text`](Self::to_text) format. Values may be spread over
    /// lines freely after the header.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `n k` header"))?;
        let head = parse_numbers(header, line_no)?;
        let [n, k] = head[..] else {
            return Err(Error::parse(line_no, "header must be `n k`"));
        };
        if k < 2 {
            return Err(Error::parse(line_no, format!("arity {k} is below 2")));
        }
        let expected = cells(n, k)
            .ok_or_else(|| Error::parse(line_no, format!("n^k exceeds {MAX_CELLS} cells")))?;
        let mut values = Vec::with_capacity(expected);
        let mut last = line_no;
        for (line_no, line) in lines {
            last = line_no;
            for v in parse_numbers(line, line_no)? {
                if v == 0 || v > n {
                    return Err(Error::parse(
                        line_no,
                        format!("value {v} is outside 1..={n}"),
                    ));
                }
                values.push(v);
            }
            if values.len() > expected {
                return Err(Error::parse(
                    line_no,
                    format!("more than {expected} values"),
                ));
            }
        }
        if values.len() != expected {
            return Err(Error::parse(
                last,
                format!("expected {expected} values, found {}", values.len()),
            ));
        }
        Ok(KaryOpTable { n, k, values })
    }
}

impl fmt::Debug for KaryOpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "KaryOpTable(n={}, k={}, {:?})",
            self.n, self.k, self.values
        )
    }
}

impl fmt::Display for KaryOpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for KaryOpTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KaryOpTable::parse_text(s)
    }
}

/// Checks `F(x₁…x_{i-1}, F(x_i…x_{i+k-1}), x_{i+k}…x_{2k-1})` is the same for
/// every `i` and every `(2k-1)`-tuple.
pub fn is_kary_associative(f: &KaryOpTable) -> Result<bool> {
    let (n, k) = (f.n, f.k);
    let width = 2 * k - 1;
    let total = u32::try_from(width)
        .ok()
        .and_then(|w| n.checked_pow(w))
        .filter(|&c| c <= MAX_ASSOC_TUPLES);
    if total.is_none() {
        return Err(Error::BoundExceeded {
            what: "k-ary associativity check (n^(2k-1) tuples)",
            n,
            max: MAX_ASSOC_TUPLES,
        });
    }
    let mut args = vec![0; k];
    for z in tuples(n, width) {
        let mut first = None;
        for i in 0..k {
            args[..i].copy_from_slice(&z[..i]);
            args[i] = f.get(&z[i..i + k]);
            args[i + 1..].copy_from_slice(&z[i + k..]);
            let v = f.get(&args);
            match first {
                None => first = Some(v),
                Some(w) if w != v => return Ok(false),
                _ => {}
            }
        }
    }
    Ok(true)
}

/// Invariance under reordering, checked against the sorted argument tuple.
pub fn is_kary_symmetric(f: &KaryOpTable) -> bool {
    tuples(f.n, f.k).all(|t| {
        let mut s = t.clone();
        s.sort_unstable();
        f.get(&t) == f.get(&s)
    })
}

pub fn is_kary_idempotent(f: &KaryOpTable) -> bool {
    (1..=f.n).all(|x| f.get(&vec![x; f.k]) == x)
}

/// Monotone in every argument for `t`; checked on `t`-neighbours.
pub fn is_kary_preserving(f: &KaryOpTable, t: &TotalOrder) -> bool {
    if t.n() != f.n {
        return false;
    }
    let seq = t.sequence();
    tuples(f.n, f.k).all(|tuple| {
        let here = f.get(&tuple);
        (0..f.k).all(|i| {
            let r = t.rank(tuple[i]);
            match seq.get(r) {
                // rank is 1-based, so seq[r] is the successor
                Some(&next) => {
                    let mut up = tuple.clone();
                    up[i] = next;
                    t.le(here, f.get(&up))
                }
                None => true,
            }
        })
    })
}

/// Left-nested k-ary extension of an associative binary operation.
pub fn extend(h: &OpTable, k: usize) -> Result<KaryOpTable> {
    if k < 2 {
        return Err(Error::PreconditionViolated(format!("arity {k} is below 2")));
    }
    if !h.is_associative() {
        return Err(Error::NotAssociative);
    }
    KaryOpTable::from_fn(h.n(), k, |args| {
        args[1..].iter().fold(args[0], |acc, &x| h.get(acc, x))
    })
}

/// The binary operation `G(x, y) = F(x, …, x, y)` from which `F` is
/// recovered by [`extend`].
pub fn reduce(f: &KaryOpTable) -> Result<OpTable> {
    if !is_kary_associative(f)? {
        return Err(Error::PreconditionViolated(
            "k-ary operation is not associative".into(),
        ));
    }
    if !is_kary_idempotent(f) {
        return Err(Error::PreconditionViolated(
            "k-ary operation is not idempotent".into(),
        ));
    }
    if !is_kary_symmetric(f) {
        return Err(Error::PreconditionViolated(
            "k-ary operation is not symmetric".into(),
        ));
    }
    if !is_kary_preserving(f, &TotalOrder::natural(f.n)) {
        return Err(Error::PreconditionViolated(
            "k-ary operation is not preserving for the natural order".into(),
        ));
    }
    let k = f.k;
    let g = OpTable::from_fn(f.n, |x, y| {
        let mut args = vec![x; k];
        args[k - 1] = y;
        f.get(&args)
    })?;
    match extend(&g, k) {
        Ok(back) if &back == f => Ok(g),
        _ => Err(Error::ReductionMismatch),
    }
}

/// Every k-ary associative, idempotent, symmetric, `≤ₙ`-preserving table.
///
/// Symmetry reduces the search to one value per multiset of arguments, and
/// idempotency with monotonicity confines that value to `[min, max]` of the
/// multiset; the remaining products are searched exhaustively.
pub fn kary_semilattice_tables(n: usize, k: usize) -> Result<Vec<KaryOpTable>> {
    if k < 2 {
        return Err(Error::PreconditionViolated(format!("arity {k} is below 2")));
    }
    if n == 0 {
        return Ok(vec![KaryOpTable::new(0, k, Vec::new())?]);
    }
    let multisets: Vec<Vec<usize>> = (1..=n).combinations_with_replacement(k).collect();
    let space = multisets.iter().try_fold(1usize, |acc, m| {
        acc.checked_mul(m[k - 1] - m[0] + 1)
            .filter(|&s| s <= MAX_SEARCH)
    });
    if space.is_none() {
        return Err(Error::BoundExceeded {
            what: "k-ary table enumeration",
            n,
            max: MAX_SEARCH,
        });
    }
    let t = TotalOrder::natural(n);
    let mut out = Vec::new();
    for choice in multisets
        .iter()
        .map(|m| m[0]..=m[k - 1])
        .multi_cartesian_product()
    {
        let lookup = |args: &[usize]| {
            let mut s = args.to_vec();
            s.sort_unstable();
            let pos = multisets.binary_search(&s).expect("sorted multiset");
            choice[pos]
        };
        let table = KaryOpTable::from_fn(n, k, lookup)?;
        if is_kary_preserving(&table, &t) && is_kary_associative(&table)? {
            out.push(table);
        }
    }
    Ok(out)
}

/// `x - y + z` on `Z₃`, labelled `1, 2, 3` for residues `0, 1, 2`:
/// associative and idempotent but not symmetric.
pub fn alternating_sum_z3() -> KaryOpTable {
    KaryOpTable::from_fn(3, 3, |a| (a[0] + 3 - a[1] + a[2] - 1) % 3 + 1).expect("3^3 cells")
}

/// The ternary median on the chain `1 < … < n`.
pub fn ternary_median(n: usize) -> KaryOpTable {
    KaryOpTable::from_fn(n, 3, |a| {
        let mut s = a.to_vec();
        s.sort_unstable();
        s[1]
    })
    .expect("small table")
}

/// `F(x₁, …, x_k) = x₁`.
pub fn first_projection(n: usize, k: usize) -> KaryOpTable {
    KaryOpTable::from_fn(n, k, |a| a[0]).expect("small table")
}
