//! Total orders, partial orders and semilattice orders on `{1..n}`, the
//! order/operation correspondence, and the chain-relative properties of a
//! semilattice order (convex ideals, internality, nondecreasingness, linear
//! filters, single-peakedness).

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::{content_lines, parse_numbers, OpTable};

/// A chain on `{1..n}`, stored both as the bottom-to-top sequence and as the
/// rank of every element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalOrder {
    seq: Vec<usize>,
    rank: Vec<usize>,
}

impl TotalOrder {
    /// `1 < 2 < ... < n`.
    pub fn natural(n: usize) -> Self {
        TotalOrder {
            seq: (1..=n).collect(),
            rank: (1..=n).collect(),
        }
    }

    /// Builds the chain listing `seq` from bottom to top; `seq` must be a
    /// permutation of `1..=seq.len()`.
    pub fn from_sequence(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut rank = vec![0; n];
        for (pos, &x) in seq.iter().enumerate() {
            if x == 0 || x > n {
                return Err(Error::NotTotalOrder(format!("{x} is outside 1..={n}")));
            }
            if rank[x - 1] != 0 {
                return Err(Error::NotTotalOrder(format!("{x} appears twice")));
            }
            rank[x - 1] = pos + 1;
        }
        Ok(TotalOrder { seq, rank })
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    /// Elements from bottom to top.
    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }

    /// Position of `x` in the chain, `1` for the bottom.
    #[inline]
    pub fn rank(&self, x: usize) -> usize {
        self.rank[x - 1]
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.rank(x) <= self.rank(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.rank(x) < self.rank(y)
    }

    pub fn max_of(&self, x: usize, y: usize) -> usize {
        if self.le(x, y) {
            y
        } else {
            x
        }
    }

    /// The dual chain.
    pub fn reverse(&self) -> Self {
        let seq: Vec<usize> = self.seq.iter().rev().copied().collect();
        Self::from_sequence(seq).expect("reversal of a permutation")
    }

    /// Every chain on `{1..n}`, in lexicographic order of the sequence.
    pub fn all(n: usize) -> impl Iterator<Item = TotalOrder> {
        (1..=n)
            .permutations(n)
            .map(|seq| TotalOrder::from_sequence(seq).expect("permutation"))
    }

    /// The chain viewed as a semilattice order: `x ⪯ y` iff `x <= y` here.
    pub fn as_semilattice(&self) -> SemilatticeOrder {
        let n = self.n();
        let mut parent = vec![None; n];
        for w in self.seq.windows(2) {
            parent[w[0] - 1] = Some(w[1]);
        }
        SemilatticeOrder::from_parent_map(&parent).expect("a chain is a tree")
    }

    /// One line, the permutation from bottom to top.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let seq = match lines.next() {
            Some((line_no, line)) => {
                let seq = parse_numbers(line, line_no)?;
                if let Some((extra, _)) = lines.next() {
                    return Err(Error::parse(extra, "a total order is a single line"));
                }
                seq
            }
            None => Vec::new(),
        };
        Self::from_sequence(seq)
    }

    pub fn to_text(&self) -> String {
        self.seq.iter().join(" ")
    }
}

impl fmt::Debug for TotalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.seq.iter().join("<"))
    }
}

impl FromStr for TotalOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('[') {
            let seq: Vec<usize> = serde_json::from_str(s)?;
            Self::from_sequence(seq)
        } else {
            Self::parse_text(s)
        }
    }
}

/// A reflexive, antisymmetric, transitive relation on `{1..n}`, as a dense
/// boolean matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PartialOrder {
    n: usize,
    leq: Vec<bool>,
}

impl PartialOrder {
    /// Row-major matrix with `leq[(x-1)*n + (y-1)]` true iff `x ⪯ y`; all three
    /// axioms are checked.
    pub fn from_matrix(n: usize, leq: Vec<bool>) -> Result<Self> {
        if leq.len() != n * n {
            return Err(Error::SizeMismatch(format!(
                "expected {} matrix entries, got {}",
                n * n,
                leq.len()
            )));
        }
        let po = PartialOrder { n, leq };
        if let Some(x) = (1..=n).find(|&x| !po.leq(x, x)) {
            return Err(Error::NotPartialOrder(format!("{x} ⪯ {x} fails")));
        }
        for x in 1..=n {
            for y in x + 1..=n {
                if po.leq(x, y) && po.leq(y, x) {
                    return Err(Error::NotPartialOrder(format!("{x} ⪯ {y} and {y} ⪯ {x}")));
                }
            }
        }
        for x in 1..=n {
            for y in 1..=n {
                for z in 1..=n {
                    if po.leq(x, y) && po.leq(y, z) && !po.leq(x, z) {
                        return Err(Error::NotPartialOrder(format!(
                            "{x} ⪯ {y} ⪯ {z} but not {x} ⪯ {z}"
                        )));
                    }
                }
            }
        }
        Ok(po)
    }

    /// Reflexive-transitive closure of `pairs` (each `(x, y)` meaning `x ⪯ y`),
    /// rejected if the closure is not antisymmetric.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(x, y) in pairs {
            if x == 0 || y == 0 || x > n || y > n {
                return Err(Error::NotPartialOrder(format!(
                    "pair ({x}, {y}) is outside 1..={n}"
                )));
            }
            leq[(x - 1) * n + (y - 1)] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if leq[x * n + y] && leq[y * n + x] {
                    return Err(Error::NotPartialOrder(format!(
                        "{} and {} lie on a cycle",
                        x + 1,
                        y + 1
                    )));
                }
            }
        }
        Ok(PartialOrder { n, leq })
    }

    pub(crate) fn from_raw(n: usize, leq: Vec<bool>) -> Self {
        PartialOrder { n, leq }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[(x - 1) * self.n + (y - 1)]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.leq(x, y) && !self.leq(y, x)
    }

    pub fn is_total(&self) -> bool {
        (1..=self.n).all(|x| (x + 1..=self.n).all(|y| !self.incomparable(x, y)))
    }

    /// Pairs `(x, y)` with `x ≺ y` and nothing strictly between, in
    /// lexicographic order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for x in 1..=n {
            for y in 1..=n {
                if self.lt(x, y) && !(1..=n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&x| !(1..=self.n).any(|y| self.lt(y, x)))
            .collect()
    }

    /// The least upper bound of `x` and `y`, if it exists.
    pub fn supremum(&self, x: usize, y: usize) -> Option<usize> {
        let upper: Vec<usize> = (1..=self.n)
            .filter(|&z| self.leq(x, z) && self.leq(y, z))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&z| upper.iter().all(|&w| self.leq(z, w)))
    }
}

/// A partial order in which every pair has a join, stored together with its
/// join table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SemilatticeOrder {
    base: PartialOrder,
    join: OpTable,
}

impl SemilatticeOrder {
    /// Computes all pairwise joins; fails if one is missing.
    pub fn from_partial_order(base: PartialOrder) -> Result<Self> {
        let n = base.n;
        let mut values = Vec::with_capacity(n * n);
        for x in 1..=n {
            for y in 1..=n {
                let j = base.supremum(x, y).ok_or_else(|| {
                    Error::NotSemilattice(format!("{x} and {y} have no least upper bound"))
                })?;
                values.push(j);
            }
        }
        Ok(SemilatticeOrder {
            base,
            join: OpTable::from_raw(n, values),
        })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::from_partial_order(PartialOrder::from_pairs(n, pairs)?)
    }

    /// The semilattice whose Hasse diagram is the rooted tree given by
    /// `parent[x - 1]` (the upper cover of `x`, `None` for the root).
    pub fn from_parent_map(parent: &[Option<usize>]) -> Result<Self> {
        let n = parent.len();
        let roots = parent.iter().filter(|p| p.is_none()).count();
        if n > 0 && roots != 1 {
            return Err(Error::NotSemilattice(format!(
                "a rooted tree needs exactly one root, found {roots}"
            )));
        }
        // ancestors[x] lists x, parent(x), ..., root
        let mut ancestors: Vec<Vec<usize>> = Vec::with_capacity(n);
        for x in 1..=n {
            let mut chain = vec![x];
            let mut cur = x;
            while let Some(p) = parent[cur - 1] {
                if p == 0 || p > n {
                    return Err(Error::NotSemilattice(format!(
                        "parent {p} is outside 1..={n}"
                    )));
                }
                if chain.len() > n {
                    return Err(Error::NotSemilattice("parent map has a cycle".into()));
                }
                chain.push(p);
                cur = p;
            }
            ancestors.push(chain);
        }
        let mut leq = vec![false; n * n];
        for (i, chain) in ancestors.iter().enumerate() {
            for &a in chain {
                leq[i * n + (a - 1)] = true;
            }
        }
        let mut values = Vec::with_capacity(n * n);
        for x in 1..=n {
            for y in 1..=n {
                let j = ancestors[x - 1]
                    .iter()
                    .copied()
                    .find(|&a| leq[(y - 1) * n + (a - 1)])
                    .expect("trees share their root");
                values.push(j);
            }
        }
        Ok(SemilatticeOrder {
            base: PartialOrder::from_raw(n, leq),
            join: OpTable::from_raw(n, values),
        })
    }

    /// The order `x ⪯ y` iff `F(x, y) = y` of an associative, symmetric,
    /// idempotent operation.
    pub fn from_op(op: &OpTable) -> Result<Self> {
        let mut missing = Vec::new();
        if !op.is_idempotent() {
            missing.push("idempotent");
        }
        if !op.is_symmetric() {
            missing.push("symmetric");
        }
        if !op.is_associative() {
            missing.push("associative");
        }
        if !missing.is_empty() {
            return Err(Error::NotSemilattice(format!(
                "operation is not {}",
                missing.join(", ")
            )));
        }
        let n = op.n();
        let mut leq = vec![false; n * n];
        for x in 1..=n {
            for y in 1..=n {
                leq[(x - 1) * n + (y - 1)] = op.get(x, y) == y;
            }
        }
        Ok(SemilatticeOrder {
            base: PartialOrder::from_raw(n, leq),
            join: op.clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.base.n
    }

    pub fn base(&self) -> &PartialOrder {
        &self.base
    }

    pub fn join_table(&self) -> &OpTable {
        &self.join
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join.get(x, y)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.base.leq(x, y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.base.lt(x, y)
    }

    #[inline]
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        self.base.incomparable(x, y)
    }

    pub fn is_total(&self) -> bool {
        self.base.is_total()
    }

    /// The greatest element; `None` only for the empty order.
    pub fn top(&self) -> Option<usize> {
        (1..=self.n()).find(|&x| (1..=self.n()).all(|y| self.leq(y, x)))
    }

    pub fn bottom(&self) -> Option<usize> {
        (1..=self.n()).find(|&x| (1..=self.n()).all(|y| self.leq(x, y)))
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.base.covers()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        self.base.minimal_elements()
    }

    /// `(x]`, the elements below `x`, ascending.
    pub fn principal_ideal(&self, x: usize) -> Vec<usize> {
        (1..=self.n()).filter(|&y| self.leq(y, x)).collect()
    }

    /// `[x)`, the elements above `x`, ascending.
    pub fn principal_filter(&self, x: usize) -> Vec<usize> {
        (1..=self.n()).filter(|&y| self.leq(x, y)).collect()
    }

    /// For every `a <= b <= c` in `t`: `b ⪯ a ⋎ c`.
    pub fn has_ci_property(&self, t: &TotalOrder) -> bool {
        assert_eq!(t.n(), self.n(), "total order and semilattice sizes differ");
        let seq = t.sequence();
        let n = seq.len();
        (0..n).all(|i| {
            (i + 2..n).all(|k| {
                let top = self.join(seq[i], seq[k]);
                seq[i + 1..k].iter().all(|&b| self.leq(b, top))
            })
        })
    }

    /// No `a < b < c` in `t` with `a = b ⋎ c` or `c = a ⋎ b`.
    pub fn is_internal_for(&self, t: &TotalOrder) -> bool {
        assert_eq!(t.n(), self.n(), "total order and semilattice sizes differ");
        let seq = t.sequence();
        let n = seq.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                (j + 1..n).all(|k| {
                    let (a, b, c) = (seq[i], seq[j], seq[k]);
                    a != self.join(b, c) && c != self.join(a, b)
                })
            })
        })
    }

    /// CI-property and internality together; equivalently, the join is
    /// `t`-preserving.
    pub fn is_nondecreasing_for(&self, t: &TotalOrder) -> bool {
        self.has_ci_property(t) && self.is_internal_for(t)
    }

    /// No two incomparable elements share a lower bound, i.e. every filter is
    /// a chain.
    pub fn has_linear_filter_property(&self) -> bool {
        let n = self.n();
        (1..=n).all(|z| {
            let filter = self.principal_filter(z);
            filter
                .iter()
                .tuple_combinations()
                .all(|(&x, &y)| !self.incomparable(x, y))
        })
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing size line"))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::parse(line_no, format!("expected order size, got `{header}`")))?;
        let mut pairs = Vec::new();
        for (line_no, line) in lines {
            let nums = parse_numbers(line, line_no)?;
            match nums[..] {
                [x, y] if (1..=n).contains(&x) && (1..=n).contains(&y) => pairs.push((x, y)),
                [_, _] => {
                    return Err(Error::parse(line_no, format!("pair outside 1..={n}")));
                }
                _ => return Err(Error::parse(line_no, "expected a pair `x y`")),
            }
        }
        Self::from_pairs(n, &pairs)
    }

    /// Size line followed by the cover pairs.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for (x, y) in self.covers() {
            out.push_str(&format!("{x} {y}\n"));
        }
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: OrderJson = serde_json::from_str(text)?;
        let pairs: Vec<(usize, usize)> = raw.pairs.iter().map(|p| (p[0], p[1])).collect();
        Self::from_pairs(raw.n, &pairs)
    }

    pub fn to_json(&self) -> OrderJson {
        OrderJson {
            n: self.n(),
            pairs: self.covers().into_iter().map(|(x, y)| [x, y]).collect(),
        }
    }
}

impl FromStr for SemilatticeOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            Self::from_json(s)
        } else {
            Self::parse_text(s)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderJson {
    pub n: usize,
    pub pairs: Vec<[usize; 2]>,
}

pub fn order_from_op(op: &OpTable) -> Result<SemilatticeOrder> {
    SemilatticeOrder::from_op(op)
}

pub fn join_op(order: &SemilatticeOrder) -> OpTable {
    order.join_table().clone()
}

/// `p` is single-peaked for `t`: for every `a <= b <= c` in `t`,
/// `b` lies below `max_p(a, c)` in `p`.
pub fn is_single_peaked(p: &TotalOrder, t: &TotalOrder) -> bool {
    assert_eq!(p.n(), t.n(), "total orders of different sizes");
    let seq = t.sequence();
    let n = seq.len();
    (0..n).all(|i| {
        (i + 2..n).all(|k| {
            let peak = p.max_of(seq[i], seq[k]);
            seq[i + 1..k].iter().all(|&b| p.le(b, peak))
        })
    })
}
