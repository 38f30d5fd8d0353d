//! Hasse diagrams of semilattice orders.
//!
//! A semilattice order on `{1..n}` is *binary* when its Hasse diagram, rooted
//! at the top element, is a tree in which every vertex has at most two
//! children. The semilattice orders whose join is `≤ₙ`-preserving are exactly
//! the binary ones whose tree is threaded through the chain in a particular
//! way ([`satisfies_structure_condition`]), which is what
//! [`theorem_main_check`] tests.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::order::{SemilatticeOrder, TotalOrder};
use crate::table::OpTable;

/// Unordered rooted tree on `{1..n}` given by parent pointers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    root: usize,
}

impl RootedTree {
    pub fn from_parent_map(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        if n == 0 {
            return Err(Error::PreconditionViolated(
                "a rooted tree needs a vertex".into(),
            ));
        }
        let roots: Vec<usize> = (1..=n).filter(|&x| parent[x - 1].is_none()).collect();
        let [root] = roots[..] else {
            return Err(Error::PreconditionViolated(format!(
                "expected exactly one root, found {}",
                roots.len()
            )));
        };
        let mut children = vec![Vec::new(); n];
        for x in 1..=n {
            if let Some(p) = parent[x - 1] {
                if p == 0 || p > n {
                    return Err(Error::PreconditionViolated(format!(
                        "parent {p} out of range"
                    )));
                }
                children[p - 1].push(x);
            }
        }
        let tree = RootedTree {
            parent,
            children,
            root,
        };
        if tree.subtree(root).len() != n {
            return Err(Error::PreconditionViolated("parent map has a cycle".into()));
        }
        Ok(tree)
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        self.parent[x - 1]
    }

    pub fn parent_map(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Children of `x`, ascending.
    pub fn children(&self, x: usize) -> &[usize] {
        &self.children[x - 1]
    }

    /// Vertices of the subtree rooted at `x`, in preorder.
    pub fn subtree(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![x];
        while let Some(v) = stack.pop() {
            out.push(v);
            if out.len() > self.n() {
                break;
            }
            stack.extend(self.children(v).iter().rev());
        }
        out
    }

    pub fn leaves(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|&x| self.children(x).is_empty())
            .collect()
    }

    pub fn is_binary(&self) -> bool {
        self.children.iter().all(|c| c.len() <= 2)
    }

    pub fn shape(&self) -> TreeShape {
        self.shape_at(self.root)
    }

    pub fn shape_at(&self, x: usize) -> TreeShape {
        TreeShape::node(self.children(x).iter().map(|&c| self.shape_at(c)).collect())
    }

    pub fn to_semilattice(&self) -> SemilatticeOrder {
        SemilatticeOrder::from_parent_map(&self.parent).expect("validated tree")
    }
}

/// An unlabelled rooted tree up to isomorphism.
///
/// Children are kept sorted by their canonical code, so structural equality
/// is isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeShape {
    code: String,
    size: usize,
    children: Vec<TreeShape>,
}

impl TreeShape {
    pub fn leaf() -> Self {
        Self::node(Vec::new())
    }

    pub fn node(mut children: Vec<TreeShape>) -> Self {
        children.sort_by(|a, b| a.code.cmp(&b.code));
        let mut code = String::from("(");
        for c in &children {
            code.push_str(&c.code);
        }
        code.push(')');
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        TreeShape {
            code,
            size,
            children,
        }
    }

    /// Parses a canonical code such as `(()(()))`.
    pub fn from_code(code: &str) -> Result<Self> {
        fn parse(bytes: &[u8], pos: &mut usize) -> Result<TreeShape> {
            if bytes.get(*pos) != Some(&b'(') {
                return Err(Error::parse(1, format!("expected `(` at offset {pos}")));
            }
            *pos += 1;
            let mut children = Vec::new();
            while bytes.get(*pos) == Some(&b'(') {
                children.push(parse(bytes, pos)?);
            }
            if bytes.get(*pos) != Some(&b')') {
                return Err(Error::parse(1, format!("expected `)` at offset {pos}")));
            }
            *pos += 1;
            Ok(TreeShape::node(children))
        }
        let bytes = code.trim().as_bytes();
        let mut pos = 0;
        let shape = parse(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::parse(1, "trailing characters after tree code"));
        }
        Ok(shape)
    }

    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn children(&self) -> &[TreeShape] {
        &self.children
    }

    pub fn is_binary(&self) -> bool {
        self.children.len() <= 2 && self.children.iter().all(TreeShape::is_binary)
    }

    pub fn leaf_count(&self) -> usize {
        if self.children.is_empty() {
            1
        } else {
            self.children.iter().map(TreeShape::leaf_count).sum()
        }
    }

    /// All binary shapes with `n` vertices, sorted by code. Empty for `n = 0`.
    pub fn all_binary(n: usize) -> Vec<TreeShape> {
        let mut table: Vec<Vec<TreeShape>> = vec![Vec::new(), vec![TreeShape::leaf()]];
        for m in 2..=n {
            let mut shapes = Vec::new();
            for s in &table[m - 1] {
                shapes.push(TreeShape::node(vec![s.clone()]));
            }
            for i in 1..=(m - 1) / 2 {
                let j = m - 1 - i;
                for (a, left) in table[i].iter().enumerate() {
                    let start = if i == j { a } else { 0 };
                    for right in &table[j][start..] {
                        shapes.push(TreeShape::node(vec![left.clone(), right.clone()]));
                    }
                }
            }
            shapes.sort();
            table.push(shapes);
        }
        table.truncate(n + 1);
        table.pop().unwrap_or_default()
    }

    /// A rooted tree with this shape, vertices labelled in preorder.
    pub fn to_tree(&self) -> RootedTree {
        fn walk(shape: &TreeShape, parent: Option<usize>, out: &mut Vec<Option<usize>>) {
            out.push(parent);
            let me = out.len();
            for c in &shape.children {
                walk(c, Some(me), out);
            }
        }
        let mut parent = Vec::with_capacity(self.size);
        walk(self, None, &mut parent);
        RootedTree::from_parent_map(parent).expect("shapes are trees")
    }
}

/// Cover pairs `(x, y)`: `x ≺ y` with nothing strictly between.
pub fn hasse(order: &SemilatticeOrder) -> Vec<(usize, usize)> {
    order.covers()
}

/// The Hasse diagram rooted at the top, if it is a tree.
pub fn hasse_tree(order: &SemilatticeOrder) -> Option<RootedTree> {
    let n = order.n();
    let top = order.top()?;
    let mut parent = vec![None; n];
    for (x, y) in order.covers() {
        if parent[x - 1].is_some() {
            return None;
        }
        parent[x - 1] = Some(y);
    }
    if (1..=n).any(|x| x != top && parent[x - 1].is_none()) {
        return None;
    }
    RootedTree::from_parent_map(parent).ok()
}

/// The Hasse diagram as a binary tree, or [`Error::NotBinaryTree`].
pub fn binary_tree(order: &SemilatticeOrder) -> Result<RootedTree> {
    match hasse_tree(order) {
        Some(tree) if tree.is_binary() => Ok(tree),
        _ => Err(Error::NotBinaryTree),
    }
}

pub fn is_binary_tree_semilattice(order: &SemilatticeOrder) -> bool {
    order.n() == 0 || binary_tree(order).is_ok()
}

/// Every child `x'` of a vertex `x` sits right next to its ideal `(x']` in
/// `t`: `x` is the `t`-least element above the whole ideal, or the `t`-greatest
/// element below it.
pub fn satisfies_structure_condition(order: &SemilatticeOrder, t: &TotalOrder) -> Result<bool> {
    if order.n() == 0 {
        return Ok(true);
    }
    let tree = binary_tree(order)?;
    Ok((1..=order.n()).all(|x| {
        tree.children(x).iter().all(|&child| {
            let ranks = order.principal_ideal(child).into_iter().map(|y| t.rank(y));
            let (lo, hi) = ranks.fold((usize::MAX, 0), |(lo, hi), r| (lo.min(r), hi.max(r)));
            let r = t.rank(x);
            r == hi + 1 || r + 1 == lo
        })
    }))
}

/// Binary Hasse tree plus the structure condition; equivalent to the order
/// being nondecreasing for `t`.
pub fn theorem_main_check(order: &SemilatticeOrder, t: &TotalOrder) -> bool {
    is_binary_tree_semilattice(order) && satisfies_structure_condition(order, t).unwrap_or(false)
}

/// Labels a binary shape so that the result is nondecreasing for `≤ₙ`.
///
/// A root with one child gets `n` above its relabelled subtree; a root with
/// children `C₁, C₂` gets `|C₁| + 1`, with `C₁` on `1..=|C₁|` and `C₂` above.
pub fn canonical_nondecreasing_labeling(shape: &TreeShape) -> Result<SemilatticeOrder> {
    fn label(shape: &TreeShape, offset: usize, parent: &mut [Option<usize>]) -> usize {
        let root = match shape.children() {
            [] => offset + 1,
            [only] => {
                let child = label(only, offset, parent);
                let root = offset + shape.size();
                parent[child - 1] = Some(root);
                root
            }
            [c1, c2] => {
                let root = offset + c1.size() + 1;
                let a = label(c1, offset, parent);
                let b = label(c2, root, parent);
                parent[a - 1] = Some(root);
                parent[b - 1] = Some(root);
                root
            }
            _ => unreachable!("checked binary"),
        };
        root
    }
    if !shape.is_binary() {
        return Err(Error::NotBinaryTree);
    }
    let mut parent = vec![None; shape.size()];
    label(shape, 0, &mut parent);
    SemilatticeOrder::from_parent_map(&parent)
}

/// Unit steps along both axes: `F(x,y) ≤ F(x+1,y) ≤ F(x,y)+1` and likewise in `y`.
pub fn is_smooth(op: &OpTable) -> bool {
    let n = op.n();
    (1..=n).all(|x| {
        (1..=n).all(|y| {
            let v = op.get(x, y);
            let right = x == n || (v..=v + 1).contains(&op.get(x + 1, y));
            let up = y == n || (v..=v + 1).contains(&op.get(x, y + 1));
            right && up
        })
    })
}

/// The peak `a` when the Hasse diagram is exactly the two paths
/// `1 ≺ 2 ≺ ... ≺ a` and `n ≺ n-1 ≺ ... ≺ a`.
///
/// For `a ∈ {1, n}` this is one chain (`min` or `max`); otherwise `1 || n`.
pub fn smooth_order_characterization(order: &SemilatticeOrder) -> Option<usize> {
    let n = order.n();
    let covers = order.covers();
    (1..=n).find(|&a| {
        let mut expected: Vec<(usize, usize)> = (1..a)
            .map(|i| (i, i + 1))
            .chain((a + 1..=n).map(|i| (i, i - 1)))
            .collect();
        expected.sort_unstable();
        expected == covers
    })
}

/// Whether the join has a neutral element, for a join that is `t`-preserving.
///
/// Such a join has one exactly when the order is a chain single-peaked for `t`.
pub fn neutral_iff_single_peaked_check(order: &SemilatticeOrder, t: &TotalOrder) -> Result<bool> {
    if !order.join_table().is_preserving(t) {
        return Err(Error::PreconditionViolated(
            "join is not preserving for the given chain".into(),
        ));
    }
    Ok(order.join_table().neutral_element().is_some())
}

/// Graphviz rendering of the Hasse diagram, bottom to top, vertices `1..n`.
pub fn to_dot(order: &SemilatticeOrder) -> String {
    let mut out = String::from("digraph hasse {\n    rankdir=BT;\n    node [shape=circle];\n");
    for x in 1..=order.n() {
        let _ = writeln!(out, "    {x};");
    }
    for (x, y) in order.covers() {
        let _ = writeln!(out, "    {x} -> {y};");
    }
    out.push_str("}\n");
    out
}
